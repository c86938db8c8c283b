#include "liftgirth/graph.hpp"

#include "liftgirth/error.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <utility>

namespace liftgirth {

MultiGraph::MultiGraph(int vertex_count)
    : vertex_count_(vertex_count), out_(static_cast<std::size_t>(std::max(vertex_count, 0)))
{
    if (vertex_count < 0)
        throw PreconditionError("negative vertex count");
}

MultiGraph MultiGraph::from_edges(int vertex_count, std::vector<DirectedEdge> edges)
{
    MultiGraph g(vertex_count);
    g.edges_ = std::move(edges);
    check_structure(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        g.out_[static_cast<std::size_t>(g.tail(e))].push_back(e);
    return g;
}

EdgeId MultiGraph::add_edge(VertexId a, VertexId b)
{
    if (a < 0 || a >= vertex_count_ || b < 0 || b >= vertex_count_)
        throw PreconditionError("edge endpoint out of range");
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({a, b, id + 1});
    edges_.push_back({b, a, id});
    out_[static_cast<std::size_t>(a)].push_back(id);
    out_[static_cast<std::size_t>(b)].push_back(id + 1);
    return id;
}

EdgeId MultiGraph::add_half_loop(VertexId a)
{
    if (a < 0 || a >= vertex_count_)
        throw PreconditionError("half-loop vertex out of range");
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({a, a, id});
    out_[static_cast<std::size_t>(a)].push_back(id);
    return id;
}

bool MultiGraph::has_half_loop() const
{
    for (EdgeId e = 0; e < edge_count(); ++e)
        if (is_half_loop(e))
            return true;
    return false;
}

bool MultiGraph::has_loop() const
{
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const DirectedEdge& d) { return d.head == d.tail; });
}

std::vector<EdgeId> MultiGraph::undirected_edges() const
{
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < edge_count(); ++e)
        if (e <= inverse(e))
            out.push_back(e);
    return out;
}

void check_structure(const MultiGraph& g)
{
    const int m = g.edge_count();
    for (EdgeId e = 0; e < m; ++e) {
        const auto& d = g.edge(e);
        if (d.tail < 0 || d.tail >= g.vertex_count() || d.head < 0 || d.head >= g.vertex_count())
            throw StructuralError("endpoint out of range", e);
        if (d.inverse < 0 || d.inverse >= m)
            throw StructuralError("dangling inverse", e);
        if (g.inverse(d.inverse) != e)
            throw StructuralError("inverse is not an involution", e);
        if (g.head(d.inverse) != d.tail || g.tail(d.inverse) != d.head)
            throw StructuralError("head/tail mismatch with inverse", e);
    }
}

GraphClass validate(const MultiGraph& g)
{
    check_structure(g);
    GraphClass c;
    c.connected = is_connected(g);
    if (g.vertex_count() > 0) {
        c.min_degree = g.degree(0);
        c.max_degree = g.degree(0);
        for (VertexId v = 1; v < g.vertex_count(); ++v) {
            c.min_degree = std::min(c.min_degree, g.degree(v));
            c.max_degree = std::max(c.max_degree, g.degree(v));
        }
    }
    c.admissible = c.connected && c.min_degree >= 2 && c.max_degree > 2;
    return c;
}

std::vector<int> connected_components(const MultiGraph& g, int* component_count)
{
    std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<VertexId> stack;
    int count = 0;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0)
            continue;
        comp[static_cast<std::size_t>(s)] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            const VertexId x = stack.back();
            stack.pop_back();
            for (const EdgeId e : g.out_edges(x)) {
                const VertexId y = g.head(e);
                if (comp[static_cast<std::size_t>(y)] < 0) {
                    comp[static_cast<std::size_t>(y)] = count;
                    stack.push_back(y);
                }
            }
        }
        ++count;
    }
    if (component_count)
        *component_count = count;
    return comp;
}

bool is_connected(const MultiGraph& g)
{
    int count = 0;
    connected_components(g, &count);
    return count <= 1;
}

bool is_simple(const MultiGraph& g)
{
    std::vector<VertexId> seen(static_cast<std::size_t>(g.vertex_count()), -1);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (const EdgeId e : g.out_edges(v)) {
            const VertexId w = g.head(e);
            if (w == v || seen[static_cast<std::size_t>(w)] == v)
                return false;
            seen[static_cast<std::size_t>(w)] = v;
        }
    }
    return true;
}

Subgraph induced_subgraph(const MultiGraph& g, std::span<const VertexId> keep)
{
    std::vector<VertexId> renumber(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        renumber[static_cast<std::size_t>(keep[i])] = static_cast<VertexId>(i);

    Subgraph out{MultiGraph(static_cast<int>(keep.size())), {keep.begin(), keep.end()}, {}};
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (e > g.inverse(e))
            continue;
        const VertexId a = renumber[static_cast<std::size_t>(g.tail(e))];
        const VertexId b = renumber[static_cast<std::size_t>(g.head(e))];
        if (a < 0 || b < 0)
            continue;
        if (g.is_half_loop(e)) {
            out.graph.add_half_loop(a);
            out.edge_origin.push_back(e);
        } else {
            out.graph.add_edge(a, b);
            out.edge_origin.push_back(e);
            out.edge_origin.push_back(g.inverse(e));
        }
    }
    return out;
}

int girth(const MultiGraph& g, int search_limit)
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> dist(n, -1);
    std::vector<EdgeId> parent(n, -1);
    std::vector<VertexId> queue;
    queue.reserve(n);
    int best = kInfiniteGirth;

    for (VertexId root = 0; root < g.vertex_count(); ++root) {
        queue.clear();
        queue.push_back(root);
        dist[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = -1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const VertexId x = queue[head];
            const int dx = dist[static_cast<std::size_t>(x)];
            // Every cycle closed from here on has length >= 2*dx.
            if (best != kInfiniteGirth && 2 * dx >= best)
                break;
            if (2 * dx > search_limit)
                break;
            const EdgeId back = parent[static_cast<std::size_t>(x)] < 0
                                    ? -1
                                    : g.inverse(parent[static_cast<std::size_t>(x)]);
            for (const EdgeId e : g.out_edges(x)) {
                if (e == back)
                    continue;
                const VertexId y = g.head(e);
                const int dy = dist[static_cast<std::size_t>(y)];
                if (dy < 0) {
                    dist[static_cast<std::size_t>(y)] = dx + 1;
                    parent[static_cast<std::size_t>(y)] = e;
                    queue.push_back(y);
                } else {
                    best = std::min(best, dx + dy + 1);
                }
            }
        }
        for (const VertexId x : queue)
            dist[static_cast<std::size_t>(x)] = -1;
        if (best == 1)
            break;
    }
    return best <= search_limit ? best : kInfiniteGirth;
}

std::vector<int> bfs_distances(const MultiGraph& g, VertexId source)
{
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<VertexId> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const VertexId x = queue[i];
        for (const EdgeId e : g.out_edges(x)) {
            const VertexId y = g.head(e);
            if (dist[static_cast<std::size_t>(y)] < 0) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

int distance(const MultiGraph& g, VertexId u, VertexId v)
{
    return bfs_distances(g, u)[static_cast<std::size_t>(v)];
}

FarthestPair farthest_pair(const MultiGraph& g)
{
    if (g.vertex_count() == 0)
        throw PreconditionError("diameter of the empty graph");
    FarthestPair best{0, 0, 0};
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        const auto dist = bfs_distances(g, u);
        for (VertexId v = u; v < g.vertex_count(); ++v) {
            const int d = dist[static_cast<std::size_t>(v)];
            if (d < 0)
                throw PreconditionError("diameter of a disconnected graph");
            if (d > best.distance)
                best = {u, v, d};
        }
    }
    return best;
}

int diameter(const MultiGraph& g)
{
    return farthest_pair(g).distance;
}

MultiGraph parse_graph(std::string_view text)
{
    const auto lines = detail::tokenize(text);
    if (lines.empty())
        throw ParseError("empty graph text: expected 'vertices <k>'");
    const auto& header = lines.front();
    if (header.tokens[0] != "vertices")
        detail::parse_fail(header, "expected 'vertices <k>' header");
    detail::expect_arity(header, 2);
    const auto k = detail::parse_int(header, header.tokens[1]);
    if (k <= 0 || k > std::numeric_limits<VertexId>::max())
        detail::parse_fail(header, "vertex count must be positive");

    MultiGraph g(static_cast<int>(k));
    auto vertex = [&](const detail::Line& line, std::string_view token) {
        const auto v = detail::parse_int(line, token);
        if (v < 0 || v >= k)
            detail::parse_fail(line, "vertex index " + std::string(token) + " out of range");
        return static_cast<VertexId>(v);
    };
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        const auto directive = line.tokens[0];
        if (directive == "edge") {
            detail::expect_arity(line, 3);
            g.add_edge(vertex(line, line.tokens[1]), vertex(line, line.tokens[2]));
        } else if (directive == "wholeloop") {
            detail::expect_arity(line, 2);
            g.add_whole_loop(vertex(line, line.tokens[1]));
        } else if (directive == "halfloop") {
            detail::expect_arity(line, 2);
            g.add_half_loop(vertex(line, line.tokens[1]));
        } else if (directive == "vertices") {
            detail::parse_fail(line, "duplicate 'vertices' header");
        } else {
            detail::parse_fail(line, "unknown directive '" + std::string(directive) + "'");
        }
    }
    return g;
}

std::string serialize_graph(const MultiGraph& g)
{
    std::string out = "vertices " + std::to_string(g.vertex_count()) + "\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (g.is_half_loop(e)) {
            out += "halfloop " + std::to_string(g.tail(e)) + "\n";
        } else if (e < g.inverse(e)) {
            if (g.is_loop(e))
                out += "wholeloop " + std::to_string(g.tail(e)) + "\n";
            else
                out += "edge " + std::to_string(g.tail(e)) + " " + std::to_string(g.head(e)) + "\n";
        }
    }
    return out;
}

MultiGraph read_graph_file(const std::filesystem::path& path)
{
    try {
        return parse_graph(detail::read_file(path));
    } catch (const ParseError& err) {
        throw ParseError(path.string() + ": " + err.what());
    }
}

void write_graph_file(const std::filesystem::path& path, const MultiGraph& g)
{
    detail::write_file(path, serialize_graph(g));
}

} // namespace liftgirth
