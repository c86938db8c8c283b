#include "liftgirth/lift.hpp"

#include "liftgirth/error.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace liftgirth {

Permutation identity_permutation(int n)
{
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation inverse_permutation(const Permutation& p)
{
    Permutation inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return inv;
}

bool is_permutation(const Permutation& p)
{
    std::vector<char> seen(p.size(), 0);
    for (const int x : p) {
        if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[static_cast<std::size_t>(x)])
            return false;
        seen[static_cast<std::size_t>(x)] = 1;
    }
    return true;
}

LiftAssignment LiftAssignment::identity(const MultiGraph& base, int height)
{
    return {height, std::vector<Permutation>(static_cast<std::size_t>(base.edge_count()),
                                             identity_permutation(height))};
}

void LiftAssignment::set(const MultiGraph& base, EdgeId e, Permutation p)
{
    perm[static_cast<std::size_t>(base.inverse(e))] = inverse_permutation(p);
    perm[static_cast<std::size_t>(e)] = std::move(p);
}

void check_assignment(const MultiGraph& base, const LiftAssignment& a)
{
    if (a.height < 1)
        throw PreconditionError("lift height must be positive");
    if (a.perm.size() != static_cast<std::size_t>(base.edge_count()))
        throw PreconditionError("lift assignment needs one permutation per directed base edge");
    for (EdgeId e = 0; e < base.edge_count(); ++e) {
        const auto& p = a.perm[static_cast<std::size_t>(e)];
        if (p.size() != static_cast<std::size_t>(a.height) || !is_permutation(p))
            throw StructuralError("not a permutation of the lift height", e);
        if (inverse_permutation(p) != a.perm[static_cast<std::size_t>(base.inverse(e))])
            throw StructuralError(base.is_half_loop(e) ? "half-loop permutation is not an involution"
                                                       : "permutation of the inverse edge is not inverse",
                                  e);
    }
}

Lift build_lift(const MultiGraph& base, const LiftAssignment& a)
{
    check_assignment(base, a);
    const int n = a.height;
    Lift out{MultiGraph(base.vertex_count() * n), {}};
    auto& vmap = out.cover.vertex_map;
    vmap.resize(static_cast<std::size_t>(base.vertex_count() * n));
    for (int i = 0; i < n; ++i)
        for (VertexId v = 0; v < base.vertex_count(); ++v)
            vmap[static_cast<std::size_t>(lifted_vertex(base, v, i))] = v;

    auto& emap = out.cover.edge_map;
    emap.reserve(static_cast<std::size_t>(base.edge_count() * n));
    for (const EdgeId e : base.undirected_edges()) {
        const auto& p = a.perm[static_cast<std::size_t>(e)];
        const VertexId t = base.tail(e);
        const VertexId h = base.head(e);
        for (int i = 0; i < n; ++i) {
            const int j = p[static_cast<std::size_t>(i)];
            if (base.is_half_loop(e)) {
                if (j == i) {
                    out.graph.add_half_loop(lifted_vertex(base, t, i));
                    emap.push_back(e);
                } else if (i < j) {
                    out.graph.add_edge(lifted_vertex(base, t, i), lifted_vertex(base, h, j));
                    emap.push_back(e);
                    emap.push_back(e);
                }
            } else {
                out.graph.add_edge(lifted_vertex(base, t, i), lifted_vertex(base, h, j));
                emap.push_back(e);
                emap.push_back(base.inverse(e));
            }
        }
    }
    return out;
}

CoverReport verify_cover(const MultiGraph& g, const MultiGraph& h, const CoverMap& m)
{
    CoverReport report;
    if (m.vertex_map.size() != static_cast<std::size_t>(g.vertex_count()) ||
        m.edge_map.size() != static_cast<std::size_t>(g.edge_count())) {
        report.messages.push_back("map sizes do not match the covering graph");
        return report;
    }
    for (const VertexId x : m.vertex_map) {
        if (x < 0 || x >= h.vertex_count()) {
            report.messages.push_back("vertex image out of range");
            return report;
        }
    }
    for (const EdgeId x : m.edge_map) {
        if (x < 0 || x >= h.edge_count()) {
            report.messages.push_back("edge image out of range");
            return report;
        }
    }

    auto vimg = [&](VertexId v) { return m.vertex_map[static_cast<std::size_t>(v)]; };
    auto eimg = [&](EdgeId e) { return m.edge_map[static_cast<std::size_t>(e)]; };

    for (EdgeId d = 0; d < g.edge_count(); ++d) {
        const EdgeId img = eimg(d);
        if (vimg(g.tail(d)) != h.tail(img) || vimg(g.head(d)) != h.head(img) ||
            eimg(g.inverse(d)) != h.inverse(img))
            report.bad_edges.push_back(d);
    }

    std::vector<EdgeId> upstairs;
    std::vector<EdgeId> downstairs;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        upstairs.clear();
        for (const EdgeId d : g.out_edges(v))
            upstairs.push_back(eimg(d));
        const auto below = h.out_edges(vimg(v));
        downstairs.assign(below.begin(), below.end());
        std::sort(upstairs.begin(), upstairs.end());
        std::sort(downstairs.begin(), downstairs.end());
        if (upstairs != downstairs)
            report.deficient_vertices.push_back(v);
    }

    std::vector<int> vertex_fibre(static_cast<std::size_t>(h.vertex_count()), 0);
    std::vector<int> edge_fibre(static_cast<std::size_t>(h.edge_count()), 0);
    for (const VertexId x : m.vertex_map)
        ++vertex_fibre[static_cast<std::size_t>(x)];
    for (const EdgeId x : m.edge_map)
        ++edge_fibre[static_cast<std::size_t>(x)];
    const int n = vertex_fibre.empty() ? 0 : vertex_fibre.front();
    const bool constant =
        n > 0 && std::all_of(vertex_fibre.begin(), vertex_fibre.end(), [n](int c) { return c == n; }) &&
        std::all_of(edge_fibre.begin(), edge_fibre.end(), [n](int c) { return c == n; });
    if (!constant)
        report.messages.push_back("fibre sizes are not constant (or the map is not surjective)");
    if (!report.bad_edges.empty())
        report.messages.push_back(std::to_string(report.bad_edges.size()) +
                                  " edge(s) break the homomorphism");
    if (!report.deficient_vertices.empty())
        report.messages.push_back(std::to_string(report.deficient_vertices.size()) +
                                  " vertex(es) without a local bijection");

    report.height = constant ? n : 0;
    report.accepted = constant && report.bad_edges.empty() && report.deficient_vertices.empty();
    return report;
}

CoverMap compose(const CoverMap& upper, const CoverMap& lower)
{
    CoverMap out;
    out.vertex_map.reserve(upper.vertex_map.size());
    for (const VertexId v : upper.vertex_map)
        out.vertex_map.push_back(lower.vertex_map[static_cast<std::size_t>(v)]);
    out.edge_map.reserve(upper.edge_map.size());
    for (const EdgeId e : upper.edge_map)
        out.edge_map.push_back(lower.edge_map[static_cast<std::size_t>(e)]);
    return out;
}

LiftAssignment random_two_lift_assignment(const MultiGraph& g, Rng& rng)
{
    if (g.has_half_loop())
        throw PreconditionError("random 2-lift of a graph with half-loops; apply half_loop_elimination first");
    auto a = LiftAssignment::identity(g, 2);
    const Permutation swap{1, 0};
    for (const EdgeId e : g.undirected_edges())
        if (rng.coin())
            a.set(g, e, swap);
    return a;
}

Lift random_two_lift_with_cover(const MultiGraph& g, Rng& rng)
{
    return build_lift(g, random_two_lift_assignment(g, rng));
}

MultiGraph random_two_lift(const MultiGraph& g, Rng& rng)
{
    return random_two_lift_with_cover(g, rng).graph;
}

namespace {

Permutation shuffled(int n, Rng& rng)
{
    auto p = identity_permutation(n);
    for (int i = n - 1; i > 0; --i)
        std::swap(p[static_cast<std::size_t>(i)], p[rng.index(static_cast<std::size_t>(i) + 1)]);
    return p;
}

} // namespace

LiftAssignment random_lift_assignment(const MultiGraph& base, int n, Rng& rng)
{
    if (n < 1)
        throw PreconditionError("lift height must be positive");
    auto a = LiftAssignment::identity(base, n);
    for (const EdgeId e : base.undirected_edges()) {
        auto p = shuffled(n, rng);
        if (base.is_half_loop(e)) {
            const auto order = p;
            p = identity_permutation(n);
            const auto pairs = rng.index(static_cast<std::size_t>(n / 2) + 1);
            for (std::size_t k = 0; k < pairs; ++k) {
                const int x = order[2 * k];
                const int y = order[2 * k + 1];
                p[static_cast<std::size_t>(x)] = y;
                p[static_cast<std::size_t>(y)] = x;
            }
        }
        a.set(base, e, std::move(p));
    }
    return a;
}

Lift half_loop_elimination(const MultiGraph& h)
{
    auto a = LiftAssignment::identity(h, 2);
    if (h.has_half_loop()) {
        const Permutation swap{1, 0};
        std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> parallel;
        for (const EdgeId e : h.undirected_edges()) {
            if (h.is_half_loop(e)) {
                a.set(h, e, swap);
            } else if (!h.is_loop(e)) {
                parallel[std::minmax(h.tail(e), h.head(e))].push_back(e);
            }
        }
        for (const auto& [ends, edges] : parallel)
            if (edges.size() == 2)
                a.set(h, edges[1], swap);
    }
    return build_lift(h, a);
}

LiftFile parse_lift(std::string_view text, const std::filesystem::path& base_dir)
{
    const auto lines = detail::tokenize(text);
    if (lines.size() < 2)
        throw ParseError("lift file needs 'base' and 'height' lines");
    const auto& base_line = lines[0];
    if (base_line.tokens[0] != "base")
        detail::parse_fail(base_line, "expected 'base <path>'");
    detail::expect_arity(base_line, 2);
    const auto& height_line = lines[1];
    if (height_line.tokens[0] != "height")
        detail::parse_fail(height_line, "expected 'height <n>'");
    detail::expect_arity(height_line, 2);
    const auto n = detail::parse_int(height_line, height_line.tokens[1]);
    if (n < 1)
        detail::parse_fail(height_line, "height must be positive");

    LiftFile out;
    out.base_path = std::filesystem::path(std::string(base_line.tokens[1]));
    const auto resolved = out.base_path.is_absolute() ? out.base_path : base_dir / out.base_path;
    out.base = read_graph_file(resolved);
    out.assignment = LiftAssignment::identity(out.base, static_cast<int>(n));

    std::vector<char> seen(static_cast<std::size_t>(out.base.edge_count()), 0);
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.tokens[0] != "perm")
            detail::parse_fail(line, "unknown directive '" + std::string(line.tokens[0]) + "'");
        detail::expect_arity(line, static_cast<std::size_t>(n) + 2);
        const auto e = detail::parse_int(line, line.tokens[1]);
        if (e < 0 || e >= out.base.edge_count() || e > out.base.inverse(static_cast<EdgeId>(e)))
            detail::parse_fail(line, "edge id " + std::string(line.tokens[1]) +
                                         " is not an undirected base edge id");
        if (seen[static_cast<std::size_t>(e)])
            detail::parse_fail(line, "duplicate perm for edge " + std::string(line.tokens[1]));
        seen[static_cast<std::size_t>(e)] = 1;
        Permutation p;
        for (std::size_t k = 2; k < line.tokens.size(); ++k)
            p.push_back(static_cast<int>(detail::parse_int(line, line.tokens[k]) - 1));
        if (!is_permutation(p))
            detail::parse_fail(line, "images do not form a permutation of 1..n");
        if (out.base.is_half_loop(static_cast<EdgeId>(e)) && inverse_permutation(p) != p)
            detail::parse_fail(line, "half-loop permutation must be an involution");
        out.assignment.set(out.base, static_cast<EdgeId>(e), std::move(p));
    }
    for (const EdgeId e : out.base.undirected_edges())
        if (!seen[static_cast<std::size_t>(e)])
            throw ParseError("missing perm line for base edge " + std::to_string(e));
    return out;
}

LiftFile read_lift_file(const std::filesystem::path& path)
{
    try {
        return parse_lift(detail::read_file(path), path.parent_path());
    } catch (const ParseError& err) {
        throw ParseError(path.string() + ": " + err.what());
    }
}

std::string serialize_lift(const MultiGraph& base, const LiftAssignment& a, const std::string& base_path)
{
    std::string out = "base " + base_path + "\nheight " + std::to_string(a.height) + "\n";
    for (const EdgeId e : base.undirected_edges()) {
        out += "perm " + std::to_string(e);
        for (const int x : a.perm[static_cast<std::size_t>(e)])
            out += " " + std::to_string(x + 1);
        out += "\n";
    }
    return out;
}

CoverMap parse_cover_map(std::string_view text)
{
    const auto lines = detail::tokenize(text);
    if (lines.empty() || lines[0].tokens[0] != "cover")
        throw ParseError("expected 'cover <vertices> <edges>' header");
    detail::expect_arity(lines[0], 3);
    const auto nv = detail::parse_int(lines[0], lines[0].tokens[1]);
    const auto ne = detail::parse_int(lines[0], lines[0].tokens[2]);
    if (nv < 0 || ne < 0)
        detail::parse_fail(lines[0], "negative size");
    CoverMap m{std::vector<VertexId>(static_cast<std::size_t>(nv), -1),
               std::vector<EdgeId>(static_cast<std::size_t>(ne), -1)};
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        detail::expect_arity(line, 3);
        const auto from = detail::parse_int(line, line.tokens[1]);
        const auto to = detail::parse_int(line, line.tokens[2]);
        auto& target = line.tokens[0] == "v"   ? m.vertex_map
                       : line.tokens[0] == "e" ? m.edge_map
                                               : (detail::parse_fail(line, "unknown directive"), m.edge_map);
        if (from < 0 || static_cast<std::size_t>(from) >= target.size())
            detail::parse_fail(line, "index out of range");
        target[static_cast<std::size_t>(from)] = static_cast<int>(to);
    }
    for (std::size_t i = 0; i < m.vertex_map.size(); ++i)
        if (m.vertex_map[i] < 0)
            throw ParseError("missing or negative image for vertex " + std::to_string(i));
    for (std::size_t i = 0; i < m.edge_map.size(); ++i)
        if (m.edge_map[i] < 0)
            throw ParseError("missing or negative image for edge " + std::to_string(i));
    return m;
}

std::string serialize_cover_map(const CoverMap& m)
{
    std::string out = "cover " + std::to_string(m.vertex_map.size()) + " " +
                      std::to_string(m.edge_map.size()) + "\n";
    for (std::size_t i = 0; i < m.vertex_map.size(); ++i)
        out += "v " + std::to_string(i) + " " + std::to_string(m.vertex_map[i]) + "\n";
    for (std::size_t i = 0; i < m.edge_map.size(); ++i)
        out += "e " + std::to_string(i) + " " + std::to_string(m.edge_map[i]) + "\n";
    return out;
}

} // namespace liftgirth
