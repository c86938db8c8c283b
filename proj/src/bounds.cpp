#include "liftgirth/bounds.hpp"

#include "liftgirth/error.hpp"
#include "liftgirth/nb_spectral.hpp"
#include "liftgirth/universal_cover.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace liftgirth {

namespace {

std::int64_t to_int64(const Count& c)
{
    if (c > std::numeric_limits<std::int64_t>::max())
        throw PreconditionError("bound exceeds 64-bit range");
    return c.convert_to<std::int64_t>();
}

int tree_diameter(const MultiGraph& h, const std::vector<EdgeId>& edges)
{
    MultiGraph t(h.vertex_count());
    for (const EdgeId e : edges)
        if (e < h.inverse(e))
            t.add_edge(h.tail(e), h.head(e));
    return diameter(t);
}

std::vector<EdgeId> both_orientations(const MultiGraph& h, std::vector<EdgeId> edges)
{
    const auto n = edges.size();
    for (std::size_t i = 0; i < n; ++i)
        edges.push_back(h.inverse(edges[i]));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

} // namespace

bool SpanningTreeInfo::contains(EdgeId e) const
{
    return std::binary_search(edges.begin(), edges.end(), e);
}

SpanningTreeInfo spanning_tree(const MultiGraph& h)
{
    if (h.vertex_count() == 0 || !is_connected(h))
        throw PreconditionError("spanning tree of a disconnected graph");
    std::optional<SpanningTreeInfo> best;
    for (VertexId root = 0; root < h.vertex_count(); ++root) {
        std::vector<char> seen(static_cast<std::size_t>(h.vertex_count()), 0);
        std::vector<VertexId> queue{root};
        std::vector<EdgeId> tree;
        seen[static_cast<std::size_t>(root)] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (const EdgeId e : h.out_edges(queue[i])) {
                const VertexId y = h.head(e);
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    queue.push_back(y);
                    tree.push_back(e);
                }
            }
        SpanningTreeInfo info;
        info.edges = both_orientations(h, tree);
        info.root = root;
        info.diameter = tree_diameter(h, info.edges);
        if (!best || info.diameter < best->diameter)
            best = std::move(info);
    }
    return *best;
}

SpanningTreeInfo spanning_tree_from_edges(const MultiGraph& h, const std::vector<EdgeId>& edges)
{
    for (const EdgeId e : edges)
        if (e < 0 || e >= h.edge_count())
            throw PreconditionError("tree edge " + std::to_string(e) + " out of range");
    SpanningTreeInfo info;
    info.edges = both_orientations(h, edges);
    MultiGraph t(h.vertex_count());
    int undirected = 0;
    for (const EdgeId e : info.edges) {
        if (h.is_loop(e))
            throw PreconditionError("tree edge " + std::to_string(e) + " is a loop");
        if (e < h.inverse(e)) {
            t.add_edge(h.tail(e), h.head(e));
            ++undirected;
        }
    }
    if (undirected != h.vertex_count() - 1 || !is_connected(t))
        throw PreconditionError("edges do not form a spanning tree");
    info.diameter = diameter(t);
    return info;
}

int legal_height(const MultiGraph& h, int g, int min_height)
{
    int n = std::max(min_height, 1);
    if (h.has_half_loop() && g >= 2 && n % 2 != 0)
        ++n;
    return n;
}

MooreBound moore_lift_bound(const MultiGraph& h, int g)
{
    if (g < 3)
        throw PreconditionError("Moore bound needs g >= 3");
    if (!validate(h).admissible)
        throw PreconditionError("Moore bound needs an admissible base graph");
    MooreBound out;
    Count raw = 0;
    if (g % 2 == 1) {
        for (VertexId v = 0; v < h.vertex_count(); ++v)
            raw = std::max(raw, ball_size_vertex(h, v, g / 2));
    } else {
        Count lemma = 0;
        for (EdgeId e = 0; e < h.edge_count(); ++e) {
            raw = std::max(raw, ball_size_edge_two_sided(h, e, g / 2 - 1));
            lemma = std::max(lemma, ball_size_edge_two_sided(h, e, g / 2));
        }
        out.lemma_radius_raw = to_int64(lemma);
    }
    out.raw = to_int64(raw);
    const std::int64_t nv = h.vertex_count();
    const auto min_height = (out.raw + nv - 1) / nv;
    out.adjusted = nv * legal_height(h, g, static_cast<int>(min_height));
    return out;
}

int legal_height_at_most(const MultiGraph& h, int g, std::int64_t max_height)
{
    auto n = static_cast<int>(std::min<std::int64_t>(max_height, std::numeric_limits<int>::max()));
    if (h.has_half_loop() && g >= 2 && n % 2 != 0)
        --n;
    return std::max(n, 0);
}

std::int64_t es_ball(const MultiGraph& h, int g, const SpanningTreeInfo& t)
{
    if (g < t.g0())
        throw PreconditionError("g = " + std::to_string(g) + " is below g0 = " + std::to_string(t.g0()));
    std::optional<Count> best;
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        const Count ball = ball_size_vertex(h, v, t.d0(g));
        if (!best || ball < *best)
            best = ball;
    }
    return to_int64(*best);
}

std::int64_t es_upper_bound(const MultiGraph& h, int g, const SpanningTreeInfo& t)
{
    const std::int64_t nv = h.vertex_count();
    return nv * legal_height_at_most(h, g, es_ball(h, g, t) / nv);
}

double ahl_moore_polynomial(double x_plus_1, int g)
{
    const double x = x_plus_1 - 1.0;
    auto geometric = [x](int top) {
        double sum = 0.0;
        double power = 1.0;
        for (int i = 0; i <= top; ++i) {
            sum += power;
            power *= x;
        }
        return sum;
    };
    return geometric((g - 1) / 2) + geometric(g / 2 - 1);
}

std::vector<BoundsRow> bounds_table(const MultiGraph& h, int g_min, int g_max, const BestKnown& best_known,
                                    const std::optional<SpanningTreeInfo>& tree)
{
    const SpanningTreeInfo t = tree ? *tree : spanning_tree(h);
    const double lambda_plus_1 = lambda_ahl(h) + 1.0;
    std::vector<BoundsRow> rows;
    for (int g = g_min; g <= g_max; ++g) {
        BoundsRow row;
        row.g = g;
        const auto moore = moore_lift_bound(h, g);
        row.moore_raw = moore.raw;
        row.moore_adjusted = moore.adjusted;
        row.moore_lemma_raw = moore.lemma_radius_raw;
        if (g >= t.g0()) {
            row.es_ball = es_ball(h, g, t);
            const std::int64_t nv = h.vertex_count();
            row.es_bound = nv * legal_height_at_most(h, g, *row.es_ball / nv);
        }
        row.ahl_n0 = ahl_moore_polynomial(lambda_plus_1, g);
        if (const auto it = best_known.find(g); it != best_known.end())
            row.best_known = it->second;
        rows.push_back(row);
    }
    return rows;
}

std::string bounds_csv_row(const BoundsRow& row)
{
    auto opt = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); };
    char ahl[64];
    std::snprintf(ahl, sizeof ahl, "%.6f", row.ahl_n0);
    return std::to_string(row.g) + "," + std::to_string(row.moore_raw) + "," + std::to_string(row.moore_adjusted) +
           "," + opt(row.es_bound) + "," + ahl + "," + opt(row.best_known);
}

std::string bounds_csv(const std::vector<BoundsRow>& rows)
{
    std::string out(kBoundsCsvHeader);
    out += "\n";
    for (const auto& row : rows)
        out += bounds_csv_row(row) + "\n";
    return out;
}

BestKnown parse_best_known(std::string_view text)
{
    BestKnown out;
    bool header = true;
    for (auto& line : detail::tokenize(text)) {
        std::string joined;
        for (const auto tok : line.tokens)
            joined += tok;
        if (header) {
            header = false;
            if (joined != "g,best_known")
                detail::parse_fail(line, "expected header 'g,best_known'");
            continue;
        }
        const auto comma = joined.find(',');
        if (comma == std::string::npos)
            detail::parse_fail(line, "expected 'g,best_known'");
        const std::string_view row = joined;
        const auto g = detail::parse_int(line, row.substr(0, comma));
        const auto best = detail::parse_int(line, row.substr(comma + 1));
        out[static_cast<int>(g)] = best;
    }
    return out;
}

BestKnown read_best_known_file(const std::filesystem::path& path)
{
    try {
        return parse_best_known(detail::read_file(path));
    } catch (const ParseError& err) {
        throw ParseError(path.string() + ": " + err.what());
    }
}

} // namespace liftgirth
