#include "liftgirth/constructors.hpp"

#include "liftgirth/error.hpp"
#include "liftgirth/standard_graphs.hpp"

#include <algorithm>

namespace liftgirth {

namespace {

struct UvEdge {
    VertexId u;
    VertexId v;
};

UvEdge uv_ends(const MultiGraph& g, EdgeId e)
{
    if (e < 0 || e >= g.edge_count() || g.is_loop(e))
        throw PreconditionError("surgery edge " + std::to_string(e) + " is not an ordinary edge");
    const VertexId a = g.tail(e);
    const VertexId b = g.head(e);
    if (g.degree(a) == 3 && g.degree(b) == 2)
        return {a, b};
    if (g.degree(a) == 2 && g.degree(b) == 3)
        return {b, a};
    throw PreconditionError("surgery edge " + std::to_string(e) + " does not join degrees 3 and 2");
}

bool is_uv_edge(const MultiGraph& g, EdgeId e)
{
    if (g.is_loop(e))
        return false;
    const int da = g.degree(g.tail(e));
    const int db = g.degree(g.head(e));
    return (da == 3 && db == 2) || (da == 2 && db == 3);
}

std::vector<EdgeId> uv_edges(const MultiGraph& g)
{
    std::vector<EdgeId> out;
    for (const EdgeId e : g.undirected_edges())
        if (is_uv_edge(g, e))
            out.push_back(e);
    return out;
}

/// Distance from a to b in g with the undirected edge e removed, or -1 if
/// more than `limit`.
int distance_avoiding(const MultiGraph& g, VertexId a, VertexId b, EdgeId e, int limit)
{
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<VertexId> queue{a};
    dist[static_cast<std::size_t>(a)] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const VertexId x = queue[i];
        const int dx = dist[static_cast<std::size_t>(x)];
        if (x == b)
            return dx;
        if (dx == limit)
            continue;
        for (const EdgeId f : g.out_edges(x)) {
            if (f == e || f == g.inverse(e))
                continue;
            const VertexId y = g.head(f);
            if (dist[static_cast<std::size_t>(y)] < 0) {
                dist[static_cast<std::size_t>(y)] = dx + 1;
                queue.push_back(y);
            }
        }
    }
    return -1;
}

template <typename T>
const T& pick(const std::vector<T>& items, Rng& rng)
{
    return items[rng.index(items.size())];
}

EdgeId pick_gd(const MultiGraph& g, int target, Rng& rng, EdgeId& f_out)
{
    const auto candidates = uv_edges(g);
    std::vector<EdgeId> short_edges;
    for (const EdgeId e : candidates)
        if (distance_avoiding(g, g.tail(e), g.head(e), e, target - 2) >= 0)
            short_edges.push_back(e);
    if (short_edges.empty())
        throw InternalError("girth below target but no degree 3-2 edge lies on a short cycle");
    const EdgeId e = pick(short_edges, rng);

    const auto from_tail = bfs_distances(g, g.tail(e));
    const auto from_head = bfs_distances(g, g.head(e));
    auto to_e = [&](VertexId x) {
        return std::min(from_tail[static_cast<std::size_t>(x)], from_head[static_cast<std::size_t>(x)]);
    };
    int best = -1;
    std::vector<EdgeId> far;
    for (const EdgeId f : candidates) {
        if (f == e)
            continue;
        const int d = std::min(to_e(g.tail(f)), to_e(g.head(f)));
        if (d > best) {
            best = d;
            far.clear();
        }
        if (d == best)
            far.push_back(f);
    }
    if (far.empty())
        throw InternalError("no second degree 3-2 edge for surgery");
    f_out = pick(far, rng);
    return e;
}

EdgeId pick_gf(const MultiGraph& g, int target, Rng& rng, EdgeId& f_out)
{
    const auto candidates = uv_edges(g);
    std::vector<std::vector<long long>> profile;
    profile.reserve(candidates.size());
    for (const EdgeId e : candidates)
        profile.push_back(nb_cycle_profile(g, e, target - 1));

    auto lex_max = [&](const std::vector<std::size_t>& among) {
        std::vector<std::size_t> best;
        for (const std::size_t i : among) {
            if (!best.empty() && profile[i] < profile[best.front()])
                continue;
            if (!best.empty() && profile[best.front()] < profile[i])
                best.clear();
            best.push_back(i);
        }
        return best;
    };
    std::vector<std::size_t> all(candidates.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    const std::size_t ei = pick(lex_max(all), rng);
    const EdgeId e = candidates[ei];

    const auto from_v = bfs_distances(g, uv_ends(g, e).v);
    std::vector<int> reach(candidates.size(), -1);
    int best = -1;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (i == ei)
            continue;
        reach[i] = from_v[static_cast<std::size_t>(uv_ends(g, candidates[i]).v)] + 3;
        best = std::max(best, reach[i]);
    }
    if (best < 0)
        throw InternalError("no second degree 3-2 edge for surgery");
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (i != ei && (best < target ? reach[i] == best : reach[i] >= target))
            chosen.push_back(i);
    if (best >= target)
        chosen = lex_max(chosen);
    f_out = candidates[pick(chosen, rng)];
    return e;
}

} // namespace

int surgery_distance(const MultiGraph& g, EdgeId e, EdgeId f)
{
    return distance(g, uv_ends(g, e).v, uv_ends(g, f).v) + 3;
}

MultiGraph surgery_transform(const MultiGraph& g, EdgeId e, EdgeId f)
{
    const auto [u1, v1] = uv_ends(g, e);
    const auto [u2, v2] = uv_ends(g, f);
    const EdgeId e_rep = std::min(e, g.inverse(e));
    const EdgeId f_rep = std::min(f, g.inverse(f));
    if (e_rep == f_rep)
        throw PreconditionError("surgery needs two distinct edges");

    const int n = g.vertex_count();
    MultiGraph out(n + 4);
    for (const EdgeId x : g.undirected_edges()) {
        if (x == e_rep || x == f_rep)
            continue;
        if (g.is_half_loop(x))
            out.add_half_loop(g.tail(x));
        else
            out.add_edge(g.tail(x), g.head(x));
    }
    const VertexId v3 = n;
    const VertexId u3 = n + 1;
    const VertexId v4 = n + 2;
    const VertexId u4 = n + 3;
    out.add_edge(u1, v3);
    out.add_edge(v3, u3);
    out.add_edge(u3, v1);
    out.add_edge(u2, v4);
    out.add_edge(v4, u4);
    out.add_edge(u4, v2);
    out.add_edge(u3, u4);
    return out;
}

MultiGraph grow(GrowVariant variant, int g, Rng& rng, int max_steps)
{
    if (g < 3)
        throw PreconditionError("grow needs g >= 3");
    MultiGraph current = k4_minus_edge();
    for (int step = 0;; ++step) {
        const int gamma = girth(current, g - 1);
        if (gamma == kInfiniteGirth)
            return current;
        if (step == max_steps)
            throw BudgetError("surgery budget of " + std::to_string(max_steps) + " steps exhausted at girth " +
                              std::to_string(gamma));
        EdgeId f = -1;
        const EdgeId e = variant == GrowVariant::GD ? pick_gd(current, g, rng, f) : pick_gf(current, g, rng, f);
        current = surgery_transform(current, e, f);
    }
}

std::optional<CoverMap> h23_cover_map(const MultiGraph& g)
{
    const int n = g.vertex_count();
    CoverMap m;
    m.vertex_map.assign(static_cast<std::size_t>(n), -1);
    m.edge_map.assign(static_cast<std::size_t>(g.edge_count()), -1);
    for (VertexId x = 0; x < n; ++x) {
        const int d = g.degree(x);
        int heavy = 0;
        for (const EdgeId e : g.out_edges(x)) {
            if (g.is_loop(e))
                return std::nullopt;
            heavy += g.degree(g.head(e)) == 3 ? 1 : 0;
        }
        if (d == 2 && heavy == 2)
            m.vertex_map[static_cast<std::size_t>(x)] = kH23V;
        else if (d == 3 && heavy == 1)
            m.vertex_map[static_cast<std::size_t>(x)] = kH23U;
        else
            return std::nullopt;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (g.degree(g.tail(e)) == 3 && g.degree(g.head(e)) == 3)
            m.edge_map[static_cast<std::size_t>(e)] = kH23HalfLoop;

    // The degree 3-2 edges form cycles u v u v ...; orient each one so that
    // every v leaves backwards along sigma1 and forwards along sigma2.
    const EdgeId sigma1_back = h23().inverse(kH23Sigma1);
    const EdgeId sigma2_back = h23().inverse(kH23Sigma2);
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    for (VertexId start = 0; start < n; ++start) {
        if (g.degree(start) != 2 || done[static_cast<std::size_t>(start)])
            continue;
        VertexId v = start;
        EdgeId back = g.out_edges(start)[0];
        while (!done[static_cast<std::size_t>(v)]) {
            done[static_cast<std::size_t>(v)] = 1;
            const auto out = g.out_edges(v);
            const EdgeId forward = out[0] == back ? out[1] : out[0];
            m.edge_map[static_cast<std::size_t>(back)] = kH23Sigma1;
            m.edge_map[static_cast<std::size_t>(g.inverse(back))] = sigma1_back;
            m.edge_map[static_cast<std::size_t>(forward)] = kH23Sigma2;
            m.edge_map[static_cast<std::size_t>(g.inverse(forward))] = sigma2_back;
            const VertexId u = g.head(forward);
            EdgeId next = -1;
            for (const EdgeId c : g.out_edges(u))
                if (c != g.inverse(forward) && g.degree(g.head(c)) == 2)
                    next = c;
            v = g.head(next);
            back = g.inverse(next);
        }
    }
    if (!verify_cover(g, h23(), m).accepted)
        return std::nullopt;
    return m;
}

} // namespace liftgirth
