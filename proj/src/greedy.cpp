#include "liftgirth/constructors.hpp"

#include "liftgirth/error.hpp"
#include "liftgirth/standard_graphs.hpp"

#include <algorithm>

namespace liftgirth {

namespace {

/// Permissible pairs P_k over the even vertices 2k, stored as a bit matrix
/// with per-vertex degrees and a lazily compacted pair list.
class PermissiblePairs {
public:
    explicit PermissiblePairs(int m) : m_(m), live_(static_cast<std::size_t>(m) * m, 0), degree_(m, 0) {}

    bool contains(int a, int b) const { return live_[index(a, b)] != 0; }
    int degree(int a) const { return degree_[static_cast<std::size_t>(a)]; }
    long long size() const noexcept { return count_; }

    void add(int a, int b)
    {
        live_[index(a, b)] = live_[index(b, a)] = 1;
        ++degree_[static_cast<std::size_t>(a)];
        ++degree_[static_cast<std::size_t>(b)];
        ++count_;
        list_.emplace_back(a, b);
    }

    void remove(int a, int b)
    {
        if (!contains(a, b))
            return;
        live_[index(a, b)] = live_[index(b, a)] = 0;
        --degree_[static_cast<std::size_t>(a)];
        --degree_[static_cast<std::size_t>(b)];
        --count_;
    }

    void remove_vertex(int a)
    {
        for (int b = 0; b < m_; ++b)
            remove(a, b);
    }

    std::vector<int> neighbours(int a) const
    {
        std::vector<int> out;
        for (int b = 0; b < m_; ++b)
            if (contains(a, b))
                out.push_back(b);
        return out;
    }

    /// Uniform live pair. Requires size() > 0.
    std::pair<int, int> sample(Rng& rng)
    {
        if (static_cast<long long>(list_.size()) > 4 * count_ + 16) {
            std::erase_if(list_, [this](const auto& p) { return !contains(p.first, p.second); });
        }
        for (;;) {
            const auto& p = list_[rng.index(list_.size())];
            if (contains(p.first, p.second))
                return p;
        }
    }

private:
    std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * m_ + b; }

    int m_;
    std::vector<char> live_;
    std::vector<int> degree_;
    long long count_ = 0;
    std::vector<std::pair<int, int>> list_;
};

/// Vertices within distance `radius` of `source`, with their distances.
void truncated_bfs(const std::vector<std::vector<VertexId>>& adj, VertexId source, int radius,
                   std::vector<int>& dist, std::vector<VertexId>& reached)
{
    reached.assign(1, source);
    dist[static_cast<std::size_t>(source)] = 0;
    for (std::size_t i = 0; i < reached.size(); ++i) {
        const VertexId x = reached[i];
        const int dx = dist[static_cast<std::size_t>(x)];
        if (dx == radius)
            continue;
        for (const VertexId y : adj[static_cast<std::size_t>(x)])
            if (dist[static_cast<std::size_t>(y)] < 0) {
                dist[static_cast<std::size_t>(y)] = dx + 1;
                reached.push_back(y);
            }
    }
}

} // namespace

GreedyResult greedy_cycle(GreedyVariant variant, int n, int g, Rng& rng)
{
    if (n < 4 || n % 4 != 0)
        throw PreconditionError("greedy construction needs n divisible by 4");
    if (g < 3)
        throw PreconditionError("greedy construction needs g >= 3");

    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
    for (VertexId i = 0; i < n; ++i) {
        adj[static_cast<std::size_t>(i)].push_back((i + 1) % n);
        adj[static_cast<std::size_t>(i)].push_back((i + n - 1) % n);
    }
    std::vector<std::pair<VertexId, VertexId>> matching;
    auto result = [&](bool success) {
        GreedyResult r;
        r.success = success;
        r.graph = cycle_graph(n);
        for (const auto& [a, b] : matching)
            r.graph.add_edge(a, b);
        r.matching_edges = static_cast<int>(matching.size());
        return r;
    };
    if (n < g)
        return result(false);

    // Even vertex 2k is pair index k.
    const int m = n / 2;
    PermissiblePairs pairs(m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (std::min(2 * (b - a), n - 2 * (b - a)) >= g - 1)
                pairs.add(a, b);
    std::vector<char> deficient(static_cast<std::size_t>(m), 1);
    int remaining = m;

    std::vector<int> dist_a(static_cast<std::size_t>(n), -1);
    std::vector<int> dist_b(static_cast<std::size_t>(n), -1);
    std::vector<VertexId> ball_a;
    std::vector<VertexId> ball_b;
    std::vector<int> candidates;

    while (remaining > 0) {
        // A deficient vertex without permissible partners can never be
        // completed, since pairs are only ever removed.
        for (int k = 0; k < m; ++k)
            if (deficient[static_cast<std::size_t>(k)] && pairs.degree(k) == 0)
                return result(false);

        std::pair<int, int> chosen;
        if (variant == GreedyVariant::A) {
            chosen = pairs.sample(rng);
        } else {
            candidates.clear();
            int best = m + 1;
            for (int k = 0; k < m; ++k) {
                if (!deficient[static_cast<std::size_t>(k)])
                    continue;
                if (variant == GreedyVariant::C && pairs.degree(k) > best)
                    continue;
                if (variant == GreedyVariant::C && pairs.degree(k) < best) {
                    best = pairs.degree(k);
                    candidates.clear();
                }
                candidates.push_back(k);
            }
            const int u = candidates[rng.index(candidates.size())];
            const auto nbrs = pairs.neighbours(u);
            chosen = {u, nbrs[rng.index(nbrs.size())]};
        }

        const auto [ka, kb] = chosen;
        const VertexId a = 2 * ka;
        const VertexId b = 2 * kb;
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
        matching.emplace_back(a, b);
        deficient[static_cast<std::size_t>(ka)] = deficient[static_cast<std::size_t>(kb)] = 0;
        remaining -= 2;
        pairs.remove_vertex(ka);
        pairs.remove_vertex(kb);

        // New paths all run x ... a - b ... y; drop pairs they bring below g - 1.
        const int radius = g - 3;
        if (radius >= 0) {
            truncated_bfs(adj, a, radius, dist_a, ball_a);
            truncated_bfs(adj, b, radius, dist_b, ball_b);
            for (const VertexId x : ball_a) {
                if (x % 2 != 0 || !deficient[static_cast<std::size_t>(x / 2)])
                    continue;
                for (const VertexId y : ball_b) {
                    if (y % 2 != 0 || x == y)
                        continue;
                    if (dist_a[static_cast<std::size_t>(x)] + 1 + dist_b[static_cast<std::size_t>(y)] < g - 1)
                        pairs.remove(x / 2, y / 2);
                }
            }
            for (const VertexId x : ball_a)
                dist_a[static_cast<std::size_t>(x)] = -1;
            for (const VertexId y : ball_b)
                dist_b[static_cast<std::size_t>(y)] = -1;
        }
    }
    return result(true);
}

} // namespace liftgirth
