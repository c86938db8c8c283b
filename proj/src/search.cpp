#include "liftgirth/search.hpp"

#include "liftgirth/error.hpp"
#include "liftgirth/standard_graphs.hpp"

#include <algorithm>

namespace liftgirth {

LiftAssignment PermLiftH23::assignment() const
{
    const auto base = h23();
    auto a = LiftAssignment::identity(base, n);
    a.set(base, kH23Sigma1, sigma1);
    a.set(base, kH23Sigma2, sigma2);
    a.set(base, kH23HalfLoop, mu);
    return a;
}

Lift PermLiftH23::lift() const
{
    return build_lift(h23(), assignment());
}

namespace {

/// Cycle lengths of sigma2, non-increasing, each >= min_part.
void partitions(int n, int max_part, int min_part, std::vector<int>& current,
                std::vector<std::vector<int>>& out)
{
    if (n == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(n, max_part); part >= min_part; --part) {
        current.push_back(part);
        partitions(n - part, part, min_part, current, out);
        current.pop_back();
    }
}

Permutation block_cycles(const std::vector<int>& parts)
{
    Permutation p;
    int start = 0;
    for (const int c : parts) {
        for (int i = 0; i < c; ++i)
            p.push_back(start + (i + 1) % c);
        start += c;
    }
    return p;
}

/// Vertex relabellings of the u-fibre preserving the cycles of sigma2 as
/// undirected cycles: rotations and reflections of each cycle and
/// permutations among cycles of equal length.
std::vector<Permutation> cycle_automorphisms(const std::vector<int>& parts)
{
    std::vector<Permutation> out{Permutation{}};
    int start = 0;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        const int c = parts[i];
        const int k = static_cast<int>(j - i);
        std::vector<Permutation> dihedral;
        for (int r = 0; r < c; ++r) {
            Permutation rot(static_cast<std::size_t>(c));
            Permutation ref(static_cast<std::size_t>(c));
            for (int x = 0; x < c; ++x) {
                rot[static_cast<std::size_t>(x)] = (x + r) % c;
                ref[static_cast<std::size_t>(x)] = (r - x + c) % c;
            }
            dihedral.push_back(rot);
            if (c > 2)
                dihedral.push_back(ref);
        }
        // Blocks of this class: which cycle goes where, then the dihedral
        // element applied inside each cycle.
        std::vector<int> order(static_cast<std::size_t>(k));
        for (int b = 0; b < k; ++b)
            order[static_cast<std::size_t>(b)] = b;
        std::vector<Permutation> local;
        do {
            std::vector<std::size_t> choice(static_cast<std::size_t>(k), 0);
            for (;;) {
                Permutation p(static_cast<std::size_t>(k * c));
                for (int b = 0; b < k; ++b)
                    for (int x = 0; x < c; ++x)
                        p[static_cast<std::size_t>(b * c + x)] =
                            order[static_cast<std::size_t>(b)] * c +
                            dihedral[choice[static_cast<std::size_t>(b)]][static_cast<std::size_t>(x)];
                local.push_back(std::move(p));
                int b = 0;
                while (b < k && ++choice[static_cast<std::size_t>(b)] == dihedral.size())
                    choice[static_cast<std::size_t>(b++)] = 0;
                if (b == k)
                    break;
            }
        } while (std::next_permutation(order.begin(), order.end()));

        std::vector<Permutation> combined;
        combined.reserve(out.size() * local.size());
        for (const auto& prefix : out)
            for (const auto& l : local) {
                Permutation p = prefix;
                for (const int x : l)
                    p.push_back(start + x);
                combined.push_back(std::move(p));
            }
        out = std::move(combined);
        start += k * c;
        i = j;
    }
    return out;
}

/// Depth-first search over perfect matchings mu of the u-fibre for a fixed
/// sigma2, keeping girth >= g: u_a - u_b may be added only while
/// dist(u_a, u_b) >= g - 1 in the graph built so far.
class MatchingSearch {
public:
    MatchingSearch(const Permutation& sigma2, int g)
        : n_(static_cast<int>(sigma2.size())), g_(g), sigma2_(sigma2), sigma2_inv_(inverse_permutation(sigma2)),
          mate_(static_cast<std::size_t>(n_), -1), dist_(static_cast<std::size_t>(2 * n_), -1)
    {
    }

    /// Calls `leaf` on every complete matching; stops when it returns false.
    template <typename Leaf>
    bool run(long long& nodes, Leaf&& leaf)
    {
        const auto it = std::find(mate_.begin(), mate_.end(), -1);
        if (it == mate_.end())
            return leaf(mate_);
        const int a = static_cast<int>(it - mate_.begin());
        for (int b = a + 1; b < n_; ++b) {
            if (mate_[static_cast<std::size_t>(b)] >= 0 || !far_enough(a, b))
                continue;
            ++nodes;
            mate_[static_cast<std::size_t>(a)] = b;
            mate_[static_cast<std::size_t>(b)] = a;
            const bool go_on = run(nodes, leaf);
            mate_[static_cast<std::size_t>(a)] = -1;
            mate_[static_cast<std::size_t>(b)] = -1;
            if (!go_on)
                return false;
        }
        return true;
    }

private:
    // Vertex 2i is v_i, 2i + 1 is u_i.
    bool far_enough(int a, int b)
    {
        const int limit = g_ - 2;
        const int source = 2 * a + 1;
        const int target = 2 * b + 1;
        queue_.assign(1, source);
        dist_[static_cast<std::size_t>(source)] = 0;
        bool found = false;
        for (std::size_t i = 0; i < queue_.size() && !found; ++i) {
            const int x = queue_[i];
            const int dx = dist_[static_cast<std::size_t>(x)];
            if (dx == limit)
                continue;
            int nbr[3];
            int count = 0;
            const int k = x / 2;
            if (x % 2 == 0) {
                nbr[count++] = 2 * k + 1;
                nbr[count++] = 2 * sigma2_[static_cast<std::size_t>(k)] + 1;
            } else {
                nbr[count++] = 2 * k;
                nbr[count++] = 2 * sigma2_inv_[static_cast<std::size_t>(k)];
                if (mate_[static_cast<std::size_t>(k)] >= 0)
                    nbr[count++] = 2 * mate_[static_cast<std::size_t>(k)] + 1;
            }
            for (int j = 0; j < count; ++j) {
                const int y = nbr[j];
                if (dist_[static_cast<std::size_t>(y)] >= 0)
                    continue;
                if (y == target) {
                    found = true;
                    break;
                }
                dist_[static_cast<std::size_t>(y)] = dx + 1;
                queue_.push_back(y);
            }
        }
        for (const int x : queue_)
            dist_[static_cast<std::size_t>(x)] = -1;
        return !found;
    }

    int n_;
    int g_;
    Permutation sigma2_;
    Permutation sigma2_inv_;
    std::vector<int> mate_;
    std::vector<int> dist_;
    std::vector<int> queue_;
};

int min_cycle_length(int g)
{
    // A sigma2 cycle of length c is a cycle of length 2c in the lift.
    return std::max(2, (g + 1) / 2);
}

std::vector<std::vector<int>> sigma2_types(int n, int g)
{
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    partitions(n, n, min_cycle_length(g), current, out);
    return out;
}

PermLiftH23 make_lift(const Permutation& sigma2, const std::vector<int>& mate)
{
    const int n = static_cast<int>(sigma2.size());
    return PermLiftH23{n, identity_permutation(n), sigma2, Permutation(mate.begin(), mate.end())};
}

bool lift_connected(const Permutation& sigma2, const std::vector<int>& mate)
{
    // Union-find over the u-fibre; the v-fibre only joins u_i and u_sigma2(i).
    const auto n = sigma2.size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i)
        parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = n;
    auto join = [&](std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        join(i, static_cast<std::size_t>(sigma2[i]));
        join(i, static_cast<std::size_t>(mate[i]));
    }
    return components == 1;
}

/// True when no automorphism of the sigma2 cycles maps mate to a
/// lexicographically smaller involution.
bool is_canonical(const std::vector<int>& mate, const std::vector<Permutation>& automorphisms)
{
    const auto n = mate.size();
    std::vector<int> image(n);
    for (const auto& p : automorphisms) {
        for (std::size_t i = 0; i < n; ++i)
            image[static_cast<std::size_t>(p[i])] = p[static_cast<std::size_t>(mate[i])];
        if (std::lexicographical_compare(image.begin(), image.end(), mate.begin(), mate.end()))
            return false;
    }
    return true;
}

/// Any lift of height n with girth >= g, connected or not.
std::optional<PermLiftH23> find_any(int n, int g, long long& nodes)
{
    if (n % 2 != 0)
        return std::nullopt;
    for (const auto& parts : sigma2_types(n, g)) {
        ++nodes;
        const auto sigma2 = block_cycles(parts);
        MatchingSearch search(sigma2, g);
        std::optional<PermLiftH23> found;
        search.run(nodes, [&](const std::vector<int>& mate) {
            found = make_lift(sigma2, mate);
            return false;
        });
        if (found)
            return found;
    }
    return std::nullopt;
}

} // namespace

EnumerationStats canonical_enumerate(int n, int g, const std::function<bool(const PermLiftH23&)>& visit)
{
    if (g < 3)
        throw PreconditionError("canonical enumeration needs g >= 3");
    EnumerationStats stats;
    if (n <= 0 || n % 2 != 0)
        return stats;
    for (const auto& parts : sigma2_types(n, g)) {
        ++stats.nodes;
        const auto sigma2 = block_cycles(parts);
        const auto automorphisms = cycle_automorphisms(parts);
        MatchingSearch search(sigma2, g);
        const bool go_on = search.run(stats.nodes, [&](const std::vector<int>& mate) {
            if (!lift_connected(sigma2, mate) || !is_canonical(mate, automorphisms))
                return true;
            ++stats.yielded;
            return visit(make_lift(sigma2, mate));
        });
        if (!go_on)
            break;
    }
    return stats;
}

std::vector<PermLiftH23> canonical_enumerate(int n, int g)
{
    std::vector<PermLiftH23> out;
    canonical_enumerate(n, g, [&](const PermLiftH23& lift) {
        out.push_back(lift);
        return true;
    });
    return out;
}

MinimumSize minimum_size(int g, int n_max)
{
    if (g < 3)
        throw PreconditionError("minimum size needs g >= 3");
    MinimumSize out;
    out.max_height = n_max;
    for (int n = 1; n <= n_max; ++n) {
        // At the first height with any solution, every solution is
        // connected: a component would be a smaller solution.
        if (auto found = find_any(n, g, out.nodes)) {
            out.size = 2 * n;
            out.witness = std::move(found);
            return out;
        }
    }
    return out;
}

std::string Certificate::line() const
{
    return "g," + std::to_string(g) + ",refuted_up_to," + std::to_string(refuted ? height : 0) + ",nodes," +
           std::to_string(nodes);
}

Certificate certify_lower_bound(int g, int n)
{
    if (g < 3)
        throw PreconditionError("certification needs g >= 3");
    Certificate c;
    c.g = g;
    c.height = n;
    c.refuted = true;
    for (int h = 1; h <= n; ++h) {
        if (auto found = find_any(h, g, c.nodes)) {
            c.refuted = false;
            c.counterexample = std::move(found);
            break;
        }
    }
    return c;
}

} // namespace liftgirth
