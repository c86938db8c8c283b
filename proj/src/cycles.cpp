#include "liftgirth/constructors.hpp"

#include "liftgirth/error.hpp"

namespace liftgirth {

namespace {

/// Depth-first extension of a path from `start` whose intermediate vertices
/// all exceed `start`, so every cycle is found from its smallest vertex.
class CycleWalker {
public:
    CycleWalker(const MultiGraph& g, int length, std::vector<std::vector<EdgeId>>& out)
        : g_(g), length_(length), out_(out), on_path_(static_cast<std::size_t>(g.vertex_count()), 0)
    {
    }

    void from(VertexId start)
    {
        start_ = start;
        extend(start);
    }

private:
    void extend(VertexId x)
    {
        const bool last = static_cast<int>(path_.size()) + 1 == length_;
        for (const EdgeId f : g_.out_edges(x)) {
            if (!path_.empty() && f == g_.inverse(path_.back()))
                continue;
            const VertexId y = g_.head(f);
            if (last) {
                if (y == start_)
                    close(f);
                continue;
            }
            if (y <= start_ || on_path_[static_cast<std::size_t>(y)])
                continue;
            on_path_[static_cast<std::size_t>(y)] = 1;
            path_.push_back(f);
            extend(y);
            path_.pop_back();
            on_path_[static_cast<std::size_t>(y)] = 0;
        }
    }

    void close(EdgeId f)
    {
        const EdgeId first = path_.empty() ? f : path_.front();
        // Each cycle is met once per orientation; keep one of them.
        // A half-loop is its own reverse.
        if (first < g_.inverse(f) || (length_ == 1 && g_.is_half_loop(f))) {
            out_.push_back(path_);
            out_.back().push_back(f);
        }
    }

    const MultiGraph& g_;
    int length_;
    std::vector<std::vector<EdgeId>>& out_;
    std::vector<char> on_path_;
    std::vector<EdgeId> path_;
    VertexId start_ = 0;
};

} // namespace

std::vector<std::vector<EdgeId>> enumerate_cycles(const MultiGraph& g, int length)
{
    std::vector<std::vector<EdgeId>> out;
    if (length < 1)
        return out;
    CycleWalker walker(g, length, out);
    for (VertexId s = 0; s < g.vertex_count(); ++s)
        walker.from(s);
    return out;
}

long long cycle_census(const MultiGraph& g, int length)
{
    if (length < 3)
        throw PreconditionError("cycle census needs length >= 3");
    if (!is_simple(g))
        throw PreconditionError("cycle census needs a simple graph");
    return static_cast<long long>(enumerate_cycles(g, length).size());
}

long long short_cycle_count(const MultiGraph& g, int length)
{
    return static_cast<long long>(enumerate_cycles(g, length).size());
}

std::vector<long long> nb_cycle_profile(const MultiGraph& g, EdgeId e, int gmax)
{
    if (!is_simple(g))
        throw PreconditionError("cycle profile needs a simple graph");
    std::vector<long long> c(static_cast<std::size_t>(std::max(gmax, 0)), 0);
    // Paths head(e) -> tail(e) of length l - 1 that avoid e close a cycle of
    // length l through e; each such cycle has exactly one such path.
    const VertexId from = g.head(e);
    const VertexId to = g.tail(e);
    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
    on_path[static_cast<std::size_t>(from)] = 1;
    auto walk = [&](auto&& self, VertexId x, int depth) -> void {
        if (depth + 1 >= gmax)
            return;
        for (const EdgeId f : g.out_edges(x)) {
            if (f == g.inverse(e))
                continue;
            const VertexId y = g.head(f);
            if (y == to) {
                ++c[static_cast<std::size_t>(depth + 1)];
                continue;
            }
            if (on_path[static_cast<std::size_t>(y)])
                continue;
            on_path[static_cast<std::size_t>(y)] = 1;
            self(self, y, depth + 1);
            on_path[static_cast<std::size_t>(y)] = 0;
        }
    };
    walk(walk, from, 0);
    return c;
}

} // namespace liftgirth
