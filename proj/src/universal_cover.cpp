#include "liftgirth/universal_cover.hpp"

#include "liftgirth/error.hpp"

#include <algorithm>
#include <cmath>

namespace liftgirth {

TreeCursor::TreeCursor(const MultiGraph& base, VertexId root_vertex)
    : base_(&base), root_vertex_(root_vertex), frontier_(static_cast<std::size_t>(base.edge_count()))
{
}

TreeCursor TreeCursor::at_vertex(const MultiGraph& base, VertexId v)
{
    if (v < 0 || v >= base.vertex_count())
        throw PreconditionError("root vertex out of range");
    return TreeCursor(base, v);
}

TreeCursor TreeCursor::behind_edge(const MultiGraph& base, EdgeId e)
{
    if (e < 0 || e >= base.edge_count())
        throw PreconditionError("root edge out of range");
    TreeCursor c(base, -1);
    c.frontier_[static_cast<std::size_t>(e)] = 1;
    return c;
}

Count TreeCursor::layer_size() const
{
    if (root_vertex_ >= 0)
        return 1;
    Count total = 0;
    for (const auto& c : frontier_)
        total += c;
    return total;
}

void TreeCursor::advance()
{
    std::vector<Count> next(frontier_.size());
    if (root_vertex_ >= 0) {
        for (const EdgeId f : base_->out_edges(root_vertex_))
            next[static_cast<std::size_t>(f)] += 1;
        root_vertex_ = -1;
    } else {
        for (EdgeId e = 0; e < base_->edge_count(); ++e) {
            const auto& c = frontier_[static_cast<std::size_t>(e)];
            if (c.is_zero())
                continue;
            const EdgeId back = base_->inverse(e);
            for (const EdgeId f : base_->out_edges(base_->head(e)))
                if (f != back)
                    next[static_cast<std::size_t>(f)] += c;
        }
    }
    frontier_ = std::move(next);
    ++depth_;
}

std::vector<Count> layer_counts(const MultiGraph& base, VertexId v, int rmax)
{
    std::vector<Count> out;
    auto cursor = TreeCursor::at_vertex(base, v);
    for (int i = 1; i <= rmax; ++i) {
        cursor.advance();
        out.push_back(cursor.layer_size());
    }
    return out;
}

Count ball_size_vertex(const MultiGraph& base, VertexId v, int r)
{
    Count total = 1;
    for (const auto& c : layer_counts(base, v, r))
        total += c;
    return total;
}

Count ball_size_edge_two_sided(const MultiGraph& base, EdgeId e, int r)
{
    Count total = 0;
    for (const EdgeId side : {e, base.inverse(e)}) {
        auto cursor = TreeCursor::behind_edge(base, side);
        total += 1;
        for (int i = 1; i <= r; ++i) {
            cursor.advance();
            total += cursor.layer_size();
        }
    }
    return total;
}

double growth_estimate(const MultiGraph& base, int rmax, VertexId root)
{
    if (rmax < 1)
        throw PreconditionError("growth estimate needs rmax >= 1");
    const double ball = ball_size_vertex(base, root, rmax).convert_to<double>();
    return std::pow(ball, 1.0 / rmax);
}

double ball_sandwich_ratio(const MultiGraph& base, VertexId v, double rho, int rmin, int rmax)
{
    const auto layers = layer_counts(base, v, rmax);
    Count ball = 1;
    double lo = 0.0;
    double hi = 0.0;
    bool first = true;
    for (int r = 1; r <= rmax; ++r) {
        ball += layers[static_cast<std::size_t>(r - 1)];
        if (r < rmin)
            continue;
        const double log_ratio = std::log(ball.convert_to<double>()) - r * std::log(rho);
        lo = first ? log_ratio : std::min(lo, log_ratio);
        hi = first ? log_ratio : std::max(hi, log_ratio);
        first = false;
    }
    return std::exp(hi - lo);
}

} // namespace liftgirth
