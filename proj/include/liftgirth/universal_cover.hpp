#pragma once

#include "liftgirth/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <vector>

namespace liftgirth {

/// Ball and layer sizes of the universal cover grow like rho^r, so they are
/// kept exact with arbitrary precision.
using Count = boost::multiprecision::cpp_int;

/// Breadth-first walk over the universal covering tree of a base graph.
///
/// A tree vertex at depth i is a non-backtracking walk of length i from the
/// root. Only the last edge of a walk matters for its continuations, so the
/// frontier is a multiplicity per arriving directed base edge and no tree
/// vertex is ever materialized.
class TreeCursor {
public:
    /// Root over base vertex v; depth 1 holds one walk per edge leaving v.
    static TreeCursor at_vertex(const MultiGraph& base, VertexId v);

    /// Root at the tree vertex entered through e (over head(e)); walks never
    /// step back across e. This is one side of a tree edge over e.
    static TreeCursor behind_edge(const MultiGraph& base, EdgeId e);

    int depth() const noexcept { return depth_; }
    Count layer_size() const;
    /// Multiplicity per arriving directed edge at the current depth.
    std::span<const Count> frontier() const noexcept { return frontier_; }

    void advance();

private:
    TreeCursor(const MultiGraph& base, VertexId root_vertex);

    const MultiGraph* base_;
    VertexId root_vertex_ = -1; ///< set while a vertex root sits at depth 0
    int depth_ = 0;
    std::vector<Count> frontier_;
};

/// Delta_1, ..., Delta_rmax: the number of non-backtracking walks of each
/// length from a tree vertex over v.
std::vector<Count> layer_counts(const MultiGraph& base, VertexId v, int rmax);

/// |B_r(v)| = 1 + sum of Delta_i for i <= r.
Count ball_size_vertex(const MultiGraph& base, VertexId v, int r);

/// Tree vertices within distance r of either endpoint of a tree edge over e.
Count ball_size_edge_two_sided(const MultiGraph& base, EdgeId e, int r);

/// |B_rmax(root)|^(1/rmax). The error decays like O(1/rmax); display only.
double growth_estimate(const MultiGraph& base, int rmax, VertexId root = 0);

/// max_r / min_r of |B_r(v)| / rho^r over r in [rmin, rmax]. Bounded in rmax
/// for admissible bases.
double ball_sandwich_ratio(const MultiGraph& base, VertexId v, double rho, int rmin, int rmax);

} // namespace liftgirth
