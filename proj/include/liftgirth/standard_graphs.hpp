#pragma once

#include "liftgirth/graph.hpp"

namespace liftgirth {

/// Base graph with a degree-2 vertex v = 0 and a degree-3 vertex u = 1:
/// two parallel u-v edges (directed ids 0..3, tails at v) and a half-loop at u
/// (id 4).
MultiGraph h23();
inline constexpr VertexId kH23V = 0;
inline constexpr VertexId kH23U = 1;
inline constexpr EdgeId kH23Sigma1 = 0; ///< v -> u, first parallel edge
inline constexpr EdgeId kH23Sigma2 = 2; ///< v -> u, second parallel edge
inline constexpr EdgeId kH23HalfLoop = 4;

/// K_{3,2}: vertices 0, 1 have degree 3, vertices 2, 3, 4 degree 2.
MultiGraph k32();
MultiGraph complete_graph(int n);
/// K4 with the edge {2, 3} removed; vertices 0, 1 have degree 3.
MultiGraph k4_minus_edge();
MultiGraph cycle_graph(int n);
MultiGraph petersen();

} // namespace liftgirth
