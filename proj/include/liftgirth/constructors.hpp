#pragma once

#include "liftgirth/bounds.hpp"
#include "liftgirth/graph.hpp"
#include "liftgirth/lift.hpp"
#include "liftgirth/random.hpp"

#include <optional>
#include <vector>

namespace liftgirth {

// ---------------------------------------------------------------------------
// Cycle counting

/// Vertex-simple cycles of exactly `length`, one directed edge sequence per
/// cycle (a fixed orientation and starting vertex). Loops have length 1 and
/// parallel pairs length 2.
std::vector<std::vector<EdgeId>> enumerate_cycles(const MultiGraph& g, int length);

/// Number of vertex-simple cycles of the given length. Requires a simple
/// graph and length >= 3.
long long cycle_census(const MultiGraph& g, int length);

/// Number of cycles of length `length` in any graph, including loops and
/// parallel pairs.
long long short_cycle_count(const MultiGraph& g, int length);

/// c_1(e), ..., c_gmax(e): the number of cycles of each length through the
/// undirected edge of e. Requires a simple graph.
std::vector<long long> nb_cycle_profile(const MultiGraph& g, EdgeId e, int gmax);

// ---------------------------------------------------------------------------
// Random 2-lifts

struct HighGirthOptions {
    /// Samples per step before giving up.
    int budget = 1000;
};

/// A cover of h with girth >= g built by repeated random 2-lifts, each one
/// lowering the number of shortest cycles. Throws BudgetError when a step
/// exhausts its budget and PreconditionError if min degree < 2.
Lift high_girth_cover(const MultiGraph& h, int g, Rng& rng, const HighGirthOptions& options = {});

// ---------------------------------------------------------------------------
// Layer trimming

/// A lift of h in layered form: the components of the preimage of the tree
/// are the layers, and tree edges carry the identity.
struct TrimState {
    const MultiGraph* base = nullptr;
    SpanningTreeInfo tree;
    LiftAssignment assignment;

    int height() const noexcept { return assignment.height; }
    Lift lift() const;
};

/// Puts the connected cover (g_lift, cover) of h into layered form. Throws
/// PreconditionError if cover is not a cover of h or g_lift is disconnected.
TrimState make_trim_state(const MultiGraph& h, const SpanningTreeInfo& tree, const MultiGraph& g_lift,
                          const CoverMap& cover);

/// Moves the layers of v_top and u_second to the top two positions, deletes
/// them and reconnects the deficient vertices. Requires dist(v_top, u_second)
/// > D0(g) in the current lift; otherwise throws PreconditionError.
/// A disconnected result is reduced to its smallest component.
TrimState es_trim_step(const TrimState& s, int g, VertexId v_top, VertexId u_second);

/// es_trim_step on a pair at distance > D0, found by a double BFS sweep and
/// then by an exact search. Returns nullopt when diam <= D0.
std::optional<TrimState> es_trim_step(const TrimState& s, int g);

/// high_girth_cover followed by trimming until diam <= g + 2 diam(T).
/// Throws PreconditionError when g < g0.
Lift es_construct(const MultiGraph& h, int g, Rng& rng, const HighGirthOptions& options = {});
Lift es_construct(const MultiGraph& h, int g, const SpanningTreeInfo& tree, Rng& rng,
                  const HighGirthOptions& options = {});

// ---------------------------------------------------------------------------
// H23 constructions

/// Cover map onto h23() for a graph whose degree-2 vertices have two
/// degree-3 neighbours and whose degree-3 vertices have exactly one degree-3
/// neighbour; nullopt otherwise.
std::optional<CoverMap> h23_cover_map(const MultiGraph& g);

enum class GreedyVariant { A, B, C };

struct GreedyResult {
    bool success = false;
    /// The cycle plus every matching edge added before success or dead end.
    MultiGraph graph;
    int matching_edges = 0;
};

/// Cycle C_n plus a matching on the even vertices, added one permissible pair
/// at a time: both ends still of degree 2 and at distance >= g - 1.
/// Throws PreconditionError unless n % 4 == 0 and g >= 3.
GreedyResult greedy_cycle(GreedyVariant variant, int n, int g, Rng& rng);

/// Removes e = (u1, v1) and f = (u2, v2) and adds v3, u3, v4, u4 with edges
/// u1-v3, v3-u3, u3-v1, u2-v4, v4-u4, u4-v2, u3-u4. e and f are undirected
/// edge ids of g joining a degree-3 and a degree-2 vertex, in either order.
MultiGraph surgery_transform(const MultiGraph& g, EdgeId e, EdgeId f);

/// dist(v1, v2) + 3, the length of the shortest new cycle through u3-u4.
int surgery_distance(const MultiGraph& g, EdgeId e, EdgeId f);

enum class GrowVariant { GD, GF };

/// Surgery from K4 minus an edge until girth >= g. Throws BudgetError after
/// max_steps surgeries.
MultiGraph grow(GrowVariant variant, int g, Rng& rng, int max_steps = 10'000);

} // namespace liftgirth
