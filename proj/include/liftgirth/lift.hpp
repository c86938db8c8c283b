#pragma once

#include "liftgirth/graph.hpp"
#include "liftgirth/random.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace liftgirth {

/// Permutation of {0, ..., n-1}, stored as its image vector.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation inverse_permutation(const Permutation& p);
bool is_permutation(const Permutation& p);

/// Height-n lift of a base graph: one permutation per directed base edge.
/// The lifted copy of e with tail (t(e), i) has its head at (h(e), perm[e][i]).
/// Requires perm[inverse(e)] == inverse of perm[e]; a half-loop therefore
/// carries an involution.
struct LiftAssignment {
    int height = 1;
    std::vector<Permutation> perm;

    static LiftAssignment identity(const MultiGraph& base, int height);

    /// Sets perm[e] and perm[inverse(e)] together.
    void set(const MultiGraph& base, EdgeId e, Permutation p);

    friend bool operator==(const LiftAssignment&, const LiftAssignment&) = default;
};

/// Throws StructuralError naming the first edge whose permutation is
/// malformed or inconsistent with its inverse.
void check_assignment(const MultiGraph& base, const LiftAssignment& a);

/// Projection G -> H.
struct CoverMap {
    std::vector<VertexId> vertex_map;
    std::vector<EdgeId> edge_map;

    friend bool operator==(const CoverMap&, const CoverMap&) = default;
};

struct Lift {
    MultiGraph graph;
    CoverMap cover;
};

/// Layer-major numbering of lifted vertices: (v, i) -> i * |V(H)| + v.
inline VertexId lifted_vertex(const MultiGraph& base, VertexId v, int layer)
{
    return layer * base.vertex_count() + v;
}

/// Builds the lift on V(H) x [n] with its canonical cover map. Lifted edges
/// are created per undirected base edge in id order, then by layer, so the
/// result serializes with identical ids. The lift need not be connected.
Lift build_lift(const MultiGraph& base, const LiftAssignment& a);

struct CoverReport {
    bool accepted = false;
    int height = 0;
    /// Vertices of G whose emanating edges do not map bijectively.
    std::vector<VertexId> deficient_vertices;
    /// Edges of G where the map fails to commute with head, tail or inverse.
    std::vector<EdgeId> bad_edges;
    std::vector<std::string> messages;
};

/// Checks that m is a homomorphism, a local bijection at every vertex and
/// has constant fibre size. Violations are reported, never thrown.
CoverReport verify_cover(const MultiGraph& g, const MultiGraph& h, const CoverMap& m);

/// upper: G2 -> G, lower: G -> H; returns G2 -> H.
CoverMap compose(const CoverMap& upper, const CoverMap& lower);

/// Uniform random 2-lift assignment: every undirected edge independently
/// gets the identity or the swap. Throws PreconditionError on half-loops.
LiftAssignment random_two_lift_assignment(const MultiGraph& g, Rng& rng);
Lift random_two_lift_with_cover(const MultiGraph& g, Rng& rng);
MultiGraph random_two_lift(const MultiGraph& g, Rng& rng);

/// Random height-n lift: a uniform permutation per undirected edge and, per
/// half-loop, an involution pairing the first 2k entries of a uniform
/// shuffle, with k uniform in [0, n/2].
LiftAssignment random_lift_assignment(const MultiGraph& base, int n, Rng& rng);

/// A 2-lift without half-loops. Every half-loop lifts to the edge joining
/// the two copies of its vertex. When half-loops are present, the second edge
/// of every parallel pair is also swapped so that the pair does not lift to
/// two parallel pairs; all other edges lift by the identity. Without
/// half-loops the result is two disjoint copies of h.
Lift half_loop_elimination(const MultiGraph& h);

/// Lift file: `base <path>`, `height <n>`, then `perm <edge-id> <images>` for
/// each undirected base edge in id order, images of 1..n written 1-based.
/// A relative base path is resolved against `base_dir`.
struct LiftFile {
    std::filesystem::path base_path;
    MultiGraph base;
    LiftAssignment assignment;
};

LiftFile parse_lift(std::string_view text, const std::filesystem::path& base_dir);
LiftFile read_lift_file(const std::filesystem::path& path);
std::string serialize_lift(const MultiGraph& base, const LiftAssignment& a,
                           const std::string& base_path);

/// Cover map file: `cover <|V(G)|> <|E(G)|>`, then `v <g> <h>` and
/// `e <g> <h>` lines.
CoverMap parse_cover_map(std::string_view text);
std::string serialize_cover_map(const CoverMap& m);

} // namespace liftgirth
