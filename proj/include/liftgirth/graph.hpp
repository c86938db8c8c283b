#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace liftgirth {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

/// Girth of a forest, and "no such cycle" in bounded searches.
inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

struct DirectedEdge {
    VertexId tail = 0;
    VertexId head = 0;
    EdgeId inverse = 0;

    friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

/// Finite multigraph with half-loops and whole-loops.
///
/// Every undirected edge is stored as directed edges with an inverse
/// involution. An ordinary edge or whole-loop is a pair of distinct, mutually
/// inverse directed edges; a half-loop is a single self-inverse edge. The
/// degree of v is the number of directed edges with tail v, so a half-loop
/// adds 1 and a whole-loop adds 2.
///
/// Ids are dense and 0-based. The builder methods hand out ids in the order
/// of the text format: add_edge() consumes ids 2j, 2j+1 (tail->head first),
/// add_half_loop() consumes one id. Graphs built this way serialize with
/// identical ids.
class MultiGraph {
public:
    MultiGraph() = default;
    explicit MultiGraph(int vertex_count);

    /// Adopts an explicit edge table, checking the involution and
    /// head/tail relations. Throws StructuralError naming the bad edge.
    static MultiGraph from_edges(int vertex_count, std::vector<DirectedEdge> edges);

    /// Adds the pair a->b, b->a and returns the id of a->b. a == b gives a
    /// whole-loop.
    EdgeId add_edge(VertexId a, VertexId b);
    EdgeId add_whole_loop(VertexId a) { return add_edge(a, a); }
    EdgeId add_half_loop(VertexId a);

    int vertex_count() const noexcept { return vertex_count_; }
    /// Number of directed edges |E-bar|.
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    const DirectedEdge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    std::span<const DirectedEdge> edges() const noexcept { return edges_; }
    VertexId tail(EdgeId e) const { return edge(e).tail; }
    VertexId head(EdgeId e) const { return edge(e).head; }
    EdgeId inverse(EdgeId e) const { return edge(e).inverse; }

    std::span<const EdgeId> out_edges(VertexId v) const { return out_[static_cast<std::size_t>(v)]; }
    int degree(VertexId v) const { return static_cast<int>(out_edges(v).size()); }

    bool is_half_loop(EdgeId e) const { return inverse(e) == e; }
    bool is_loop(EdgeId e) const { return head(e) == tail(e); }
    bool has_half_loop() const;
    bool has_loop() const;

    /// One representative per undirected edge: the smaller of the two
    /// directed ids (the id itself for a half-loop), ascending.
    std::vector<EdgeId> undirected_edges() const;

    friend bool operator==(const MultiGraph& a, const MultiGraph& b)
    {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

private:
    int vertex_count_ = 0;
    std::vector<DirectedEdge> edges_;
    std::vector<std::vector<EdgeId>> out_;
};

struct GraphClass {
    bool connected = false;
    int min_degree = 0;
    int max_degree = 0;
    /// connected, min degree >= 2 and max degree > 2
    bool admissible = false;
};

/// Throws StructuralError if the involution or head/tail relations fail.
void check_structure(const MultiGraph& g);

GraphClass validate(const MultiGraph& g);

bool is_connected(const MultiGraph& g);

/// True when there are no loops and no parallel edges.
bool is_simple(const MultiGraph& g);

/// Component index per vertex, numbered in order of smallest vertex.
std::vector<int> connected_components(const MultiGraph& g, int* component_count = nullptr);

struct Subgraph {
    MultiGraph graph;
    std::vector<VertexId> vertex_origin; ///< new vertex -> old vertex
    std::vector<EdgeId> edge_origin;     ///< new directed edge -> old directed edge
};

/// Induced subgraph on `keep` (given in the desired new order). Edges keep
/// their relative id order.
Subgraph induced_subgraph(const MultiGraph& g, std::span<const VertexId> keep);

/// Length of the shortest cycle. Loops count 1 and parallel pairs 2. Cycles
/// longer than `search_limit` are not looked for; kInfiniteGirth is returned
/// when no cycle of length <= search_limit exists.
int girth(const MultiGraph& g, int search_limit = kInfiniteGirth);

/// BFS distances from `source`, -1 for unreachable vertices.
std::vector<int> bfs_distances(const MultiGraph& g, VertexId source);

/// Shortest-walk distance, or -1 if v is unreachable from u.
int distance(const MultiGraph& g, VertexId u, VertexId v);

struct FarthestPair {
    VertexId u = 0;
    VertexId v = 0;
    int distance = 0;
};

/// A pair realizing the diameter; the lexicographically smallest (u, v) with
/// u <= v among all such pairs. Throws PreconditionError if g is disconnected.
FarthestPair farthest_pair(const MultiGraph& g);
int diameter(const MultiGraph& g);

MultiGraph parse_graph(std::string_view text);
std::string serialize_graph(const MultiGraph& g);
MultiGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const MultiGraph& g);

} // namespace liftgirth
