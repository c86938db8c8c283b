#pragma once

#include "liftgirth/graph.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace liftgirth {

struct SpanningTreeInfo {
    /// Directed edges of the tree, both orientations of each tree edge.
    std::vector<EdgeId> edges;
    VertexId root = 0;
    int diameter = 0;

    int g0() const noexcept { return 2 * diameter + 2; }
    int d0(int g) const noexcept { return g + 2 * diameter; }
    bool contains(EdgeId e) const;
};

/// BFS tree of smallest diameter over all roots. Throws PreconditionError if
/// h is disconnected.
SpanningTreeInfo spanning_tree(const MultiGraph& h);

/// Tree given by undirected edge ids (either orientation). Throws
/// PreconditionError unless the edges form a spanning tree of h.
SpanningTreeInfo spanning_tree_from_edges(const MultiGraph& h, const std::vector<EdgeId>& edges);

/// Smallest lift height n >= min_height that some lift of h can have with
/// girth >= g. With a half-loop present and g >= 2, n must be even.
int legal_height(const MultiGraph& h, int g, int min_height);

/// Largest legal lift height n <= max_height (0 if none).
int legal_height_at_most(const MultiGraph& h, int g, std::int64_t max_height);

struct MooreBound {
    std::int64_t raw = 0;
    std::int64_t adjusted = 0;
    /// Even g only: the two-sided edge ball at radius g/2, for comparison.
    std::optional<std::int64_t> lemma_radius_raw;
};

/// Odd g = 2r+1: largest vertex ball of radius r in the universal cover.
/// Even g = 2r: largest two-sided edge ball of radius r-1. adjusted is the
/// smallest |V(h)| * n >= raw with n a legal height.
/// Throws PreconditionError unless h is admissible and g >= 3.
MooreBound moore_lift_bound(const MultiGraph& h, int g);

/// 1 + min_v sum_{i=1}^{g + 2 diam(T)} Delta_i(v). Throws PreconditionError
/// when g < g0.
std::int64_t es_ball(const MultiGraph& h, int g, const SpanningTreeInfo& t);

/// es_ball rounded down to the largest size |V(h)| * n with n a legal height.
std::int64_t es_upper_bound(const MultiGraph& h, int g, const SpanningTreeInfo& t);

/// sum_{i=0}^{floor((g-1)/2)} x^i + sum_{i=0}^{floor(g/2)-1} x^i with
/// x = x_plus_1 - 1.
double ahl_moore_polynomial(double x_plus_1, int g);

struct BoundsRow {
    int g = 0;
    std::int64_t moore_raw = 0;
    std::int64_t moore_adjusted = 0;
    std::optional<std::int64_t> moore_lemma_raw;
    std::optional<std::int64_t> es_ball;
    std::optional<std::int64_t> es_bound;
    double ahl_n0 = 0.0;
    std::optional<std::int64_t> best_known;
};

using BestKnown = std::map<int, std::int64_t>;

std::vector<BoundsRow> bounds_table(const MultiGraph& h, int g_min, int g_max,
                                    const BestKnown& best_known = {},
                                    const std::optional<SpanningTreeInfo>& tree = std::nullopt);

inline constexpr std::string_view kBoundsCsvHeader = "g,moore_raw,moore_adjusted,es_bound,ahl_n0,best_known";

std::string bounds_csv_row(const BoundsRow& row);
std::string bounds_csv(const std::vector<BoundsRow>& rows);

/// CSV with header `g,best_known`.
BestKnown parse_best_known(std::string_view text);
BestKnown read_best_known_file(const std::filesystem::path& path);

} // namespace liftgirth
