#include "liftgirth/constructors.hpp"

#include "liftgirth/error.hpp"

#include <algorithm>
#include <numeric>

namespace liftgirth {

namespace {

/// The lift restricted to the given layers, renumbered in increasing order.
LiftAssignment restrict_layers(const MultiGraph& base, const LiftAssignment& a, const std::vector<int>& layers)
{
    std::vector<int> renumber(static_cast<std::size_t>(a.height), -1);
    for (std::size_t i = 0; i < layers.size(); ++i)
        renumber[static_cast<std::size_t>(layers[i])] = static_cast<int>(i);
    auto out = LiftAssignment::identity(base, static_cast<int>(layers.size()));
    for (const EdgeId e : base.undirected_edges()) {
        const auto& p = a.perm[static_cast<std::size_t>(e)];
        Permutation q(layers.size());
        for (std::size_t i = 0; i < layers.size(); ++i) {
            const int image = renumber[static_cast<std::size_t>(p[static_cast<std::size_t>(layers[i])])];
            if (image < 0)
                throw InternalError("layer set is not closed under the lift");
            q[i] = image;
        }
        out.set(base, e, std::move(q));
    }
    return out;
}

/// Layers of the smallest connected component (ties: the one holding layer 0
/// first).
std::vector<int> smallest_component_layers(const MultiGraph& base, const LiftAssignment& a)
{
    const auto lift = build_lift(base, a);
    int count = 0;
    const auto comp = connected_components(lift.graph, &count);
    std::vector<int> sizes(static_cast<std::size_t>(count), 0);
    for (const int c : comp)
        ++sizes[static_cast<std::size_t>(c)];
    const auto best = static_cast<int>(std::min_element(sizes.begin(), sizes.end()) - sizes.begin());
    std::vector<int> layers;
    for (int i = 0; i < a.height; ++i)
        if (comp[static_cast<std::size_t>(lifted_vertex(base, 0, i))] == best)
            layers.push_back(i);
    return layers;
}

TrimState connected_part(TrimState s)
{
    const auto layers = smallest_component_layers(*s.base, s.assignment);
    if (static_cast<int>(layers.size()) != s.height())
        s.assignment = restrict_layers(*s.base, s.assignment, layers);
    return s;
}

/// Vertex furthest from `source` (smallest id among ties) and its distance.
std::pair<VertexId, int> farthest_from(const MultiGraph& g, VertexId source)
{
    const auto dist = bfs_distances(g, source);
    const auto it = std::max_element(dist.begin(), dist.end());
    return {static_cast<VertexId>(it - dist.begin()), *it};
}

} // namespace

Lift TrimState::lift() const
{
    return build_lift(*base, assignment);
}

TrimState make_trim_state(const MultiGraph& h, const SpanningTreeInfo& tree, const MultiGraph& g_lift,
                          const CoverMap& cover)
{
    const auto report = verify_cover(g_lift, h, cover);
    if (!report.accepted)
        throw PreconditionError("trim state needs a cover of the base graph");
    if (!is_connected(g_lift))
        throw PreconditionError("trim state needs a connected lift");

    // Layers are the components of the preimage of the tree.
    const int nv = g_lift.vertex_count();
    std::vector<int> layer(static_cast<std::size_t>(nv), -1);
    int height = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < nv; ++s) {
        if (layer[static_cast<std::size_t>(s)] >= 0)
            continue;
        layer[static_cast<std::size_t>(s)] = height;
        stack.push_back(s);
        while (!stack.empty()) {
            const VertexId x = stack.back();
            stack.pop_back();
            for (const EdgeId e : g_lift.out_edges(x)) {
                if (!tree.contains(cover.edge_map[static_cast<std::size_t>(e)]))
                    continue;
                const VertexId y = g_lift.head(e);
                if (layer[static_cast<std::size_t>(y)] < 0) {
                    layer[static_cast<std::size_t>(y)] = height;
                    stack.push_back(y);
                }
            }
        }
        ++height;
    }
    if (height != report.height)
        throw InternalError("tree preimage does not split into one layer per sheet");

    TrimState s{&h, tree, LiftAssignment::identity(h, height)};
    for (EdgeId x = 0; x < g_lift.edge_count(); ++x) {
        const EdgeId e = cover.edge_map[static_cast<std::size_t>(x)];
        s.assignment.perm[static_cast<std::size_t>(e)][static_cast<std::size_t>(
            layer[static_cast<std::size_t>(g_lift.tail(x))])] = layer[static_cast<std::size_t>(g_lift.head(x))];
    }
    check_assignment(h, s.assignment);
    return s;
}

TrimState es_trim_step(const TrimState& s, int g, VertexId v_top, VertexId u_second)
{
    const MultiGraph& h = *s.base;
    const int n = s.height();
    const int d0 = s.tree.d0(g);
    const auto lift = s.lift();
    if (distance(lift.graph, v_top, u_second) <= d0)
        throw PreconditionError("trim pair is within distance " + std::to_string(d0));

    const int l_top = v_top / h.vertex_count();
    const int l_second = u_second / h.vertex_count();
    const int top = n - 1;
    const int second = n - 2;
    // Old layer -> new layer, moving the chosen two to the top.
    std::vector<int> relabel(static_cast<std::size_t>(n));
    for (int i = 0, next = 0; i < n; ++i) {
        if (i == l_top)
            relabel[static_cast<std::size_t>(i)] = top;
        else if (i == l_second)
            relabel[static_cast<std::size_t>(i)] = second;
        else
            relabel[static_cast<std::size_t>(i)] = next++;
    }

    TrimState out{s.base, s.tree, LiftAssignment::identity(h, n - 2)};
    for (const EdgeId e : h.undirected_edges()) {
        if (s.tree.contains(e))
            continue;
        const auto& old = s.assignment.perm[static_cast<std::size_t>(e)];
        Permutation p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            p[static_cast<std::size_t>(relabel[static_cast<std::size_t>(i)])] =
                relabel[static_cast<std::size_t>(old[static_cast<std::size_t>(i)])];
        const int red_top = p[static_cast<std::size_t>(top)];
        const int red_second = p[static_cast<std::size_t>(second)];
        if (red_top >= second || red_second >= second)
            throw InternalError("edge " + std::to_string(e) + " has fewer than two red edges");
        // Blue edges join the vertices that lost their e-neighbour.
        Permutation q(static_cast<std::size_t>(n - 2));
        for (int i = 0; i < n - 2; ++i) {
            const int image = p[static_cast<std::size_t>(i)];
            q[static_cast<std::size_t>(i)] = image == second ? red_top : image == top ? red_second : image;
        }
        out.assignment.set(h, e, std::move(q));
    }
    return connected_part(std::move(out));
}

std::optional<TrimState> es_trim_step(const TrimState& s, int g)
{
    const int d0 = s.tree.d0(g);
    const auto lift = s.lift();
    const auto& graph = lift.graph;
    const auto [a, da] = farthest_from(graph, 0);
    const auto [b, db] = farthest_from(graph, a);
    if (db > d0)
        return es_trim_step(s, g, a, b);
    (void)da;
    for (VertexId u = 0; u < graph.vertex_count(); ++u) {
        const auto [v, dv] = farthest_from(graph, u);
        if (dv > d0)
            return es_trim_step(s, g, u, v);
    }
    return std::nullopt;
}

Lift es_construct(const MultiGraph& h, int g, Rng& rng, const HighGirthOptions& options)
{
    return es_construct(h, g, spanning_tree(h), rng, options);
}

Lift es_construct(const MultiGraph& h, int g, const SpanningTreeInfo& tree, Rng& rng,
                  const HighGirthOptions& options)
{
    if (g < tree.g0())
        throw PreconditionError("g = " + std::to_string(g) + " is below g0 = " + std::to_string(tree.g0()));
    const auto cover = high_girth_cover(h, g, rng, options);
    auto state = make_trim_state(h, tree, cover.graph, cover.cover);
    state = connected_part(std::move(state));
    while (auto next = es_trim_step(state, g))
        state = std::move(*next);
    return state.lift();
}

} // namespace liftgirth
