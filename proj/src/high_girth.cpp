#include "liftgirth/constructors.hpp"

#include "liftgirth/error.hpp"

namespace liftgirth {

namespace {

CoverMap identity_cover(const MultiGraph& h)
{
    CoverMap m;
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        m.vertex_map.push_back(v);
    for (EdgeId e = 0; e < h.edge_count(); ++e)
        m.edge_map.push_back(e);
    return m;
}

} // namespace

Lift high_girth_cover(const MultiGraph& h, int g, Rng& rng, const HighGirthOptions& options)
{
    if (validate(h).min_degree < 2)
        throw PreconditionError("high-girth cover needs minimum degree >= 2");
    Lift current = h.has_half_loop() ? half_loop_elimination(h) : Lift{h, identity_cover(h)};

    for (;;) {
        const int gamma = girth(current.graph, g - 1);
        if (gamma == kInfiniteGirth)
            return current;
        // A shortest cycle lifts to two shortest cycles exactly when it
        // crosses an even number of swapped edges, and no other shortest
        // cycle appears, so samples are scored without building the lift.
        const auto cycles = enumerate_cycles(current.graph, gamma);
        const auto phi = static_cast<long long>(cycles.size());
        const auto& gr = current.graph;
        bool accepted = false;
        for (int sample = 0; sample < options.budget && !accepted; ++sample) {
            const auto a = random_two_lift_assignment(gr, rng);
            long long phi2 = 0;
            for (const auto& cycle : cycles) {
                int parity = 0;
                for (const EdgeId e : cycle)
                    parity ^= a.perm[static_cast<std::size_t>(e)][0];
                if (parity == 0)
                    phi2 += 2;
            }
            if (phi2 < phi) {
                auto lifted = build_lift(gr, a);
                current = Lift{std::move(lifted.graph), compose(lifted.cover, current.cover)};
                accepted = true;
            }
        }
        if (!accepted)
            throw BudgetError("no improving 2-lift in " + std::to_string(options.budget) +
                              " samples at girth " + std::to_string(gamma) + " with " + std::to_string(phi) +
                              " shortest cycles");
    }
}

} // namespace liftgirth
