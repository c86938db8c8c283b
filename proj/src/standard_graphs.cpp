#include "liftgirth/standard_graphs.hpp"

namespace liftgirth {

MultiGraph h23()
{
    MultiGraph g(2);
    g.add_edge(kH23V, kH23U);
    g.add_edge(kH23V, kH23U);
    g.add_half_loop(kH23U);
    return g;
}

MultiGraph k32()
{
    MultiGraph g(5);
    for (VertexId a : {0, 1})
        for (VertexId b : {2, 3, 4})
            g.add_edge(a, b);
    return g;
}

MultiGraph complete_graph(int n)
{
    MultiGraph g(n);
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            g.add_edge(a, b);
    return g;
}

MultiGraph k4_minus_edge()
{
    MultiGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    return g;
}

MultiGraph cycle_graph(int n)
{
    MultiGraph g(n);
    for (VertexId i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

MultiGraph petersen()
{
    MultiGraph g(10);
    for (VertexId i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

} // namespace liftgirth
