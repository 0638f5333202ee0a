#pragma once

#include <vector>

#include "facetree/multigraph.hpp"
#include "facetree/plane_graph.hpp"

// Small named graphs with fixed embeddings. Outer faces are noted per graph.
namespace facetree::fixtures {

/// k-gonal prism: outer cycle 0..k-1 (the outer face), inner cycle k..2k-1, spokes i -- k+i.
inline PlaneGraph prism(int k)
{
    std::vector<std::vector<Vertex>> ccw(2 * k);
    for (int i = 0; i < k; ++i) {
        ccw[i] = {(i + 1) % k, k + i, (i + k - 1) % k};
        ccw[k + i] = {i, k + (i + 1) % k, k + (i + k - 1) % k};
    }
    return from_neighbor_lists(ccw);
}

/// K4 with vertex 3 in the middle; outer face 0, 1, 2.
inline PlaneGraph k4() { return from_neighbor_lists({{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}}); }

inline PlaneGraph cube() { return prism(4); }
inline PlaneGraph triangular_prism() { return prism(3); }
inline PlaneGraph hexagonal_prism() { return prism(6); }

/// Octahedron: outer triangle 0, 1, 2 around inner triangle 3, 4, 5.
inline PlaneGraph octahedron()
{
    return from_neighbor_lists({{1, 4, 3, 2}, {2, 5, 4, 0}, {0, 3, 5, 1}, {0, 4, 5, 2}, {1, 5, 3, 0}, {2, 3, 4, 1}});
}

/// Two vertices joined by k parallel edges: digon (k = 2), theta graph (k = 3), ...
inline PlaneGraph bundle(int k)
{
    return from_neighbor_lists({std::vector<Vertex>(k, 1), std::vector<Vertex>(k, 0)});
}

inline PlaneGraph digon() { return bundle(2); }
inline PlaneGraph theta() { return bundle(3); }

inline PlaneGraph cycle(int k)
{
    std::vector<std::vector<Vertex>> ccw(k);
    for (int i = 0; i < k; ++i)
        ccw[i] = {(i + 1) % k, (i + k - 1) % k};
    return from_neighbor_lists(ccw);
}

/// Two triangles 0-1-2 and 0-3-4 sharing vertex 0.
inline PlaneGraph bowtie() { return from_neighbor_lists({{1, 2, 3, 4}, {2, 0}, {0, 1}, {4, 0}, {0, 3}}); }

inline PlaneGraph path3() { return from_neighbor_lists({{1}, {0, 2}, {1}}); }

/// Star K_{1,3}, centre 0.
inline PlaneGraph star3() { return from_neighbor_lists({{1, 2, 3}, {0}, {0}, {0}}); }

/// Petersen graph: outer 5-cycle 0..4, spokes i -- 5+i, inner pentagram 5+i -- 5+(i+2)%5.
inline Multigraph petersen()
{
    Multigraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, 5 + i);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

} // namespace facetree::fixtures
