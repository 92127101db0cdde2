#ifndef CLAWTOP_FAMILIES_HPP
#define CLAWTOP_FAMILIES_HPP

#include <cstdint>

#include "clawtop/graph.hpp"

namespace clawtop {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

/// Star with one center and `leaves` pairwise nonadjacent leaves.
Graph star_graph(int leaves);

/// Vertices 0..n-1, i < j adjacent iff j - i < k.  k = 1 gives an edgeless
/// graph, k = 2 a path.
Graph band_graph(int n, int k);

/// Circular variant: additionally i < j adjacent iff (n + i) - j < k.
/// Requires n >= 2k - 1; below that the wraparound rule degenerates and the
/// input is rejected.  k = 2 gives the n-cycle.
Graph circular_band_graph(int n, int k);

/// Vertices are the edges of h (sorted pairs in lex order); two are adjacent
/// iff the underlying edges share an endpoint.
Graph line_graph(const Graph& h);

/// Erdos–Renyi G(n,p) from a fixed-width generator; identical seeds give
/// identical graphs on every platform.
Graph random_graph(int n, double p, uint64_t seed);

/// Rejection-sample G(n,p) until claw-free; every accepted sample is
/// certified by the independent 4-subset scan as well.
Graph random_claw_free_graph(int n, double p, uint64_t seed, int max_retries = 10000);

}  // namespace clawtop

#endif
