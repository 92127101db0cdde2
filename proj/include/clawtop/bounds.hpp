#ifndef CLAWTOP_BOUNDS_HPP
#define CLAWTOP_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "clawtop/graph.hpp"

namespace clawtop {

/// Which connectivity lower bound to evaluate.
enum class BoundKind { General, ClawFree, LFamily, CFamily };

std::string to_string(BoundKind k);
std::optional<BoundKind> bound_kind_from_string(const std::string& s);

/// Floor division toward minus infinity; the divisor must be positive.
long long floor_div(long long a, long long b);

/// Connectivity lower bound for an independence complex.
///   general:   floor((n-2d-1)/2d)        for max degree d >= 1
///   claw_free: floor((2n-1)/(3d+2)) - 1  for max degree d >= 1
///   l_family:  floor((n-1)/(2k-1)) - 1   for band width k >= 1
///   c_family:  floor((n+1)/(2k-1)) - 2   for k >= 1, n >= 6(k-1), n >= 2k-1
/// The second parameter is d for the degree bounds and k for the families.
long long bound_value(BoundKind kind, long long n, long long d_or_k);

/// One instance of the closed-neighborhood union inequality: for claw-free
/// G with max degree d and a nonadjacent pair v1, v2 in N(u),
/// |closed N(u) ∪ (N(v1) ∩ N(v2))| <= floor((3d+2)/2).
struct NeighborhoodBoundWitness {
    int u, v1, v2;
    long long actual;
    long long cap;

    bool ok() const { return actual <= cap; }
};

/// The inequality for one explicit triple.  Errors on a graph with a claw,
/// v1/v2 outside N(u), or an adjacent pair.
NeighborhoodBoundWitness check_neighborhood_union_bound(const Graph& g, int u, int v1, int v2);

/// Every valid triple of the graph (u ascending, then v1 < v2).
std::vector<NeighborhoodBoundWitness> all_neighborhood_union_bounds(const Graph& g);

}  // namespace clawtop

#endif
