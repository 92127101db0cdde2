#ifndef CLAWTOP_DECOMPOSITION_HPP
#define CLAWTOP_DECOMPOSITION_HPP

#include <vector>

#include "clawtop/graph.hpp"
#include "clawtop/pipeline.hpp"

namespace clawtop {

/// One condition subgraph of the covering argument around a base vertex u
/// of a claw-free graph.  `depth` says how much connectivity the subgraph
/// must give up relative to the conclusion: conn(Ind(G \ removed)) must be
/// at least n - depth for the conclusion "Ind(G) is n-connected".
struct DecompositionPart {
    char family;                // 'a', 'b', 'c', or 'd'
    std::vector<int> witnesses; // a/d: {v}; b: {v1, v2}; c: {w1, w2}
    VertexSet removed;
    int depth;                  // 1 or 2
};

/// The four condition families around u:
///   a: v in N(u) with closed N(v) containing closed N(u); remove closed N(v)
///   b: nonadjacent pairs {v1,v2} in N(u); remove closed N(u) plus N(v1)∩N(v2)
///   c: nonadjacent pairs {w1,w2} in N(v1)∪N(v2) minus closed N(u), over all
///      b-pairs; remove closed N(u) ∪ closed N(w1) ∪ closed N(w2)
///   d: v in N(u) whose closed neighborhood does not contain closed N(u);
///      remove closed N(u) ∪ closed N(v)
/// Families a and b are the depth-1 hypotheses, c and d the depth-2 ones.
struct DecompositionPlan {
    int base_vertex = -1;
    std::vector<DecompositionPart> parts;
};

/// Errors when g has a claw or u is out of range.
DecompositionPlan decompose(const Graph& g, int u);

/// Measures every condition subgraph, derives the largest n for which all
/// hypotheses hold, and compares with the directly measured connectivity.
struct DecompositionCheck {
    DecompositionPlan plan;
    std::vector<Connectivity> part_connectivity;  // parallel to plan.parts
    Connectivity implied;   // what the hypotheses support for Ind(G)
    Connectivity measured;  // direct measurement
    bool consistent = false;
};

DecompositionCheck certify_decomposition(const Graph& g, int u, MeasurementCache& cache,
                                         const PipelineOptions& opts = {});

}  // namespace clawtop

#endif
