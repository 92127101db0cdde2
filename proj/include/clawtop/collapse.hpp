#ifndef CLAWTOP_COLLAPSE_HPP
#define CLAWTOP_COLLAPSE_HPP

#include <vector>

#include "clawtop/graph.hpp"
#include "clawtop/simplicial_complex.hpp"

namespace clawtop {

/// One elementary collapse: `free_face` is contained in exactly one other
/// face of the current complex, namely `coface` = free_face + one vertex.
struct CollapseStep {
    VertexSet free_face;
    VertexSet coface;
};

struct CollapseSequence {
    std::vector<CollapseStep> steps;
};

/// Applies the steps in order, checking the free-face condition at each one.
/// Throws InputError on any invalid step.
SimplicialComplex replay_collapse(const SimplicialComplex& start, const CollapseSequence& seq);

/// Vertex removal justified by nested neighborhoods: when N(v) ⊆ N(w) the
/// independence complex collapses onto that of the graph without w.  The
/// emitted sequence removes every face holding w but not v (supersets
/// first), each paired with its v-extension, and is replay-validated.
struct FoldCollapse {
    InducedGraph reduced;      // g minus w, with the label map back
    CollapseSequence sequence; // faces of the original complex
};

FoldCollapse fold_collapse(const Graph& g, int v, int w, const ComplexLimits& limits = {});

/// Graph-level fold applied greedily until no nested-neighborhood pair is
/// left.  Scan order is lexicographic over ordered pairs (v, w), restarting
/// after every removal; records are in original labels.
struct FoldRecord {
    int kept;     // v
    int removed;  // w
};

struct FoldReduction {
    InducedGraph result;
    std::vector<FoldRecord> folds;
};

FoldReduction greedy_fold_reduce(const Graph& g);

/// Generic elementary collapsing: removes free-face pairs under a
/// deterministic worklist order until no free face remains.
struct FreeFaceCollapse {
    SimplicialComplex complex;
    CollapseSequence sequence;
};

FreeFaceCollapse free_face_collapse(const SimplicialComplex& c);

}  // namespace clawtop

#endif
