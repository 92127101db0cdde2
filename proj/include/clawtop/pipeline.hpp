#ifndef CLAWTOP_PIPELINE_HPP
#define CLAWTOP_PIPELINE_HPP

#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "clawtop/collapse.hpp"
#include "clawtop/graph.hpp"
#include "clawtop/homology.hpp"
#include "clawtop/pi1.hpp"
#include "clawtop/simplicial_complex.hpp"

namespace clawtop {

struct PipelineOptions {
    ComplexLimits limits;
    bool fold_reduce = true;     // shrink the graph before building the complex
    bool face_collapse = true;   // shrink the complex before homology
    bool want_pi1 = true;
    TietzeBudget tietze;
};

/// Everything the measurement pipeline learns about one graph's
/// independence complex.
struct GraphAnalysis {
    int n = 0;
    int edge_count = 0;
    bool claw_free = false;
    std::vector<FoldRecord> folds;              // graph-level reductions applied
    std::vector<long long> reduced_f_vector;    // complex that actually got measured
    size_t collapse_steps = 0;
    bool cone = false;                          // combinatorial contractibility certificate
    HomologyProfile homology;
    Connectivity connectivity;
    Pi1Status pi1 = Pi1Status::Unknown;
    /// True when the homological connectivity is provably the topological
    /// one: always below degree 1, via the cone certificate, or with a
    /// trivial fundamental group.
    bool certified_topological = false;
    long long ms = 0;
};

GraphAnalysis analyze_graph(const Graph& g, const PipelineOptions& opts = {});

HomologyProfile graph_homology(const Graph& g, const PipelineOptions& opts = {});
Connectivity graph_connectivity(const Graph& g, const PipelineOptions& opts = {});

/// Adjacency matrix after a stable relabeling by (degree, sorted neighbor
/// degrees).  Equal keys can only come from isomorphic graphs, so caching
/// under this key never conflates distinct inputs; some isomorphic pairs
/// simply miss.
struct GraphKey {
    int n = 0;
    std::vector<uint64_t> bits;
    bool operator==(const GraphKey& o) const = default;
};

GraphKey graph_key(const Graph& g);

struct GraphKeyHash {
    size_t operator()(const GraphKey& k) const;
};

/// The pieces of an analysis most callers re-read; cheap enough to memo.
struct GraphMeasurement {
    Connectivity connectivity;
    Pi1Status pi1 = Pi1Status::Unknown;
    bool certified_topological = false;
};

/// In-memory memo of measurements keyed by GraphKey; safe to share across
/// worker threads.
class MeasurementCache {
public:
    std::optional<GraphMeasurement> find(const GraphKey& k) const;
    void store(const GraphKey& k, const GraphMeasurement& m);
    size_t size() const;

private:
    mutable std::mutex mu_;
    std::unordered_map<GraphKey, GraphMeasurement, GraphKeyHash> map_;
};

GraphMeasurement cached_graph_measurement(const Graph& g, MeasurementCache& cache,
                                          const PipelineOptions& opts = {});
Connectivity cached_graph_connectivity(const Graph& g, MeasurementCache& cache,
                                       const PipelineOptions& opts = {});

/// Homology with an optional on-disk memo.  When the CLAWTOP_CACHE
/// environment variable names a directory, profiles are stored there keyed
/// by a hash of the canonical complex serialization; entries keep the full
/// serialization and are verified on read, so a hash collision only costs a
/// recompute.
HomologyProfile cached_reduced_homology(const SimplicialComplex& c);

}  // namespace clawtop

#endif
