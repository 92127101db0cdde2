#ifndef CLAWTOP_VERIFY_HPP
#define CLAWTOP_VERIFY_HPP

#include <string>
#include <vector>

#include "clawtop/bounds.hpp"
#include "clawtop/decomposition.hpp"
#include "clawtop/ensemble.hpp"
#include "clawtop/json_io.hpp"
#include "clawtop/pipeline.hpp"

namespace clawtop {

/// One check against one graph or parameter pair.  `d` carries the max
/// degree for degree-based rows and the band width k for family rows.
/// `bound` and `measured` stay strings so connectivity values, profile
/// summaries, and "contractible"/"skipped" markers share one schema.
struct VerificationRecord {
    std::string graph_id;
    int n = 0;
    long long d = 0;
    std::string kind;
    std::string bound;
    std::string measured;
    std::string pi1;
    bool pass = false;
    bool skipped = false;
    long long ms = 0;
};

/// Timing is deliberately left out so reruns are byte-identical.
Json record_to_json(const VerificationRecord& r);
std::string records_to_jsonl(const std::vector<VerificationRecord>& rs);
/// CSV keeps the timing column.
std::string records_to_csv(const std::vector<VerificationRecord>& rs);
std::string records_to_text(const std::vector<VerificationRecord>& rs);

// --- single-claim verifiers ---

/// Connectivity lower bound on one graph (general or claw_free kinds).
VerificationRecord verify_bound(const std::string& id, const Graph& g, BoundKind kind,
                                MeasurementCache& cache, const PipelineOptions& opts = {});

/// Bound for the band families: builds the graph from (n, k) itself.
VerificationRecord verify_band_bound(BoundKind kind, int n, int k, MeasurementCache& cache,
                                     const PipelineOptions& opts = {});

/// Closed-neighborhood union inequality over every valid triple of g.
VerificationRecord verify_neighborhood_union(const std::string& id, const Graph& g);

/// Covering-decomposition certificate at base vertex u.
VerificationRecord verify_decomposition_at(const std::string& id, const Graph& g, int u,
                                           MeasurementCache& cache,
                                           const PipelineOptions& opts = {});

/// Homology identity for a complete-neighborhood vertex u: the profile of
/// Ind(G) must equal the degreewise sum over v in N(u) of the shifted
/// profiles of Ind(G minus closed N(v)).
VerificationRecord verify_wedge_at(const std::string& id, const Graph& g, int u,
                                   const PipelineOptions& opts = {});

/// Homology identity for a two-vertex component {u, v}: profile of Ind(G)
/// equals the shifted profile of Ind(G minus {u, v}).
VerificationRecord verify_suspension_pair(const std::string& id, const Graph& g, int u, int v,
                                          const PipelineOptions& opts = {});

/// Recursion identity for the band family complexes (k >= 2, n >= 1).
VerificationRecord verify_band_recursion(int n, int k, const PipelineOptions& opts = {});

// --- suites ---

struct SuiteOptions {
    EnsembleSpec ensemble;
    PipelineOptions pipeline;
    int jobs = 1;
    std::vector<int> band_ks = {2, 3, 4};
    int band_n_max = 18;
    size_t wedge_instance_cap = 400;
    size_t suspension_instance_cap = 200;
};

struct SuiteReport {
    std::vector<VerificationRecord> records;
    size_t passed = 0, failed = 0, skipped = 0;
};

extern const std::vector<std::string> kSuiteNames;

/// Runs one named suite ("all" chains every suite over a shared ensemble
/// and cache).  Records come back sorted by graph id.
SuiteReport run_suite(const std::string& suite, const SuiteOptions& opts = {});

/// The single-graph variant used by the command line's --graph mode.
/// Unlike the ensemble runner it does not filter: a bounds run always
/// attempts the claw-free bound, so a clawed input is an input error.
SuiteReport run_suite_on_graph(const std::string& suite, const std::string& id, const Graph& g,
                               const SuiteOptions& opts = {});

}  // namespace clawtop

#endif
