#ifndef CLAWTOP_ENSEMBLE_HPP
#define CLAWTOP_ENSEMBLE_HPP

#include <string>
#include <vector>

#include "clawtop/graph.hpp"

namespace clawtop {

struct EnsembleGraph {
    std::string id;
    Graph graph;
};

/// The default measurement corpus:
///  - every labeled graph on up to `exhaustive_max_n` vertices, deduplicated
///    by a degree-profile-canonicalized adjacency key (never merges
///    non-isomorphic graphs; may keep a few isomorphic duplicates),
///  - `random_count` seeded random claw-free graphs split over 8 and 9
///    vertices (rejection sampling),
///  - line graphs of small random graphs (always claw-free).
struct EnsembleSpec {
    int exhaustive_max_n = 7;
    int random_count = 500;
    bool include_line_graphs = true;
    bool claw_free_only = false;
    long long seed = 1;
};

std::vector<EnsembleGraph> build_ensemble(const EnsembleSpec& spec = {});

}  // namespace clawtop

#endif
