#include "clawtop/ensemble.hpp"

#include <unordered_set>

#include "clawtop/families.hpp"
#include "clawtop/pipeline.hpp"

namespace clawtop {

namespace {

void add_exhaustive(std::vector<EnsembleGraph>& out, int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
        std::unordered_set<GraphKey, GraphKeyHash> seen;
        const uint64_t total = uint64_t{1} << slots.size();
        int kept = 0;
        for (uint64_t mask = 0; mask < total; ++mask) {
            Graph g(n);
            for (size_t b = 0; b < slots.size(); ++b)
                if (mask >> b & 1) g.add_edge(slots[b].first, slots[b].second);
            if (!seen.insert(graph_key(g)).second) continue;
            out.push_back({"ex-n" + std::to_string(n) + "-" + std::to_string(kept++), std::move(g)});
        }
    }
}

void add_random_claw_free(std::vector<EnsembleGraph>& out, int count, long long seed) {
    const int first = (count + 1) / 2;
    for (int i = 0; i < count; ++i) {
        const int n = i < first ? 8 : 9;
        const double p = i < first ? 0.35 : 0.30;
        const uint64_t s = uint64_t(seed) + uint64_t(i < first ? i : i - first);
        Graph g = random_claw_free_graph(n, p, s);
        out.push_back({"rcf-n" + std::to_string(n) + "-s" + std::to_string(s), std::move(g)});
    }
}

void add_line_graphs(std::vector<EnsembleGraph>& out, long long seed) {
    for (int n = 4; n <= 7; ++n)
        for (int ptenth : {3, 5})
            for (int s = 1; s <= 3; ++s) {
                const uint64_t rs =
                    uint64_t(seed) * 1000003u + uint64_t(n) * 101u + uint64_t(ptenth) * 13u + s;
                Graph h = random_graph(n, ptenth / 10.0, rs);
                Graph g = line_graph(h);
                if (g.n() == 0) continue;
                out.push_back({"line-n" + std::to_string(n) + "-p" + std::to_string(ptenth) +
                                   "0-s" + std::to_string(s),
                               std::move(g)});
            }
}

}  // namespace

std::vector<EnsembleGraph> build_ensemble(const EnsembleSpec& spec) {
    std::vector<EnsembleGraph> out;
    add_exhaustive(out, spec.exhaustive_max_n);
    if (spec.random_count > 0) add_random_claw_free(out, spec.random_count, spec.seed);
    if (spec.include_line_graphs) add_line_graphs(out, spec.seed);
    if (spec.claw_free_only) {
        std::vector<EnsembleGraph> filtered;
        filtered.reserve(out.size());
        for (EnsembleGraph& e : out)
            if (is_claw_free(e.graph)) filtered.push_back(std::move(e));
        out = std::move(filtered);
    }
    return out;
}

}  // namespace clawtop
