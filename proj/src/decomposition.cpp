#include "clawtop/decomposition.hpp"

#include <algorithm>
#include <set>

#include "clawtop/errors.hpp"

namespace clawtop {

DecompositionPlan decompose(const Graph& g, int u) {
    if (u < 0 || u >= g.n()) throw InputError("base vertex out of range");
    if (!is_claw_free(g)) throw InputError("decomposition needs a claw-free graph");

    DecompositionPlan plan;
    plan.base_vertex = u;
    const VertexSet closed_u = g.closed_neighbors(u);
    const std::vector<int> nb = g.neighbors(u).members();

    for (int v : nb) {
        if (closed_u.subset_of(g.closed_neighbors(v)))
            plan.parts.push_back({'a', {v}, g.closed_neighbors(v), 1});
        else
            plan.parts.push_back({'d', {v}, closed_u | g.closed_neighbors(v), 2});
    }

    std::vector<std::pair<int, int>> b_pairs;
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
            if (!g.adjacent(nb[i], nb[j])) b_pairs.push_back({nb[i], nb[j]});

    for (auto [v1, v2] : b_pairs)
        plan.parts.push_back(
            {'b', {v1, v2}, closed_u | (g.neighbors(v1) & g.neighbors(v2)), 1});

    std::set<std::pair<int, int>> c_pairs;
    for (auto [v1, v2] : b_pairs) {
        VertexSet pool = (g.neighbors(v1) | g.neighbors(v2)) - closed_u;
        std::vector<int> ws = pool.members();
        for (size_t i = 0; i < ws.size(); ++i)
            for (size_t j = i + 1; j < ws.size(); ++j)
                if (!g.adjacent(ws[i], ws[j])) c_pairs.insert({ws[i], ws[j]});
    }
    for (auto [w1, w2] : c_pairs)
        plan.parts.push_back(
            {'c', {w1, w2}, closed_u | g.closed_neighbors(w1) | g.closed_neighbors(w2), 2});

    // stable presentation: families in letter order, witnesses ascending
    std::stable_sort(plan.parts.begin(), plan.parts.end(),
                     [](const DecompositionPart& x, const DecompositionPart& y) {
                         if (x.family != y.family) return x.family < y.family;
                         return x.witnesses < y.witnesses;
                     });
    return plan;
}

DecompositionCheck certify_decomposition(const Graph& g, int u, MeasurementCache& cache,
                                         const PipelineOptions& opts) {
    DecompositionCheck check;
    check.plan = decompose(g, u);

    bool any_bound = false;
    long long best = 0;
    for (const DecompositionPart& part : check.plan.parts) {
        Graph sub = remove_vertices(g, part.removed).graph;
        Connectivity conn = cached_graph_connectivity(sub, cache, opts);
        check.part_connectivity.push_back(conn);
        if (conn.kind == Connectivity::Kind::Unbounded) continue;
        long long val = conn.kind == Connectivity::Kind::Empty ? -2 : conn.value;
        long long cand = val + part.depth;
        if (!any_bound || cand < best) best = cand;
        any_bound = true;
    }
    check.implied = any_bound ? Connectivity::bounded(best) : Connectivity::unbounded();
    check.measured = cached_graph_connectivity(g, cache, opts);
    check.consistent = any_bound ? check.measured.at_least(best)
                                 : check.measured.kind == Connectivity::Kind::Unbounded;
    return check;
}

}  // namespace clawtop
