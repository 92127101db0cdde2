#include <climits>
#include <cstdlib>
#include <filesystem>
#include <set>

#include "doctest.h"

#include "clawtop/decomposition.hpp"
#include "clawtop/ensemble.hpp"
#include "clawtop/errors.hpp"
#include "clawtop/families.hpp"
#include "clawtop/pipeline.hpp"
#include "clawtop/verify.hpp"

using namespace clawtop;

namespace {

long long conn_value(const Connectivity& c) {
    return c.kind == Connectivity::Kind::Unbounded ? LLONG_MAX : c.value;
}

long long raised(long long v, long long by) { return v == LLONG_MAX ? LLONG_MAX : v + by; }

std::vector<EnsembleGraph> small_exhaustive(int max_n) {
    EnsembleSpec spec;
    spec.exhaustive_max_n = max_n;
    spec.random_count = 0;
    spec.include_line_graphs = false;
    return build_ensemble(spec);
}

}  // namespace

TEST_CASE("covering decomposition of the 6-cycle at vertex 0") {
    const Graph g = cycle_graph(6);
    const DecompositionPlan plan = decompose(g, 0);
    REQUIRE(plan.parts.size() == 4);
    CHECK(plan.base_vertex == 0);

    CHECK(plan.parts[0].family == 'b');
    CHECK(plan.parts[0].witnesses == std::vector<int>{1, 5});
    CHECK(plan.parts[0].removed == VertexSet(6, {0, 1, 5}));
    CHECK(plan.parts[0].depth == 1);

    CHECK(plan.parts[1].family == 'c');
    CHECK(plan.parts[1].witnesses == std::vector<int>{2, 4});
    CHECK(plan.parts[1].removed == VertexSet(6, {0, 1, 2, 3, 4, 5}));
    CHECK(plan.parts[1].depth == 2);

    CHECK(plan.parts[2].family == 'd');
    CHECK(plan.parts[2].witnesses == std::vector<int>{1});
    CHECK(plan.parts[2].removed == VertexSet(6, {0, 1, 2, 5}));
    CHECK(plan.parts[2].depth == 2);

    CHECK(plan.parts[3].family == 'd');
    CHECK(plan.parts[3].witnesses == std::vector<int>{5});
    CHECK(plan.parts[3].removed == VertexSet(6, {0, 1, 4, 5}));
}

TEST_CASE("certifying the 6-cycle") {
    MeasurementCache cache;
    const DecompositionCheck c = certify_decomposition(cycle_graph(6), 0, cache);
    CHECK(c.implied == Connectivity::bounded(0));
    CHECK(c.measured == Connectivity::bounded(0));
    CHECK(c.consistent);
}

TEST_CASE("an absorbed neighbor gives the depth-one family") {
    // K_2: the only neighbor's closed neighborhood contains the base's
    const Graph g = complete_graph(2);
    const DecompositionPlan plan = decompose(g, 0);
    REQUIRE(plan.parts.size() == 1);
    CHECK(plan.parts[0].family == 'a');
    CHECK(plan.parts[0].witnesses == std::vector<int>{1});
    CHECK(plan.parts[0].removed == VertexSet(2, {0, 1}));
    CHECK(plan.parts[0].depth == 1);

    MeasurementCache cache;
    const DecompositionCheck c = certify_decomposition(g, 0, cache);
    // removing everything leaves the empty complex at level -2, so the
    // hypotheses support -1, exactly the measured value of two points
    CHECK(c.implied == Connectivity::bounded(-1));
    CHECK(c.measured == Connectivity::bounded(-1));
    CHECK(c.consistent);
}

TEST_CASE("an isolated base vertex implies a cone") {
    MeasurementCache cache;
    const DecompositionCheck c = certify_decomposition(Graph(1), 0, cache);
    CHECK(c.plan.parts.empty());
    CHECK(c.implied == Connectivity::unbounded());
    CHECK(c.measured == Connectivity::unbounded());
    CHECK(c.consistent);
}

TEST_CASE("decomposition preconditions") {
    CHECK_THROWS_AS(decompose(star_graph(3), 0), InputError);
    CHECK_THROWS_AS(decompose(cycle_graph(6), 6), InputError);
    CHECK_THROWS_AS(decompose(cycle_graph(6), -1), InputError);
}

TEST_CASE("certificates are consistent across a claw-free sample") {
    MeasurementCache cache;
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        const Graph g = random_claw_free_graph(8, 0.35, seed);
        for (int u = 0; u < g.n(); ++u) {
            const DecompositionCheck c = certify_decomposition(g, u, cache);
            CAPTURE(seed);
            CAPTURE(u);
            CHECK(c.consistent);
        }
    }
}

TEST_CASE("degree-one step-up property") {
    // if N(u) = {v} and the complex without closed N(v) measures at least
    // n-1, the whole complex measures at least n
    MeasurementCache cache;
    int instances = 0;
    for (const EnsembleGraph& e : small_exhaustive(6)) {
        const Graph& g = e.graph;
        for (int u = 0; u < g.n(); ++u) {
            if (g.degree(u) != 1) continue;
            const int v = g.neighbors(u).min();
            const Graph rest = remove_vertices(g, g.closed_neighbors(v)).graph;
            const long long below = conn_value(cached_graph_connectivity(rest, cache));
            const long long whole = conn_value(cached_graph_connectivity(g, cache));
            CAPTURE(e.id);
            CAPTURE(u);
            CHECK(whole >= raised(below, 1));
            ++instances;
        }
    }
    CHECK(instances > 100);
}

TEST_CASE("degree-two step-up property") {
    // N(u) = {v1, v2} nonadjacent, both punctured neighborhoods complete:
    // the two hypothesis levels support one more level for the whole complex
    MeasurementCache cache;
    int instances = 0;
    for (const EnsembleGraph& e : small_exhaustive(6)) {
        const Graph& g = e.graph;
        for (int u = 0; u < g.n(); ++u) {
            if (g.degree(u) != 2) continue;
            const std::vector<int> nb = g.neighbors(u).members();
            const int v1 = nb[0], v2 = nb[1];
            if (g.adjacent(v1, v2)) continue;
            VertexSet n1 = g.neighbors(v1), n2 = g.neighbors(v2);
            n1.reset(u);
            n2.reset(u);
            if (!induced_subgraph(g, n1).graph.is_complete()) continue;
            if (!induced_subgraph(g, n2).graph.is_complete()) continue;

            const VertexSet meet = g.neighbors(v1) & g.neighbors(v2);
            const Graph first =
                remove_vertices(g, g.closed_neighbors(u) | meet).graph;
            long long implied = raised(conn_value(cached_graph_connectivity(first, cache)), 1);

            VertexSet pool = g.neighbors(v1) | g.neighbors(v2);
            pool.reset(u);
            const std::vector<int> ws = pool.members();
            for (size_t i = 0; i < ws.size(); ++i)
                for (size_t j = i + 1; j < ws.size(); ++j) {
                    if (g.adjacent(ws[i], ws[j])) continue;
                    VertexSet drop =
                        g.closed_neighbors(ws[i]) | g.closed_neighbors(ws[j]);
                    drop.set(u);
                    const Graph part = remove_vertices(g, drop).graph;
                    implied = std::min(
                        implied,
                        raised(conn_value(cached_graph_connectivity(part, cache)), 2));
                }

            const long long whole = conn_value(cached_graph_connectivity(g, cache));
            CAPTURE(e.id);
            CAPTURE(u);
            CHECK(whole >= implied);
            ++instances;
        }
    }
    CHECK(instances > 50);
}

TEST_CASE("ensemble construction") {
    EnsembleSpec spec;
    spec.exhaustive_max_n = 4;
    spec.random_count = 6;
    spec.include_line_graphs = true;
    const std::vector<EnsembleGraph> all = build_ensemble(spec);

    std::set<std::string> ids;
    for (const EnsembleGraph& e : all) ids.insert(e.id);
    CHECK(ids.size() == all.size());  // ids are unique

    // at least the 18 isomorphism classes on up to 4 vertices
    int small = 0;
    for (const EnsembleGraph& e : all)
        if (e.id.rfind("ex-", 0) == 0) ++small;
    CHECK(small >= 18);

    spec.claw_free_only = true;
    for (const EnsembleGraph& e : build_ensemble(spec)) {
        CAPTURE(e.id);
        CHECK(is_claw_free(e.graph));
    }
}

TEST_CASE("the exhaustive slice never merges distinct graphs") {
    // keys are adjacency matrices after a degree-profile relabeling, so a
    // collision would require an isomorphism; spot-check that permuting a
    // path still lands on the same key
    const Graph p4 = path_graph(4);
    Graph scrambled(4);  // the path 0-2-3-1
    scrambled.add_edge(0, 2);
    scrambled.add_edge(2, 3);
    scrambled.add_edge(1, 3);
    CHECK(graph_key(p4) == graph_key(scrambled));
    CHECK(graph_key(p4) == graph_key(p4));
    CHECK_FALSE(graph_key(p4) == graph_key(star_graph(3)));
    CHECK_FALSE(graph_key(p4) == graph_key(path_graph(5)));
}

TEST_CASE("measurement cache reuses work") {
    MeasurementCache cache;
    const Graph g = cycle_graph(6);
    const GraphMeasurement first = cached_graph_measurement(g, cache);
    CHECK(cache.size() == 1);
    const GraphMeasurement second = cached_graph_measurement(g, cache);
    CHECK(cache.size() == 1);
    CHECK(first.connectivity == second.connectivity);
    CHECK(first.pi1 == second.pi1);
    // the same labeled graph assembled in another order hits the same slot
    Graph rebuilt(6);
    for (int i = 5; i >= 0; --i) rebuilt.add_edge(std::min(i, (i + 1) % 6),
                                                  std::max(i, (i + 1) % 6));
    cached_graph_measurement(rebuilt, cache);
    CHECK(cache.size() == 1);
}

TEST_CASE("full pipeline on the 6-cycle") {
    const GraphAnalysis a = analyze_graph(cycle_graph(6));
    CHECK(a.n == 6);
    CHECK(a.edge_count == 6);
    CHECK(a.claw_free);
    CHECK(a.folds.empty());
    CHECK(a.connectivity == Connectivity::bounded(0));
    CHECK(a.homology.group(1).betti == 2);
    CHECK(a.pi1 == Pi1Status::Nontrivial);
    CHECK(a.certified_topological);  // level 0 needs no fundamental group
    CHECK_FALSE(a.cone);
}

TEST_CASE("pipeline options can turn reductions off") {
    PipelineOptions plain;
    plain.fold_reduce = false;
    plain.face_collapse = false;
    const GraphAnalysis a = analyze_graph(path_graph(7), plain);
    const GraphAnalysis b = analyze_graph(path_graph(7));
    CHECK(a.homology == b.homology);
    CHECK(a.connectivity == b.connectivity);
    CHECK(a.folds.empty());
    CHECK(a.collapse_steps == 0);
    CHECK(b.reduced_f_vector.size() <= a.reduced_f_vector.size());
}

TEST_CASE("disk memo stores and verifies entries") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "clawtop-test-cache";
    fs::remove_all(dir);
    setenv("CLAWTOP_CACHE", dir.c_str(), 1);

    const SimplicialComplex c = independence_complex(cycle_graph(7));
    const HomologyProfile fresh = cached_reduced_homology(c);
    CHECK(fs::exists(dir));
    size_t files = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        ++files;
        (void)entry;
    }
    CHECK(files == 1);
    const HomologyProfile replayed = cached_reduced_homology(c);
    CHECK(fresh == replayed);
    CHECK(fresh == reduced_homology(c));

    unsetenv("CLAWTOP_CACHE");
    fs::remove_all(dir);
}

TEST_CASE("verification records serialize to all three formats") {
    MeasurementCache cache;
    const VerificationRecord r =
        verify_bound("probe", cycle_graph(6), BoundKind::ClawFree, cache);
    CHECK(r.pass);
    CHECK(r.kind == "claw_free");
    CHECK(r.bound == "0");
    CHECK(r.measured == "0");

    const std::string jsonl = records_to_jsonl({r});
    CHECK(jsonl.find("\"graph_id\":\"probe\"") != std::string::npos);
    CHECK(jsonl.find("\"ms\"") == std::string::npos);  // timings stay out of JSON

    const std::string csv = records_to_csv({r});
    CHECK(csv.rfind("graph_id,n,d,kind,bound,measured,pi1,pass,ms\n", 0) == 0);
    CHECK(csv.find("probe,6,2,claw_free,0,0,") != std::string::npos);

    const std::string text = records_to_text({r});
    CHECK(text.rfind("PASS claw_free probe", 0) == 0);
}

TEST_CASE("suite records are sorted and attributable") {
    SuiteOptions opts;
    opts.ensemble.exhaustive_max_n = 4;
    opts.ensemble.random_count = 4;
    opts.ensemble.include_line_graphs = false;
    const SuiteReport rep = run_suite("bounds", opts);
    CHECK(rep.failed == 0);
    CHECK(rep.passed == rep.records.size());
    for (size_t i = 1; i < rep.records.size(); ++i)
        CHECK(rep.records[i - 1].graph_id <= rep.records[i].graph_id);

    CHECK_THROWS_AS(run_suite("no-such-suite", opts), InputError);
}

TEST_CASE("single-graph suites enforce their hypotheses") {
    SuiteOptions opts;
    CHECK_THROWS_AS(run_suite_on_graph("bounds", "claw", star_graph(3), opts), InputError);
    const SuiteReport rep = run_suite_on_graph("all", "c6", cycle_graph(6), opts);
    CHECK(rep.failed == 0);
    CHECK(rep.passed >= 8);  // both bounds, the triple inequality, six certificates
    CHECK_THROWS_AS(run_suite_on_graph("L-recursion", "c6", cycle_graph(6), opts), InputError);
    // no complete-neighborhood vertex and no two-vertex component on C_6
    CHECK_THROWS_AS(run_suite_on_graph("wedge", "c6", cycle_graph(6), opts), InputError);
}

TEST_CASE("band identities as single checks") {
    MeasurementCache cache;
    const VerificationRecord l = verify_band_bound(BoundKind::LFamily, 12, 3, cache);
    CHECK(l.pass);
    CHECK(l.graph_id == "L-n12-k3");
    const VerificationRecord c = verify_band_bound(BoundKind::CFamily, 12, 3, cache);
    CHECK(c.pass);
    const VerificationRecord rec = verify_band_recursion(9, 3, PipelineOptions{});
    CHECK(rec.pass);
    CHECK(rec.kind == "l_recursion");
    CHECK_THROWS_AS(verify_band_recursion(9, 1, PipelineOptions{}), InputError);
}

TEST_CASE("wedge and suspension identities on witnesses") {
    // star graph with leaves 1..3 after removing the claw: use K_3 plus a
    // pendant vertex; vertex 3 hangs off 0, N(3) = {0} is complete
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    const VerificationRecord w = verify_wedge_at("probe", g, 3, PipelineOptions{});
    CHECK(w.pass);
    CHECK_THROWS_AS(verify_wedge_at("probe", g, 0, PipelineOptions{}), InputError);

    // two-vertex component {0,1} next to a triangle
    Graph h(5);
    h.add_edge(0, 1);
    h.add_edge(2, 3);
    h.add_edge(2, 4);
    h.add_edge(3, 4);
    const VerificationRecord s = verify_suspension_pair("probe", h, 0, 1, PipelineOptions{});
    CHECK(s.pass);
    CHECK_THROWS_AS(verify_suspension_pair("probe", h, 2, 3, PipelineOptions{}), InputError);
}
