#include "clawtop/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "clawtop/errors.hpp"
#include "clawtop/families.hpp"

namespace clawtop {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

Json record_to_json(const VerificationRecord& r) {
    return Json{{"graph_id", r.graph_id}, {"n", r.n},           {"d", r.d},
                {"kind", r.kind},         {"bound", r.bound},   {"measured", r.measured},
                {"pi1", r.pi1},           {"pass", r.pass},     {"skipped", r.skipped}};
}

std::string records_to_jsonl(const std::vector<VerificationRecord>& rs) {
    std::string out;
    for (const VerificationRecord& r : rs) {
        out += canonical_dump(record_to_json(r));
        out += '\n';
    }
    return out;
}

std::string records_to_csv(const std::vector<VerificationRecord>& rs) {
    std::string out = "graph_id,n,d,kind,bound,measured,pi1,pass,ms\n";
    for (const VerificationRecord& r : rs) {
        out += csv_escape(r.graph_id) + ',' + std::to_string(r.n) + ',' + std::to_string(r.d) +
               ',' + csv_escape(r.kind) + ',' + csv_escape(r.bound) + ',' +
               csv_escape(r.measured) + ',' + csv_escape(r.pi1) + ',' +
               (r.pass ? "true" : "false") + ',' + std::to_string(r.ms) + '\n';
    }
    return out;
}

std::string records_to_text(const std::vector<VerificationRecord>& rs) {
    std::ostringstream out;
    for (const VerificationRecord& r : rs) {
        out << (r.skipped ? "SKIP" : r.pass ? "PASS" : "FAIL") << ' ' << r.kind << ' '
            << r.graph_id << " n=" << r.n << " d=" << r.d;
        if (!r.bound.empty()) out << " bound=" << r.bound;
        if (!r.measured.empty()) out << " measured=" << r.measured;
        if (!r.pi1.empty()) out << " pi1=" << r.pi1;
        out << '\n';
    }
    return out.str();
}

VerificationRecord verify_bound(const std::string& id, const Graph& g, BoundKind kind,
                                MeasurementCache& cache, const PipelineOptions& opts) {
    if (kind != BoundKind::General && kind != BoundKind::ClawFree)
        throw InputError("verify_bound handles the degree-based bound kinds");
    auto t0 = Clock::now();
    VerificationRecord r;
    r.graph_id = id;
    r.n = g.n();
    r.d = g.max_degree();
    r.kind = to_string(kind);
    if (kind == BoundKind::ClawFree && !is_claw_free(g))
        throw InputError("claw_free bound needs a claw-free graph: " + id);

    long long b;
    if (r.d == 0) {
        if (kind == BoundKind::General)
            throw InputError("general bound needs max degree >= 1: " + id);
        // Edgeless graph: the complex is a full simplex; the formula still
        // evaluates cleanly at d = 0.
        b = floor_div(2 * r.n - 1, 2) - 1;
    } else {
        b = bound_value(kind, r.n, r.d);
    }
    r.bound = std::to_string(b);

    GraphMeasurement m = cached_graph_measurement(g, cache, opts);
    r.measured = m.connectivity.to_string();
    r.pi1 = to_string(m.pi1);
    r.pass = m.connectivity.at_least(b);
    r.ms = ms_since(t0);
    return r;
}

VerificationRecord verify_band_bound(BoundKind kind, int n, int k, MeasurementCache& cache,
                                     const PipelineOptions& opts) {
    if (kind != BoundKind::LFamily && kind != BoundKind::CFamily)
        throw InputError("verify_band_bound handles the band family kinds");
    auto t0 = Clock::now();
    const bool circular = kind == BoundKind::CFamily;
    Graph g = circular ? circular_band_graph(n, k) : band_graph(n, k);
    VerificationRecord r;
    r.graph_id = (circular ? "C-n" : "L-n") + std::to_string(n) + "-k" + std::to_string(k);
    r.n = n;
    r.d = k;
    r.kind = to_string(kind);
    const long long b = bound_value(kind, n, k);
    r.bound = std::to_string(b);
    GraphMeasurement m = cached_graph_measurement(g, cache, opts);
    r.measured = m.connectivity.to_string();
    r.pi1 = to_string(m.pi1);
    r.pass = m.connectivity.at_least(b);
    r.ms = ms_since(t0);
    return r;
}

VerificationRecord verify_neighborhood_union(const std::string& id, const Graph& g) {
    auto t0 = Clock::now();
    std::vector<NeighborhoodBoundWitness> ws = all_neighborhood_union_bounds(g);
    VerificationRecord r;
    r.graph_id = id;
    r.n = g.n();
    r.d = g.max_degree();
    r.kind = "neighborhood_union";
    long long worst = 0, cap = g.n() > 0 ? floor_div(3 * g.max_degree() + 2, 2) : 0;
    bool ok = true;
    for (const NeighborhoodBoundWitness& w : ws) {
        worst = std::max(worst, w.actual);
        ok = ok && w.ok();
    }
    r.bound = std::to_string(cap);
    r.measured = std::to_string(worst);
    r.pass = ok;
    r.ms = ms_since(t0);
    return r;
}

VerificationRecord verify_decomposition_at(const std::string& id, const Graph& g, int u,
                                           MeasurementCache& cache, const PipelineOptions& opts) {
    auto t0 = Clock::now();
    DecompositionCheck c = certify_decomposition(g, u, cache, opts);
    VerificationRecord r;
    r.graph_id = id + "#u" + std::to_string(u);
    r.n = g.n();
    r.d = g.max_degree();
    r.kind = "decomposition";
    r.bound = c.implied.to_string();
    r.measured = c.measured.to_string();
    r.pi1 = to_string(cached_graph_measurement(g, cache, opts).pi1);
    r.pass = c.consistent;
    r.ms = ms_since(t0);
    return r;
}

VerificationRecord verify_wedge_at(const std::string& id, const Graph& g, int u,
                                   const PipelineOptions& opts) {
    auto t0 = Clock::now();
    if (u < 0 || u >= g.n()) throw InputError("wedge identity: vertex out of range");
    const VertexSet nbu = g.neighbors(u);
    if (nbu.empty()) throw InputError("wedge identity needs a nonempty neighborhood");
    if (!induced_subgraph(g, nbu).graph.is_complete())
        throw InputError("wedge identity needs a complete neighborhood");

    HomologyProfile left = graph_homology(g, opts);
    std::vector<HomologyProfile> parts;
    nbu.for_each([&](int v) {
        Graph sub = remove_vertices(g, g.closed_neighbors(v)).graph;
        parts.push_back(graph_homology(sub, opts).shifted());
    });
    HomologyProfile right = wedge_sum(parts);

    VerificationRecord r;
    r.graph_id = id + "#u" + std::to_string(u);
    r.n = g.n();
    r.d = g.max_degree();
    r.kind = "wedge";
    r.bound = right.to_string();
    r.measured = left.to_string();
    r.pass = left == right;
    r.ms = ms_since(t0);
    return r;
}

VerificationRecord verify_suspension_pair(const std::string& id, const Graph& g, int u, int v,
                                          const PipelineOptions& opts) {
    auto t0 = Clock::now();
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n() || u == v)
        throw InputError("suspension identity: invalid vertex pair");
    VertexSet just_v(g.n()), just_u(g.n());
    just_v.set(v);
    just_u.set(u);
    if (!(g.neighbors(u) == just_v) || !(g.neighbors(v) == just_u))
        throw InputError("suspension identity needs {u,v} to be a whole component");

    HomologyProfile left = graph_homology(g, opts);
    VertexSet drop(g.n());
    drop.set(u);
    drop.set(v);
    HomologyProfile right = graph_homology(remove_vertices(g, drop).graph, opts).shifted();

    VerificationRecord r;
    r.graph_id = id + "#e" + std::to_string(u) + "-" + std::to_string(v);
    r.n = g.n();
    r.d = g.max_degree();
    r.kind = "suspension";
    r.bound = right.to_string();
    r.measured = left.to_string();
    r.pass = left == right;
    r.ms = ms_since(t0);
    return r;
}

VerificationRecord verify_band_recursion(int n, int k, const PipelineOptions& opts) {
    if (k < 2) throw InputError("band recursion identity needs k >= 2");
    if (n < 1) throw InputError("band recursion identity needs n >= 1");
    auto t0 = Clock::now();
    auto band_profile = [&](int m) {
        return m <= 0 ? HomologyProfile::of_empty_complex() : graph_homology(band_graph(m, k), opts);
    };
    HomologyProfile left = band_profile(n);
    std::vector<HomologyProfile> parts;
    for (int i = 1; i < std::min(k, n); ++i) parts.push_back(band_profile(n - k - i).shifted());
    HomologyProfile right = wedge_sum(parts);

    VerificationRecord r;
    r.graph_id = "L-n" + std::to_string(n) + "-k" + std::to_string(k);
    r.n = n;
    r.d = k;
    r.kind = "l_recursion";
    r.bound = right.to_string();
    r.measured = left.to_string();
    r.pass = left == right;
    r.ms = ms_since(t0);
    return r;
}

namespace {

using Task = std::function<VerificationRecord()>;

Task guarded(std::string id, std::string kind, Task fn) {
    return [id = std::move(id), kind = std::move(kind), fn = std::move(fn)]() {
        try {
            return fn();
        } catch (const ResourceError&) {
            VerificationRecord r;
            r.graph_id = id;
            r.kind = kind;
            r.measured = "skipped";
            r.pass = true;
            r.skipped = true;
            return r;
        }
    };
}

std::vector<VerificationRecord> run_tasks(std::vector<Task>& tasks, int jobs) {
    std::vector<VerificationRecord> out(tasks.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
        return out;
    }
    std::atomic<size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr err;
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                out[i] = tasks[i]();
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
                next.store(tasks.size());
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (err) std::rethrow_exception(err);
    return out;
}

struct SuiteContext {
    const std::vector<EnsembleGraph>& ensemble;
    const std::vector<char>& claw_free;
    MeasurementCache& cache;
    const SuiteOptions& opts;
};

void add_bounds_tasks(std::vector<Task>& tasks, const SuiteContext& ctx) {
    for (size_t i = 0; i < ctx.ensemble.size(); ++i) {
        const EnsembleGraph& e = ctx.ensemble[i];
        if (e.graph.max_degree() >= 1)
            tasks.push_back(guarded(e.id, "general", [&e, &ctx]() {
                return verify_bound(e.id, e.graph, BoundKind::General, ctx.cache,
                                    ctx.opts.pipeline);
            }));
        if (ctx.claw_free[i])
            tasks.push_back(guarded(e.id, "claw_free", [&e, &ctx]() {
                return verify_bound(e.id, e.graph, BoundKind::ClawFree, ctx.cache,
                                    ctx.opts.pipeline);
            }));
    }
}

void add_lemma31_tasks(std::vector<Task>& tasks, const SuiteContext& ctx) {
    for (size_t i = 0; i < ctx.ensemble.size(); ++i) {
        if (!ctx.claw_free[i]) continue;
        const EnsembleGraph& e = ctx.ensemble[i];
        tasks.push_back(guarded(e.id, "neighborhood_union",
                                [&e]() { return verify_neighborhood_union(e.id, e.graph); }));
    }
}

void add_thm28_tasks(std::vector<Task>& tasks, const SuiteContext& ctx) {
    for (size_t i = 0; i < ctx.ensemble.size(); ++i) {
        if (!ctx.claw_free[i]) continue;
        const EnsembleGraph& e = ctx.ensemble[i];
        for (int u = 0; u < e.graph.n(); ++u)
            tasks.push_back(guarded(e.id + "#u" + std::to_string(u), "decomposition",
                                    [&e, &ctx, u]() {
                                        return verify_decomposition_at(e.id, e.graph, u,
                                                                       ctx.cache,
                                                                       ctx.opts.pipeline);
                                    }));
    }
}

void add_wedge_tasks(std::vector<Task>& tasks, const SuiteContext& ctx) {
    size_t wedges = 0;
    for (const EnsembleGraph& e : ctx.ensemble) {
        if (wedges >= ctx.opts.wedge_instance_cap) break;
        for (int u = 0; u < e.graph.n() && wedges < ctx.opts.wedge_instance_cap; ++u) {
            if (e.graph.degree(u) < 1) continue;
            if (!induced_subgraph(e.graph, e.graph.neighbors(u)).graph.is_complete()) continue;
            tasks.push_back(guarded(e.id + "#u" + std::to_string(u), "wedge", [&e, &ctx, u]() {
                return verify_wedge_at(e.id, e.graph, u, ctx.opts.pipeline);
            }));
            ++wedges;
        }
    }
    size_t susps = 0;
    for (const EnsembleGraph& e : ctx.ensemble) {
        if (susps >= ctx.opts.suspension_instance_cap) break;
        for (const auto& [u, v] : e.graph.edges()) {
            if (susps >= ctx.opts.suspension_instance_cap) break;
            if (e.graph.degree(u) != 1 || e.graph.degree(v) != 1) continue;
            tasks.push_back(guarded(e.id + "#e" + std::to_string(u) + "-" + std::to_string(v),
                                    "suspension", [&e, &ctx, u = u, v = v]() {
                                        return verify_suspension_pair(e.id, e.graph, u, v,
                                                                      ctx.opts.pipeline);
                                    }));
            ++susps;
        }
    }
}

void add_l_tasks(std::vector<Task>& tasks, MeasurementCache& cache, const SuiteOptions& opts) {
    for (int k : opts.band_ks) {
        if (k < 2) continue;
        for (int n = 1; n <= opts.band_n_max; ++n) {
            const std::string id = "L-n" + std::to_string(n) + "-k" + std::to_string(k);
            tasks.push_back(guarded(id, "l_family", [n, k, &cache, &opts]() {
                return verify_band_bound(BoundKind::LFamily, n, k, cache, opts.pipeline);
            }));
            tasks.push_back(guarded(id, "l_recursion", [n, k, &opts]() {
                return verify_band_recursion(n, k, opts.pipeline);
            }));
        }
    }
}

void add_c_tasks(std::vector<Task>& tasks, MeasurementCache& cache, const SuiteOptions& opts) {
    struct Range {
        int k, lo, hi;
    };
    for (const Range& range : {Range{2, 6, 15}, Range{3, 12, 16}}) {
        if (std::find(opts.band_ks.begin(), opts.band_ks.end(), range.k) == opts.band_ks.end())
            continue;
        for (int n = range.lo; n <= std::min(range.hi, std::max(opts.band_n_max, range.lo)); ++n) {
            const std::string id = "C-n" + std::to_string(n) + "-k" + std::to_string(range.k);
            tasks.push_back(guarded(id, "c_family", [n, k = range.k, &cache, &opts]() {
                return verify_band_bound(BoundKind::CFamily, n, k, cache, opts.pipeline);
            }));
        }
    }
}

SuiteReport finish(std::vector<VerificationRecord> records) {
    std::stable_sort(records.begin(), records.end(),
                     [](const VerificationRecord& a, const VerificationRecord& b) {
                         return a.graph_id < b.graph_id;
                     });
    SuiteReport rep;
    rep.records = std::move(records);
    for (const VerificationRecord& r : rep.records) {
        if (r.skipped)
            ++rep.skipped;
        else if (r.pass)
            ++rep.passed;
        else
            ++rep.failed;
    }
    return rep;
}

}  // namespace

const std::vector<std::string> kSuiteNames = {"bounds",  "lemma31",     "thm28",    "wedge",
                                              "L-recursion", "C-theorem", "all"};

SuiteReport run_suite(const std::string& suite, const SuiteOptions& opts) {
    if (std::find(kSuiteNames.begin(), kSuiteNames.end(), suite) == kSuiteNames.end())
        throw InputError("unknown suite: " + suite);

    const bool all = suite == "all";
    const bool needs_ensemble =
        all || suite == "bounds" || suite == "lemma31" || suite == "thm28" || suite == "wedge";

    std::vector<EnsembleGraph> ensemble;
    std::vector<char> claw_free;
    if (needs_ensemble) {
        ensemble = build_ensemble(opts.ensemble);
        claw_free.reserve(ensemble.size());
        for (const EnsembleGraph& e : ensemble) claw_free.push_back(is_claw_free(e.graph));
    }

    MeasurementCache cache;
    SuiteContext ctx{ensemble, claw_free, cache, opts};
    std::vector<Task> tasks;
    if (all || suite == "bounds") add_bounds_tasks(tasks, ctx);
    if (all || suite == "lemma31") add_lemma31_tasks(tasks, ctx);
    if (all || suite == "thm28") add_thm28_tasks(tasks, ctx);
    if (all || suite == "wedge") add_wedge_tasks(tasks, ctx);
    if (all || suite == "L-recursion") add_l_tasks(tasks, cache, opts);
    if (all || suite == "C-theorem") add_c_tasks(tasks, cache, opts);

    return finish(run_tasks(tasks, opts.jobs));
}

SuiteReport run_suite_on_graph(const std::string& suite, const std::string& id, const Graph& g,
                               const SuiteOptions& opts) {
    if (std::find(kSuiteNames.begin(), kSuiteNames.end(), suite) == kSuiteNames.end())
        throw InputError("unknown suite: " + suite);
    if (suite == "L-recursion" || suite == "C-theorem")
        throw InputError("suite " + suite + " takes parameters, not a graph");

    MeasurementCache cache;
    const bool all = suite == "all";
    std::vector<VerificationRecord> records;

    if (all || suite == "bounds") {
        if (g.max_degree() >= 1)
            records.push_back(verify_bound(id, g, BoundKind::General, cache, opts.pipeline));
        records.push_back(verify_bound(id, g, BoundKind::ClawFree, cache, opts.pipeline));
    }
    if (all || suite == "lemma31") records.push_back(verify_neighborhood_union(id, g));
    if (all || suite == "thm28")
        for (int u = 0; u < g.n(); ++u)
            records.push_back(verify_decomposition_at(id, g, u, cache, opts.pipeline));
    if (all || suite == "wedge") {
        size_t before = records.size();
        for (int u = 0; u < g.n(); ++u) {
            if (g.degree(u) < 1) continue;
            if (!induced_subgraph(g, g.neighbors(u)).graph.is_complete()) continue;
            records.push_back(verify_wedge_at(id, g, u, opts.pipeline));
        }
        for (const auto& [u, v] : g.edges()) {
            if (g.degree(u) != 1 || g.degree(v) != 1) continue;
            records.push_back(verify_suspension_pair(id, g, u, v, opts.pipeline));
        }
        if (!all && records.size() == before)
            throw InputError("no vertex of " + id + " fits the wedge or suspension hypotheses");
    }
    return finish(std::move(records));
}

}  // namespace clawtop
