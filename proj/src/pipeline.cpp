#include "clawtop/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "clawtop/json_io.hpp"

namespace clawtop {

namespace {

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

HomologyProfile cached_reduced_homology(const SimplicialComplex& c) {
    const char* dir = std::getenv("CLAWTOP_CACHE");
    if (!dir || !*dir) return reduced_homology(c);

    namespace fs = std::filesystem;
    Json key = complex_to_json(c);
    std::string key_bytes = canonical_dump(key);
    std::ostringstream name;
    name << std::hex << fnv1a(key_bytes) << "-" << key_bytes.size() << ".json";
    fs::path path = fs::path(dir) / name.str();

    std::error_code ec;
    fs::create_directories(dir, ec);

    if (std::ifstream in{path}) {
        try {
            Json entry = Json::parse(in);
            if (entry.at("complex") == key) return profile_from_json(entry.at("homology"));
        } catch (...) {
            // unreadable entry: fall through and overwrite it
        }
    }

    HomologyProfile p = reduced_homology(c);
    Json entry{{"complex", std::move(key)}, {"homology", profile_to_json(p)}};
    fs::path tmp = path;
    tmp += ".tmp";
    if (std::ofstream out{tmp}) {
        out << canonical_dump(entry);
        out.close();
        fs::rename(tmp, path, ec);
    }
    return p;
}

GraphAnalysis analyze_graph(const Graph& g, const PipelineOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    GraphAnalysis a;
    a.n = g.n();
    a.edge_count = g.edge_count();
    a.claw_free = is_claw_free(g);

    Graph working = g;
    if (opts.fold_reduce) {
        FoldReduction fr = greedy_fold_reduce(g);
        a.folds = std::move(fr.folds);
        working = std::move(fr.result.graph);
    }

    SimplicialComplex cx = independence_complex(working, opts.limits);
    a.reduced_f_vector = cx.f_vector();

    if (cx.empty()) {
        a.homology = HomologyProfile::of_empty_complex();
        a.connectivity = Connectivity::empty();
        a.pi1 = Pi1Status::Trivial;
        a.certified_topological = true;
    } else if (cone_apex(cx)) {
        // A cone is contractible outright; skip the algebra.
        a.cone = true;
        a.homology = HomologyProfile::point();
        a.connectivity = Connectivity::unbounded();
        a.pi1 = Pi1Status::Trivial;
        a.certified_topological = true;
    } else {
        if (opts.face_collapse) {
            FreeFaceCollapse ffc = free_face_collapse(cx);
            a.collapse_steps = ffc.sequence.steps.size();
            cx = std::move(ffc.complex);
            a.reduced_f_vector = cx.f_vector();
        }
        a.homology = cached_reduced_homology(cx);
        a.connectivity = connectivity_of(a.homology);
        if (opts.want_pi1) a.pi1 = fundamental_group_status(cx, opts.tietze);

        bool needs_pi1 = a.connectivity.kind == Connectivity::Kind::Unbounded ||
                         (a.connectivity.kind == Connectivity::Kind::Bounded &&
                          a.connectivity.value >= 1);
        a.certified_topological = !needs_pi1 || a.pi1 == Pi1Status::Trivial;
    }

    auto stop = std::chrono::steady_clock::now();
    a.ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return a;
}

HomologyProfile graph_homology(const Graph& g, const PipelineOptions& opts) {
    PipelineOptions o = opts;
    o.want_pi1 = false;
    return analyze_graph(g, o).homology;
}

Connectivity graph_connectivity(const Graph& g, const PipelineOptions& opts) {
    PipelineOptions o = opts;
    o.want_pi1 = false;
    return analyze_graph(g, o).connectivity;
}

GraphKey graph_key(const Graph& g) {
    const int n = g.n();
    std::vector<std::vector<int>> profile(n);
    for (int v = 0; v < n; ++v) {
        profile[v].push_back(g.degree(v));
        std::vector<int> nd;
        g.neighbors(v).for_each([&](int u) { nd.push_back(g.degree(u)); });
        std::sort(nd.begin(), nd.end());
        profile[v].insert(profile[v].end(), nd.begin(), nd.end());
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return profile[x] < profile[y]; });

    GraphKey key;
    key.n = n;
    const int words = (n + 63) / 64;
    key.bits.assign(size_t(words) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.adjacent(order[i], order[j]))
                key.bits[size_t(i) * words + (j >> 6)] |= uint64_t{1} << (j & 63);
    return key;
}

size_t GraphKeyHash::operator()(const GraphKey& k) const {
    uint64_t h = 1469598103934665603ull ^ uint64_t(k.n);
    for (uint64_t w : k.bits) {
        h ^= w;
        h *= 1099511628211ull;
    }
    return size_t(h);
}

std::optional<GraphMeasurement> MeasurementCache::find(const GraphKey& k) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(k);
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

void MeasurementCache::store(const GraphKey& k, const GraphMeasurement& m) {
    std::lock_guard<std::mutex> lock(mu_);
    map_[k] = m;
}

size_t MeasurementCache::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
}

GraphMeasurement cached_graph_measurement(const Graph& g, MeasurementCache& cache,
                                          const PipelineOptions& opts) {
    GraphKey key = graph_key(g);
    if (std::optional<GraphMeasurement> hit = cache.find(key)) return *hit;
    GraphAnalysis a = analyze_graph(g, opts);
    GraphMeasurement m{a.connectivity, a.pi1, a.certified_topological};
    cache.store(key, m);
    return m;
}

Connectivity cached_graph_connectivity(const Graph& g, MeasurementCache& cache,
                                       const PipelineOptions& opts) {
    return cached_graph_measurement(g, cache, opts).connectivity;
}

}  // namespace clawtop
