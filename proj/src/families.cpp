#include "clawtop/families.hpp"

#include <random>
#include <string>

#include "clawtop/errors.hpp"

namespace clawtop {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw InputError(msg);
}

// Uniform double in [0,1) from the top 53 bits; avoids the
// implementation-defined std::uniform_real_distribution.
double next_unit(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph path_graph(int n) {
    require(n >= 0, "path: n must be nonnegative");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle: n must be at least 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    require(n >= 0, "complete: n must be nonnegative");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph star_graph(int leaves) {
    require(leaves >= 0, "star: leaf count must be nonnegative");
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph band_graph(int n, int k) {
    require(n >= 0, "band: n must be nonnegative");
    require(k >= 1, "band: k must be positive");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n && j - i < k; ++j) g.add_edge(i, j);
    return g;
}

Graph circular_band_graph(int n, int k) {
    require(k >= 1, "circular band: k must be positive");
    require(n >= 2 * k - 1, "circular band: n must be at least 2k-1");
    Graph g = band_graph(n, k);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((n + i) - j < k && !g.adjacent(i, j)) g.add_edge(i, j);
    return g;
}

Graph line_graph(const Graph& h) {
    const std::vector<std::pair<int, int>> e = h.edges();
    Graph g(int(e.size()));
    for (size_t i = 0; i < e.size(); ++i)
        for (size_t j = i + 1; j < e.size(); ++j) {
            bool shared = e[i].first == e[j].first || e[i].first == e[j].second ||
                          e[i].second == e[j].first || e[i].second == e[j].second;
            if (shared) g.add_edge(int(i), int(j));
        }
    return g;
}

Graph random_graph(int n, double p, uint64_t seed) {
    require(n >= 0, "random: n must be nonnegative");
    require(p >= 0.0 && p <= 1.0, "random: p must lie in [0,1]");
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (next_unit(rng) < p) g.add_edge(u, v);
    return g;
}

Graph random_claw_free_graph(int n, double p, uint64_t seed, int max_retries) {
    require(max_retries >= 1, "random claw-free: retry cap must be positive");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (next_unit(rng) < p) g.add_edge(u, v);
        if (is_claw_free(g) && claw_free_by_subset_scan(g)) return g;
    }
    throw GenerationError("no claw-free sample found in " + std::to_string(max_retries) +
                          " attempts (n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")");
}

}  // namespace clawtop
