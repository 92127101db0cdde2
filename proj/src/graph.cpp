#include "clawtop/graph.hpp"

#include <algorithm>

#include "clawtop/errors.hpp"

namespace clawtop {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw InputError("graph order must be nonnegative");
    adj_.assign(n, VertexSet(n));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw InputError("vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self-loop rejected");
    adj_[u].set(v);
    adj_[v].set(u);
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += adj_[v].count();
    return twice / 2;
}

const VertexSet& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

VertexSet Graph::closed_neighbors(int v) const {
    VertexSet s = neighbors(v);
    s.set(v);
    return s;
}

VertexSet Graph::neighborhood(int v, bool closed) const {
    return closed ? closed_neighbors(v) : neighbors(v);
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

VertexSet Graph::all_vertices() const {
    VertexSet s(n_);
    for (int v = 0; v < n_; ++v) s.set(v);
    return s;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

bool Graph::is_complete() const {
    for (int v = 0; v < n_; ++v)
        if (degree(v) != n_ - 1) return false;
    return true;
}

bool Graph::is_triangle_free() const {
    for (int u = 0; u < n_; ++u) {
        bool triangle = false;
        adj_[u].for_each([&](int v) {
            if (v > u && adj_[u].intersects(adj_[v])) triangle = true;
        });
        if (triangle) return false;
    }
    return true;
}

Graph Graph::complement() const {
    Graph c(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) c.add_edge(u, v);
    return c;
}

std::vector<int> InducedGraph::old_to_new(int original_n) const {
    std::vector<int> map(original_n, -1);
    for (size_t i = 0; i < old_labels.size(); ++i) map[old_labels[i]] = int(i);
    return map;
}

InducedGraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    if (keep.universe() != g.n()) throw InputError("vertex set universe mismatch");
    InducedGraph out;
    out.old_labels = keep.members();
    Graph sub(int(out.old_labels.size()));
    for (size_t i = 0; i < out.old_labels.size(); ++i)
        for (size_t j = i + 1; j < out.old_labels.size(); ++j)
            if (g.adjacent(out.old_labels[i], out.old_labels[j]))
                sub.add_edge(int(i), int(j));
    out.graph = std::move(sub);
    return out;
}

InducedGraph remove_vertices(const Graph& g, const VertexSet& drop) {
    return induced_subgraph(g, g.all_vertices() - drop);
}

bool is_claw_free(const Graph& g) {
    for (int u = 0; u < g.n(); ++u) {
        InducedGraph nbhd = induced_subgraph(g, g.neighbors(u));
        if (!nbhd.graph.complement().is_triangle_free()) return false;
    }
    return true;
}

bool claw_free_by_subset_scan(const Graph& g) {
    const int n = g.n();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    const int q[4] = {a, b, c, d};
                    for (int center = 0; center < 4; ++center) {
                        int leaves[3];
                        int k = 0;
                        for (int i = 0; i < 4; ++i)
                            if (i != center) leaves[k++] = q[i];
                        bool claw = g.adjacent(q[center], leaves[0]) &&
                                    g.adjacent(q[center], leaves[1]) &&
                                    g.adjacent(q[center], leaves[2]) &&
                                    !g.adjacent(leaves[0], leaves[1]) &&
                                    !g.adjacent(leaves[0], leaves[2]) &&
                                    !g.adjacent(leaves[1], leaves[2]);
                        if (claw) return false;
                    }
                }
    return true;
}

bool check_complete_outer_neighborhood(const Graph& g, int u, int v) {
    if (!g.neighbors(u).test(v))
        throw InputError("vertex " + std::to_string(v) + " is not a neighbor of " +
                         std::to_string(u));
    VertexSet outer = g.neighbors(v) - g.closed_neighbors(u);
    return induced_subgraph(g, outer).graph.is_complete();
}

}  // namespace clawtop
