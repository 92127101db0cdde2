#ifndef CLAWTOP_GRAPH_HPP
#define CLAWTOP_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clawtop/vertex_set.hpp"

namespace clawtop {

/// Finite simple graph on vertices 0..n-1 with adjacency stored as bit sets.
/// Treat as immutable once built; all operations below are pure.
class Graph {
public:
    Graph() : n_(0) {}
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int edge_count() const;
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    void add_edge(int u, int v);

    /// Open neighborhood N(v).
    const VertexSet& neighbors(int v) const;
    /// Closed neighborhood N(v) ∪ {v}.
    VertexSet closed_neighbors(int v) const;
    /// Open or closed neighborhood behind one switch.
    VertexSet neighborhood(int v, bool closed) const;

    int degree(int v) const { return adj_[v].count(); }
    int max_degree() const;

    VertexSet all_vertices() const;
    std::vector<std::pair<int, int>> edges() const;

    bool is_complete() const;
    bool is_triangle_free() const;

    Graph complement() const;

    bool operator==(const Graph& o) const = default;

private:
    void check_vertex(int v) const;

    int n_;
    std::vector<VertexSet> adj_;
};

/// Induced subgraph together with the label translation back to the
/// original graph: vertex i of `graph` was `old_labels[i]`.
struct InducedGraph {
    Graph graph;
    std::vector<int> old_labels;

    /// Original label -> new label, or -1 when the vertex was dropped.
    std::vector<int> old_to_new(int original_n) const;
};

InducedGraph induced_subgraph(const Graph& g, const VertexSet& keep);
InducedGraph remove_vertices(const Graph& g, const VertexSet& drop);

/// True iff the complement of every neighborhood's induced subgraph is
/// triangle-free.  Equivalent to having no induced K_{1,3}; the direct
/// four-vertex scan lives in claw_free_by_subset_scan as an independent
/// cross-check.
bool is_claw_free(const Graph& g);

/// Brute-force scan of all 4-subsets for an induced K_{1,3}.
bool claw_free_by_subset_scan(const Graph& g);

/// For v in N(u): is G[N(v) \ closed N(u)] complete?  Holds for every such
/// pair of a claw-free graph.
bool check_complete_outer_neighborhood(const Graph& g, int u, int v);

}  // namespace clawtop

#endif
