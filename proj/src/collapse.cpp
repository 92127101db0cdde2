#include "clawtop/collapse.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "clawtop/errors.hpp"

namespace clawtop {

namespace {

// Immediate cofaces of `face` that are still present, i.e. face + one vertex.
std::vector<VertexSet> live_cofaces(const VertexSet& face, int universe,
                                    const std::unordered_set<VertexSet, VertexSetHash>& alive) {
    std::vector<VertexSet> out;
    for (int x = 0; x < universe; ++x) {
        if (face.test(x)) continue;
        VertexSet up = face;
        up.set(x);
        if (alive.count(up)) out.push_back(up);
    }
    return out;
}

}  // namespace

SimplicialComplex replay_collapse(const SimplicialComplex& start, const CollapseSequence& seq) {
    SimplicialComplex c = start;
    for (size_t i = 0; i < seq.steps.size(); ++i) {
        const CollapseStep& s = seq.steps[i];
        const std::string where = "collapse step " + std::to_string(i);
        if (!c.contains(s.free_face)) throw InputError(where + ": free face is not in the complex");
        if (!s.free_face.subset_of(s.coface) || s.coface.count() != s.free_face.count() + 1)
            throw InputError(where + ": coface is not a one-vertex extension of the free face");
        // The free-face condition: the only face properly containing the free
        // face must be the named coface.  One extension level suffices while
        // the complex stays downward closed, which elementary collapses keep.
        int hits = 0;
        bool matches = false;
        for (int x = 0; x < c.universe(); ++x) {
            if (s.free_face.test(x)) continue;
            VertexSet up = s.free_face;
            up.set(x);
            if (c.contains(up)) {
                ++hits;
                if (up == s.coface) matches = true;
            }
        }
        if (hits != 1 || !matches)
            throw InputError(where + ": face is not free or the coface is wrong");
        c.erase_face(s.coface);
        c.erase_face(s.free_face);
    }
    return c;
}

FoldCollapse fold_collapse(const Graph& g, int v, int w, const ComplexLimits& limits) {
    if (v < 0 || w < 0 || v >= g.n() || w >= g.n() || v == w)
        throw InputError("fold requires two distinct vertices of the graph");
    if (!g.neighbors(v).subset_of(g.neighbors(w)))
        throw InputError("fold requires N(v) to be contained in N(w)");

    SimplicialComplex full = independence_complex(g, limits);

    // Every face holding w splits by whether it also holds v; the ones
    // without v pair bijectively with their v-extensions.  Removing larger
    // faces first keeps each one free when its turn comes.
    std::vector<VertexSet> with_w;
    for (int d = full.dim(); d >= 0; --d)
        for (const VertexSet& f : full.faces(d))
            if (f.test(w) && !f.test(v)) with_w.push_back(f);

    CollapseSequence seq;
    seq.steps.reserve(with_w.size());
    for (const VertexSet& f : with_w) {
        VertexSet up = f;
        up.set(v);
        seq.steps.push_back({f, up});
    }

    VertexSet drop(g.n());
    drop.set(w);
    FoldCollapse out{remove_vertices(g, drop), std::move(seq)};

    SimplicialComplex reduced_complex = replay_collapse(full, out.sequence);
    if (!(reduced_complex == induced_subcomplex(full, g.all_vertices() - drop)))
        throw std::logic_error("fold collapse did not reach the expected complex");
    return out;
}

FoldReduction greedy_fold_reduce(const Graph& g) {
    Graph cur = g;
    std::vector<int> labels(g.n());
    std::iota(labels.begin(), labels.end(), 0);
    std::vector<FoldRecord> folds;

    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < cur.n() && !changed; ++v) {
            for (int w = 0; w < cur.n() && !changed; ++w) {
                if (w == v || !cur.neighbors(v).subset_of(cur.neighbors(w))) continue;
                folds.push_back({labels[v], labels[w]});
                VertexSet drop(cur.n());
                drop.set(w);
                InducedGraph next = remove_vertices(cur, drop);
                std::vector<int> relabeled(next.graph.n());
                for (int i = 0; i < next.graph.n(); ++i)
                    relabeled[i] = labels[next.old_labels[i]];
                cur = next.graph;
                labels = std::move(relabeled);
                changed = true;
            }
        }
    }
    return {InducedGraph{std::move(cur), std::move(labels)}, std::move(folds)};
}

FreeFaceCollapse free_face_collapse(const SimplicialComplex& c) {
    // Top dimension first, lexicographic inside a dimension.
    std::vector<VertexSet> order;
    order.reserve(c.face_count());
    for (int d = c.dim(); d >= 0; --d)
        for (const VertexSet& f : c.faces(d)) order.push_back(f);

    std::unordered_set<VertexSet, VertexSetHash> alive(order.begin(), order.end());
    CollapseSequence seq;
    std::deque<VertexSet> queue(order.begin(), order.end());

    while (true) {
        size_t before = seq.steps.size();
        while (!queue.empty()) {
            VertexSet face = queue.front();
            queue.pop_front();
            if (!alive.count(face)) continue;
            std::vector<VertexSet> ups = live_cofaces(face, c.universe(), alive);
            if (ups.size() != 1) continue;
            const VertexSet& coface = ups.front();
            seq.steps.push_back({face, coface});
            alive.erase(coface);
            alive.erase(face);
            // Only the boundaries of the removed pair can have become free.
            std::vector<VertexSet> touched;
            coface.for_each([&](int x) {
                VertexSet down = coface;
                down.reset(x);
                if (alive.count(down)) touched.push_back(down);
            });
            face.for_each([&](int x) {
                VertexSet down = face;
                down.reset(x);
                if (alive.count(down)) touched.push_back(down);
            });
            std::sort(touched.begin(), touched.end(),
                      [](const VertexSet& a, const VertexSet& b) { return a.lex_less(b); });
            for (const VertexSet& t : touched) queue.push_back(t);
        }
        if (seq.steps.size() == before) break;
        for (const VertexSet& f : order)
            if (alive.count(f)) queue.push_back(f);
    }

    SimplicialComplex result(c.universe());
    for (const VertexSet& f : order)
        if (alive.count(f)) result.insert_face(f);
    result.canonicalize();
    return {std::move(result), std::move(seq)};
}

}  // namespace clawtop
