#include "clawtop/simplicial_complex.hpp"

#include <algorithm>
#include <string>

#include "clawtop/errors.hpp"

namespace clawtop {

namespace {

bool lex_cmp(const VertexSet& a, const VertexSet& b) { return a.lex_less(b); }

}  // namespace

void SimplicialComplex::insert_face(const VertexSet& face) {
    int d = face.count() - 1;
    if (d < 0) return;  // the empty face is implicit
    if (membership_.count(face)) return;
    if (int(faces_.size()) <= d) faces_.resize(d + 1);
    faces_[d].push_back(face);
    membership_.insert(face);
}

void SimplicialComplex::erase_face(const VertexSet& face) {
    int d = face.count() - 1;
    auto it = membership_.find(face);
    if (it == membership_.end()) return;
    membership_.erase(it);
    auto& level = faces_[d];
    level.erase(std::find(level.begin(), level.end(), face));
    while (!faces_.empty() && faces_.back().empty()) faces_.pop_back();
}

void SimplicialComplex::canonicalize() {
    for (auto& level : faces_) std::sort(level.begin(), level.end(), lex_cmp);
    while (!faces_.empty() && faces_.back().empty()) faces_.pop_back();
}

SimplicialComplex SimplicialComplex::from_faces(int universe,
                                                const std::vector<VertexSet>& faces) {
    SimplicialComplex c(universe);
    for (const VertexSet& f : faces) {
        if (f.universe() != universe) throw InputError("face universe mismatch");
        c.insert_face(f);
    }
    // Close downward, top dimension first so each facet only needs one pass.
    for (int d = c.dim(); d >= 1; --d) {
        // Index loop: the d-1 level grows while we scan level d.
        for (size_t i = 0; i < c.faces_[d].size(); ++i) {
            VertexSet face = c.faces_[d][i];
            face.for_each([&](int v) {
                VertexSet sub = face;
                sub.reset(v);
                c.insert_face(sub);
            });
        }
    }
    c.canonicalize();
    return c;
}

const std::vector<VertexSet>& SimplicialComplex::faces(int d) const {
    static const std::vector<VertexSet> none;
    if (d < 0 || d >= int(faces_.size())) return none;
    return faces_[d];
}

size_t SimplicialComplex::face_count() const {
    size_t total = 0;
    for (const auto& level : faces_) total += level.size();
    return total;
}

std::vector<long long> SimplicialComplex::f_vector() const {
    std::vector<long long> f;
    f.reserve(faces_.size());
    for (const auto& level : faces_) f.push_back((long long)level.size());
    return f;
}

long long SimplicialComplex::face_index(int d, const VertexSet& face) const {
    const auto& level = faces(d);
    auto it = std::lower_bound(level.begin(), level.end(), face, lex_cmp);
    if (it == level.end() || !(*it == face)) return -1;
    return it - level.begin();
}

std::vector<VertexSet> SimplicialComplex::facets() const {
    std::vector<VertexSet> out;
    for (int d = 0; d <= dim(); ++d)
        for (const VertexSet& face : faces_[d]) {
            bool maximal = true;
            for (int v = 0; v < universe_ && maximal; ++v) {
                if (face.test(v)) continue;
                VertexSet bigger = face;
                bigger.set(v);
                if (contains(bigger)) maximal = false;
            }
            if (maximal) out.push_back(face);
        }
    return out;
}

bool SimplicialComplex::downward_closed() const {
    for (int d = 1; d <= dim(); ++d)
        for (const VertexSet& face : faces_[d]) {
            bool ok = true;
            face.for_each([&](int v) {
                VertexSet sub = face;
                sub.reset(v);
                if (!contains(sub)) ok = false;
            });
            if (!ok) return false;
        }
    return true;
}

SimplicialComplex independence_complex(const Graph& g, const ComplexLimits& limits) {
    if (g.n() > limits.max_vertices)
        throw ResourceError("independence complex: graph order " + std::to_string(g.n()) +
                            " exceeds vertex cap " + std::to_string(limits.max_vertices));

    SimplicialComplex c(g.n());

    // Each level entry carries the face plus its admissible extensions:
    // vertices above the face maximum that are adjacent to none of it.
    struct Entry {
        VertexSet face;
        VertexSet ext;
    };
    std::vector<Entry> level;
    level.reserve(g.n());
    VertexSet all = g.all_vertices();
    for (int v = 0; v < g.n(); ++v) {
        VertexSet face(g.n(), {v});
        VertexSet ext = all - g.neighbors(v);
        for (int w = 0; w <= v; ++w) ext.reset(w);
        level.push_back({face, ext});
    }

    while (!level.empty()) {
        if (level.size() > limits.max_faces_per_dim)
            throw ResourceError("independence complex: face cap exceeded in dimension " +
                                std::to_string(level.front().face.count() - 1));
        std::vector<Entry> next;
        for (const Entry& e : level) {
            c.insert_face(e.face);
            e.ext.for_each([&](int v) {
                VertexSet face = e.face;
                face.set(v);
                VertexSet ext = e.ext - g.neighbors(v);
                for (int w = 0; w <= v; ++w) ext.reset(w);
                next.push_back({face, ext});
            });
        }
        level = std::move(next);
    }
    c.canonicalize();
    return c;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& c, const VertexSet& keep) {
    if (keep.universe() != c.universe()) throw InputError("vertex set universe mismatch");
    SimplicialComplex out(c.universe());
    for (int d = 0; d <= c.dim(); ++d)
        for (const VertexSet& face : c.faces(d))
            if (face.subset_of(keep)) out.insert_face(face);
    out.canonicalize();
    return out;
}

std::optional<int> cone_apex(const SimplicialComplex& c) {
    for (const VertexSet& vertex : c.faces(0)) {
        int v = vertex.min();
        bool apex = true;
        for (int d = 0; d <= c.dim() && apex; ++d)
            for (const VertexSet& face : c.faces(d)) {
                if (face.test(v)) continue;
                VertexSet coned = face;
                coned.set(v);
                if (!c.contains(coned)) {
                    apex = false;
                    break;
                }
            }
        if (apex) return v;
    }
    return std::nullopt;
}

namespace {

VertexSet widen(const VertexSet& face, int new_universe) {
    VertexSet out(new_universe);
    face.for_each([&](int v) { out.set(v); });
    return out;
}

}  // namespace

SimplicialComplex suspension(const SimplicialComplex& c) {
    const int u = c.universe();
    const int north = u, south = u + 1;
    SimplicialComplex out(u + 2);
    out.insert_face(VertexSet(u + 2, {north}));
    out.insert_face(VertexSet(u + 2, {south}));
    for (int d = 0; d <= c.dim(); ++d)
        for (const VertexSet& face : c.faces(d)) {
            VertexSet base = widen(face, u + 2);
            out.insert_face(base);
            VertexSet up = base, down = base;
            up.set(north);
            down.set(south);
            out.insert_face(up);
            out.insert_face(down);
        }
    out.canonicalize();
    return out;
}

SimplicialComplex wedge(const std::vector<SimplicialComplex>& summands,
                        const std::vector<int>& basepoints) {
    if (!basepoints.empty() && basepoints.size() != summands.size())
        throw InputError("wedge: one basepoint per summand expected");

    struct Usable {
        const SimplicialComplex* c;
        int base;
    };
    std::vector<Usable> used;
    for (size_t i = 0; i < summands.size(); ++i) {
        const SimplicialComplex& s = summands[i];
        if (s.empty()) continue;  // wedge with the empty space is dropped
        int base = basepoints.empty() || basepoints[i] < 0 ? -1 : basepoints[i];
        if (base < 0)
            base = s.faces(0).front().min();
        else if (!s.contains(VertexSet(s.universe(), {base})))
            throw InputError("wedge: basepoint " + std::to_string(base) +
                             " is not a vertex of summand " + std::to_string(i));
        used.push_back({&s, base});
    }

    int universe = 1;
    for (const Usable& u : used) universe += int(u.c->faces(0).size()) - 1;

    SimplicialComplex out(universe);
    out.insert_face(VertexSet(universe, {0}));

    int next_label = 1;
    for (const Usable& u : used) {
        // vertex -> new label; the basepoint of every summand maps to 0.
        std::vector<int> relabel(u.c->universe(), -1);
        for (const VertexSet& vertex : u.c->faces(0)) {
            int v = vertex.min();
            relabel[v] = (v == u.base) ? 0 : next_label++;
        }
        for (int d = 0; d <= u.c->dim(); ++d)
            for (const VertexSet& face : u.c->faces(d)) {
                VertexSet mapped(universe);
                face.for_each([&](int v) { mapped.set(relabel[v]); });
                out.insert_face(mapped);
            }
    }
    out.canonicalize();
    return out;
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    const int universe = a.universe() + b.universe();
    SimplicialComplex out(universe);
    for (int d = 0; d <= a.dim(); ++d)
        for (const VertexSet& face : a.faces(d)) out.insert_face(widen(face, universe));
    for (int d = 0; d <= b.dim(); ++d)
        for (const VertexSet& face : b.faces(d)) {
            VertexSet shifted(universe);
            face.for_each([&](int v) { shifted.set(v + a.universe()); });
            out.insert_face(shifted);
        }
    out.canonicalize();
    return out;
}

}  // namespace clawtop
