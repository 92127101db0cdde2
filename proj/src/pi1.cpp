#include "clawtop/pi1.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "clawtop/snf.hpp"

namespace clawtop {

std::string to_string(Pi1Status s) {
    switch (s) {
        case Pi1Status::Trivial: return "trivial";
        case Pi1Status::Nontrivial: return "nontrivial";
        case Pi1Status::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

int component_count(const SimplicialComplex& c) {
    const std::vector<VertexSet>& verts = c.faces(0);
    if (verts.empty()) return 0;
    std::unordered_map<int, int> idx;
    for (size_t i = 0; i < verts.size(); ++i) idx[verts[i].min()] = int(i);
    std::vector<int> parent(verts.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = int(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const VertexSet& e : c.faces(1)) {
        std::vector<int> uv = e.members();
        int a = find(idx[uv[0]]), b = find(idx[uv[1]]);
        if (a != b) parent[a] = b;
    }
    int comps = 0;
    for (size_t i = 0; i < parent.size(); ++i)
        if (find(int(i)) == int(i)) ++comps;
    return comps;
}

}  // namespace

Pi1Presentation edge_path_presentation(const SimplicialComplex& c) {
    Pi1Presentation pres;
    const std::vector<VertexSet>& verts = c.faces(0);
    if (verts.empty()) return pres;

    std::unordered_map<int, std::vector<int>> adj;
    for (const VertexSet& v : verts) adj[v.min()];
    for (const VertexSet& e : c.faces(1)) {
        std::vector<int> uv = e.members();
        adj[uv[0]].push_back(uv[1]);
        adj[uv[1]].push_back(uv[0]);
    }

    // Spanning tree by breadth-first search from the smallest vertex.
    auto edge_key = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        return (long long)u * c.universe() + v;
    };
    std::unordered_set<long long> tree;
    std::unordered_set<int> seen;
    std::deque<int> work{verts.front().min()};
    seen.insert(verts.front().min());
    while (!work.empty()) {
        int u = work.front();
        work.pop_front();
        std::vector<int>& nb = adj[u];
        std::sort(nb.begin(), nb.end());
        for (int v : nb)
            if (seen.insert(v).second) {
                tree.insert(edge_key(u, v));
                work.push_back(v);
            }
    }

    std::unordered_map<long long, int> gen;  // edge -> generator id (1-based)
    for (const VertexSet& e : c.faces(1)) {
        std::vector<int> uv = e.members();
        long long k = edge_key(uv[0], uv[1]);
        if (!tree.count(k)) gen[k] = ++pres.generators;
    }

    for (const VertexSet& t : c.faces(2)) {
        std::vector<int> abc = t.members();
        auto letter = [&](int u, int v, int sign) -> int {
            auto it = gen.find(edge_key(u, v));
            return it == gen.end() ? 0 : sign * it->second;
        };
        std::vector<int> word;
        if (int l = letter(abc[0], abc[1], 1)) word.push_back(l);
        if (int l = letter(abc[1], abc[2], 1)) word.push_back(l);
        if (int l = letter(abc[0], abc[2], -1)) word.push_back(l);
        if (!word.empty()) pres.relators.push_back(std::move(word));
    }
    return pres;
}

namespace {

void free_and_cyclic_reduce(std::vector<int>& w) {
    std::vector<int> out;
    out.reserve(w.size());
    for (int l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    while (out.size() >= 2 && out.front() == -out.back()) {
        out.erase(out.begin());
        out.pop_back();
    }
    w = std::move(out);
}

std::vector<int> inverse_word(const std::vector<int>& w) {
    std::vector<int> out(w.rbegin(), w.rend());
    for (int& l : out) l = -l;
    return out;
}

std::vector<int> cyclic_canonical(const std::vector<int>& w) {
    std::vector<int> best;
    for (const std::vector<int>& base : {w, inverse_word(w)}) {
        std::vector<int> rot = base;
        for (size_t i = 0; i < std::max<size_t>(base.size(), 1); ++i) {
            if (best.empty() || rot < best) best = rot;
            if (rot.size() > 1) std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        }
    }
    return best;
}

struct Simplifier {
    std::vector<std::vector<int>> relators;
    std::vector<bool> alive;
    int steps_left;
    size_t max_len;

    explicit Simplifier(const Pi1Presentation& p, const TietzeBudget& budget)
        : relators(p.relators),
          alive(size_t(p.generators) + 1, true),
          steps_left(budget.steps),
          max_len(budget.max_relator_length) {
        alive[0] = false;
    }

    int alive_count() const {
        int n = 0;
        for (size_t g = 1; g < alive.size(); ++g) n += alive[g];
        return n;
    }

    void tidy() {
        for (std::vector<int>& r : relators) free_and_cyclic_reduce(r);
        relators.erase(std::remove_if(relators.begin(), relators.end(),
                                      [](const std::vector<int>& r) { return r.empty(); }),
                       relators.end());
    }

    void kill_generator(int g) {  // g = 1: erase its letters everywhere
        alive[g] = false;
        for (std::vector<int>& r : relators)
            r.erase(std::remove_if(r.begin(), r.end(), [&](int l) { return std::abs(l) == g; }),
                    r.end());
    }

    // b := a^e; every letter of b is rewritten in terms of a.
    void rename_generator(int b, int a, int e) {
        alive[b] = false;
        for (std::vector<int>& r : relators)
            for (int& l : r)
                if (std::abs(l) == b) l = (l > 0 ? e : -e) * a;
    }

    bool eliminate_by_substitution(int g, size_t ri) {
        // Rotate the defining relator so the unique g-letter leads.
        std::vector<int> r = relators[ri];
        size_t pos = 0;
        while (std::abs(r[pos]) != g) ++pos;
        std::rotate(r.begin(), r.begin() + pos, r.end());
        std::vector<int> rest(r.begin() + 1, r.end());
        // r = g^s * rest = 1  =>  g = rest^-1 when s = +1, else g = rest.
        std::vector<int> word = r[0] > 0 ? inverse_word(rest) : rest;

        std::vector<std::vector<int>> next;
        next.reserve(relators.size() - 1);
        for (size_t i = 0; i < relators.size(); ++i) {
            if (i == ri) continue;
            std::vector<int> out;
            for (int l : relators[i]) {
                if (std::abs(l) != g) {
                    out.push_back(l);
                    continue;
                }
                const std::vector<int> rep = l > 0 ? word : inverse_word(word);
                out.insert(out.end(), rep.begin(), rep.end());
            }
            free_and_cyclic_reduce(out);
            if (out.size() > max_len) return false;  // too costly, try another
            if (!out.empty()) next.push_back(std::move(out));
        }
        relators = std::move(next);
        alive[g] = false;
        return true;
    }

    // One simplification move; false when nothing applies.
    bool step() {
        tidy();

        for (size_t i = 0; i < relators.size(); ++i)
            if (relators[i].size() == 1) {
                int g = std::abs(relators[i][0]);
                relators.erase(relators.begin() + i);
                kill_generator(g);
                return true;
            }

        for (size_t i = 0; i < relators.size(); ++i)
            if (relators[i].size() == 2) {
                int x = relators[i][0], y = relators[i][1];
                if (std::abs(x) == std::abs(y)) continue;  // a power relation
                int a = std::abs(x), b = std::abs(y);
                int e = -(x > 0 ? 1 : -1) * (y > 0 ? 1 : -1);
                relators.erase(relators.begin() + i);
                rename_generator(b, a, e);
                return true;
            }

        // occurrence counts: total, and per-relator position of a unique hit
        std::vector<int> total(alive.size(), 0);
        for (const std::vector<int>& r : relators)
            for (int l : r) ++total[std::abs(l)];

        for (size_t g = 1; g < alive.size(); ++g) {
            if (!alive[g]) continue;
            if (total[g] == 0) continue;  // free generator; nothing to do here
            if (total[g] == 1) {
                for (size_t i = 0; i < relators.size(); ++i) {
                    bool here = false;
                    for (int l : relators[i]) here |= size_t(std::abs(l)) == g;
                    if (here) {
                        relators.erase(relators.begin() + i);
                        break;
                    }
                }
                alive[g] = false;
                return true;
            }
        }

        for (size_t i = 0; i < relators.size(); ++i) {
            std::vector<int> count(alive.size(), 0);
            for (int l : relators[i]) ++count[std::abs(l)];
            for (size_t g = 1; g < alive.size(); ++g)
                if (alive[g] && count[g] == 1 && eliminate_by_substitution(int(g), i)) return true;
        }

        bool dropped = false;
        std::unordered_set<std::string> seen;
        for (size_t i = 0; i < relators.size();) {
            std::vector<int> key = cyclic_canonical(relators[i]);
            std::string enc(reinterpret_cast<const char*>(key.data()), key.size() * sizeof(int));
            if (!seen.insert(enc).second) {
                relators.erase(relators.begin() + i);
                dropped = true;
            } else {
                ++i;
            }
        }
        return dropped;
    }

    Pi1Status run() {
        while (steps_left-- > 0) {
            if (alive_count() == 0) return Pi1Status::Trivial;
            if (!step()) break;
        }
        tidy();
        if (alive_count() == 0) return Pi1Status::Trivial;
        if (relators.empty()) return Pi1Status::Nontrivial;  // free of rank >= 1
        return Pi1Status::Unknown;
    }
};

bool abelianization_nontrivial(const Pi1Presentation& p) {
    IntMatrix e(p.generators, int(p.relators.size()));
    for (size_t j = 0; j < p.relators.size(); ++j)
        for (int l : p.relators[j]) e.at(std::abs(l) - 1, int(j)) += l > 0 ? 1 : -1;
    SmithResult s = smith_normal_form(e);
    if (s.rank() < p.generators) return true;  // free part survives
    for (const BigInt& d : s.divisors)
        if (d > 1) return true;  // torsion survives
    return false;
}

}  // namespace

Pi1Status fundamental_group_status(const SimplicialComplex& c, const TietzeBudget& budget) {
    if (c.empty()) return Pi1Status::Trivial;
    if (component_count(c) > 1) return Pi1Status::Nontrivial;
    Pi1Presentation pres = edge_path_presentation(c);
    if (pres.generators == 0) return Pi1Status::Trivial;
    if (abelianization_nontrivial(pres)) return Pi1Status::Nontrivial;
    return Simplifier(pres, budget).run();
}

}  // namespace clawtop
