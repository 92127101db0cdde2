#include "clawtop/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "clawtop/errors.hpp"

namespace clawtop {

std::vector<BigInt> invariant_factors(std::vector<BigInt> orders) {
    std::map<BigInt, std::vector<int>> exps;  // prime -> exponents, one per order
    for (BigInt m : orders) {
        if (m <= 1) throw InputError("torsion orders must exceed 1");
        for (BigInt k = 2; k * k <= m; ++k) {
            if (m % k != 0) continue;
            int e = 0;
            while (m % k == 0) {
                m /= k;
                ++e;
            }
            exps[k].push_back(e);
        }
        if (m > 1) exps[m].push_back(1);
    }
    size_t chain = 0;
    for (auto& [p, es] : exps) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        chain = std::max(chain, es.size());
    }
    // factor i (counting from the largest) takes the i-th largest exponent
    // of every prime, which makes consecutive factors divide each other.
    std::vector<BigInt> out(chain, BigInt(1));
    for (auto& [p, es] : exps)
        for (size_t i = 0; i < es.size(); ++i) {
            BigInt pw = 1;
            for (int e = 0; e < es[i]; ++e) pw *= p;
            out[i] *= pw;
        }
    std::reverse(out.begin(), out.end());
    return out;
}

HomologyProfile HomologyProfile::of_empty_complex() {
    HomologyProfile p;
    p.empty_complex = true;
    return p;
}

HomologyProfile HomologyProfile::point() { return HomologyProfile{}; }

const HomologyGroup& HomologyProfile::group(int degree) const {
    static const HomologyGroup zero{};
    if (degree < 0 || degree >= int(groups.size())) return zero;
    return groups[degree];
}

void HomologyProfile::normalize() {
    while (!groups.empty() && groups.back().trivial()) groups.pop_back();
}

HomologyProfile HomologyProfile::normalized() const {
    HomologyProfile p = *this;
    p.normalize();
    return p;
}

bool HomologyProfile::all_trivial() const {
    if (empty_complex) return false;
    for (const HomologyGroup& g : groups)
        if (!g.trivial()) return false;
    return true;
}

HomologyProfile HomologyProfile::shifted() const {
    HomologyProfile p;
    if (empty_complex) {
        p.groups.push_back({1, {}});  // two points: one copy of Z in degree 0
        return p;
    }
    p.groups.reserve(groups.size() + 1);
    p.groups.push_back({});
    p.groups.insert(p.groups.end(), groups.begin(), groups.end());
    p.normalize();
    return p;
}

bool HomologyProfile::operator==(const HomologyProfile& o) const {
    if (empty_complex != o.empty_complex) return false;
    HomologyProfile a = normalized(), b = o.normalized();
    return a.groups == b.groups;
}

std::string HomologyProfile::to_string() const {
    if (empty_complex) return "H~(-1)=Z";
    std::ostringstream out;
    bool any = false;
    for (size_t i = 0; i < groups.size(); ++i) {
        const HomologyGroup& g = groups[i];
        if (g.trivial()) continue;
        if (any) out << "; ";
        any = true;
        out << "H~" << i << "=";
        bool first = true;
        if (g.betti > 0) {
            out << "Z";
            if (g.betti > 1) out << "^" << g.betti;
            first = false;
        }
        for (const BigInt& t : g.torsion) {
            if (!first) out << "+";
            out << "Z/" << t;
            first = false;
        }
    }
    return any ? out.str() : "trivial";
}

HomologyProfile wedge_sum(const std::vector<HomologyProfile>& parts) {
    HomologyProfile out;
    for (const HomologyProfile& p : parts) {
        if (p.empty_complex) continue;
        if (p.groups.size() > out.groups.size()) out.groups.resize(p.groups.size());
        for (size_t i = 0; i < p.groups.size(); ++i) {
            out.groups[i].betti += p.groups[i].betti;
            out.groups[i].torsion.insert(out.groups[i].torsion.end(), p.groups[i].torsion.begin(),
                                         p.groups[i].torsion.end());
        }
    }
    for (HomologyGroup& g : out.groups)
        if (!g.torsion.empty()) g.torsion = invariant_factors(std::move(g.torsion));
    out.normalize();
    return out;
}

std::vector<IntMatrix> boundary_matrices(const SimplicialComplex& c) {
    std::vector<IntMatrix> out;
    if (c.empty()) return out;
    const int dim = c.dim();
    out.reserve(dim + 1);

    IntMatrix aug(1, int(c.faces(0).size()));
    for (int j = 0; j < aug.cols(); ++j) aug.at(0, j) = 1;
    out.push_back(std::move(aug));

    for (int d = 1; d <= dim; ++d) {
        const std::vector<VertexSet>& below = c.faces(d - 1);
        const std::vector<VertexSet>& here = c.faces(d);
        IntMatrix m(int(below.size()), int(here.size()));
        for (size_t j = 0; j < here.size(); ++j) {
            std::vector<int> vs = here[j].members();
            for (size_t i = 0; i < vs.size(); ++i) {
                VertexSet sub = here[j];
                sub.reset(vs[i]);
                long long row = c.face_index(d - 1, sub);
                if (row < 0) throw std::logic_error("complex is not downward closed");
                m.at(int(row), int(j)) = (i % 2 == 0) ? 1 : -1;
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

HomologyProfile reduced_homology(const SimplicialComplex& c) {
    if (c.empty()) return HomologyProfile::of_empty_complex();
    std::vector<IntMatrix> bd = boundary_matrices(c);
    const int dim = c.dim();

    std::vector<int> rank(dim + 2, 0);
    std::vector<std::vector<BigInt>> divisors(dim + 2);
    for (int d = 0; d <= dim; ++d) {
        SmithResult s = smith_normal_form(bd[d]);
        rank[d] = s.rank();
        divisors[d] = std::move(s.divisors);
    }

    HomologyProfile p;
    p.groups.resize(dim + 1);
    for (int d = 0; d <= dim; ++d) {
        long long faces_d = static_cast<long long>(c.faces(d).size());
        p.groups[d].betti = faces_d - rank[d] - rank[d + 1];
        for (const BigInt& t : divisors[d + 1])
            if (t > 1) p.groups[d].torsion.push_back(t);
    }
    p.normalize();
    return p;
}

bool Connectivity::at_least(long long n) const {
    switch (kind) {
        case Kind::Empty: return n <= -2;
        case Kind::Bounded: return value >= n;
        case Kind::Unbounded: return true;
    }
    return false;
}

std::string Connectivity::to_string() const {
    switch (kind) {
        case Kind::Empty: return "-2";
        case Kind::Bounded: return std::to_string(value);
        case Kind::Unbounded: return "contractible";
    }
    return "?";
}

bool Connectivity::operator==(const Connectivity& o) const {
    if (kind != o.kind) return false;
    return kind != Kind::Bounded || value == o.value;
}

Connectivity connectivity_of(const HomologyProfile& p) {
    if (p.empty_complex) return Connectivity::empty();
    for (int d = 0; d <= p.top_degree(); ++d)
        if (!p.group(d).trivial()) return Connectivity::bounded(d - 1);
    return Connectivity::unbounded();
}

Connectivity homological_connectivity(const SimplicialComplex& c) {
    if (c.empty()) return Connectivity::empty();
    if (cone_apex(c)) return Connectivity::unbounded();
    return connectivity_of(reduced_homology(c));
}

}  // namespace clawtop
