#include "clawtop/bounds.hpp"

#include "clawtop/errors.hpp"

namespace clawtop {

std::string to_string(BoundKind k) {
    switch (k) {
        case BoundKind::General: return "general";
        case BoundKind::ClawFree: return "claw_free";
        case BoundKind::LFamily: return "l_family";
        case BoundKind::CFamily: return "c_family";
    }
    return "?";
}

std::optional<BoundKind> bound_kind_from_string(const std::string& s) {
    if (s == "general") return BoundKind::General;
    if (s == "claw_free") return BoundKind::ClawFree;
    if (s == "l_family") return BoundKind::LFamily;
    if (s == "c_family") return BoundKind::CFamily;
    return std::nullopt;
}

long long floor_div(long long a, long long b) {
    if (b <= 0) throw InputError("floor_div needs a positive divisor");
    long long q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

long long bound_value(BoundKind kind, long long n, long long d_or_k) {
    switch (kind) {
        case BoundKind::General:
            if (n < 0 || d_or_k < 1) throw InputError("general bound needs n >= 0 and d >= 1");
            return floor_div(n - 2 * d_or_k - 1, 2 * d_or_k);
        case BoundKind::ClawFree:
            if (n < 0 || d_or_k < 1) throw InputError("claw-free bound needs n >= 0 and d >= 1");
            return floor_div(2 * n - 1, 3 * d_or_k + 2) - 1;
        case BoundKind::LFamily:
            if (d_or_k < 1) throw InputError("band family bound needs k >= 1");
            return floor_div(n - 1, 2 * d_or_k - 1) - 1;
        case BoundKind::CFamily:
            if (d_or_k < 1) throw InputError("circular band family bound needs k >= 1");
            if (n < 6 * (d_or_k - 1))
                throw InputError("circular band family bound needs n >= 6(k-1)");
            if (n < 2 * d_or_k - 1)
                throw InputError("circular band family bound needs n >= 2k-1");
            return floor_div(n + 1, 2 * d_or_k - 1) - 2;
    }
    throw InputError("unknown bound kind");
}

NeighborhoodBoundWitness check_neighborhood_union_bound(const Graph& g, int u, int v1, int v2) {
    if (!is_claw_free(g)) throw InputError("the neighborhood union bound needs a claw-free graph");
    if (u < 0 || u >= g.n() || v1 < 0 || v1 >= g.n() || v2 < 0 || v2 >= g.n() || v1 == v2)
        throw InputError("triple must be distinct vertices of the graph");
    if (!g.adjacent(u, v1) || !g.adjacent(u, v2))
        throw InputError("v1 and v2 must be neighbors of u");
    if (g.adjacent(v1, v2)) throw InputError("v1 and v2 must be nonadjacent");

    VertexSet lhs = g.closed_neighbors(u);
    lhs |= g.neighbors(v1) & g.neighbors(v2);
    return {u, v1, v2, lhs.count(), floor_div(3 * g.max_degree() + 2, 2)};
}

std::vector<NeighborhoodBoundWitness> all_neighborhood_union_bounds(const Graph& g) {
    if (!is_claw_free(g)) throw InputError("the neighborhood union bound needs a claw-free graph");
    std::vector<NeighborhoodBoundWitness> out;
    const long long cap = g.n() > 0 ? floor_div(3 * g.max_degree() + 2, 2) : 0;
    for (int u = 0; u < g.n(); ++u) {
        std::vector<int> nb = g.neighbors(u).members();
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                VertexSet lhs = g.closed_neighbors(u);
                lhs |= g.neighbors(nb[i]) & g.neighbors(nb[j]);
                out.push_back({u, nb[i], nb[j], lhs.count(), cap});
            }
    }
    return out;
}

}  // namespace clawtop
