#ifndef CLAWTOP_HOMOLOGY_HPP
#define CLAWTOP_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "clawtop/simplicial_complex.hpp"
#include "clawtop/snf.hpp"

namespace clawtop {

/// One reduced homology group: free rank plus invariant factors (each > 1,
/// each dividing the next).
struct HomologyGroup {
    long long betti = 0;
    std::vector<BigInt> torsion;

    bool trivial() const { return betti == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup& o) const = default;
};

/// Rewrites a multiset of finite cyclic orders (> 1) as an invariant-factor
/// chain, so direct sums of torsion parts compare canonically.
std::vector<BigInt> invariant_factors(std::vector<BigInt> orders);

/// All reduced homology groups of one complex.  The empty complex is kept
/// distinguishable: its only nonzero group sits in degree -1, which the
/// flag records so that suspension shifts produce the two-point space.
struct HomologyProfile {
    bool empty_complex = false;
    std::vector<HomologyGroup> groups;  // groups[i] is degree i

    static HomologyProfile of_empty_complex();
    static HomologyProfile point();

    /// Zero group outside the stored range.
    const HomologyGroup& group(int degree) const;
    int top_degree() const { return int(groups.size()) - 1; }

    /// Drops trailing trivial groups.
    void normalize();
    HomologyProfile normalized() const;

    bool all_trivial() const;

    /// Suspension shift: every degree moves up by one; the empty complex
    /// becomes the two-point space (one degree-0 copy of Z).
    HomologyProfile shifted() const;

    bool operator==(const HomologyProfile& o) const;
    std::string to_string() const;
};

/// Degreewise direct sum with canonical torsion; empty-complex profiles are
/// dropped, mirroring how a one-point union drops empty summands.  A sum of
/// nothing is the point.
HomologyProfile wedge_sum(const std::vector<HomologyProfile>& parts);

/// Boundary maps of the augmented chain complex.  Entry [0] is the 1 x f_0
/// augmentation row; entry [d] maps d-chains to (d-1)-chains with the usual
/// alternating signs.  Empty complex: no matrices.
std::vector<IntMatrix> boundary_matrices(const SimplicialComplex& c);

HomologyProfile reduced_homology(const SimplicialComplex& c);

/// Homological connectivity: the empty complex sits at -2; when every
/// reduced group vanishes there is no finite answer ("contractible" in
/// print); otherwise the largest n with all groups up to degree n trivial.
struct Connectivity {
    enum class Kind { Empty, Bounded, Unbounded };

    Kind kind = Kind::Empty;
    long long value = -2;  // meaningful only when bounded

    static Connectivity empty() { return {Kind::Empty, -2}; }
    static Connectivity bounded(long long v) { return {Kind::Bounded, v}; }
    static Connectivity unbounded() { return {Kind::Unbounded, 0}; }

    bool at_least(long long n) const;
    std::string to_string() const;
    bool operator==(const Connectivity& o) const;
};

Connectivity connectivity_of(const HomologyProfile& p);
Connectivity homological_connectivity(const SimplicialComplex& c);

}  // namespace clawtop

#endif
