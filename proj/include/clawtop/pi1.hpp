#ifndef CLAWTOP_PI1_HPP
#define CLAWTOP_PI1_HPP

#include <string>
#include <vector>

#include "clawtop/simplicial_complex.hpp"

namespace clawtop {

/// Simplification budget for the group presentation.  Exhausting it leaves
/// the answer at "unknown" rather than looping forever.
struct TietzeBudget {
    int steps = 10000;
    size_t max_relator_length = 64;
};

enum class Pi1Status { Trivial, Nontrivial, Unknown };

std::string to_string(Pi1Status s);

/// Edge-path group presentation of the 2-skeleton: generators are the
/// non-tree edges of a spanning tree of the 1-skeleton, one relator per
/// triangle.  Exposed so tests can inspect it directly.
struct Pi1Presentation {
    int generators = 0;
    // Letters are 1-based generator ids, negative for inverses.
    std::vector<std::vector<int>> relators;
};

Pi1Presentation edge_path_presentation(const SimplicialComplex& c);

/// Three-valued triviality check for the fundamental group:
///  - empty complex and one-point components aside, a disconnected complex
///    is never simply connected;
///  - a nontrivial abelianization settles "nontrivial";
///  - otherwise bounded Tietze simplification tries to empty the
///    presentation; success settles "trivial", exhaustion yields "unknown".
Pi1Status fundamental_group_status(const SimplicialComplex& c, const TietzeBudget& budget = {});

}  // namespace clawtop

#endif
