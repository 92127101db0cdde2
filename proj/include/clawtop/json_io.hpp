#ifndef CLAWTOP_JSON_IO_HPP
#define CLAWTOP_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "clawtop/homology.hpp"
#include "clawtop/simplicial_complex.hpp"

namespace clawtop {

using Json = nlohmann::json;

/// {"universe": n, "facets": [[v...], ...]} with facets sorted by dimension
/// then lexicographically, so the byte form is canonical.
Json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const Json& j);

/// {"<degree>": {"betti": b, "torsion": [t...]}, ...} listing only the
/// nonzero groups; the empty complex appears as its degree -1 group.
Json profile_to_json(const HomologyProfile& p);
HomologyProfile profile_from_json(const Json& j);

/// Compact dump; nlohmann keeps object keys sorted, so equal values give
/// identical bytes.
std::string canonical_dump(const Json& j);

}  // namespace clawtop

#endif
