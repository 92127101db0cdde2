#ifndef CLAWTOP_SIMPLICIAL_COMPLEX_HPP
#define CLAWTOP_SIMPLICIAL_COMPLEX_HPP

#include <optional>
#include <unordered_set>
#include <vector>

#include "clawtop/graph.hpp"
#include "clawtop/vertex_set.hpp"

namespace clawtop {

/// Enumeration guards.  Construction refuses graphs above the vertex cap and
/// complexes whose face count in any single dimension passes the face cap.
struct ComplexLimits {
    int max_vertices = 30;
    size_t max_faces_per_dim = 200000;
};

/// Abstract simplicial complex over labels 0..universe-1.  Faces are kept
/// per dimension in lexicographic order of their vertex tuples, with a hash
/// set on the side for membership queries.  The empty complex has no faces
/// at all; a complex made of a single vertex is a point, not empty.
class SimplicialComplex {
public:
    SimplicialComplex() : universe_(0) {}
    explicit SimplicialComplex(int universe) : universe_(universe) {}

    /// Builds the downward closure of the given faces.
    static SimplicialComplex from_faces(int universe, const std::vector<VertexSet>& faces);

    int universe() const { return universe_; }
    /// -1 for the empty complex.
    int dim() const { return int(faces_.size()) - 1; }
    bool empty() const { return faces_.empty(); }

    bool contains(const VertexSet& face) const { return membership_.count(face) > 0; }
    const std::vector<VertexSet>& faces(int d) const;
    size_t face_count() const;
    std::vector<long long> f_vector() const;

    /// Index of a face within the sorted dimension-d list; -1 if absent.
    long long face_index(int d, const VertexSet& face) const;

    /// Faces not properly contained in any other face.
    std::vector<VertexSet> facets() const;

    /// Downward-closure check; used by tests after every construction.
    bool downward_closed() const;

    bool operator==(const SimplicialComplex& o) const {
        return universe_ == o.universe_ && faces_ == o.faces_;
    }

    // Mutation is reserved for builders and the collapse engine.
    void insert_face(const VertexSet& face);
    void erase_face(const VertexSet& face);
    /// Re-sorts dimension lists after a batch of insertions.
    void canonicalize();

private:
    int universe_;
    std::vector<std::vector<VertexSet>> faces_;
    std::unordered_set<VertexSet, VertexSetHash> membership_;
};

/// Faces are exactly the independent vertex sets of g, enumerated by
/// dimension: level d+1 extends level d by vertices above the face maximum
/// that see none of its members.
SimplicialComplex independence_complex(const Graph& g, const ComplexLimits& limits = {});

/// Faces of the complex contained in `keep`; labels are preserved.
SimplicialComplex induced_subcomplex(const SimplicialComplex& c, const VertexSet& keep);

/// Some vertex whose star is the whole complex, if one exists.  A hit
/// certifies contractibility.
std::optional<int> cone_apex(const SimplicialComplex& c);

/// Join with two fresh apex vertices (labels universe, universe+1).
/// suspension(empty) is the two-point complex.
SimplicialComplex suspension(const SimplicialComplex& c);

/// One-point union after relabeling.  basepoints[i] names the glue vertex
/// of summand i (-1 picks its smallest vertex); empty summands are dropped;
/// a wedge of nothing is a single point.
SimplicialComplex wedge(const std::vector<SimplicialComplex>& summands,
                        const std::vector<int>& basepoints = {});

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace clawtop

#endif
