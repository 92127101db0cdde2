#include "doctest.h"

#include "clawtop/families.hpp"
#include "clawtop/pi1.hpp"

using namespace clawtop;

namespace {

SimplicialComplex from_facets(int universe, const std::vector<std::vector<int>>& facets) {
    std::vector<VertexSet> faces;
    for (const std::vector<int>& f : facets) {
        VertexSet s(universe);
        for (int v : f) s.set(v);
        faces.push_back(s);
    }
    return SimplicialComplex::from_faces(universe, faces);
}

}  // namespace

TEST_CASE("presentation of a hollow triangle") {
    const SimplicialComplex rim = from_facets(3, {{0, 1}, {1, 2}, {0, 2}});
    const Pi1Presentation p = edge_path_presentation(rim);
    CHECK(p.generators == 1);  // 3 edges minus a 2-edge spanning tree
    CHECK(p.relators.empty());
    CHECK(fundamental_group_status(rim) == Pi1Status::Nontrivial);
}

TEST_CASE("presentation of a solid triangle") {
    const SimplicialComplex solid = from_facets(3, {{0, 1, 2}});
    const Pi1Presentation p = edge_path_presentation(solid);
    CHECK(p.generators == 1);
    CHECK(p.relators.size() == 1);
    CHECK(fundamental_group_status(solid) == Pi1Status::Trivial);
}

TEST_CASE("the 2-sphere is simply connected") {
    // boundary of the 3-simplex
    const SimplicialComplex s2 = from_facets(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(fundamental_group_status(s2) == Pi1Status::Trivial);
}

TEST_CASE("disconnected complexes are never simply connected") {
    const SimplicialComplex two_edges = from_facets(4, {{0, 1}, {2, 3}});
    CHECK(fundamental_group_status(two_edges) == Pi1Status::Nontrivial);
    // ... even when each piece is contractible
    const SimplicialComplex edge_and_point = from_facets(3, {{0, 1}, {2}});
    CHECK(fundamental_group_status(edge_and_point) == Pi1Status::Nontrivial);
}

TEST_CASE("trivial cases") {
    CHECK(fundamental_group_status(SimplicialComplex(0)) == Pi1Status::Trivial);
    CHECK(fundamental_group_status(from_facets(1, {{0}})) == Pi1Status::Trivial);
    // a tree has no generators at all
    const SimplicialComplex tree = from_facets(4, {{0, 1}, {1, 2}, {1, 3}});
    const Pi1Presentation p = edge_path_presentation(tree);
    CHECK(p.generators == 0);
    CHECK(fundamental_group_status(tree) == Pi1Status::Trivial);
}

TEST_CASE("independence complexes with known fundamental groups") {
    // Ind(C_6) is a wedge of two circles: free of rank 2
    CHECK(fundamental_group_status(independence_complex(cycle_graph(6))) ==
          Pi1Status::Nontrivial);
    // Ind(C_8) is a 2-sphere
    CHECK(fundamental_group_status(independence_complex(cycle_graph(8))) == Pi1Status::Trivial);
    // Ind(C_5) is a circle
    CHECK(fundamental_group_status(independence_complex(cycle_graph(5))) ==
          Pi1Status::Nontrivial);
}

TEST_CASE("torsion in the abelianization is caught without simplification") {
    // projective plane: pi_1 = Z/2, found through the exponent matrix
    const SimplicialComplex rp2 =
        from_facets(6, {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
                        {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}});
    CHECK(fundamental_group_status(rp2) == Pi1Status::Nontrivial);
}

TEST_CASE("relator letters index live generators") {
    const SimplicialComplex c = independence_complex(cycle_graph(7));
    const Pi1Presentation p = edge_path_presentation(c);
    for (const std::vector<int>& rel : p.relators)
        for (int letter : rel) {
            CHECK(letter != 0);
            CHECK(std::abs(letter) <= p.generators);
        }
}

TEST_CASE("a tiny budget reports unknown instead of guessing") {
    TietzeBudget stingy;
    stingy.steps = 0;
    // Ind(C_8) is simply connected but proving it needs simplification steps
    const SimplicialComplex c = independence_complex(cycle_graph(8));
    CHECK(fundamental_group_status(c, stingy) == Pi1Status::Unknown);
}
