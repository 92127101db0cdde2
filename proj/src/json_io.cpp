#include "clawtop/json_io.hpp"

#include "clawtop/errors.hpp"

namespace clawtop {

Json complex_to_json(const SimplicialComplex& c) {
    Json facets = Json::array();
    for (const VertexSet& f : c.facets()) facets.push_back(f.members());
    return Json{{"universe", c.universe()}, {"facets", std::move(facets)}};
}

SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("universe") || !j.contains("facets"))
        throw InputError("complex json needs universe and facets");
    int universe = j.at("universe").get<int>();
    if (universe < 0) throw InputError("complex universe must be nonnegative");
    std::vector<VertexSet> faces;
    for (const Json& f : j.at("facets")) {
        VertexSet face(universe);
        for (const Json& v : f) {
            int x = v.get<int>();
            if (x < 0 || x >= universe) throw InputError("facet vertex out of range");
            face.set(x);
        }
        faces.push_back(face);
    }
    return SimplicialComplex::from_faces(universe, faces);
}

Json profile_to_json(const HomologyProfile& p) {
    Json out = Json::object();
    if (p.empty_complex) {
        out["-1"] = Json{{"betti", 1}, {"torsion", Json::array()}};
        return out;
    }
    for (int d = 0; d <= p.top_degree(); ++d) {
        const HomologyGroup& g = p.group(d);
        if (g.trivial()) continue;
        Json torsion = Json::array();
        for (const BigInt& t : g.torsion) torsion.push_back(t.convert_to<long long>());
        out[std::to_string(d)] = Json{{"betti", g.betti}, {"torsion", std::move(torsion)}};
    }
    return out;
}

HomologyProfile profile_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("homology json must be an object");
    if (j.contains("-1")) {
        if (j.size() != 1 || j.at("-1").at("betti").get<long long>() != 1)
            throw InputError("degree -1 homology only fits the empty complex");
        return HomologyProfile::of_empty_complex();
    }
    HomologyProfile p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        int d = std::stoi(it.key());
        if (d < 0) throw InputError("homology degrees must be nonnegative");
        if (d >= int(p.groups.size())) p.groups.resize(d + 1);
        p.groups[d].betti = it.value().at("betti").get<long long>();
        for (const Json& t : it.value().at("torsion")) p.groups[d].torsion.push_back(BigInt(t.get<long long>()));
    }
    p.normalize();
    return p;
}

std::string canonical_dump(const Json& j) { return j.dump(); }

}  // namespace clawtop
