#include "stit/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace stit {

using nlohmann::json;

namespace {

json vec_to_json(const Vec& v) {
    json a = json::array();
    for (int i = 0; i < v.dim; ++i) a.push_back(v[i]);
    return a;
}

Vec vec_from_json(const json& j) {
    Vec v(static_cast<int>(j.size()));
    for (int i = 0; i < v.dim; ++i) v[i] = j[i].get<double>();
    return v;
}

json carrier_to_json(const Hyperplane& h) {
    return {{"normal", vec_to_json(h.normal)}, {"offset", h.offset}};
}

Hyperplane carrier_from_json(const json& j) {
    return {vec_from_json(j.at("normal")), j.at("offset").get<double>()};
}

}  // namespace

json polytope_to_json(const ConvexPolytope& p) {
    using Kind = ConvexPolytope::Kind;
    json j;
    switch (p.kind()) {
        case Kind::Box:
            j["kind"] = "box";
            j["lo"] = vec_to_json(p.box_lo());
            j["hi"] = vec_to_json(p.box_hi());
            break;
        case Kind::BoxFacet:
            j["kind"] = "box_facet";
            j["lo"] = vec_to_json(p.box_lo());
            j["hi"] = vec_to_json(p.box_hi());
            j["flat_axis"] = p.flat_axis();
            j["carrier"] = carrier_to_json(p.carrier());
            break;
        case Kind::Polygon2: {
            j["kind"] = "polygon";
            json v = json::array();
            for (const auto& x : p.vertices()) v.push_back(vec_to_json(x));
            j["vertices"] = v;
            break;
        }
        case Kind::Segment:
            j["kind"] = "segment";
            j["vertices"] = {vec_to_json(p.vertices()[0]),
                             vec_to_json(p.vertices()[1])};
            j["carrier"] = carrier_to_json(p.carrier());
            break;
        case Kind::Polyhedron3: {
            j["kind"] = "polyhedron";
            json v = json::array();
            for (const auto& x : p.vertices()) v.push_back(vec_to_json(x));
            j["vertices"] = v;
            j["faces"] = p.faces();
            break;
        }
        case Kind::Facet3: {
            j["kind"] = "planar_facet";
            json v = json::array();
            for (const auto& x : p.vertices()) v.push_back(vec_to_json(x));
            j["vertices"] = v;
            j["carrier"] = carrier_to_json(p.carrier());
            break;
        }
    }
    return j;
}

ConvexPolytope polytope_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "box")
        return ConvexPolytope::box(vec_from_json(j.at("lo")),
                                   vec_from_json(j.at("hi")));
    if (kind == "box_facet")
        return ConvexPolytope::box_facet(vec_from_json(j.at("lo")),
                                         vec_from_json(j.at("hi")),
                                         j.at("flat_axis").get<int>(),
                                         carrier_from_json(j.at("carrier")));
    std::vector<Vec> verts;
    for (const auto& v : j.at("vertices")) verts.push_back(vec_from_json(v));
    if (kind == "polygon") return ConvexPolytope::polygon(std::move(verts));
    if (kind == "segment")
        return ConvexPolytope::segment(verts.at(0), verts.at(1),
                                       carrier_from_json(j.at("carrier")));
    if (kind == "polyhedron")
        return ConvexPolytope::polyhedron(
            std::move(verts), j.at("faces").get<std::vector<std::vector<int>>>());
    if (kind == "planar_facet")
        return ConvexPolytope::planar_facet(std::move(verts),
                                            carrier_from_json(j.at("carrier")));
    throw std::runtime_error("unknown polytope kind: " + kind);
}

json tessellation_to_json(const Tessellation& t) {
    json j;
    j["schema_version"] = kGeometrySchemaVersion;
    j["dim"] = t.window().ambient_dimension();
    j["horizon"] = t.horizon();
    j["measure"] = t.spec().kind_name();
    j["window"] = polytope_to_json(t.window());
    json cells = json::array();
    for (const auto& c : t.cells()) cells.push_back(polytope_to_json(c));
    j["cells"] = cells;
    json facets = json::array();
    for (const auto& m : t.maximal_polytopes()) {
        facets.push_back({{"geometry", polytope_to_json(m.facet)},
                          {"birth_time", m.birth_time},
                          {"measure", m.measure},
                          {"normal", vec_to_json(m.normal)}});
    }
    j["maximal_polytopes"] = facets;
    return j;
}

SerializedTessellation tessellation_from_json(const json& j) {
    if (j.at("schema_version").get<int>() != kGeometrySchemaVersion)
        throw std::runtime_error("unsupported geometry schema version");
    SerializedTessellation s;
    s.dim = j.at("dim").get<int>();
    s.horizon = j.at("horizon").get<double>();
    s.window = polytope_from_json(j.at("window"));
    for (const auto& c : j.at("cells")) s.cells.push_back(polytope_from_json(c));
    for (const auto& f : j.at("maximal_polytopes"))
        s.facets.push_back({polytope_from_json(f.at("geometry")),
                            f.at("birth_time").get<double>(),
                            f.at("measure").get<double>(),
                            vec_from_json(f.at("normal"))});
    return s;
}

void write_json_file(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    return json::parse(in);
}

}  // namespace stit
