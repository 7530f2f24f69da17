#ifndef STIT_SERIALIZE_HPP
#define STIT_SERIALIZE_HPP

#include <string>

#include "json.hpp"
#include "stit/mnw.hpp"

namespace stit {

inline constexpr int kGeometrySchemaVersion = 1;

// geometry snapshot of a tessellation, reloadable for rendering
struct SerializedTessellation {
    int dim = 0;
    double horizon = 0;
    ConvexPolytope window;
    std::vector<ConvexPolytope> cells;
    struct Facet {
        ConvexPolytope geo;
        double birth_time;
        double measure;
        Vec normal;
    };
    std::vector<Facet> facets;
};

nlohmann::json polytope_to_json(const ConvexPolytope& p);
ConvexPolytope polytope_from_json(const nlohmann::json& j);

nlohmann::json tessellation_to_json(const Tessellation& t);
SerializedTessellation tessellation_from_json(const nlohmann::json& j);

void write_json_file(const nlohmann::json& j, const std::string& path);
nlohmann::json read_json_file(const std::string& path);

}  // namespace stit

#endif
