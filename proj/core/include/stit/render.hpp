#ifndef STIT_RENDER_HPP
#define STIT_RENDER_HPP

#include <string>

#include "stit/serialize.hpp"

namespace stit {

// SVG of a planar tessellation: window outline plus facet segments, with
// an optional birth-time color ramp
std::string render_svg(const SerializedTessellation& t,
                       bool color_by_birth = true, int pixels = 800);

// OBJ mesh of the maximal polytopes of a spatial tessellation
std::string render_obj(const SerializedTessellation& t);

void render_to_file(const SerializedTessellation& t, const std::string& format,
                    const std::string& path);

}  // namespace stit

#endif
