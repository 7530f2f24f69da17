#include "stit/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stit {

namespace {

std::vector<Vec> outline_2d(const ConvexPolytope& p) {
    if (p.is_box()) {
        const Vec& lo = p.box_lo();
        const Vec& hi = p.box_hi();
        return {Vec{lo[0], lo[1]}, Vec{hi[0], lo[1]}, Vec{hi[0], hi[1]},
                Vec{lo[0], hi[1]}};
    }
    return p.vertices();
}

// ordered vertex loop of a (d-1)-facet embedded in 3D
std::vector<Vec> facet_loop_3d(const ConvexPolytope& p) {
    if (p.kind() == ConvexPolytope::Kind::BoxFacet) {
        const Vec& lo = p.box_lo();
        const Vec& hi = p.box_hi();
        int f = p.flat_axis();
        int a = (f + 1) % 3, b = (f + 2) % 3;
        Vec v0 = lo, v1 = lo, v2 = hi, v3 = lo;
        v1[a] = hi[a];
        v3[b] = hi[b];
        return {v0, v1, v2, v3};
    }
    return p.vertices();
}

std::string ramp_color(double frac) {
    // cold (early) to warm (late)
    frac = std::clamp(frac, 0.0, 1.0);
    int r = static_cast<int>(40 + 200 * frac);
    int g = static_cast<int>(60 + 60 * (1 - std::abs(2 * frac - 1)));
    int b = static_cast<int>(40 + 200 * (1 - frac));
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return buf;
}

}  // namespace

std::string render_svg(const SerializedTessellation& t, bool color_by_birth,
                       int pixels) {
    if (t.dim != 2) throw std::runtime_error("SVG output needs d = 2");
    double lo0 = -t.window.support(Vec{-1, 0});
    double hi0 = t.window.support(Vec{1, 0});
    double lo1 = -t.window.support(Vec{0, -1});
    double hi1 = t.window.support(Vec{0, 1});
    double span = std::max(hi0 - lo0, hi1 - lo1);
    double margin = 0.03 * span;
    double scale = pixels / (span + 2 * margin);
    auto px = [&](const Vec& v) {
        double x = (v[0] - lo0 + margin) * scale;
        double y = pixels - (v[1] - lo1 + margin) * scale;
        return std::pair<double, double>(x, y);
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << pixels
        << "\" height=\"" << pixels << "\">\n";
    out << "  <polygon class=\"window\" points=\"";
    for (const auto& v : outline_2d(t.window)) {
        auto [x, y] = px(v);
        out << x << "," << y << " ";
    }
    out << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    for (const auto& f : t.facets) {
        const auto& v = f.geo.vertices();
        if (v.size() < 2) continue;
        auto [x1, y1] = px(v[0]);
        auto [x2, y2] = px(v[1]);
        std::string color =
            color_by_birth && t.horizon > 0
                ? ramp_color(f.birth_time / t.horizon)
                : std::string("black");
        out << "  <line class=\"facet\" x1=\"" << x1 << "\" y1=\"" << y1
            << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\" stroke=\"" << color
            << "\" stroke-width=\"1\" data-birth=\"" << f.birth_time
            << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_obj(const SerializedTessellation& t) {
    if (t.dim != 3) throw std::runtime_error("OBJ output needs d = 3");
    std::ostringstream out;
    out << "# maximal polytopes, one face per split event\n";
    int base = 1;
    for (const auto& f : t.facets) {
        auto loop = facet_loop_3d(f.geo);
        if (loop.size() < 3) continue;
        out << "# birth " << f.birth_time << "\n";
        for (const auto& v : loop)
            out << "v " << v[0] << " " << v[1] << " " << v[2] << "\n";
        out << "f";
        for (size_t i = 0; i < loop.size(); ++i)
            out << " " << base + static_cast<int>(i);
        out << "\n";
        base += static_cast<int>(loop.size());
    }
    return out.str();
}

void render_to_file(const SerializedTessellation& t, const std::string& format,
                    const std::string& path) {
    std::string body;
    if (format == "svg") body = render_svg(t);
    else if (format == "obj") body = render_obj(t);
    else throw std::runtime_error("unsupported format: " + format);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << body;
}

}  // namespace stit
