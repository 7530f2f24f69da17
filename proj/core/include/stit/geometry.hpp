#ifndef STIT_GEOMETRY_HPP
#define STIT_GEOMETRY_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "stit/vec.hpp"

namespace stit {

// On-plane classification tolerance; vertices closer than this to a
// splitting hyperplane snap onto it.
inline constexpr double kSnapTol = 1e-9;

struct Hyperplane {
    Vec normal;     // unit
    double offset;  // plane is {x : <x, normal> = offset}

    double side(const Vec& x) const { return dot(normal, x) - offset; }

    static Hyperplane axis(int dim, int which, double off) {
        return Hyperplane{unit_axis(dim, which), off};
    }
    // index of the axis if the normal is +-e_i, else -1
    int axis_index(double tol = 1e-12) const;
};

struct SplitResult;

class NonSplittingError : public std::runtime_error {
  public:
    NonSplittingError() : std::runtime_error("non-splitting hyperplane") {}
};

// Bounded convex polytope.  Cells are full-dimensional; maximal polytopes
// and section cells are (d-1)-dimensional and carry the hyperplane they
// live on.  Axis-aligned boxes keep a fast representation valid in any
// dimension; explicit vertex/face combinatorics are supported for d=2,3.
class ConvexPolytope {
  public:
    enum class Kind {
        Box,        // axis-aligned box, any d
        BoxFacet,   // axis-aligned (d-1)-box with one flat axis
        Polygon2,   // 2D cell, CCW vertex loop
        Segment,    // 1D facet embedded in 2D (or 3D)
        Polyhedron3,// 3D cell, vertex list + face loops
        Facet3,     // planar convex polygon embedded in 3D
    };

    ConvexPolytope() = default;

    static ConvexPolytope box(const Vec& lo, const Vec& hi);
    static ConvexPolytope polygon(std::vector<Vec> loop);
    static ConvexPolytope polyhedron(std::vector<Vec> vertices,
                                     std::vector<std::vector<int>> faces);
    static ConvexPolytope segment(const Vec& a, const Vec& b,
                                  const Hyperplane& carrier);
    static ConvexPolytope planar_facet(std::vector<Vec> loop,
                                       const Hyperplane& carrier);
    static ConvexPolytope box_facet(const Vec& lo, const Vec& hi,
                                    int flat_axis, const Hyperplane& carrier);

    // window builders for ball-shaped windows
    static ConvexPolytope regular_polygon(int n, double radius);
    static ConvexPolytope icosphere(int subdivisions, double radius);

    Kind kind() const { return kind_; }
    int ambient_dimension() const { return ambient_dim_; }
    int intrinsic_dimension() const { return intrinsic_dim_; }
    bool is_box() const { return kind_ == Kind::Box; }
    bool empty() const { return ambient_dim_ == 0; }

    const std::vector<Vec>& vertices() const { return vertices_; }
    const std::vector<std::vector<int>>& faces() const { return faces_; }
    const Hyperplane& carrier() const;
    bool has_carrier() const { return has_carrier_; }
    const Vec& box_lo() const { return box_lo_; }
    const Vec& box_hi() const { return box_hi_; }
    int flat_axis() const { return flat_axis_; }

    double support(const Vec& u) const;
    // width along u: h(u) + h(-u)
    double width(const Vec& u) const { return support(u) + support(u * -1.0); }
    double extent(int axis) const;

    double volume() const;  // intrinsic k-volume
    double diameter() const;
    double mean_width() const;
    Vec centroid() const;  // vertex/box average, an interior point for cells
    bool contains(const Vec& x, double tol = kSnapTol) const;

    SplitResult split(const Hyperplane& h) const;

    std::optional<ConvexPolytope> intersect_with_hyperplane(
        const Hyperplane& h) const;

    ConvexPolytope scaled(double factor) const;
    ConvexPolytope translated(const Vec& shift) const;

    // outward supporting plane of each face (3D cells)
    const std::vector<Hyperplane>& face_planes() const;
    // unique edges of a 3D cell as vertex index pairs
    std::vector<std::pair<int, int>> edge_list() const;

  private:
    ConvexPolytope to_explicit() const;  // box -> polygon/polyhedron
    SplitResult split_box(const Hyperplane& h, int axis) const;
    SplitResult split_polygon(const Hyperplane& h) const;
    SplitResult split_polyhedron(const Hyperplane& h) const;

    Kind kind_ = Kind::Box;
    int ambient_dim_ = 0;
    int intrinsic_dim_ = 0;
    std::vector<Vec> vertices_;
    std::vector<std::vector<int>> faces_;
    Hyperplane carrier_{};
    bool has_carrier_ = false;
    Vec box_lo_, box_hi_;
    int flat_axis_ = -1;
    mutable std::vector<Hyperplane> face_planes_cache_;
};

struct SplitResult {
    ConvexPolytope plus;       // side with <x,n> >= offset
    ConvexPolytope minus;
    ConvexPolytope interface;  // P cap H, carrier H
};

double polygon_area(const std::vector<Vec>& loop);          // 2D shoelace
double planar_polygon_area(const std::vector<Vec>& loop);   // 3D Newell

}  // namespace stit

#endif
