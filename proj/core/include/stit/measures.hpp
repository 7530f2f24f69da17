#ifndef STIT_MEASURES_HPP
#define STIT_MEASURES_HPP

#include <string>
#include <vector>

#include "stit/geometry.hpp"
#include "stit/rng.hpp"

namespace stit {

// Translation-invariant hyperplane measure, factorized as Lebesgue on
// offsets times a directional distribution.  Hyperplanes are parametrized
// by a unit normal on the full sphere and a signed offset, each plane
// appearing once.  With a probability directional part and scale 1 the
// measure is normalized so that the MNW mean facet surface in W at time t
// equals t Vol_d(W); the axis-aligned convention keeps the unnormalized
// per-axis sum via scale = d.
class HyperplaneMeasureSpec {
  public:
    enum class Kind { isotropic, axis_aligned, discrete_directions };

    struct WeightedDirection {
        Vec direction;  // unit
        double weight;  // positive, weights sum to 1
    };

    static HyperplaneMeasureSpec isotropic(int dim);
    static HyperplaneMeasureSpec axis_aligned(int dim);
    static HyperplaneMeasureSpec discrete(
        int dim, std::vector<WeightedDirection> directions, double scale = 1.0);

    Kind kind() const { return kind_; }
    int dimension() const { return dim_; }
    double scale() const { return scale_; }
    const std::vector<WeightedDirection>& directions() const {
        return directions_;
    }

    // t * Vol_d(W) * surface_scale() is the exact mean facet surface
    double surface_scale() const { return scale_; }

    // Lambda-measure of the hyperplanes hitting P
    double capacity(const ConvexPolytope& p) const;
    double segment_capacity(const Vec& x, const Vec& y) const;

    // draw from Lambda restricted to [P], normalized
    Hyperplane sample_hitting(const ConvexPolytope& p, RngStream& rng) const;

    std::string kind_name() const;

  private:
    Kind kind_ = Kind::isotropic;
    int dim_ = 0;
    double scale_ = 1.0;
    std::vector<WeightedDirection> directions_;  // discrete kinds only
};

// kappa_{d-1}/(d kappa_d): capacity of a unit segment under the isotropic
// measure, and the per-axis coefficient of box mean widths
double isotropic_segment_coefficient(int dim);

// uniform direction on S_{d-1}, d = 2 or 3
Vec sample_sphere(int dim, RngStream& rng);

}  // namespace stit

#endif
