#include "stit/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace stit {

double isotropic_segment_coefficient(int dim) {
    auto ball = [](int d) {
        return std::pow(M_PI, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
    };
    // 2 kappa_{d-1} / (d kappa_d): mean width of a unit segment, which is
    // its isotropic capacity under the unit-surface-density normalization
    return 2.0 * ball(dim - 1) / (dim * ball(dim));
}

Vec sample_sphere(int dim, RngStream& rng) {
    if (dim == 2) {
        double a = 2.0 * M_PI * rng.uniform();
        return Vec{std::cos(a), std::sin(a)};
    }
    if (dim == 3) {
        double z = rng.uniform(-1.0, 1.0);
        double a = 2.0 * M_PI * rng.uniform();
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        return Vec{r * std::cos(a), r * std::sin(a), z};
    }
    Vec u(dim);
    for (int i = 0; i < dim; ++i) u[i] = rng.normal();
    return u.normalized();
}

namespace {

int direction_rank(const std::vector<HyperplaneMeasureSpec::WeightedDirection>&
                       dirs,
                   int dim) {
    // Gram-Schmidt rank of the direction set
    std::vector<Vec> basis;
    for (const auto& wd : dirs) {
        Vec v = wd.direction;
        for (const Vec& b : basis) v -= dot(v, b) * b;
        if (v.norm() > 1e-9) basis.push_back(v.normalized());
        if (static_cast<int>(basis.size()) == dim) break;
    }
    return static_cast<int>(basis.size());
}

}  // namespace

HyperplaneMeasureSpec HyperplaneMeasureSpec::isotropic(int dim) {
    if (dim < 2 || dim > 3)
        throw std::runtime_error("isotropic measure supports d = 2, 3");
    HyperplaneMeasureSpec s;
    s.kind_ = Kind::isotropic;
    s.dim_ = dim;
    return s;
}

HyperplaneMeasureSpec HyperplaneMeasureSpec::axis_aligned(int dim) {
    if (dim < 1 || dim > kMaxDim)
        throw std::runtime_error("bad dimension");
    std::vector<WeightedDirection> dirs;
    for (int i = 0; i < dim; ++i)
        dirs.push_back({unit_axis(dim, i), 1.0 / dim});
    HyperplaneMeasureSpec s = discrete(dim, std::move(dirs), dim);
    s.kind_ = Kind::axis_aligned;
    return s;
}

HyperplaneMeasureSpec HyperplaneMeasureSpec::discrete(
    int dim, std::vector<WeightedDirection> directions, double scale) {
    HyperplaneMeasureSpec s;
    s.kind_ = Kind::discrete_directions;
    s.dim_ = dim;
    s.scale_ = scale;
    double total = 0;
    for (auto& wd : directions) {
        if (wd.weight <= 0) throw std::runtime_error("weights must be positive");
        if (std::abs(wd.direction.norm() - 1.0) > 1e-12)
            throw std::runtime_error("directions must be unit vectors");
        total += wd.weight;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::runtime_error("weights must sum to 1");
    if (direction_rank(directions, dim) < dim)
        throw std::runtime_error("directions do not span the space");
    s.directions_ = std::move(directions);
    return s;
}

double HyperplaneMeasureSpec::capacity(const ConvexPolytope& p) const {
    // the mean width, not half of it: the raw product of Lebesgue offsets
    // and the uniform direction yields surface density t/2, so the
    // isotropic measure carries a factor 2 to make the density exactly t
    if (kind_ == Kind::isotropic) return p.mean_width();
    double c = 0;
    for (const auto& wd : directions_) c += wd.weight * p.width(wd.direction);
    return scale_ * c;
}

double HyperplaneMeasureSpec::segment_capacity(const Vec& x, const Vec& y) const {
    if (kind_ == Kind::isotropic)
        return isotropic_segment_coefficient(dim_) * distance(x, y);
    Vec d = x - y;
    double c = 0;
    for (const auto& wd : directions_)
        c += wd.weight * std::abs(dot(wd.direction, d));
    return scale_ * c;
}

Hyperplane HyperplaneMeasureSpec::sample_hitting(const ConvexPolytope& p,
                                                 RngStream& rng) const {
    if (capacity(p) <= 0) throw std::runtime_error("cell cannot be hit");
    if (kind_ == Kind::isotropic) {
        // direction density proportional to the width; width <= diameter
        // gives an exact rejection envelope
        double diam = p.diameter();
        for (;;) {
            Vec u = sample_sphere(dim_, rng);
            double hi = p.support(u);
            double lo = -p.support(u * -1.0);
            if (rng.uniform() * diam <= hi - lo)
                return Hyperplane{u, rng.uniform(lo, hi)};
        }
    }
    double total = 0;
    for (const auto& wd : directions_) total += wd.weight * p.width(wd.direction);
    double pick = rng.uniform() * total;
    size_t i = 0;
    for (; i + 1 < directions_.size(); ++i) {
        double m = directions_[i].weight * p.width(directions_[i].direction);
        if (pick < m) break;
        pick -= m;
    }
    const Vec& u = directions_[i].direction;
    double hi = p.support(u);
    double lo = -p.support(u * -1.0);
    return Hyperplane{u, rng.uniform(lo, hi)};
}

std::string HyperplaneMeasureSpec::kind_name() const {
    switch (kind_) {
        case Kind::isotropic: return "isotropic";
        case Kind::axis_aligned: return "axis_aligned";
        case Kind::discrete_directions: return "discrete_directions";
    }
    return "?";
}

}  // namespace stit
