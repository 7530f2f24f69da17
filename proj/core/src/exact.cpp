#include "stit/exact.hpp"

#include <cmath>
#include <stdexcept>

#include "stit/qmc.hpp"

namespace stit {

namespace {

// (1 - e^{-t l}) / l with the removable singularity at l = 0
double kernel(double t, double l) {
    if (l < 1e-12) return t;
    return -std::expm1(-t * l) / l;
}

// uniform point in a (d-1)-dimensional section cell from two unit coords
Vec sample_in_section(const ConvexPolytope& sec, double c1, double c2) {
    using Kind = ConvexPolytope::Kind;
    switch (sec.kind()) {
        case Kind::Segment: {
            const Vec& a = sec.vertices()[0];
            const Vec& b = sec.vertices()[1];
            return a + c1 * (b - a);
        }
        case Kind::BoxFacet: {
            Vec p = sec.box_lo();
            double c[2] = {c1, c2};
            int used = 0;
            for (int i = 0; i < p.dim; ++i) {
                if (i == sec.flat_axis()) continue;
                p[i] += c[used++] * (sec.box_hi()[i] - sec.box_lo()[i]);
            }
            return p;
        }
        case Kind::Facet3: {
            // area-weighted fan triangle pick, then the sqrt map
            const auto& v = sec.vertices();
            int nt = static_cast<int>(v.size()) - 2;
            double total = sec.volume();
            double target = c1 * total, acc = 0;
            int tri = nt - 1;
            double lo = 0, hi = total;
            for (int i = 0; i < nt; ++i) {
                double a =
                    planar_polygon_area({v[0], v[i + 1], v[i + 2]});
                if (target <= acc + a || i == nt - 1) {
                    tri = i;
                    lo = acc;
                    hi = acc + a;
                    break;
                }
                acc += a;
            }
            double r1 = hi > lo ? (target - lo) / (hi - lo) : 0.5;
            double s = std::sqrt(std::max(0.0, std::min(1.0, r1)));
            const Vec& a = v[0];
            const Vec& b = v[tri + 1];
            const Vec& c = v[tri + 2];
            return a + s * ((b - a) + c2 * (c - b));
        }
        default:
            throw std::runtime_error("cannot sample in this section kind");
    }
}

int vec_axis(const Vec& u) { return Hyperplane{u, 0.0}.axis_index(); }

void validate(const IntegratorConfig& cfg) {
    if (cfg.n_points < 1000) throw std::runtime_error("need N >= 10^3");
    if (cfg.shifts < 2) throw std::runtime_error("need >= 2 shifts");
    if (cfg.singularity_shell < 0) throw std::runtime_error("eps must be >= 0");
}

// mean and standard error across randomized shifts
ExactResult reduce_shifts(const std::vector<double>& vals, double correction) {
    double m = 0;
    for (double v : vals) m += v;
    m /= vals.size();
    double s2 = 0;
    for (double v : vals) s2 += (v - m) * (v - m);
    s2 /= (vals.size() - 1.0) * vals.size();
    return {m + correction, std::sqrt(s2), m};
}

}  // namespace

ExactResult variance_exact(const HyperplaneMeasureSpec& spec,
                           const ConvexPolytope& w, double t,
                           const FaceFunctional& phi,
                           const IntegratorConfig& cfg) {
    validate(cfg);
    if (cfg.singularity_shell != 0)
        throw std::runtime_error("shell must be 0 for the bounded kernel");
    if (t < 0) throw std::runtime_error("t must be >= 0");
    if (t == 0) return {0, 0, 0};
    int d = spec.dimension();
    bool iso = spec.kind() == HyperplaneMeasureSpec::Kind::isotropic;
    int dir_dims = iso ? (d == 2 ? 1 : 2) : 0;
    int pt_dims = d - 1 == 1 ? 1 : 2;
    int dims = dir_dims + 1 + 2 * pt_dims;

    std::vector<double> vals;
    for (int shift = 0; shift < cfg.shifts; ++shift) {
        RngStream srng(0x5717c7ed, shift);
        HaltonSequence seq(dims, HaltonSequence::random_shift(dims, srng));
        KahanSum acc;
        std::vector<double> c(dims);
        for (long k = 0; k < cfg.n_points; ++k) {
            seq.point(static_cast<uint64_t>(k), c.data());
            auto eval_plane = [&](const Vec& u, double weight,
                                  const double* q) {
                double z = phi.zeta(u);
                if (z == 0) return;
                double hi = w.support(u);
                double lo = -w.support(u * -1.0);
                if (hi <= lo) return;
                Hyperplane h{u, lo + q[0] * (hi - lo)};
                auto sec = w.intersect_with_hyperplane(h);
                if (!sec) return;
                double vol = sec->volume();
                if (vol <= 0) return;
                Vec x = sample_in_section(*sec, q[1], pt_dims == 2 ? q[2] : 0);
                Vec y = sample_in_section(*sec, q[1 + pt_dims],
                                          pt_dims == 2 ? q[2 + pt_dims] : 0);
                double l = spec.segment_capacity(x, y);
                acc.add(weight * (hi - lo) * vol * vol * z * z *
                        kernel(t, l));
            };
            if (iso) {
                Vec u;
                if (d == 2) {
                    double a = 2.0 * M_PI * c[0];
                    u = Vec{std::cos(a), std::sin(a)};
                } else {
                    double zc = 2.0 * c[0] - 1.0;
                    double a = 2.0 * M_PI * c[1];
                    double r = std::sqrt(std::max(0.0, 1.0 - zc * zc));
                    u = Vec{r * std::cos(a), r * std::sin(a), zc};
                }
                eval_plane(u, 1.0, c.data() + dir_dims);
            } else {
                for (const auto& wd : spec.directions())
                    eval_plane(wd.direction, spec.scale() * wd.weight,
                               c.data());
            }
        }
        vals.push_back(acc.sum / cfg.n_points);
    }
    return reduce_shifts(vals, 0.0);
}

ExactResult xi_variance(const HyperplaneMeasureSpec& spec,
                        const ConvexPolytope& w, const FaceFunctional& phi,
                        const IntegratorConfig& cfg) {
    validate(cfg);
    int d = spec.dimension();
    if (d < 3) throw std::runtime_error("Xi variance requires d > 2");
    if (spec.kind() == HyperplaneMeasureSpec::Kind::isotropic)
        throw std::runtime_error("xi_variance needs an axis/discrete spec");
    if (!w.is_box()) throw std::runtime_error("xi_variance needs a box window");
    for (const auto& wd : spec.directions())
        if (vec_axis(wd.direction) < 0)
            throw std::runtime_error("xi_variance needs axis directions");

    double eps = cfg.singularity_shell;
    int k = d - 1;
    int dims = 2 * k;

    std::vector<double> vals;
    double correction = 0;
    for (int shift = 0; shift < cfg.shifts; ++shift) {
        RngStream srng(0x5717c7ee, shift);
        HaltonSequence seq(dims, HaltonSequence::random_shift(dims, srng));
        std::vector<double> c(dims);
        KahanSum total;
        for (const auto& wd : spec.directions()) {
            int axis = vec_axis(wd.direction);
            double z = phi.zeta(wd.direction);
            if (z == 0) continue;
            // slice extents with the split axis dropped
            std::vector<int> free_axes;
            double slice_vol = 1.0;
            for (int i = 0; i < d; ++i)
                if (i != axis) {
                    free_axes.push_back(i);
                    slice_vol *= w.extent(i);
                }
            double pref = spec.scale() * wd.weight * w.extent(axis) * z * z *
                          slice_vol * slice_vol;
            KahanSum acc;
            for (long p = 0; p < cfg.n_points; ++p) {
                seq.point(static_cast<uint64_t>(p), c.data());
                Vec a = w.box_lo(), b = w.box_lo();
                for (int i = 0; i < k; ++i) {
                    double ext = w.extent(free_axes[i]);
                    a[free_axes[i]] += c[i] * ext;
                    b[free_axes[i]] += c[k + i] * ext;
                }
                double l = spec.segment_capacity(a, b);
                if (l >= eps && l > 0) acc.add(1.0 / l);
            }
            total.add(pref * acc.sum / cfg.n_points);

            // analytic mass of the excluded shell (d = 3 only)
            if (shift == 0 && eps > 0 && cfg.shell_correction && d == 3) {
                double l1 = w.extent(free_axes[0]);
                double l2 = w.extent(free_axes[1]);
                double shell;
                if (std::abs(l1 - 1) < 1e-12 && std::abs(l2 - 1) < 1e-12 &&
                    std::abs(spec.scale() * wd.weight - 1) < 1e-12) {
                    // exact for the unit slice with kernel 1/(|da|+|db|)
                    shell = 4.0 * (eps - eps * eps / 2 +
                                   eps * eps * eps / 18);
                } else {
                    shell = 4.0 * eps * l1 * l2 /
                            (spec.scale() * wd.weight);  // leading order
                }
                correction += spec.scale() * wd.weight * w.extent(axis) * z *
                              z * shell;
            }
        }
        vals.push_back(total.sum);
    }
    return reduce_shifts(vals, correction);
}

double v_w_isotropic(int dim, double vol_w, double zeta_square_mean) {
    if (dim < 2) throw std::runtime_error("dim must be >= 2");
    double d = dim;
    return vol_w * std::pow(2.0, d - 1) * std::pow(M_PI, d - 1.5) *
           std::pow(std::tgamma((d + 1) / 2), d - 1) *
           std::pow(std::tgamma(d / 2), 2 - d) * zeta_square_mean;
}

MonteCarloEstimate v_w_empirical(const HyperplaneMeasureSpec& spec,
                                 const ConvexPolytope& w,
                                 const FaceFunctional& phi, double big_r,
                                 int replications, RngStream& rng) {
    if (replications < 2) throw std::runtime_error("need >= 2 replications");
    if (big_r <= 0) throw std::runtime_error("R must be positive");
    ConvexPolytope wr = w.scaled(big_r);
    double norm = std::pow(big_r, -spec.dimension());
    double sum = 0, sumsq = 0;
    for (int r = 0; r < replications; ++r) {
        auto t = run_mnw(wr, spec, 1.0, rng);
        double v = norm * estimate_a_phi2(t, spec, phi, 4, rng).value;
        sum += v;
        sumsq += v * v;
    }
    double mean = sum / replications;
    double var = std::max(0.0, (sumsq - replications * mean * mean) /
                                   (replications - 1.0));
    return {mean, std::sqrt(var / replications)};
}

double increment_variance_profile(double v, double s0, double t, int dim) {
    if (s0 <= 0) throw std::runtime_error("diverges at 0");
    if (s0 > t) throw std::runtime_error("need s0 <= t");
    if (dim == 2) return v * std::log(t / s0);
    return v * (std::pow(s0, 2 - dim) - std::pow(t, 2 - dim)) / (dim - 2);
}

double tau(double s, double big_r) {
    if (big_r <= std::exp(1.0))
        throw std::runtime_error("tau needs R > e");
    double lr = std::log(big_r);
    return std::exp((lr - std::log(lr)) * (s - 1.0));
}

}  // namespace stit
