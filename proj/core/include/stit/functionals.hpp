#ifndef STIT_FUNCTIONALS_HPP
#define STIT_FUNCTIONALS_HPP

#include <functional>
#include <string>
#include <vector>

#include "stit/mnw.hpp"

namespace stit {

// Facet functional phi(f) = Vol_{d-1}(f) * zeta(normal(f)) with zeta a
// bounded function on the sphere.
struct FaceFunctional {
    std::string name;
    std::function<double(const Vec&)> zeta;
    double bound;  // upper bound for |zeta|

    double operator()(const ConvexPolytope& facet) const;
    double operator()(const MaxPolytopeRecord& rec) const;

    static FaceFunctional total_surface();  // zeta == 1
    static FaceFunctional zero();
    // indicator of normals within angular tolerance of +-axis
    static FaceFunctional direction_indicator(const Vec& axis,
                                              double cos_tol = 1.0 - 1e-9);
    static FaceFunctional by_name(const std::string& name, int dim);
};

double sigma_phi(const Tessellation& state, const FaceFunctional& phi);

enum class MeanSource { exact, empirical };

// exact mode requires zeta == 1 (mean = t Vol_d(W) surface_scale);
// empirical mode subtracts the supplied batch mean
double centred_sigma(const Tessellation& state, const FaceFunctional& phi,
                     MeanSource source, double empirical_mean = 0.0);

// (d-1)-cells induced on W cap H by the tessellation's cells
std::vector<ConvexPolytope> section_tessellation(const Tessellation& state,
                                                 const Hyperplane& h);

struct MonteCarloEstimate {
    double value;
    double std_error;
};

// Monte Carlo estimate of A_{phi^2}(Y) = int_{[W]} sum phi^2(section cells)
MonteCarloEstimate estimate_a_phi2(const Tessellation& state,
                                   const HyperplaneMeasureSpec& spec,
                                   const FaceFunctional& phi, int n_samples,
                                   RngStream& rng);

double max_facet_value(const Tessellation& state, const FaceFunctional& phi);

}  // namespace stit

#endif
