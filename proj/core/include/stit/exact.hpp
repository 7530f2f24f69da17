#ifndef STIT_EXACT_HPP
#define STIT_EXACT_HPP

#include "stit/functionals.hpp"
#include "stit/measures.hpp"

namespace stit {

// quasi-Monte Carlo settings for the reference-value integrals
struct IntegratorConfig {
    long n_points = 1L << 14;      // points per randomized shift
    int shifts = 10;               // Cranley-Patterson shifts for error bars
    double singularity_shell = 0;  // exclude pairs with Lambda([xy]) < eps
    bool shell_correction = true;  // add the analytic correction for the shell
};

struct ExactResult {
    double value;
    double error_estimate;  // standard error over the randomized shifts
    double uncorrected;     // value without the singularity-shell correction
};

// Var(Sigma_phi(Y(t,W))) via the closed-form triple integral: hyperplanes
// hitting W, pairs of points on the section, kernel (1-e^{-t l})/l
ExactResult variance_exact(const HyperplaneMeasureSpec& spec,
                           const ConvexPolytope& w, double t,
                           const FaceFunctional& phi,
                           const IntegratorConfig& cfg);

// limit variance of Xi(W): same integral with kernel 1/l; requires d >= 3
// (axis-aligned/discrete spec, box window)
ExactResult xi_variance(const HyperplaneMeasureSpec& spec,
                        const ConvexPolytope& w, const FaceFunctional& phi,
                        const IntegratorConfig& cfg);

// closed form for the isotropic limit variance density V_W
double v_w_isotropic(int dim, double vol_w, double zeta_square_mean);

// simulation estimate of V_W as the R^{-d} A_{phi^2}(Y(1, W_R)) statistic
MonteCarloEstimate v_w_empirical(const HyperplaneMeasureSpec& spec,
                                 const ConvexPolytope& w,
                                 const FaceFunctional& phi, double big_r,
                                 int replications, RngStream& rng);

// V * integral_{s0}^{t} s^{1-d} ds
double increment_variance_profile(double v, double s0, double t, int dim);

// time change tau(s, R) = R^{s-1} (log R)^{1-s}
double tau(double s, double big_r);

}  // namespace stit

#endif
