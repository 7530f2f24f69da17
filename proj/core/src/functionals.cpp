#include "stit/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace stit {

double FaceFunctional::operator()(const ConvexPolytope& facet) const {
    double z = zeta(facet.carrier().normal);
    if (std::abs(z) > bound + 1e-12)
        throw std::runtime_error("zeta exceeds its declared bound");
    return facet.volume() * z;
}

double FaceFunctional::operator()(const MaxPolytopeRecord& rec) const {
    double z = zeta(rec.normal);
    if (std::abs(z) > bound + 1e-12)
        throw std::runtime_error("zeta exceeds its declared bound");
    return rec.measure * z;
}

FaceFunctional FaceFunctional::total_surface() {
    return {"total_surface", [](const Vec&) { return 1.0; }, 1.0};
}

FaceFunctional FaceFunctional::zero() {
    return {"zero", [](const Vec&) { return 0.0; }, 0.0};
}

FaceFunctional FaceFunctional::direction_indicator(const Vec& axis,
                                                   double cos_tol) {
    Vec a = axis.normalized();
    return {"direction_indicator",
            [a, cos_tol](const Vec& n) {
                return std::abs(dot(a, n)) >= cos_tol ? 1.0 : 0.0;
            },
            1.0};
}

FaceFunctional FaceFunctional::by_name(const std::string& name, int dim) {
    if (name == "total_surface" || name.empty()) return total_surface();
    if (name == "zero") return zero();
    if (name.rfind("axis", 0) == 0 && name.size() == 5) {
        int axis = name[4] - '0';
        if (axis < 0 || axis >= dim) throw std::runtime_error("bad axis");
        return direction_indicator(unit_axis(dim, axis));
    }
    throw std::runtime_error("unknown functional: " + name);
}

double sigma_phi(const Tessellation& state, const FaceFunctional& phi) {
    double s = 0;
    for (const auto& rec : state.maximal_polytopes()) s += phi(rec);
    return s;
}

double centred_sigma(const Tessellation& state, const FaceFunctional& phi,
                     MeanSource source, double empirical_mean) {
    if (source == MeanSource::exact) {
        if (phi.name != "total_surface")
            throw std::runtime_error("no exact mean available");
        double mean = state.horizon() * state.window().volume() *
                      state.spec().surface_scale();
        return sigma_phi(state, phi) - mean;
    }
    return sigma_phi(state, phi) - empirical_mean;
}

std::vector<ConvexPolytope> section_tessellation(const Tessellation& state,
                                                 const Hyperplane& h) {
    std::vector<ConvexPolytope> out;
    for (const auto& cell : state.cells()) {
        auto sec = cell.intersect_with_hyperplane(h);
        if (sec) out.push_back(std::move(*sec));
    }
    return out;
}

MonteCarloEstimate estimate_a_phi2(const Tessellation& state,
                                   const HyperplaneMeasureSpec& spec,
                                   const FaceFunctional& phi, int n_samples,
                                   RngStream& rng) {
    if (n_samples < 1) throw std::runtime_error("n_samples must be >= 1");
    double cap = spec.capacity(state.window());
    if (cap <= 0) throw std::runtime_error("window has zero capacity");
    double sum = 0, sumsq = 0;
    for (int k = 0; k < n_samples; ++k) {
        Hyperplane h = spec.sample_hitting(state.window(), rng);
        double v = 0;
        for (const auto& cell : section_tessellation(state, h)) {
            double p = phi(cell);
            v += p * p;
        }
        v *= cap;
        sum += v;
        sumsq += v * v;
    }
    double mean = sum / n_samples;
    double var = n_samples > 1
                     ? std::max(0.0, (sumsq - n_samples * mean * mean) /
                                         (n_samples - 1))
                     : 0.0;
    return {mean, std::sqrt(var / n_samples)};
}

double max_facet_value(const Tessellation& state, const FaceFunctional& phi) {
    double best = 0;
    for (const auto& rec : state.maximal_polytopes())
        best = std::max(best, phi(rec));
    return best;
}

}  // namespace stit
