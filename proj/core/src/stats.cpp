#include "stit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace stit {

void MomentAccumulator::update(double x) {
    if (n_ == 0) {
        min_ = max_ = x;
    } else {
        min_ = std::min(min_, x);
        max_ = std::max(max_, x);
    }
    uint64_t n1 = n_;
    ++n_;
    double delta = x - m1_;
    double delta_n = delta / n_;
    double delta_n2 = delta_n * delta_n;
    double term1 = delta * delta_n * n1;
    m1_ += delta_n;
    m4_ += term1 * delta_n2 * (static_cast<double>(n_) * n_ - 3.0 * n_ + 3.0) +
           6.0 * delta_n2 * m2_ - 4.0 * delta_n * m3_;
    m3_ += term1 * delta_n * (n_ - 2.0) - 3.0 * delta_n * m2_;
    m2_ += term1;
}

void MomentAccumulator::merge(const MomentAccumulator& o) {
    if (o.n_ == 0) return;
    if (n_ == 0) {
        *this = o;
        return;
    }
    MomentAccumulator c;
    c.n_ = n_ + o.n_;
    double na = static_cast<double>(n_), nb = static_cast<double>(o.n_);
    double nc = na + nb;
    double delta = o.m1_ - m1_;
    double delta2 = delta * delta;
    c.m1_ = (na * m1_ + nb * o.m1_) / nc;
    c.m2_ = m2_ + o.m2_ + delta2 * na * nb / nc;
    c.m3_ = m3_ + o.m3_ + delta * delta2 * na * nb * (na - nb) / (nc * nc) +
            3.0 * delta * (na * o.m2_ - nb * m2_) / nc;
    c.m4_ = m4_ + o.m4_ +
            delta2 * delta2 * na * nb * (na * na - na * nb + nb * nb) /
                (nc * nc * nc) +
            6.0 * delta2 * (na * na * o.m2_ + nb * nb * m2_) / (nc * nc) +
            4.0 * delta * (na * o.m3_ - nb * m3_) / nc;
    c.min_ = std::min(min_, o.min_);
    c.max_ = std::max(max_, o.max_);
    *this = c;
}

MomentAccumulator::Summary MomentAccumulator::finalize() const {
    if (n_ < 2) throw std::runtime_error("need at least 2 samples");
    Summary s{};
    s.count = n_;
    s.mean = m1_;
    s.variance = m2_ / (n_ - 1);
    s.stderr_mean = std::sqrt(s.variance / n_);
    s.min = min_;
    s.max = max_;
    s.skewness_defined = m2_ > 0;
    if (s.skewness_defined) {
        double n = static_cast<double>(n_);
        s.skewness = std::sqrt(n) * m3_ / std::pow(m2_, 1.5);
        s.excess_kurtosis = n * m4_ / (m2_ * m2_) - 3.0;
    }
    return s;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double ks_p_value(double d, double n_effective) {
    // asymptotic Kolmogorov distribution with Stephens' finite-n correction
    double rn = std::sqrt(n_effective);
    double lambda = (rn + 0.12 + 0.11 / rn) * d;
    if (lambda < 1e-3) return 1.0;
    double p = 0;
    for (int k = 1; k <= 100; ++k) {
        double term = 2.0 * (k % 2 ? 1.0 : -1.0) *
                      std::exp(-2.0 * k * k * lambda * lambda);
        p += term;
        if (std::abs(term) < 1e-12) break;
    }
    return std::clamp(p, 0.0, 1.0);
}

TestResult ks_normal(const std::vector<double>& samples, double mean,
                     double variance) {
    if (samples.size() < 50) throw std::runtime_error("need n >= 50");
    if (variance <= 0) throw std::runtime_error("degenerate variance");
    std::vector<double> x(samples);
    std::sort(x.begin(), x.end());
    double n = static_cast<double>(x.size());
    double sd = std::sqrt(variance);
    double d = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        double f = normal_cdf((x[i] - mean) / sd);
        d = std::max(d, std::max(f - i / n, (i + 1) / n - f));
    }
    return {d, ks_p_value(d, n)};
}

TestResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.size() < 50 || b.size() < 50) throw std::runtime_error("need n >= 50");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double na = static_cast<double>(a.size());
    double nb = static_cast<double>(b.size());
    size_t i = 0, j = 0;
    double d = 0;
    while (i < a.size() && j < b.size()) {
        double xa = a[i], xb = b[j];
        if (xa <= xb) ++i;
        if (xb <= xa) ++j;
        d = std::max(d, std::abs(i / na - j / nb));
    }
    return {d, ks_p_value(d, na * nb / (na + nb))};
}

CovarianceCheck process_covariance_check(
    const std::vector<std::vector<double>>& trajectories,
    const std::function<double(int, int)>& model_covariance) {
    size_t n = trajectories.size();
    if (n < 1000) throw std::runtime_error("need >= 1000 trajectories");
    size_t m = trajectories[0].size();
    for (const auto& tr : trajectories)
        if (tr.size() != m) throw std::runtime_error("grid mismatch");

    std::vector<double> mean(m, 0.0);
    for (const auto& tr : trajectories)
        for (size_t k = 0; k < m; ++k) mean[k] += tr[k];
    for (double& v : mean) v /= n;

    CovarianceCheck out{0, 0, 0, 0, 0};
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i; j < m; ++j) {
            double c = 0, c2 = 0;
            for (const auto& tr : trajectories) {
                double p = (tr[i] - mean[i]) * (tr[j] - mean[j]);
                c += p;
                c2 += p * p;
            }
            double cov = c / (n - 1);
            double var_cov = std::max(0.0, (c2 / n - cov * cov)) / n;
            double se = std::sqrt(var_cov);
            double model = model_covariance(static_cast<int>(i),
                                            static_cast<int>(j));
            double dev = se > 0 ? std::abs(cov - model) / se
                                : std::abs(cov - model);
            if (dev > out.max_standardized_deviation) {
                out.max_standardized_deviation = dev;
                out.worst_i = static_cast<int>(i);
                out.worst_j = static_cast<int>(j);
                out.worst_empirical = cov;
                out.worst_model = model;
            }
        }
    }
    return out;
}

TailExcess upper_tail_excess(const std::vector<double>& samples,
                             double threshold_sigmas) {
    if (samples.size() < 10000) throw std::runtime_error("need n >= 10^4");
    if (threshold_sigmas <= 0)
        throw std::runtime_error("threshold must be positive");
    MomentAccumulator acc;
    for (double x : samples) acc.update(x);
    auto s = acc.finalize();
    double cut = s.mean + threshold_sigmas * std::sqrt(s.variance);
    uint64_t k = 0;
    for (double x : samples)
        if (x > cut) ++k;
    TailExcess out{};
    out.exceedances = k;
    out.empirical_tail = static_cast<double>(k) / samples.size();
    out.gaussian_tail = 1.0 - normal_cdf(threshold_sigmas);
    out.log_ratio = k == 0 ? -std::numeric_limits<double>::infinity()
                           : std::log(out.empirical_tail / out.gaussian_tail);
    return out;
}

}  // namespace stit
