#ifndef STIT_STATS_HPP
#define STIT_STATS_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace stit {

// Streaming moments through order four, mergeable for parallel reduction.
class MomentAccumulator {
  public:
    void update(double x);
    void merge(const MomentAccumulator& other);

    uint64_t count() const { return n_; }
    double mean() const { return m1_; }
    double min() const { return min_; }
    double max() const { return max_; }

    struct Summary {
        uint64_t count;
        double mean;
        double variance;  // unbiased
        double stderr_mean;
        double skewness;
        double excess_kurtosis;
        double min, max;
        bool skewness_defined;  // false when the variance vanishes
    };
    Summary finalize() const;  // needs count >= 2

  private:
    uint64_t n_ = 0;
    double m1_ = 0, m2_ = 0, m3_ = 0, m4_ = 0;
    double min_ = 0, max_ = 0;
};

struct TestResult {
    double statistic;
    double p_value;
};

// one-sample Kolmogorov-Smirnov against N(mean, variance); n >= 50
TestResult ks_normal(const std::vector<double>& samples, double mean,
                     double variance);

TestResult ks_two_sample(std::vector<double> a, std::vector<double> b);

double normal_cdf(double z);
// asymptotic Kolmogorov distribution tail P(D > d) at effective size n
double ks_p_value(double d, double n_effective);

struct CovarianceCheck {
    double max_standardized_deviation;
    int worst_i, worst_j;
    double worst_empirical, worst_model;
};

// empirical covariance of trajectories (rows = trajectories, columns =
// grid times) against model_covariance(i, j), deviations standardized by
// the moment-based standard error of each covariance entry
CovarianceCheck process_covariance_check(
    const std::vector<std::vector<double>>& trajectories,
    const std::function<double(int, int)>& model_covariance);

struct TailExcess {
    double empirical_tail;
    double gaussian_tail;
    double log_ratio;       // > 0 means heavier-than-Gaussian upper tail
    uint64_t exceedances;
};

// P(X > mean + k sigma) empirically vs the Gaussian tail; n >= 10^4
TailExcess upper_tail_excess(const std::vector<double>& samples,
                             double threshold_sigmas);

}  // namespace stit

#endif
