#include "doctest.h"

#include <cmath>
#include <vector>

#include "stit/rng.hpp"
#include "stit/stats.hpp"

using namespace stit;

namespace {

// two-pass oracle for the moment accumulator
struct NaiveMoments {
    double mean, variance, skewness, excess_kurtosis, min, max;
};

NaiveMoments naive_moments(const std::vector<double>& x) {
    double n = static_cast<double>(x.size());
    NaiveMoments o{};
    o.min = o.max = x[0];
    for (double v : x) {
        o.mean += v;
        o.min = std::min(o.min, v);
        o.max = std::max(o.max, v);
    }
    o.mean /= n;
    double m2 = 0, m3 = 0, m4 = 0;
    for (double v : x) {
        double d = v - o.mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    o.variance = m2 / (n - 1);
    o.skewness = std::sqrt(n) * m3 / std::pow(m2, 1.5);
    o.excess_kurtosis = n * m4 / (m2 * m2) - 3.0;
    return o;
}

}  // namespace

TEST_CASE("moment accumulator matches the two-pass oracle") {
    RngStream rng(1);
    std::vector<double> x;
    for (int i = 0; i < 100000; ++i)
        x.push_back(std::exp(rng.normal()) + 0.3 * rng.uniform());

    MomentAccumulator whole;
    for (double v : x) whole.update(v);

    // pairwise-merged accumulators over uneven chunks
    std::vector<MomentAccumulator> parts(7);
    for (size_t i = 0; i < x.size(); ++i) parts[(i * i + i) % 7].update(x[i]);
    while (parts.size() > 1) {
        parts[parts.size() - 2].merge(parts.back());
        parts.pop_back();
    }

    auto oracle = naive_moments(x);
    for (const auto* acc : {&whole, &parts[0]}) {
        auto s = acc->finalize();
        CHECK(s.count == x.size());
        CHECK(s.mean == doctest::Approx(oracle.mean).epsilon(1e-9));
        CHECK(s.variance == doctest::Approx(oracle.variance).epsilon(1e-9));
        CHECK(s.skewness == doctest::Approx(oracle.skewness).epsilon(1e-7));
        CHECK(s.excess_kurtosis ==
              doctest::Approx(oracle.excess_kurtosis).epsilon(1e-6));
        CHECK(s.min == oracle.min);
        CHECK(s.max == oracle.max);
        CHECK(s.stderr_mean ==
              doctest::Approx(std::sqrt(oracle.variance / x.size())));
    }
}

TEST_CASE("accumulator edge cases") {
    MomentAccumulator a;
    CHECK_THROWS(a.finalize());
    a.update(1.0);
    CHECK_THROWS(a.finalize());
    a.update(1.0);
    auto s = a.finalize();
    CHECK(s.variance == 0.0);
    CHECK_FALSE(s.skewness_defined);

    MomentAccumulator b, empty;
    b.update(3.0);
    b.update(5.0);
    b.merge(empty);
    CHECK(b.finalize().mean == doctest::Approx(4.0));
    empty.merge(b);
    CHECK(empty.finalize().mean == doctest::Approx(4.0));
}

TEST_CASE("ks_normal accepts normal data and rejects shifted data") {
    RngStream rng(2);
    int batches = 200, n = 500, rejected = 0;
    for (int b = 0; b < batches; ++b) {
        std::vector<double> x;
        for (int i = 0; i < n; ++i) x.push_back(2.0 + 3.0 * rng.normal());
        auto r = ks_normal(x, 2.0, 9.0);
        if (r.p_value < 0.05) ++rejected;
    }
    // about 5% of calibrated batches reject at level 0.05
    CHECK(rejected < 25);

    std::vector<double> shifted;
    for (int i = 0; i < 2000; ++i) shifted.push_back(0.3 + rng.normal());
    CHECK(ks_normal(shifted, 0.0, 1.0).p_value < 1e-6);

    std::vector<double> small(10, 0.0);
    CHECK_THROWS(ks_normal(small, 0.0, 1.0));
    std::vector<double> ok(100, 0.0);
    CHECK_THROWS(ks_normal(ok, 0.0, 0.0));
}

TEST_CASE("ks_two_sample calibration") {
    RngStream rng(3);
    auto draw = [&](int n, double shift) {
        std::vector<double> x;
        for (int i = 0; i < n; ++i) x.push_back(shift + rng.normal());
        return x;
    };
    int rejected = 0;
    for (int b = 0; b < 100; ++b)
        if (ks_two_sample(draw(400, 0.0), draw(600, 0.0)).p_value < 0.05)
            ++rejected;
    CHECK(rejected < 18);
    CHECK(ks_two_sample(draw(2000, 0.0), draw(2000, 0.4)).p_value < 1e-6);
}

TEST_CASE("covariance check against a Wiener oracle") {
    RngStream rng(4);
    std::vector<double> times{0.25, 0.5, 1.0, 1.5, 2.0};
    std::vector<std::vector<double>> paths;
    for (int r = 0; r < 4000; ++r) {
        std::vector<double> w;
        double prev_t = 0, v = 0;
        for (double t : times) {
            v += std::sqrt(t - prev_t) * rng.normal();
            prev_t = t;
            w.push_back(v);
        }
        paths.push_back(std::move(w));
    }
    auto good = process_covariance_check(paths, [&](int i, int j) {
        return std::min(times[i], times[j]);
    });
    CHECK(good.max_standardized_deviation < 4.0);

    auto bad = process_covariance_check(paths, [&](int i, int j) {
        return 2.0 * std::min(times[i], times[j]);
    });
    CHECK(bad.max_standardized_deviation > 10.0);

    std::vector<std::vector<double>> few(paths.begin(), paths.begin() + 10);
    CHECK_THROWS(process_covariance_check(few, [](int, int) { return 0.0; }));
}

TEST_CASE("upper tail excess calibration") {
    RngStream rng(5);
    std::vector<double> normal, heavy, bounded;
    for (int i = 0; i < 40000; ++i) {
        normal.push_back(rng.normal());
        heavy.push_back(rng.exponential(1.0));
        bounded.push_back(rng.uniform());
    }
    auto n = upper_tail_excess(normal, 2.0);
    CHECK(std::abs(n.log_ratio) < 0.15);
    CHECK(n.exceedances > 0);

    auto h = upper_tail_excess(heavy, 2.0);
    CHECK(h.log_ratio > 0.4);  // exp tail beats the gaussian tail at 2 sigma

    auto b = upper_tail_excess(bounded, 3.5);
    CHECK(b.exceedances == 0);
    CHECK(std::isinf(b.log_ratio));

    std::vector<double> few(100, 0.0);
    CHECK_THROWS(upper_tail_excess(few, 2.0));
    CHECK_THROWS(upper_tail_excess(normal, -1.0));
}
