// Acceptance gate: one line per criterion, exit code = number of failures.
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "stit/exact.hpp"
#include "stit/experiments.hpp"
#include "stit/mnw.hpp"
#include "stit/stats.hpp"

using namespace stit;
using nlohmann::json;

namespace {

int failures = 0;

void report(int idx, bool pass, const std::string& line) {
    if (!pass) ++failures;
    std::printf("[%2d] %s  %s\n", idx, pass ? "PASS" : "FAIL", line.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

ExperimentConfig base_config(const std::string& name) {
    ExperimentConfig cfg;
    cfg.name = name;
    cfg.seed = 1;
    cfg.workers = 8;
    return cfg;
}

// ---- criterion 1: mean surface identity --------------------------------
void criterion_1() {
    auto cfg = base_config("mean_surface");
    cfg.dim = 2;
    cfg.measure = "isotropic";
    cfg.replications = 10000;
    auto r = exp_mean_surface(cfg);
    auto& s = r.data["statistics"]["sigma"];
    double mean = s["mean"], se = s["stderr_mean"];
    report(1, std::abs(mean - 1.0) <= 3 * se,
           fmt("mean surface d=2 isotropic t=1: mean=%.5f (target 1, 3se=%.5f)",
               mean, 3 * se));
}

// ---- criterion 2: exact variance ---------------------------------------
void criterion_2() {
    auto cfg = base_config("variance_exact");
    cfg.dim = 2;
    cfg.measure = "axis_aligned";
    cfg.replications = 10000;
    auto r = exp_variance_exact(cfg);
    double var = r.data["statistics"]["sigma"]["variance"];
    double ref = r.data["reference_values"][0]["value"];
    double ref_err = r.data["reference_values"][0]["error"];
    double var_se = r.data["statistics"]["variance_stderr"];
    double tol = std::max(0.05 * ref, 3 * std::hypot(var_se, ref_err));
    report(2, std::abs(var - ref) <= tol,
           fmt("variance d=2 axis t=1: sample=%.4f quadrature=%.4f tol=%.4f",
               var, ref, tol));
}

// ---- criterion 3: martingale slope and quadratic variation -------------
void criterion_3() {
    auto cfg = base_config("martingale");
    cfg.dim = 2;
    cfg.measure = "axis_aligned";
    cfg.replications = 10000;
    auto r = exp_martingale(cfg);
    double slope = r.data["statistics"]["slope"];
    double var = r.data["statistics"]["variance"];
    double qv = r.data["statistics"]["qv_integral"];
    bool ok_slope = std::abs(slope - 1.0) <= 0.05;
    bool ok_qv = std::abs(var - qv) <= 0.05 * qv;
    report(3, ok_slope && ok_qv,
           fmt("martingale d=2 axis: slope=%.4f (1 +- 0.05), QV var=%.4f "
               "integral=%.4f (5%%)",
               slope, var, qv));
}

// ---- criterion 4: increment CLT ----------------------------------------
json criterion_4() {
    auto cfg = base_config("increment_clt");
    cfg.dim = 2;
    cfg.measure = "isotropic";
    cfg.s0 = 0.5;
    cfg.r_list = {32};
    cfg.replications = 10000;
    auto r = exp_increment_clt(cfg);
    auto& pr = r.data["statistics"]["per_R"].back();
    double ks_p = pr["ks_p_value"];
    double cov_dev = pr["cov_max_standardized_deviation"];
    report(4, ks_p > 0.01 && cov_dev < 3.0,
           fmt("increment CLT d=2 iso R=32: KS p=%.4f vs N(0, pi ln2) "
               "(need > 0.01), cov max dev=%.2f (need < 3)",
               ks_p, cov_dev));
    return r.data;
}

// ---- criterion 5: isotropic constants ----------------------------------
void criterion_5() {
    auto phi = FaceFunctional::total_surface();
    RngStream rng2(1, 50, 0);
    auto disk = ConvexPolytope::regular_polygon(256, 1.0);
    auto v2 = v_w_empirical(HyperplaneMeasureSpec::isotropic(2), disk, phi,
                            64.0, 200, rng2);
    double t2 = M_PI * M_PI;
    RngStream rng3(1, 50, 1);
    auto ball = ConvexPolytope::icosphere(3, 1.0);
    auto v3 = v_w_empirical(HyperplaneMeasureSpec::isotropic(3), ball, phi,
                            16.0, 60, rng3);
    double t3 = 32.0 * M_PI * M_PI / 3.0;
    bool ok2 = std::abs(v2.value - t2) <= 0.05 * t2;
    bool ok3 = std::abs(v3.value - t3) <= 0.10 * t3;
    report(5, ok2 && ok3,
           fmt("V_W: disk R=64 %.4f (pi^2=%.4f, 5%%), ball R=16 %.3f "
               "(32pi^2/3=%.3f, 10%%)",
               v2.value, t2, v3.value, t3));
}

// ---- criterion 6: planar total-length regime ---------------------------
void criterion_6() {
    auto spec = HyperplaneMeasureSpec::isotropic(2);
    auto phi = FaceFunctional::total_surface();
    IntegratorConfig icfg;
    icfg.n_points = 1L << 15;
    icfg.shifts = 6;
    std::vector<double> ratios;
    for (double big_r : {8.0, 16.0, 32.0, 64.0}) {
        auto w = ConvexPolytope::box(Vec{0, 0}, Vec{big_r, big_r});
        auto v = variance_exact(spec, w, 1.0, phi, icfg);
        ratios.push_back(v.value / (big_r * big_r * std::log(big_r)));
    }
    bool increasing = true;
    for (size_t i = 0; i + 1 < ratios.size(); ++i)
        increasing = increasing && ratios[i + 1] > ratios[i];
    bool close = ratios.back() > M_PI / 1.5 && ratios.back() < M_PI * 1.5;

    auto cfg = base_config("total_length_2d");
    cfg.measure = "isotropic";
    cfg.r_list = {64};
    cfg.replications = 4000;
    auto r = exp_total_length_2d(cfg);
    double ks_p = r.data["statistics"]["per_R"].back()["ks_p_value"];
    report(6, increasing && close && ks_p > 0.01,
           fmt("total length: Var/(R^2 logR) = %.3f %.3f %.3f %.3f -> pi "
               "(increasing, factor 1.5), endpoint KS p=%.4f at R=64",
               ratios[0], ratios[1], ratios[2], ratios[3], ks_p));
}

// ---- criterion 7: non-Gaussian limit in d=3 ----------------------------
void criterion_7() {
    auto cfg = base_config("non_gaussian");
    cfg.dim = 3;
    cfg.measure = "axis_aligned";
    cfg.r_list = {4, 8, 16};
    cfg.replications = 2000;
    auto r = exp_non_gaussian(cfg);
    std::vector<double> vars;
    for (auto& pr : r.data["statistics"]["per_R"])
        vars.push_back(pr["sigma"]["variance"]);
    bool monotone = vars[0] < vars[1] && vars[1] < vars[2];
    double xi = r.data["reference_values"][0]["value"];
    bool ok_var = std::abs(vars.back() - xi) <= 0.10 * xi;
    double ks_p = 1, tail_z = 0, log_ratio = 0;
    for (auto& t : r.data["tests"]) {
        if (t["name"] == "gaussian_rejected") ks_p = t["p_value"];
        if (t["name"] == "upper_tail_excess") tail_z = t["statistic"];
    }
    log_ratio = r.data["statistics"]["tail"]["log_ratio"];
    bool ok_ks = ks_p < 1e-3;
    bool ok_tail = log_ratio > 0 && tail_z > 2.0;
    report(7, monotone && ok_var && ok_ks && ok_tail,
           fmt("non-Gaussian d=3 axis: var %.3f %.3f %.3f (xi=%.3f, 10%%), "
               "KS p=%.1e (< 1e-3), tail log_ratio=%.3f z=%.2f (need > 0, > 2)",
               vars[0], vars[1], vars[2], xi, ks_p, log_ratio, tail_z));
}

// ---- criterion 8: scaling property -------------------------------------
void criterion_8() {
    auto cfg = base_config("scaling");
    cfg.dim = 2;
    cfg.measure = "isotropic";
    cfg.t = 2.0;
    cfg.replications = 10000;
    auto r = exp_scaling(cfg);
    double p_sigma = r.data["tests"][0]["p_value"];
    double p_cells = r.data["tests"][1]["p_value"];
    report(8, p_sigma > 0.01 && p_cells > 0.01,
           fmt("scaling d=2 t=2: surface KS p=%.4f, cell count KS p=%.4f "
               "(need > 0.01)",
               p_sigma, p_cells));
}

// ---- criterion 9: geometry property suite ------------------------------
void criterion_9() {
    const int cases = 10000;
    int bad_split = 0, bad_partition = 0, bad_section = 0, bad_capacity = 0;

    RngStream rng(1, 90, 0);
    for (int i = 0; i < cases; ++i) {
        int dim = i % 2 == 0 ? 2 : 3;
        auto spec = HyperplaneMeasureSpec::isotropic(dim);
        ConvexPolytope p;
        switch (i % 3) {
            case 0: {
                Vec lo(dim), hi(dim);
                for (int k = 0; k < dim; ++k) {
                    lo[k] = 2 * rng.uniform() - 1;
                    hi[k] = lo[k] + 0.2 + 1.8 * rng.uniform();
                }
                p = ConvexPolytope::box(lo, hi);
                break;
            }
            case 1:
                p = dim == 2 ? ConvexPolytope::regular_polygon(
                                   5 + static_cast<int>(8 * rng.uniform()),
                                   0.3 + 1.7 * rng.uniform())
                             : ConvexPolytope::icosphere(
                                   1, 0.3 + 1.7 * rng.uniform());
                break;
            default: {
                Vec shift(dim);
                for (int k = 0; k < dim; ++k) shift[k] = 2 * rng.uniform() - 1;
                p = (dim == 2 ? ConvexPolytope::regular_polygon(6, 1.0)
                              : ConvexPolytope::icosphere(1, 1.0))
                        .translated(shift);
                break;
            }
        }
        auto h = spec.sample_hitting(p, rng);
        try {
            auto parts = p.split(h);
            double sum = parts.plus.volume() + parts.minus.volume();
            if (std::abs(sum - p.volume()) > 1e-9 * p.volume()) ++bad_split;
        } catch (const NonSplittingError&) {
            // grazing draw: re-drawn by the engine, not a failure
        }
        double lambda = 0.3 + 1.7 * rng.uniform();
        double c1 = spec.capacity(p.scaled(lambda));
        double c0 = spec.capacity(p);
        if (std::abs(c1 - lambda * c0) > 1e-9 * c1) ++bad_capacity;
    }

    // partition invariants: cell volumes partition the window
    RngStream prng(1, 91, 0);
    for (int i = 0; i < cases; ++i) {
        int dim = i % 2 == 0 ? 2 : 3;
        auto w = dim == 2 ? ConvexPolytope::box(Vec{0, 0}, Vec{1, 1})
                          : ConvexPolytope::box(Vec{0, 0, 0}, Vec{1, 1, 1});
        auto spec = i % 4 < 2 ? HyperplaneMeasureSpec::isotropic(dim)
                              : HyperplaneMeasureSpec::axis_aligned(dim);
        auto t = run_mnw(w, spec, 1.5, prng);
        if (std::abs(t.total_cell_volume() - 1.0) > 1e-9) ++bad_partition;
        if (t.cells().size() != t.maximal_polytopes().size() + 1)
            ++bad_partition;
    }

    // section partition: 100 tessellations x 100 hitting planes
    RngStream srng(1, 92, 0);
    for (int i = 0; i < 100; ++i) {
        int dim = i % 2 == 0 ? 2 : 3;
        auto w = dim == 2 ? ConvexPolytope::box(Vec{0, 0}, Vec{1, 1})
                          : ConvexPolytope::box(Vec{0, 0, 0}, Vec{1, 1, 1});
        auto spec = HyperplaneMeasureSpec::isotropic(dim);
        auto t = run_mnw(w, spec, dim == 2 ? 6.0 : 3.0, srng);
        for (int k = 0; k < 100; ++k) {
            auto h = spec.sample_hitting(w, srng);
            auto whole = w.intersect_with_hyperplane(h);
            if (!whole) continue;
            double sum = 0;
            for (const auto& c : section_tessellation(t, h)) sum += c.volume();
            if (std::abs(sum - whole->volume()) > 1e-9) ++bad_section;
        }
    }

    report(9, !bad_split && !bad_partition && !bad_section && !bad_capacity,
           fmt("geometry properties, 10^4 cases each: split additivity %d, "
               "partition %d, section partition %d, capacity homogeneity %d "
               "failures",
               bad_split, bad_partition, bad_section, bad_capacity));
}

// ---- criterion 10: determinism across worker counts --------------------
bool json_close(const json& a, const json& b) {
    if (a.is_number() && b.is_number()) {
        double x = a.get<double>(), y = b.get<double>();
        double scale = std::max({std::abs(x), std::abs(y), 1.0});
        return std::abs(x - y) <= 1e-9 * scale;
    }
    if (a.type() != b.type()) return false;
    if (a.is_object()) {
        if (a.size() != b.size()) return false;
        for (auto& [k, v] : a.items())
            if (!b.contains(k) || !json_close(v, b[k])) return false;
        return true;
    }
    if (a.is_array()) {
        if (a.size() != b.size()) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (!json_close(a[i], b[i])) return false;
        return true;
    }
    return a == b;
}

void criterion_10(json eight_worker_run) {
    auto cfg = base_config("increment_clt");
    cfg.dim = 2;
    cfg.measure = "isotropic";
    cfg.s0 = 0.5;
    cfg.r_list = {32};
    cfg.replications = 10000;
    eight_worker_run.erase("run_info");
    bool ok = true;
    for (int workers : {1, 4}) {
        cfg.workers = workers;
        auto r = exp_increment_clt(cfg);
        r.data.erase("run_info");
        ok = ok && json_close(r.data, eight_worker_run);
    }
    report(10, ok,
           "determinism: increment CLT at 1/4/8 workers, every numeric field "
           "within 1e-9 relative (run_info excluded)");
}

}  // namespace

int main() {
    std::printf("acceptance run, master seed 1\n");
    criterion_1();
    criterion_2();
    criterion_3();
    auto exp4 = criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10(std::move(exp4));
    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures;
}
