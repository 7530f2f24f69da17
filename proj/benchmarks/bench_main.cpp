#include <benchmark/benchmark.h>

#include "stit/exact.hpp"
#include "stit/functionals.hpp"
#include "stit/mnw.hpp"

using namespace stit;

static void BM_RunMnw2dIso(benchmark::State& state) {
    double t = static_cast<double>(state.range(0));
    auto w = ConvexPolytope::box(Vec{0, 0}, Vec{1, 1});
    auto spec = HyperplaneMeasureSpec::isotropic(2);
    uint64_t rep = 0;
    long cells = 0;
    for (auto _ : state) {
        RngStream rng(1, 100, rep++);
        auto tess = run_mnw(w, spec, t, rng);
        cells += static_cast<long>(tess.cells().size());
        benchmark::DoNotOptimize(tess);
    }
    state.counters["cells"] =
        benchmark::Counter(static_cast<double>(cells),
                           benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_RunMnw2dIso)->Arg(4)->Arg(16)->Arg(64);

static void BM_RunMnw3dAxis(benchmark::State& state) {
    double t = static_cast<double>(state.range(0));
    auto w = ConvexPolytope::box(Vec{0, 0, 0}, Vec{1, 1, 1});
    auto spec = HyperplaneMeasureSpec::axis_aligned(3);
    uint64_t rep = 0;
    for (auto _ : state) {
        RngStream rng(1, 101, rep++);
        auto tess = run_mnw(w, spec, t, rng);
        benchmark::DoNotOptimize(tess);
    }
}
BENCHMARK(BM_RunMnw3dAxis)->Arg(2)->Arg(4)->Arg(8);

static void BM_PolygonSplit(benchmark::State& state) {
    RngStream rng(1, 102, 0);
    auto spec = HyperplaneMeasureSpec::isotropic(2);
    auto poly = ConvexPolytope::regular_polygon(64, 1.0);
    for (auto _ : state) {
        auto h = spec.sample_hitting(poly, rng);
        auto parts = poly.split(h);
        benchmark::DoNotOptimize(parts);
    }
}
BENCHMARK(BM_PolygonSplit);

static void BM_PolyhedronSplit(benchmark::State& state) {
    RngStream rng(1, 103, 0);
    auto spec = HyperplaneMeasureSpec::isotropic(3);
    auto poly = ConvexPolytope::icosphere(2, 1.0);
    for (auto _ : state) {
        auto h = spec.sample_hitting(poly, rng);
        auto parts = poly.split(h);
        benchmark::DoNotOptimize(parts);
    }
}
BENCHMARK(BM_PolyhedronSplit);

static void BM_VarianceExactQmc(benchmark::State& state) {
    auto w = ConvexPolytope::box(Vec{0, 0}, Vec{1, 1});
    auto spec = HyperplaneMeasureSpec::axis_aligned(2);
    auto phi = FaceFunctional::total_surface();
    IntegratorConfig cfg;
    cfg.n_points = state.range(0);
    cfg.shifts = 4;
    for (auto _ : state) {
        auto r = variance_exact(spec, w, 1.0, phi, cfg);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_VarianceExactQmc)->Arg(1 << 12)->Arg(1 << 14);

BENCHMARK_MAIN();
