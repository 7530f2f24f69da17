#include "doctest.h"

#include <cmath>
#include <vector>

#include "stit/functionals.hpp"
#include "stit/mnw.hpp"
#include "stit/stats.hpp"

using namespace stit;

namespace {

const ConvexPolytope kSquare = ConvexPolytope::box(Vec{0, 0}, Vec{1, 1});

double total_surface_of(const Tessellation& t) {
    double s = 0;
    for (const auto& m : t.maximal_polytopes()) s += m.measure;
    return s;
}

}  // namespace

TEST_CASE("horizon zero leaves the window intact") {
    RngStream rng(1);
    auto t = run_mnw(kSquare, HyperplaneMeasureSpec::isotropic(2), 0.0, rng);
    CHECK(t.cells().size() == 1);
    CHECK(t.maximal_polytopes().empty());
    CHECK(t.horizon() == 0.0);
}

TEST_CASE("facet count is cells minus one and births are ordered") {
    RngStream rng(42);
    auto t = run_mnw(kSquare, HyperplaneMeasureSpec::isotropic(2), 6.0, rng);
    CHECK(t.cells().size() >= 2);
    CHECK(t.maximal_polytopes().size() == t.cells().size() - 1);
    double prev = 0;
    for (const auto& m : t.maximal_polytopes()) {
        CHECK(m.birth_time >= prev);
        CHECK(m.birth_time <= 6.0);
        CHECK(m.measure > 0);
        prev = m.birth_time;
    }
}

TEST_CASE("cells partition the window") {
    for (int dim = 2; dim <= 3; ++dim) {
        RngStream rng(7 + dim);
        auto w = dim == 2 ? kSquare
                          : ConvexPolytope::box(Vec{0, 0, 0}, Vec{1, 1, 1});
        auto t = run_mnw(w, HyperplaneMeasureSpec::isotropic(dim),
                         dim == 2 ? 8.0 : 4.0, rng);
        CHECK(t.total_cell_volume() ==
              doctest::Approx(w.volume()).epsilon(1e-9));
        // random points land in exactly one cell (boundaries aside)
        for (int k = 0; k < 500; ++k) {
            Vec x(dim);
            for (int i = 0; i < dim; ++i) x[i] = rng.uniform();
            int hits = 0;
            for (const auto& c : t.cells())
                if (c.contains(x, -1e-9)) ++hits;
            CHECK(hits <= 1);
            hits = 0;
            for (const auto& c : t.cells())
                if (c.contains(x, 1e-9)) ++hits;
            CHECK(hits >= 1);
        }
    }
}

TEST_CASE("same seed gives an identical tessellation") {
    RngStream a(99), b(99);
    auto spec = HyperplaneMeasureSpec::isotropic(2);
    auto t1 = run_mnw(kSquare, spec, 5.0, a);
    auto t2 = run_mnw(kSquare, spec, 5.0, b);
    REQUIRE(t1.maximal_polytopes().size() == t2.maximal_polytopes().size());
    for (size_t i = 0; i < t1.maximal_polytopes().size(); ++i) {
        CHECK(t1.maximal_polytopes()[i].birth_time ==
              t2.maximal_polytopes()[i].birth_time);
        CHECK(t1.maximal_polytopes()[i].measure ==
              t2.maximal_polytopes()[i].measure);
    }
}

TEST_CASE("checkpoints are nested refinements on one driving stream") {
    RngStream rng(1234);
    auto spec = HyperplaneMeasureSpec::isotropic(2);
    auto snaps = run_with_checkpoints(kSquare, spec, {0.5, 1.0, 2.0, 4.0}, rng);
    REQUIRE(snaps.size() == 4);
    for (size_t i = 0; i + 1 < snaps.size(); ++i) {
        const auto& a = snaps[i].maximal_polytopes();
        const auto& b = snaps[i + 1].maximal_polytopes();
        REQUIRE(a.size() <= b.size());
        for (size_t k = 0; k < a.size(); ++k) {
            CHECK(a[k].birth_time == b[k].birth_time);
            CHECK(a[k].measure == b[k].measure);
        }
        CHECK(snaps[i].horizon() < snaps[i + 1].horizon());
    }
    CHECK_THROWS(run_with_checkpoints(kSquare, spec, {1.0, 0.5}, rng));
}

TEST_CASE("continue_mnw extends without rewriting history") {
    RngStream rng(17);
    auto spec = HyperplaneMeasureSpec::isotropic(2);
    auto t1 = run_mnw(kSquare, spec, 1.0, rng);
    size_t n1 = t1.maximal_polytopes().size();
    auto t2 = continue_mnw(t1, 3.0, rng);
    CHECK(t2.maximal_polytopes().size() >= n1);
    for (size_t k = 0; k < n1; ++k)
        CHECK(t2.maximal_polytopes()[k].birth_time ==
              t1.maximal_polytopes()[k].birth_time);
    RngStream rng2(17);
    CHECK_THROWS(continue_mnw(t2, 2.0, rng2));
}

TEST_CASE("mean facet surface matches t Vol(W) x scale") {
    // isotropic, d = 2: E[total length] = t for the unit square at t = 1
    {
        RngStream rng(311);
        auto spec = HyperplaneMeasureSpec::isotropic(2);
        MomentAccumulator acc;
        for (int r = 0; r < 4000; ++r) {
            RngStream stream(311, 0, r);
            acc.update(total_surface_of(run_mnw(kSquare, spec, 1.0, stream)));
        }
        auto s = acc.finalize();
        CHECK(std::abs(s.mean - 1.0) < 3.0 * s.stderr_mean);
    }
    // axis-aligned, d = 3 cube: surface scale d gives mean t * d * Vol
    {
        auto spec = HyperplaneMeasureSpec::axis_aligned(3);
        auto cube = ConvexPolytope::box(Vec{0, 0, 0}, Vec{1, 1, 1});
        MomentAccumulator acc;
        for (int r = 0; r < 2000; ++r) {
            RngStream stream(312, 0, r);
            acc.update(total_surface_of(run_mnw(cube, spec, 1.0, stream)));
        }
        auto s = acc.finalize();
        CHECK(std::abs(s.mean - 3.0) < 3.0 * s.stderr_mean);
        CHECK(spec.surface_scale() == 3.0);
    }
    // isotropic, d = 3 cube
    {
        auto spec = HyperplaneMeasureSpec::isotropic(3);
        auto cube = ConvexPolytope::box(Vec{0, 0, 0}, Vec{1, 1, 1});
        MomentAccumulator acc;
        for (int r = 0; r < 2000; ++r) {
            RngStream stream(313, 0, r);
            acc.update(total_surface_of(run_mnw(cube, spec, 1.0, stream)));
        }
        auto s = acc.finalize();
        CHECK(std::abs(s.mean - 1.0) < 3.0 * s.stderr_mean);
    }
}

TEST_CASE("centred surface is a martingale under continuation") {
    // average the centred statistic at t = 1 over fresh continuations of a
    // single frozen state at s0 = 0.5; it should reproduce the centred
    // value at s0
    auto spec = HyperplaneMeasureSpec::isotropic(2);
    RngStream rng(555);
    auto base = run_mnw(kSquare, spec, 0.5, rng);
    double centred_s0 = total_surface_of(base) - 0.5;
    MomentAccumulator acc;
    for (int r = 0; r < 3000; ++r) {
        RngStream stream(556, 0, r);
        auto t = continue_mnw(base, 1.0, stream);
        acc.update(total_surface_of(t) - 1.0);
    }
    auto s = acc.finalize();
    CHECK(std::abs(s.mean - centred_s0) < 3.5 * s.stderr_mean);
}

TEST_CASE("rescaling scales lengths and keeps birth times") {
    RngStream rng(77);
    auto spec = HyperplaneMeasureSpec::isotropic(2);
    auto t = run_mnw(kSquare, spec, 3.0, rng);
    auto r = rescale_tessellation(t, 2.5);
    CHECK(r.window().volume() == doctest::Approx(2.5 * 2.5));
    REQUIRE(r.maximal_polytopes().size() == t.maximal_polytopes().size());
    for (size_t k = 0; k < t.maximal_polytopes().size(); ++k) {
        CHECK(r.maximal_polytopes()[k].measure ==
              doctest::Approx(2.5 * t.maximal_polytopes()[k].measure));
        CHECK(r.maximal_polytopes()[k].birth_time ==
              t.maximal_polytopes()[k].birth_time);
    }
    CHECK(r.total_cell_volume() ==
          doctest::Approx(r.window().volume()).epsilon(1e-9));
    CHECK_THROWS(rescale_tessellation(t, 0.0));
}

TEST_CASE("scaling invariance: Y(t, rW) matches rescaled Y(rt, W)") {
    // the law of the total length in a 2x2 square at t = 1 matches the law
    // of 2x the total length in a unit square at t = 2
    auto spec = HyperplaneMeasureSpec::isotropic(2);
    auto big = ConvexPolytope::box(Vec{0, 0}, Vec{2, 2});
    std::vector<double> a, b;
    for (int r = 0; r < 3000; ++r) {
        RngStream s1(901, 0, r), s2(902, 0, r);
        a.push_back(total_surface_of(run_mnw(big, spec, 1.0, s1)));
        b.push_back(2.0 * total_surface_of(run_mnw(kSquare, spec, 2.0, s2)));
    }
    auto res = ks_two_sample(a, b);
    CHECK(res.p_value > 0.01);
}

TEST_CASE("run_mnw input validation") {
    RngStream rng(3);
    auto spec = HyperplaneMeasureSpec::isotropic(2);
    CHECK_THROWS(run_mnw(kSquare, spec, -1.0, rng));
}
