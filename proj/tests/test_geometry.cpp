#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "stit/geometry.hpp"
#include "stit/rng.hpp"

using namespace stit;

namespace {

ConvexPolytope unit_square() {
    return ConvexPolytope::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

// order coplanar points angularly for a shoelace oracle
std::vector<Vec> order_coplanar(std::vector<Vec> pts, const Hyperplane& h) {
    Vec a = std::abs(h.normal[0]) < 0.9 ? Vec{1, 0, 0} : Vec{0, 1, 0};
    Vec t1 = cross(h.normal, a).normalized();
    Vec t2 = cross(h.normal, t1);
    Vec c(3);
    for (const Vec& p : pts) c += p;
    c *= 1.0 / pts.size();
    std::sort(pts.begin(), pts.end(), [&](const Vec& x, const Vec& y) {
        return std::atan2(dot(x - c, t2), dot(x - c, t1)) <
               std::atan2(dot(y - c, t2), dot(y - c, t1));
    });
    return pts;
}

}  // namespace

TEST_CASE("support function") {
    auto sq = unit_square();
    CHECK(sq.support(Vec{1, 0}) == doctest::Approx(1.0));
    CHECK(sq.support(Vec{-1, 0}) == doctest::Approx(0.0));
    auto cube = ConvexPolytope::box(Vec{0, 0, 0}, Vec{1, 1, 1});
    Vec diag = Vec{1, 1, 1}.normalized();
    CHECK(cube.support(diag) == doctest::Approx(std::sqrt(3.0)));
    CHECK_THROWS_WITH(ConvexPolytope::polygon({}).support(Vec{1, 0}),
                      "empty polytope");
}

TEST_CASE("split unit square at x=0.5") {
    auto r = unit_square().split(Hyperplane::axis(2, 0, 0.5));
    CHECK(r.plus.volume() == doctest::Approx(0.5));
    CHECK(r.minus.volume() == doctest::Approx(0.5));
    CHECK(r.interface.volume() == doctest::Approx(1.0));
    CHECK(r.interface.intrinsic_dimension() == 1);
}

TEST_CASE("split unit cube at z=0.25") {
    auto cube = ConvexPolytope::box(Vec{0, 0, 0}, Vec{1, 1, 1});
    auto r = cube.split(Hyperplane::axis(3, 2, 0.25));
    CHECK(r.plus.volume() == doctest::Approx(0.75));
    CHECK(r.minus.volume() == doctest::Approx(0.25));
    CHECK(r.interface.volume() == doctest::Approx(1.0));
}

TEST_CASE("split triangle at x=0.5") {
    auto tri = ConvexPolytope::polygon({{0, 0}, {1, 0}, {0, 1}});
    auto r = tri.split(Hyperplane::axis(2, 0, 0.5));
    CHECK(r.plus.volume() == doctest::Approx(0.125));
    CHECK(r.minus.volume() == doctest::Approx(0.375));
    CHECK(r.interface.volume() == doctest::Approx(0.5));
}

TEST_CASE("non-splitting hyperplane rejected") {
    CHECK_THROWS_AS(unit_square().split(Hyperplane::axis(2, 0, 2.0)),
                    NonSplittingError);
    CHECK_THROWS_AS(unit_square().split(Hyperplane::axis(2, 0, 1.0)),
                    NonSplittingError);
}

TEST_CASE("volumes") {
    CHECK(unit_square().volume() == doctest::Approx(1.0));
    auto seg = ConvexPolytope::segment(Vec{0, 0}, Vec{0, 1},
                                       Hyperplane::axis(2, 0, 0.0));
    CHECK(seg.volume() == doctest::Approx(1.0));
    auto cube = ConvexPolytope::box(Vec{0, 0, 0}, Vec{1, 1, 1});
    double r = 0.7;
    CHECK(cube.scaled(r).volume() == doctest::Approx(r * r * r));
}

TEST_CASE("diameter") {
    CHECK(unit_square().diameter() == doctest::Approx(std::sqrt(2.0)));
    auto seg = ConvexPolytope::segment(Vec{0, 0}, Vec{0, 2.5},
                                       Hyperplane::axis(2, 0, 0.0));
    CHECK(seg.diameter() == doctest::Approx(2.5));
    CHECK(ConvexPolytope::box(Vec{0, 0, 0}, Vec{1, 1, 1}).diameter() ==
          doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("square section by horizontal line") {
    auto sec = unit_square().intersect_with_hyperplane(
        Hyperplane::axis(2, 1, 0.3));
    REQUIRE(sec.has_value());
    CHECK(sec->volume() == doctest::Approx(1.0));
    CHECK_FALSE(unit_square()
                    .intersect_with_hyperplane(Hyperplane::axis(2, 1, 2.0))
                    .has_value());
}

TEST_CASE("cube diagonal section is the analytic hexagon") {
    auto cube = ConvexPolytope::box(Vec{0, 0, 0}, Vec{1, 1, 1});
    Hyperplane h{Vec{1, 1, 1}.normalized(), 1.5 / std::sqrt(3.0)};
    auto sec = cube.intersect_with_hyperplane(h);
    REQUIRE(sec.has_value());
    CHECK(sec->vertices().size() == 6);
    // oracle: convex hull of the analytically computed edge midpoints
    std::vector<Vec> pts = {{1, 0.5, 0}, {0.5, 1, 0}, {0, 1, 0.5},
                            {0, 0.5, 1}, {0.5, 0, 1}, {1, 0, 0.5}};
    double oracle = planar_polygon_area(order_coplanar(pts, h));
    CHECK(sec->volume() == doctest::Approx(oracle).epsilon(1e-9));
    CHECK(oracle == doctest::Approx(3.0 * std::sqrt(3.0) / 4.0));
}

TEST_CASE("split additivity and interface identity on random polytopes") {
    RngStream rng(42);
    int done = 0;
    while (done < 4000) {
        int d = rng.uniform() < 0.5 ? 2 : 3;
        ConvexPolytope p;
        if (d == 2) {
            if (rng.uniform() < 0.5) {
                p = ConvexPolytope::polygon(
                    {{rng.uniform(), rng.uniform() * 0.2},
                     {1 + rng.uniform(), rng.uniform()},
                     {rng.uniform(), 1 + rng.uniform()}});
            } else {
                p = ConvexPolytope::polygon({{0, 0},
                                             {1 + rng.uniform(), 0},
                                             {1.5, 1 + rng.uniform()},
                                             {0, 1}});
            }
        } else {
            Vec lo{rng.uniform() * 0.1, rng.uniform() * 0.1, rng.uniform() * 0.1};
            Vec hi{1 + rng.uniform(), 1 + rng.uniform(), 1 + rng.uniform()};
            p = ConvexPolytope::box(lo, hi);
        }
        Vec n = d == 2 ? Vec{rng.normal(), rng.normal()}
                       : Vec{rng.normal(), rng.normal(), rng.normal()};
        n = n.normalized();
        Vec c = p.centroid();
        Hyperplane h{n, dot(n, c) + 0.2 * (rng.uniform() - 0.5)};
        SplitResult r;
        try {
            r = p.split(h);
        } catch (const NonSplittingError&) {
            continue;
        }
        ++done;
        double v = p.volume();
        CHECK(std::abs(r.plus.volume() + r.minus.volume() - v) <= 1e-9 * v);

        auto sec = p.intersect_with_hyperplane(h);
        REQUIRE(sec.has_value());
        CHECK(std::abs(sec->volume() - r.interface.volume()) <=
              1e-9 * (1 + sec->volume()));
    }
}

TEST_CASE("support subadditivity gives widths") {
    RngStream rng(7);
    auto p = ConvexPolytope::polygon({{0, 0}, {2, 0}, {2.5, 1}, {1, 2}, {0, 1.5}});
    for (int k = 0; k < 200; ++k) {
        Vec u = Vec{rng.normal(), rng.normal()}.normalized();
        double w = p.support(u) + p.support(u * -1.0);
        CHECK(w >= 0);
        CHECK(w == doctest::Approx(p.width(u)));
    }
}

TEST_CASE("scaling homogeneity") {
    auto p = ConvexPolytope::polygon({{0, 0}, {1, 0}, {0.5, 1}});
    double r = 3.25;
    CHECK(p.scaled(r).volume() == doctest::Approx(r * r * p.volume()));
    CHECK(p.scaled(r).diameter() == doctest::Approx(r * p.diameter()));
}

TEST_CASE("icosphere approximates the ball") {
    auto s = ConvexPolytope::icosphere(3, 1.0);
    CHECK(s.volume() == doctest::Approx(4.0 * M_PI / 3.0).epsilon(0.01));
    CHECK(s.mean_width() == doctest::Approx(2.0).epsilon(0.01));
    auto poly = ConvexPolytope::regular_polygon(256, 1.0);
    CHECK(poly.volume() == doctest::Approx(M_PI).epsilon(1e-3));
    CHECK(poly.mean_width() == doctest::Approx(2.0).epsilon(1e-3));
}
