#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "poncelet/centers.hpp"
#include "poncelet/invariants.hpp"
#include "poncelet/transforms.hpp"

using namespace poncelet;
using testutil::random_triangle;

TEST_CASE("affine maps preserve area ratios exactly") {
    PlanarMap map;
    map.m = {1.3, -0.4, 0.2, 0.9};
    map.t = {0.7, -2.0};
    for (int i = 0; i < 40; ++i) {
        Triangle t = random_triangle();
        Triangle img = map.apply(t);
        CHECK(img.area() / t.area() ==
              doctest::Approx(std::abs(map.det())).epsilon(1e-12));
    }
}

TEST_CASE("affine image I: confocal to ellipse-plus-incircle") {
    auto [map, pair] = affine_image_I(2, 1);
    CHECK(pair.family == Family::Incircle);
    // semi-axes {beta, alpha beta''/alpha''} in standard position
    CHECK(pair.a == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pair.b == doctest::Approx(2.0 * 0.13148291 / 1.73703418).epsilon(1e-6));
    CHECK(pair.inner.a == doctest::Approx(0.1314829).epsilon(1e-6));
    CHECK(cayley_residual(pair.outer.a, pair.outer.b, pair.inner.a, pair.inner.b) ==
          doctest::Approx(0.0).epsilon(1e-12));

    // the map actually carries confocal orbits to the image pair
    for (double t : {0.3, 1.7, 4.1}) {
        Triangle tr = map.apply(confocal_orbit(2, 1, t));
        CHECK(max_orbit_residual(pair, {tr[0], tr[1], tr[2]}) < 1e-10);
    }

    // identical cosine sums on both families
    const double d13 = std::sqrt(13.0);
    const double eq3 = 2.0 * (d13 - 1.0) * (4.0 - d13) / 9.0;
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        double t = 2 * M_PI * (i + 0.5) / 100;
        double sc = sum_cosines(orbit(pair, t));
        worst = std::max(worst, std::abs(sc - (1.0 + eq3)));
    }
    CHECK(worst < 1e-9);
    CHECK(1.0 + eq3 == doctest::Approx(1.228394).epsilon(1e-5));
}

TEST_CASE("affine image II: confocal to circumcircle-plus-inellipse") {
    auto [map, pair] = affine_image_II(2, 1);
    CHECK(pair.family == Family::Circumellipse);
    // exact algebra: outer circle radius alpha, inner axes (alpha'', alpha/beta * beta'')
    CHECK(pair.R == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(pair.inner.a == doctest::Approx(1.7370341836).epsilon(1e-9));
    CHECK(pair.inner.b == doctest::Approx(0.2629658164).epsilon(1e-9));
    CHECK(cayley_residual(pair.outer.a, pair.outer.b, pair.inner.a, pair.inner.b) ==
          doctest::Approx(0.0).epsilon(1e-12));

    for (double t : {0.5, 2.2, 5.3}) {
        Triangle tr = map.apply(confocal_orbit(2, 1, t));
        CHECK(max_orbit_residual(pair, {tr[0], tr[1], tr[2]}) < 1e-10);
    }

    // product of cosines on the image family equals r/(4R) of the confocal pair
    const double d13 = std::sqrt(13.0);
    const double eq3 = 2.0 * (d13 - 1.0) * (4.0 - d13) / 9.0;
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        double t = 2 * M_PI * (i + 0.5) / 100;
        worst = std::max(worst, std::abs(product_cosines(orbit(pair, t)) - eq3 / 4.0));
    }
    CHECK(worst < 1e-9);
    CHECK(eq3 / 4.0 == doctest::Approx(0.0570984).epsilon(1e-5));

    // cross-oracle: excentral triangles of the confocal family have the same
    // absolute cosine product
    double worst_exc = 0;
    for (int i = 0; i < 60; ++i) {
        double t = 2 * M_PI * (i + 0.5) / 60;
        Triangle exc = excentral_triangle(confocal_orbit(2, 1, t));
        worst_exc = std::max(worst_exc,
                             std::abs(std::abs(product_cosines(exc)) - eq3 / 4.0));
    }
    CHECK(worst_exc < 1e-9);
}

TEST_CASE("Thm 2 rigid-rotation certificate for family I") {
    Certificate c = rotation_certificate_I(2, 1, 200);
    CHECK(c.samples == 200);
    CHECK(c.pass);
    CHECK(c.max_discrepancy < 1e-9 * 2);
    // poristic parameters (R, r, d) = (1.5, 2/3, 0.5)
    CHECK(std::sqrt(1.5 * (1.5 - 4.0 / 3.0)) == doctest::Approx(0.5).epsilon(1e-14));

    // insensitive to the sampling grid
    Certificate c2 = rotation_certificate_I(2, 1, 97);
    CHECK(c2.pass == c.pass);

    // near-equilateral case
    Certificate ceq = rotation_certificate_I(1, 0.999, 8);
    CHECK(ceq.pass);
}

TEST_CASE("Thm 6 rigid-rotation certificate for family II orthics") {
    Certificate c = rotation_certificate_II(2, 1, 200);
    CHECK(c.pass);
    CHECK(c.max_discrepancy < 1e-9 * 3);
    Certificate c2 = rotation_certificate_II(2, 1, 64);
    CHECK(c2.pass == c.pass);
}

TEST_CASE("Thm 7 variable-similarity certificate for family III") {
    Certificate c = similarity_certificate_III(2, 1, 60);
    CHECK(c.pass);
    CHECK(c.max_discrepancy < 1e-8);

    Certificate c31 = similarity_certificate_III(3, 1, 40);
    CHECK(c31.pass);

    // the matching similarity has variable scale: family III shapes repeat at
    // fixed size in the porism, while family III perimeters genuinely vary
    double pmin = 1e300, pmax = 0;
    for (int i = 0; i < 60; ++i) {
        double t = 2 * M_PI * (i + 0.5) / 60;
        double per = metrics(homothetic_orbit(2, 1, t)).perimeter;
        pmin = std::min(pmin, per);
        pmax = std::max(pmax, per);
    }
    CHECK(pmax / pmin - 1.0 > 1e-3);
}

TEST_CASE("Brocard inellipse aspect ratio is invariant over family III") {
    double rmin = 1e300, rmax = 0;
    for (int i = 0; i < 40; ++i) {
        double t = 2 * M_PI * (i + 0.5) / 40;
        Triangle tr = homothetic_orbit(2, 1, t);
        auto [o1, o2] = brocard_points(tr);
        Point2 x39 = center(tr, 39);
        auto inell = inconic_centered(tr, x39);
        REQUIRE(inell.has_value());
        rmin = std::min(rmin, inell->b / inell->a);
        rmax = std::max(rmax, inell->b / inell->a);
        // its foci are the Brocard points
        double cf = std::sqrt(inell->a * inell->a - inell->b * inell->b);
        Point2 fa = inell->to_world({cf, 0}), fb = inell->to_world({-cf, 0});
        CHECK(std::min(dist(o1, fa), dist(o1, fb)) < 1e-9);
        CHECK(std::min(dist(o2, fa), dist(o2, fb)) < 1e-9);
    }
    CHECK(rmax - rmin < 1e-10);
}

TEST_CASE("Obs 1: X1-centered circumconic of the poristic family") {
    MeasuredConic m = obs1_poristic_circumconic(1.5, 2.0 / 3.0, 64);
    CHECK(m.axis_major == doctest::Approx(2.0).epsilon(1e-9));   // R + d
    CHECK(m.axis_minor == doctest::Approx(1.0).epsilon(1e-9));   // R - d
    CHECK(m.spread < 1e-9);
    CHECK(m.angle_variation > 0.5);  // it rotates rigidly
}

TEST_CASE("Obs 2: the O-centered inconic of family II is the Poncelet inellipse") {
    MeasuredConic m = obs2_familyII_inconic(2, 1, 64);
    // axes (R_h + d', R_h - d') with the poristic radius R_h = (a+b)/2
    CHECK(m.axis_major == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(m.axis_minor == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(m.spread < 1e-9);
}

TEST_CASE("Obs 3: MacBeath inconic of family II has invariant axes") {
    MeasuredConic m = obs3_familyII_macbeath(2, 1, 64);
    // (R_h, sqrt(R_h^2 - d'^2)) = (1.5, sqrt(2))
    CHECK(m.axis_major == doctest::Approx(1.5).epsilon(1e-9));
    CHECK(m.axis_minor == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(m.spread < 1e-9);
}

TEST_CASE("centered conic solvers") {
    Triangle t = random_triangle();
    Point2 O = testutil::circumcenter_of(t);
    auto circ = circumconic_centered(t, O);
    REQUIRE(circ.has_value());
    CHECK(circ->a == doctest::Approx(metrics(t).circumradius).epsilon(1e-10));
    CHECK(circ->b == doctest::Approx(metrics(t).circumradius).epsilon(1e-10));

    Point2 I = testutil::incenter_of(t);
    auto inc = inconic_centered(t, I);
    REQUIRE(inc.has_value());
    CHECK(inc->a == doctest::Approx(metrics(t).inradius).epsilon(1e-10));
    CHECK(inc->b == doctest::Approx(metrics(t).inradius).epsilon(1e-10));
}

TEST_CASE("group isolation probe") {
    IsolationReport rep = group_isolation_check(2, 1, 20);
    CHECK(rep.residual_control_identity < 1e-6);
    CHECK(rep.residual_control_confocal < 1e-6);
    CHECK(rep.residual_iii_vs_i > 1e-2);
    CHECK(rep.isolated);
}
