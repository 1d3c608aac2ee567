#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "poncelet/conic_core.hpp"

using namespace poncelet;

TEST_CASE("cayley residual") {
    CHECK(cayley_residual(2, 1, 2.0 / 3.0, 2.0 / 3.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(cayley_residual(2, 1, 1.0, 0.5) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(cayley_residual(1, 1, 0.5, 0.5) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(cayley_residual(2, 1, 1.0, 1.0) == doctest::Approx(0.5));
    CHECK_THROWS_AS(cayley_residual(0, 1, 1, 1), std::domain_error);
    CHECK_THROWS_AS(cayley_residual(2, 1, -1, 1), std::domain_error);
}

TEST_CASE("incircle radius") {
    CHECK(incircle_radius(2, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(incircle_radius(1, 1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(incircle_radius(3, 1) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK_THROWS_AS(incircle_radius(-2, 1), std::domain_error);
}

TEST_CASE("confocal caustic") {
    auto [ca, cb] = confocal_caustic(2, 1);
    const double d13 = std::sqrt(13.0);
    CHECK(ca == doctest::Approx(2.0 * (d13 - 1.0) / 3.0).epsilon(1e-14));
    CHECK(cb == doctest::Approx((4.0 - d13) / 3.0).epsilon(1e-14));
    // confocality: same focal distance as the outer ellipse
    CHECK(ca * ca - cb * cb == doctest::Approx(3.0).epsilon(1e-13));

    // near-circular limit approaches the incircle radius R/2
    auto [na, nb] = confocal_caustic(2.0, 1.999);
    CHECK(na == doctest::Approx(1.0).epsilon(2e-3));
    CHECK(nb == doctest::Approx(1.0).epsilon(2e-3));
    CHECK(na * na - nb * nb == doctest::Approx(2.0 * 2.0 - 1.999 * 1.999).epsilon(1e-9));

    CHECK_THROWS_AS(confocal_caustic(1.0, 1.0), std::domain_error);
}

namespace {
PointList ellipse_samples(double a, double b, int n, Point2 c = {0, 0}) {
    PointList pts;
    for (int i = 0; i < n; ++i) {
        double t = 2.0 * M_PI * (i + 0.3) / n;
        pts.push_back({c.x + a * std::cos(t), c.y + b * std::sin(t)});
    }
    return pts;
}
}  // namespace

TEST_CASE("conic fit recovers exact conics") {
    auto pts = ellipse_samples(2, 1, 12);
    ConicFit f = fit_conic(pts);
    CHECK(f.residual < 1e-12);
    // coefficients proportional to (1/4, 0, 1, 0, 0, -1)
    std::array<double, 6> want{0.25, 0, 1, 0, 0, -1};
    double nw = 0;
    for (double v : want) nw += v * v;
    nw = std::sqrt(nw);
    double dotp = 0;
    for (int i = 0; i < 6; ++i) dotp += f.conic.c[i] * want[i] / nw;
    for (int i = 0; i < 6; ++i)
        CHECK(std::abs(f.conic.c[i] - dotp * want[i] / nw) < 1e-9);

    auto circ = ellipse_samples(0.5, 0.5, 12);
    ConicFit fc = fit_conic(circ);
    CHECK(fc.residual < 1e-12);
    auto e = fc.conic.as_ellipse();
    REQUIRE(e.has_value());
    CHECK(e->a == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(e->b == doctest::Approx(0.5).epsilon(1e-9));

    CHECK_THROWS_AS(fit_conic(std::vector<Point2>(5, Point2{1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(fit_conic(std::vector<Point2>(8, Point2{1, 2})), std::domain_error);
}

TEST_CASE("conic fit recovers offset rotated ellipse geometry") {
    Ellipse ref(1.7, 0.6, {0.4, -0.9}, 0.5);
    PointList pts;
    for (int i = 0; i < 40; ++i) pts.push_back(ref.at(2.0 * M_PI * i / 40.0 + 0.1));
    ConicFit f = fit_conic(pts);
    CHECK(f.residual < 1e-12);
    auto e = f.conic.as_ellipse();
    REQUIRE(e.has_value());
    CHECK(e->a == doctest::Approx(1.7).epsilon(1e-9));
    CHECK(e->b == doctest::Approx(0.6).epsilon(1e-9));
    CHECK(e->center.x == doctest::Approx(0.4).epsilon(1e-9));
    CHECK(e->center.y == doctest::Approx(-0.9).epsilon(1e-9));
    double da = std::remainder(e->angle - 0.5, M_PI);
    CHECK(std::abs(da) < 1e-9);
}

TEST_CASE("quartic fit on exact quartic samples") {
    // (x^2+y^2)^2 - 30x^2 - 42y^2 + 9 = 0, both ovals
    PointList pts;
    for (int i = 0; i < 200; ++i) {
        double x = -6.59 + 13.18 * i / 199.0;
        // y^4 + (2x^2 - 42) y^2 + (x^4 - 30x^2 + 9) = 0
        double B = 2 * x * x - 42, C = x * x * x * x - 30 * x * x + 9;
        double disc = B * B - 4 * C;
        if (disc < 0) continue;
        for (double y2 : {(-B - std::sqrt(disc)) / 2.0, (-B + std::sqrt(disc)) / 2.0}) {
            if (y2 < 0) continue;
            double y = std::sqrt(y2);
            pts.push_back({x, y});
            pts.push_back({x, -y});
        }
    }
    REQUIRE(pts.size() > 100);
    QuarticFit qf = fit_quartic(pts, true);
    CHECK(qf.residual < 1e-10);
    QuarticImplicit scaled;
    scaled.symmetric = true;
    const double s = qf.scale;
    scaled.even = {s * s * s * s, 2 * s * s * s * s, s * s * s * s,
                   -30 * s * s, -42 * s * s, 9};
    scaled.normalize();
    CHECK(QuarticImplicit::coefficient_angle(qf.quartic, scaled) < 1e-8);
}

TEST_CASE("quartic fit on an exact conic never wins over the conic branch") {
    auto pts = ellipse_samples(2, 1, 60);
    QuarticFit qf = fit_quartic(pts, true);
    CHECK(qf.residual < 1e-10);  // conic * constant is a quartic too
    Classification c = classify_locus(pts, 2.0);
    CHECK(c.label == LocusClass::Ellipse);  // conic branch tested first
}

TEST_CASE("classifier labels") {
    PointList tiny(40, Point2{0.3, 0.4});
    CHECK(classify_locus(tiny, 2.0).label == LocusClass::StationaryPoint);

    auto circ = ellipse_samples(0.7, 0.7, 50, {0.2, 0.1});
    CHECK(classify_locus(circ, 2.0).label == LocusClass::Circle);
    // stable under uniform scaling of the cloud and of the scale argument
    PointList scaled;
    for (auto& p : circ) scaled.push_back(p * 1e3);
    CHECK(classify_locus(scaled, 2.0e3).label == LocusClass::Circle);

    auto ell = ellipse_samples(1.9, 0.8, 50);
    CHECK(classify_locus(ell, 2.0).label == LocusClass::Ellipse);

    PointList wild;
    for (int i = 0; i < 120; ++i) {
        double t = 2.0 * M_PI * i / 120.0;
        wild.push_back({std::cos(t) + 0.3 * std::cos(5 * t), std::sin(t) + 0.4 * std::sin(6 * t)});
    }
    CHECK(classify_locus(wild, 1.0).label == LocusClass::NonConic);

    CHECK_THROWS_AS(classify_locus(PointList{}, 1.0), std::invalid_argument);
}

TEST_CASE("near-coincident cloud is a stationary point, not a tiny circle") {
    PointList pts;
    for (int i = 0; i < 64; ++i)
        pts.push_back({1e-13 * std::cos(0.1 * i), 1e-13 * std::sin(0.1 * i)});
    CHECK(classify_locus(pts, 1.0).label == LocusClass::StationaryPoint);
}
