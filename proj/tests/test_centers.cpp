#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "poncelet/centers.hpp"
#include "poncelet/orbits.hpp"

using namespace poncelet;
using testutil::circumcenter_of;
using testutil::incenter_of;
using testutil::random_triangle;

TEST_CASE("registry holds every required index") {
    const auto& reg = CenterRegistry::standard();
    for (int k : CenterRegistry::required_indices()) CHECK(reg.contains(k));
    CHECK_THROWS_AS(reg.at(9999), std::out_of_range);
}

TEST_CASE("trilinear_to_cartesian basics") {
    Triangle rt{{Point2{0, 0}, Point2{4, 0}, Point2{0, 3}}};
    // incenter of the 3-4-5 triangle with legs on the axes
    Point2 in = trilinear_to_cartesian(rt, 1, 1, 1);
    CHECK(dist(in, {1, 1}) < 1e-14);

    for (int i = 0; i < 20; ++i) {
        Triangle t = random_triangle();
        auto s = t.sides();
        // X2 trilinears are 1/s_i: the vertex average
        Point2 g = trilinear_to_cartesian(t, 1 / s[0], 1 / s[1], 1 / s[2]);
        CHECK(dist(g, (t[0] + t[1] + t[2]) / 3.0) < 1e-13);
        // point at infinity
        double w = -(1.0 * s[0] + 1.0 * s[1]) / s[2];
        CHECK_THROWS_AS(trilinear_to_cartesian(t, 1, 1, w), std::domain_error);
    }
}

TEST_CASE("classical centers against independent constructions") {
    for (int i = 0; i < 25; ++i) {
        Triangle t = random_triangle();
        Point2 O = circumcenter_of(t);
        Point2 I = incenter_of(t);
        Point2 G = (t[0] + t[1] + t[2]) / 3.0;
        Point2 H = t[0] + t[1] + t[2] - 2.0 * O;
        Point2 N = (O + H) / 2.0;
        auto m = metrics(t);
        double R = m.circumradius, r = m.inradius;

        CHECK(dist(center(t, 1), I) < 1e-12);
        CHECK(dist(center(t, 2), G) < 1e-12);
        CHECK(dist(center(t, 3), O) < 1e-12);
        CHECK(dist(center(t, 4), H) < 1e-12);
        CHECK(dist(center(t, 5), N) < 1e-12);
        CHECK(dist(center(t, 20), 2.0 * O - H) < 1e-12);  // reflection of X4 in X3
        CHECK(dist(center(t, 40), 2.0 * O - I) < 1e-12);  // reflection of X1 in X3
        CHECK(dist(center(t, 140), (O + N) / 2.0) < 1e-12);

        // X11: tangency point of the incircle and the nine-point circle
        Point2 feuer = N + (R / 2.0) * normalized(I - N);
        CHECK(dist(center(t, 11), feuer) < 1e-11);
        CHECK(dist(center(t, 100), 3.0 * G - 2.0 * feuer) < 1e-10);
        CHECK(dist(center(t, 119), 2.0 * N - feuer) < 1e-11);
        CHECK(std::abs(dist(center(t, 119), N) - R / 2.0) < 1e-11);  // on the NPC

        // circumcircle inverse of the incenter
        Point2 inv = O + (R * R / dot(I - O, I - O)) * (I - O);
        CHECK(dist(center(t, 36), inv) < 1e-11);
        // similitude centers of circumcircle and incircle
        CHECK(dist(center(t, 55), (r * O + R * I) / (R + r)) < 1e-12);
        CHECK(dist(center(t, 56), (R * I - r * O) / (R - r)) < 1e-11);

        // X104 is the circumcircle antipode of X100
        CHECK(dist(center(t, 104), 2.0 * O - center(t, 100)) < 1e-10);
        CHECK(std::abs(dist(center(t, 104), O) - R) < 1e-11);
        CHECK(std::abs(dist(center(t, 99), O) - R) < 1e-11);
        CHECK(std::abs(dist(center(t, 110), O) - R) < 1e-11);

        // Euler line: X21 on it, |X2 X4| = 2 |X2 X3|, X2-X3-X4 collinear
        CHECK(std::abs(cross(center(t, 21) - O, H - O)) < 1e-11);
        CHECK(std::abs(cross(center(t, 4) - G, center(t, 3) - G)) < 1e-11);
        CHECK(dist(center(t, 4), G) == doctest::Approx(2.0 * dist(center(t, 3), G)).epsilon(1e-10));

        // OI-line members
        for (int k : {35, 36, 46, 55, 56, 57, 65, 165})
            CHECK(std::abs(cross(center(t, k) - I, O - I)) < 1e-10);

        // Nagel line: X1, X2, X8, X145
        for (int k : {8, 145})
            CHECK(std::abs(cross(center(t, k) - I, G - I)) < 1e-10);

        // X88 is collinear with X1 and X100
        CHECK(std::abs(cross(center(t, 88) - I, center(t, 100) - I)) < 1e-9);

        // X142 is both the complement of X9 and the midpoint of X7 X9
        CHECK(dist(center(t, 142), (3.0 * G - center(t, 9)) / 2.0) < 1e-12);
        CHECK(dist(center(t, 142), (center(t, 7) + center(t, 9)) / 2.0) < 1e-12);
        CHECK(dist(center(t, 144), 3.0 * G - 2.0 * center(t, 7)) < 1e-11);
        CHECK(dist(center(t, 149), 3.0 * G - 2.0 * center(t, 100)) < 1e-10);
        CHECK(dist(center(t, 153), 3.0 * G - 2.0 * center(t, 104)) < 1e-10);
    }
}

TEST_CASE("X65 is the orthocenter of the intouch triangle") {
    for (int i = 0; i < 20; ++i) {
        Triangle t = random_triangle();
        auto s = t.sides();
        double sp = (s[0] + s[1] + s[2]) / 2;
        // contact points: on side i at distance (sp - s[next]) from vertex
        Point2 TA = t[1] + ((sp - s[1]) / s[0]) * (t[2] - t[1]);
        Point2 TB = t[2] + ((sp - s[2]) / s[1]) * (t[0] - t[2]);
        Point2 TC = t[0] + ((sp - s[0]) / s[2]) * (t[1] - t[0]);
        Point2 I = incenter_of(t);
        Point2 ortho = TA + TB + TC - 2.0 * I;  // contact triangle inscribed in incircle
        CHECK(dist(center(t, 65), ortho) < 1e-11);
    }
}

TEST_CASE("X99 is the fourth intersection of circumcircle and Steiner circumellipse") {
    Triangle t{{Point2{0.3, 0.1}, Point2{4.2, 0.5}, Point2{1.1, 3.3}}};
    Point2 O = circumcenter_of(t);
    double R = metrics(t).circumradius;
    Point2 G = (t[0] + t[1] + t[2]) / 3.0;
    // Steiner circumellipse: the conic centered at G through the vertices
    PointList pts = {t[0], t[1], t[2],
                     2.0 * G - t[0], 2.0 * G - t[1], 2.0 * G - t[2]};
    ConicFit steiner = fit_conic(pts);
    CHECK(steiner.residual < 1e-12);
    Point2 x99 = center(t, 99);
    CHECK(std::abs(dist(x99, O) - R) < 1e-11);
    CHECK(std::abs(steiner.conic.eval(x99)) < 1e-11);
    for (int v = 0; v < 3; ++v) CHECK(dist(x99, t[v]) > 1e-3);
}

TEST_CASE("X110 is the Euler reflection point") {
    for (int i = 0; i < 10; ++i) {
        Triangle t = random_triangle();
        Point2 O = circumcenter_of(t);
        Point2 H = t[0] + t[1] + t[2] - 2.0 * O;
        auto reflect_line = [](Point2 p, Point2 d, Point2 q, Point2 e) {
            e = normalized(e);
            auto refl = [&](Point2 X) {
                Point2 w = X - q;
                return q + 2.0 * dot(w, e) * e - w;
            };
            Point2 p2 = refl(p);
            return std::pair<Point2, Point2>{p2, refl(p + d) - p2};
        };
        auto [p1, d1] = reflect_line(O, H - O, t[1], t[2] - t[1]);
        auto [p2, d2] = reflect_line(O, H - O, t[2], t[0] - t[2]);
        // intersect the two reflected Euler lines
        double det = cross(d1, d2);
        if (std::abs(det) < 1e-9) continue;
        double s = cross(p2 - p1, d2) / det;
        Point2 E = p1 + s * d1;
        CHECK(dist(center(t, 110), E) < 1e-9);
    }
}

TEST_CASE("isogonic and isodynamic points") {
    for (int i = 0; i < 15; ++i) {
        Triangle t = random_triangle();
        auto m = metrics(t);
        if (m.angle[0] > 2 * M_PI / 3 || m.angle[1] > 2 * M_PI / 3 ||
            m.angle[2] > 2 * M_PI / 3)
            continue;
        // Fermat point: gradient of the total distance vanishes
        Point2 f = center(t, 13);
        Point2 g{0, 0};
        for (int v = 0; v < 3; ++v) g += normalized(f - t[v]);
        CHECK(norm(g) < 1e-9);
        // isodynamic points: distances inversely proportional to the sides
        auto s = t.sides();
        for (int k : {15, 16}) {
            Point2 p = center(t, k);
            double v0 = s[0] * dist(p, t[0]);
            double v1 = s[1] * dist(p, t[1]);
            double v2 = s[2] * dist(p, t[2]);
            CHECK(v0 == doctest::Approx(v1).epsilon(1e-9));
            CHECK(v1 == doctest::Approx(v2).epsilon(1e-9));
        }
    }
}

TEST_CASE("similarity equivariance for every registered center") {
    const auto& reg = CenterRegistry::standard();
    Triangle t{{Point2{0.3, 0.1}, Point2{4.2, 0.5}, Point2{1.1, 3.3}}};
    const double ang = 0.83, sc = 1.7;
    const Point2 shift{0.6, -1.2};
    auto sigma = [&](const Point2& p) { return rotated(p, ang) * sc + shift; };
    Triangle ts{{sigma(t[0]), sigma(t[1]), sigma(t[2])}};
    for (const auto& [k, spec] : reg.all()) {
        Point2 lhs = reg.center(ts, k);
        Point2 rhs = sigma(reg.center(t, k));
        double scale = std::max(1.0, norm(rhs));
        INFO("center X(", k, ")");
        CHECK(dist(lhs, rhs) / scale < 1e-10);
    }
}

TEST_CASE("stationary centers over their families") {
    for (double t : {0.3, 1.2, 2.8, 4.0, 5.5}) {
        CHECK(norm(center(incircle_orbit(2, 1, t), 1)) < 1e-12);
        CHECK(norm(center(circumellipse_orbit(2, 1, t), 3)) < 1e-12);
        CHECK(norm(center(homothetic_orbit(2, 1, t), 2)) < 1e-13);
    }
    // the mittenpunkt is stationary over the confocal family
    Point2 x9 = center(confocal_orbit(2, 1, 0.4), 9);
    for (double t : {1.0, 2.2, 3.7, 5.9})
        CHECK(dist(center(confocal_orbit(2, 1, t), 9), x9) < 1e-11);
    CHECK(norm(x9) < 1e-11);
}

TEST_CASE("excentral triangle") {
    // equilateral: excentral is equilateral with circumradius 2R
    Triangle eq{{Point2{1, 0}, Point2{-0.5, std::sqrt(3.0) / 2}, Point2{-0.5, -std::sqrt(3.0) / 2}}};
    Triangle ex = excentral_triangle(eq);
    CHECK(metrics(ex).circumradius == doctest::Approx(2.0).epsilon(1e-12));

    // excentral circumcircle of the poristic family: radius 2R centered at X40
    for (double t : {0.4, 2.1}) {
        Triangle tr = poristic_orbit(1.5, 2.0 / 3.0, t);
        Triangle ex2 = excentral_triangle(tr);
        Point2 x40 = center(tr, 40);
        CHECK(metrics(ex2).circumradius == doctest::Approx(3.0).epsilon(1e-10));
        CHECK(dist(circumcenter_of(ex2), x40) < 1e-10);
    }

    // orthic of the excentral recovers the reference
    for (int i = 0; i < 10; ++i) {
        Triangle t = random_triangle();
        Triangle back = orthic_triangle(excentral_triangle(t));
        double worst = 0;
        for (int v = 0; v < 3; ++v) {
            double best = 1e300;
            for (int w = 0; w < 3; ++w) best = std::min(best, dist(back[v], t[w]));
            worst = std::max(worst, best);
        }
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("orthic triangle invariants over family II") {
    for (double t : {0.2, 1.5, 3.1, 4.9}) {
        Triangle tr = circumellipse_orbit(2, 1, t);
        Triangle h = orthic_triangle(tr);
        auto m = metrics(h);
        CHECK(m.circumradius == doctest::Approx(1.5).epsilon(1e-11));
        CHECK(m.inradius == doctest::Approx(2.0 / 3.0).epsilon(1e-11));
        // X4 of an acute reference is X1 of its orthic; X5 is X3 of the orthic
        CHECK(dist(center(tr, 4), incenter_of(h)) < 1e-10);
        CHECK(dist(center(tr, 5), circumcenter_of(h)) < 1e-10);
    }
    // equilateral orthic is the medial triangle
    Triangle eq{{Point2{1, 0}, Point2{-0.5, std::sqrt(3.0) / 2}, Point2{-0.5, -std::sqrt(3.0) / 2}}};
    Triangle h = orthic_triangle(eq);
    CHECK(dist(h[0], (eq[1] + eq[2]) / 2.0) < 1e-14);
    CHECK_THROWS_AS(orthic_triangle(Triangle{{Point2{0, 0}, Point2{4, 0}, Point2{0, 3}}}),
                    std::domain_error);
}

TEST_CASE("brocard points") {
    // equilateral: both coincide with the centroid
    Triangle eq{{Point2{1, 0}, Point2{-0.5, std::sqrt(3.0) / 2}, Point2{-0.5, -std::sqrt(3.0) / 2}}};
    auto [e1, e2] = brocard_points(eq);
    CHECK(norm(e1) < 1e-13);
    CHECK(norm(e2) < 1e-13);

    // both points subtend angle omega = atan(4A/L2): the first at each vertex
    // toward the next vertex in index order, the second toward the previous
    for (int i = 0; i < 15; ++i) {
        Triangle t = random_triangle();
        auto m = metrics(t);
        auto [o1, o2] = brocard_points(t);
        auto ang = [](Point2 u, Point2 v) {
            return std::acos(std::clamp(dot(normalized(u), normalized(v)), -1.0, 1.0));
        };
        double w = m.brocard_angle;
        for (int v = 0; v < 3; ++v) {
            CHECK(ang(o1 - t[v], t[(v + 1) % 3] - t[v]) == doctest::Approx(w).epsilon(1e-9));
            CHECK(ang(o2 - t[v], t[(v + 2) % 3] - t[v]) == doctest::Approx(w).epsilon(1e-9));
        }
    }

    // stationary over the Brocard porism, at the inellipse foci
    ConicPair bp = make_brocard_pair(1.0, 0.3);
    auto [f1, f2] = brocard_points(brocard_orbit(bp, 0.4));
    for (double t : {1.1, 2.8, 4.2}) {
        auto [g1, g2] = brocard_points(brocard_orbit(bp, t));
        CHECK(std::min(dist(g1, f1), dist(g1, f2)) < 1e-8);
        CHECK(std::min(dist(g2, f1), dist(g2, f2)) < 1e-8);
    }
    // foci of the inner conic
    double c = std::sqrt(bp.inner.a * bp.inner.a - bp.inner.b * bp.inner.b);
    Point2 fa = bp.inner.to_world({c, 0});
    Point2 fb = bp.inner.to_world({-c, 0});
    CHECK(std::min(dist(f1, fa), dist(f1, fb)) < 1e-9);
    CHECK(std::min(dist(f2, fa), dist(f2, fb)) < 1e-9);

    // X39 is the midpoint of the Brocard points
    for (int i = 0; i < 10; ++i) {
        Triangle t = random_triangle();
        auto [o1, o2] = brocard_points(t);
        CHECK(dist(center(t, 39), (o1 + o2) / 2.0) < 1e-11);
    }
}

TEST_CASE("registry extension file") {
    CenterRegistry reg = CenterRegistry::standard();
    reg.load_extension_text("365, sqrt-sidelength center, sqrt(s1)\n"
                            "# comment line\n"
                            "1001, linear combo, (s2 + s3 - s1) / 2\n");
    CHECK(reg.contains(365));
    CHECK(reg.contains(1001));
    Triangle t = random_triangle();
    // X(1001) entry equals X(9) up to the projective factor 1/2
    CHECK(dist(reg.center(t, 1001), center(t, 9)) < 1e-12);
    Point2 p365 = reg.center(t, 365);
    CHECK(std::isfinite(p365.x));
    CHECK_THROWS_AS(parse_trilinear_expression("s1 + bogus"), std::invalid_argument);
    CHECK_THROWS_AS(parse_trilinear_expression("s1 + "), std::invalid_argument);
    CHECK_THROWS_AS(reg.load_extension_text("7, missing expression column"),
                    std::invalid_argument);
}
