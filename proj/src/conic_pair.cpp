#include "poncelet/conic_pair.hpp"

#include <cmath>

namespace poncelet {

std::string to_string(Family f) {
    switch (f) {
        case Family::Confocal: return "confocal";
        case Family::Incircle: return "incircle";
        case Family::Circumellipse: return "circumellipse";
        case Family::Homothetic: return "homothetic";
        case Family::Poristic: return "poristic";
        case Family::Brocard: return "brocard";
    }
    return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
    if (s == "confocal" || s == "billiard") return Family::Confocal;
    if (s == "incircle") return Family::Incircle;
    if (s == "circumellipse" || s == "circumcircle") return Family::Circumellipse;
    if (s == "homothetic") return Family::Homothetic;
    if (s == "poristic") return Family::Poristic;
    if (s == "brocard") return Family::Brocard;
    return std::nullopt;
}

double ConicPair::closure_residual() const {
    switch (family) {
        case Family::Confocal:
        case Family::Incircle:
        case Family::Circumellipse:
        case Family::Homothetic:
            return cayley_residual(outer.a, outer.b, inner.a, inner.b);
        case Family::Poristic:
            return d * d - R * (R - 2.0 * r);
        case Family::Brocard:
            return 0.0;  // closure is by construction from a closing seed
    }
    return 0.0;
}

ConicPair make_confocal_pair(double a, double b) {
    auto [ca, cb] = confocal_caustic(a, b);
    ConicPair p;
    p.family = Family::Confocal;
    p.a = a;
    p.b = b;
    p.outer = Ellipse(a, b);
    p.inner = Ellipse(ca, cb);
    return p;
}

ConicPair make_incircle_pair(double a, double b) {
    if (!(a >= b) || !(b > 0.0))
        throw std::domain_error("incircle pair: requires a >= b > 0");
    ConicPair p;
    p.family = Family::Incircle;
    p.a = a;
    p.b = b;
    p.outer = Ellipse(a, b);
    double rr = incircle_radius(a, b);
    p.inner = Ellipse(rr, rr);
    return p;
}

ConicPair make_circumellipse_pair(double a, double b) {
    if (!(a >= b) || !(b > 0.0))
        throw std::domain_error("circumellipse pair: requires a >= b > 0");
    ConicPair p;
    p.family = Family::Circumellipse;
    p.a = a;
    p.b = b;
    p.R = a + b;
    p.outer = Ellipse(a + b, a + b);
    p.inner = Ellipse(a, b);
    return p;
}

ConicPair make_homothetic_pair(double a, double b) {
    if (!(a >= b) || !(b > 0.0))
        throw std::domain_error("homothetic pair: requires a >= b > 0");
    ConicPair p;
    p.family = Family::Homothetic;
    p.a = a;
    p.b = b;
    p.outer = Ellipse(a, b);
    p.inner = Ellipse(a / 2.0, b / 2.0);
    return p;
}

ConicPair make_poristic_pair(double R, double r) {
    // R = 2r is the equilateral porism (d = 0)
    if (!(R >= 2.0 * r) || !(r > 0.0))
        throw std::domain_error("poristic pair: requires R >= 2r > 0");
    ConicPair p;
    p.family = Family::Poristic;
    p.R = R;
    p.r = r;
    p.d = std::sqrt(R * (R - 2.0 * r));
    p.outer = Ellipse(R, R);
    p.inner = Ellipse(r, r, {p.d, 0.0});
    return p;
}

namespace {

// apex angle of the isosceles triangle with Brocard angle omega,
// on the branch A in (0, pi/3]: cot(omega) = cot(A) + 2 tan(A/2)
double apex_from_brocard(double omega) {
    const double target = 1.0 / std::tan(omega);
    auto f = [&](double A) { return 1.0 / std::tan(A) + 2.0 * std::tan(A / 2.0) - target; };
    double lo = 1e-12, hi = M_PI / 3.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (f(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

ConicPair make_brocard_pair(double R, double omega) {
    if (!(omega > 0.0) || !(omega < M_PI / 6.0))
        throw std::domain_error("brocard pair: requires 0 < omega < pi/6");
    if (!(R > 0.0)) throw std::domain_error("brocard pair: R must be positive");

    // seed: isosceles triangle with this Brocard angle inscribed in the circle
    const double A0 = apex_from_brocard(omega);
    Triangle seed;
    seed[0] = {R, 0.0};
    seed[1] = {R * std::cos(M_PI - A0), R * std::sin(M_PI - A0)};
    seed[2] = {R * std::cos(M_PI - A0), -R * std::sin(M_PI - A0)};

    // Brocard points from first/second Brocard trilinears
    auto tri_pt = [&](double u, double v, double w) {
        auto s = seed.sides();
        double den = u * s[0] + v * s[1] + w * s[2];
        return (u * s[0] * seed[0] + v * s[1] * seed[1] + w * s[2] * seed[2]) / den;
    };
    auto s = seed.sides();
    const double sa = s[0], sb = s[1], sc = s[2];
    Point2 om1 = tri_pt(sc / sb, sa / sc, sb / sa);
    Point2 om2 = tri_pt(sb / sc, sc / sa, sa / sb);

    // inellipse with foci at the Brocard points: semi-minor^2 equals the
    // product of focal distances to any tangent (side) line
    Point2 ctr = (om1 + om2) / 2.0;
    double cfoc = dist(om1, om2) / 2.0;
    Line side = Line::through(seed[0], seed[1]);
    double q2 = std::abs(side.signed_distance(om1) * side.signed_distance(om2));
    double q = std::sqrt(q2);
    double p_ax = std::sqrt(q2 + cfoc * cfoc);
    double ang = (cfoc > 1e-15 * R) ? std::atan2((om2 - om1).y, (om2 - om1).x) : 0.0;

    ConicPair pair;
    pair.family = Family::Brocard;
    pair.R = R;
    pair.omega = omega;
    pair.outer = Ellipse(R, R);
    pair.inner = Ellipse(p_ax, q, ctr, ang);
    return pair;
}

}  // namespace poncelet
