#include "poncelet/orbits.hpp"

#include <cmath>

namespace poncelet {

namespace {

void check_axes(double a, double b, bool strict) {
    if (strict ? !(a > b) : !(a >= b))
        throw std::domain_error("orbit: requires a >= b (strict for confocal)");
    if (!(b > 0.0)) throw std::domain_error("orbit: semi-axes must be positive");
}

void check_area(const Triangle& t, double scale) {
    if (!(t.area() > 1e-12 * scale * scale))
        throw std::domain_error("orbit: degenerate parameter (collapsed triangle)");
}

}  // namespace

Triangle confocal_orbit(double a, double b, double t) {
    check_axes(a, b, true);
    const double x1 = a * std::cos(t), y1 = b * std::sin(t);
    const double a2 = a * a, b2 = b * b;
    const double c2 = a2 - b2;
    const double d1 = (a * b) * (a * b) / c2;
    const double d2 = b2 * b2 * x1 * x1 + a2 * a2 * y1 * y1;
    const double delta = std::sqrt(a2 * a2 - a2 * b2 + b2 * b2);
    const double delta1 = std::sqrt(2.0 * delta - a2 - b2);
    const double k1 = d1 * d1 * delta1 * delta1 / d2;
    const double under = std::max(d2 - d1 * d1 * delta1 * delta1, 0.0);
    const double k2 = d1 * delta1 * std::sqrt(under) / d2;

    auto other = [&](double k2s) -> Point2 {
        const double x13 = x1 * x1 * x1, y13 = y1 * y1 * y1;
        const double x = -b2 * b2 * ((a2 + b2) * k1 - a2) * x13 -
                         2.0 * a2 * a2 * b2 * k2s * x1 * x1 * y1 +
                         a2 * a2 * ((a2 - 3.0 * b2) * k1 + b2) * x1 * y1 * y1 -
                         2.0 * a2 * a2 * a2 * k2s * y13;
        const double y = 2.0 * b2 * b2 * b2 * k2s * x13 +
                         b2 * b2 * ((b2 - 3.0 * a2) * k1 + a2) * x1 * x1 * y1 +
                         2.0 * a2 * b2 * b2 * k2s * x1 * y1 * y1 -
                         a2 * a2 * ((a2 + b2) * k1 - b2) * y13;
        const double q = b2 * b2 * (a2 - c2 * k1) * x1 * x1 +
                         a2 * a2 * (b2 + c2 * k1) * y1 * y1 -
                         2.0 * a2 * b2 * c2 * k2s * x1 * y1;
        if (std::abs(q) < 1e-14 * a2 * a2 * a2)
            throw std::domain_error("confocal_orbit: degenerate parameter");
        return {x / q, y / q};
    };
    Triangle tr{{Point2{x1, y1}, other(k2), other(-k2)}};
    check_area(tr, a);
    return tr;
}

Triangle incircle_orbit(double a, double b, double t) {
    check_axes(a, b, false);
    const double x1 = a * std::cos(t), y1 = b * std::sin(t);
    const double a2 = a * a, b2 = b * b;
    const double k = std::sqrt(a * a2 * (a + 2.0 * b) * x1 * x1 +
                               a2 * b * (2.0 * a + b) * y1 * y1);
    const double q2 = 2.0 * b2 * (a + b) * ((a2 - b2) * x1 * x1 + a2 * b2);
    const double q3 = (b2 * a2 * a2 - y1 * y1 * a2 * a2 + 2.0 * a2 * b2 * b2 +
                       a2 * b2 * x1 * x1 - 2.0 * x1 * x1 * b2 * b2) * (a + b);
    if (std::abs(q2) < 1e-14 || std::abs(q3) < 1e-14)
        throw std::domain_error("incircle_orbit: degenerate parameter");
    Triangle tr;
    tr[0] = {x1, y1};
    tr[1] = {2.0 * a2 * b2 * (-a2 * b * x1 + k * y1) / q2,
             -2.0 * a * b2 * b * (a2 * b * y1 + k * x1) / q2};
    tr[2] = {-2.0 * a2 * b2 * (a2 * b * x1 + k * y1) / q3,
             2.0 * b2 * b * a * (-a2 * b * y1 + k * x1) / q3};
    check_area(tr, a);
    return tr;
}

Triangle circumellipse_orbit(double a, double b, double t) {
    check_axes(a, b, false);
    const double R = a + b;
    const double x1 = R * std::cos(t), y1 = R * std::sin(t);
    const double a2 = a * a, b2 = b * b;
    const double sx = std::sqrt(std::max(a * a2 * (a + 2.0 * b) - (a2 - b2) * x1 * x1, 0.0));
    const double sy = std::sqrt((a2 - b2) * y1 * y1 + b * b2 * (2.0 * a + b));
    const double kx = a / ((-a + b) * x1 * x1 + a2 * (a + b));
    const double ky = b / ((a - b) * y1 * y1 + b2 * (a + b));
    Triangle tr;
    tr[0] = {x1, y1};
    tr[1] = {(-b2 * x1 + y1 * sx) * kx, -(y1 * a2 + x1 * sy) * ky};
    tr[2] = {-(b2 * x1 + y1 * sx) * kx, (-y1 * a2 + x1 * sy) * ky};
    check_area(tr, R);
    return tr;
}

Triangle homothetic_orbit(double a, double b, double t) {
    check_axes(a, b, false);
    const double x1 = a * std::cos(t), y1 = b * std::sin(t);
    const double s3 = std::sqrt(3.0);
    Triangle tr;
    tr[0] = {x1, y1};
    tr[1] = {(s3 * a * y1 - b * x1) / (2.0 * b), (-s3 * b * x1 - a * y1) / (2.0 * a)};
    tr[2] = {(-s3 * a * y1 - b * x1) / (2.0 * b), (s3 * b * x1 - a * y1) / (2.0 * a)};
    check_area(tr, a);
    return tr;
}

Point2 poncelet_step(const ConicPair& pair, const Point2& P, int branch) {
    const Ellipse& out = pair.outer;
    const Ellipse& in = pair.inner;
    if (std::abs(out.implicit(P)) > 1e-8)
        throw std::domain_error("poncelet_step: point not on the outer conic");

    Point2 l = in.to_local(P);
    const double u = l.x / in.a, v = l.y / in.b;
    const double rr = u * u + v * v;
    if (!(rr > 1.0))
        throw std::domain_error("poncelet_step: point inside the inner conic");
    const double base = std::atan2(v, u);
    const double off = std::acos(1.0 / std::sqrt(rr));

    Point2 chosen{};
    bool found = false;
    for (double phi : {base + off, base - off}) {
        Point2 contact = in.to_world({in.a * std::cos(phi), in.b * std::sin(phi)});
        Point2 dir = contact - P;
        double len = norm(dir);
        if (len < 1e-15) continue;
        dir = dir / len;
        // second intersection of P + s dir with the outer conic (first is P)
        const double A = dir.x * dir.x / (out.a * out.a) + dir.y * dir.y / (out.b * out.b);
        const double B = 2.0 * (P.x * dir.x / (out.a * out.a) + P.y * dir.y / (out.b * out.b));
        const double snext = -B / A;
        Point2 V = P + snext * dir;
        // walk orientation: the inner center sits on the left of a ccw side
        const double turn = cross(dir, in.center - P);
        if ((turn > 0.0) == (branch > 0)) {
            chosen = V;
            found = true;
        }
    }
    if (!found) throw std::domain_error("poncelet_step: no tangent on requested branch");
    // re-project exactly onto the outer conic
    return out.at(out.param_of(chosen));
}

NGonOrbit step_orbit(const ConicPair& pair, double t, int n) {
    if (n < 3) throw std::invalid_argument("step_orbit: n >= 3");
    NGonOrbit o;
    Point2 P = pair.outer.at(t);
    o.vertices.push_back(P);
    Point2 cur = P;
    for (int i = 0; i < n - 1; ++i) {
        cur = poncelet_step(pair, cur, +1);
        o.vertices.push_back(cur);
    }
    Point2 back = poncelet_step(pair, cur, +1);
    o.closure_residual = dist(back, P);
    return o;
}

Triangle poristic_orbit(double R, double r, double t) {
    ConicPair pair = make_poristic_pair(R, r);
    NGonOrbit o = step_orbit(pair, t, 3);
    Triangle tr{{o.vertices[0], o.vertices[1], o.vertices[2]}};
    check_area(tr, R);
    return tr;
}

Triangle brocard_orbit(const ConicPair& brocard_pair, double t) {
    NGonOrbit o = step_orbit(brocard_pair, t, 3);
    Triangle tr{{o.vertices[0], o.vertices[1], o.vertices[2]}};
    check_area(tr, brocard_pair.R);
    return tr;
}

Triangle brocard_orbit(double R, double omega, double t) {
    return brocard_orbit(make_brocard_pair(R, omega), t);
}

Triangle orbit(const ConicPair& pair, double t) {
    switch (pair.family) {
        case Family::Confocal: return confocal_orbit(pair.a, pair.b, t);
        case Family::Incircle: return incircle_orbit(pair.a, pair.b, t);
        case Family::Circumellipse: return circumellipse_orbit(pair.a, pair.b, t);
        case Family::Homothetic: return homothetic_orbit(pair.a, pair.b, t);
        case Family::Poristic: return poristic_orbit(pair.R, pair.r, t);
        case Family::Brocard: return brocard_orbit(pair, t);
    }
    throw std::logic_error("orbit: unknown family");
}

namespace {

// total parameter advance of the n-step orbit from (a, 0), minus a full turn
double winding_defect(const ConicPair& pair, int n, Point2* end = nullptr) {
    Point2 P = pair.outer.at(0.0);
    double total = 0.0;
    Point2 cur = P;
    for (int i = 0; i < n; ++i) {
        Point2 nxt = poncelet_step(pair, cur, +1);
        double dt = pair.outer.param_of(nxt) - pair.outer.param_of(cur);
        dt = std::fmod(dt, 2.0 * M_PI);
        if (dt < 0) dt += 2.0 * M_PI;
        total += dt;
        cur = nxt;
    }
    if (end) *end = cur;
    return total - 2.0 * M_PI;
}

ConicPair scaled_pair(const Ellipse& outer, Family family, double s) {
    ConicPair p;
    p.family = family;
    switch (family) {
        case Family::Incircle:
            p.a = outer.a; p.b = outer.b;
            p.outer = outer;
            p.inner = Ellipse(s, s);
            break;
        case Family::Homothetic:
            p.a = outer.a; p.b = outer.b;
            p.outer = outer;
            p.inner = Ellipse(s * outer.a, s * outer.b);
            break;
        case Family::Confocal: {
            // confocal pencil parameter s in (0, b^2)
            p.a = outer.a; p.b = outer.b;
            p.outer = outer;
            p.inner = Ellipse(std::sqrt(outer.a * outer.a - s),
                              std::sqrt(outer.b * outer.b - s));
            break;
        }
        case Family::Circumellipse:
            p.a = outer.a; p.b = outer.b;
            p.R = outer.a + outer.b;
            p.outer = Ellipse(p.R, p.R);
            p.inner = Ellipse(s * outer.a, s * outer.b);
            break;
        default:
            throw std::invalid_argument("tune_caustic_for_closure: unsupported family");
    }
    return p;
}

}  // namespace

ConicPair tune_caustic_for_closure(const Ellipse& outer, Family family, int n) {
    if (n < 3) throw std::invalid_argument("tune_caustic_for_closure: n >= 3");
    double lo, hi;
    switch (family) {
        case Family::Incircle: lo = 1e-6 * outer.b; hi = outer.b * (1.0 - 1e-9); break;
        case Family::Homothetic: lo = 1e-6; hi = 1.0 - 1e-9; break;
        case Family::Circumellipse: lo = 1e-6; hi = (1.0 - 1e-9) * (outer.a + outer.b) / outer.a; break;
        case Family::Confocal: lo = 1e-9 * outer.b * outer.b; hi = outer.b * outer.b * (1.0 - 1e-9); break;
        default: throw std::invalid_argument("tune_caustic_for_closure: unsupported family");
    }
    // caustic grows with s for the scaled families, shrinks for the confocal
    // pencil; the winding defect is monotone either way
    double flo = winding_defect(scaled_pair(outer, family, lo), n);
    double fhi = winding_defect(scaled_pair(outer, family, hi), n);
    if (flo * fhi > 0.0)
        throw std::domain_error("tune_caustic_for_closure: root not bracketed");
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = winding_defect(scaled_pair(outer, family, mid), n);
        if ((fm > 0.0) == (flo > 0.0)) { lo = mid; flo = fm; }
        else hi = mid;
        if (hi - lo < 1e-17 * std::max(1.0, hi)) break;
    }
    ConicPair tuned = scaled_pair(outer, family, 0.5 * (lo + hi));
    Point2 end;
    winding_defect(tuned, n, &end);
    double res = dist(end, tuned.outer.at(0.0));
    if (res > 1e-10 * outer.a)
        throw std::domain_error("tune_caustic_for_closure: no convergence");
    return tuned;
}

double vertex_on_outer_residual(const ConicPair& pair, const Point2& v) {
    return pair.outer.boundary_residual(v);
}

double side_tangency_residual(const ConicPair& pair, const Point2& p, const Point2& q) {
    return pair.inner.line_tangency_residual(Line::through(p, q));
}

double max_orbit_residual(const ConicPair& pair, const std::vector<Point2>& poly) {
    double worst = 0.0;
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        worst = std::max(worst, vertex_on_outer_residual(pair, poly[i]));
        worst = std::max(worst, side_tangency_residual(pair, poly[i], poly[(i + 1) % n]));
    }
    return worst;
}

double ngon_perimeter(const std::vector<Point2>& poly) {
    double s = 0.0;
    for (size_t i = 0; i < poly.size(); ++i) s += dist(poly[i], poly[(i + 1) % poly.size()]);
    return s;
}

double ngon_area(const std::vector<Point2>& poly) {
    double s = 0.0;
    for (size_t i = 0; i < poly.size(); ++i) {
        const Point2& p = poly[i];
        const Point2& q = poly[(i + 1) % poly.size()];
        s += cross(p, q);
    }
    return std::abs(s) / 2.0;
}

double ngon_sum_sq_sides(const std::vector<Point2>& poly) {
    double s = 0.0;
    for (size_t i = 0; i < poly.size(); ++i) {
        double d = dist(poly[i], poly[(i + 1) % poly.size()]);
        s += d * d;
    }
    return s;
}

double ngon_sum_cosines(const std::vector<Point2>& poly) {
    const size_t n = poly.size();
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) {
        Point2 u = poly[(i + n - 1) % n] - poly[i];
        Point2 v = poly[(i + 1) % n] - poly[i];
        s += dot(u, v) / (norm(u) * norm(v));
    }
    return s;
}

}  // namespace poncelet
