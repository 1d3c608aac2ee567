#include "poncelet/geometry.hpp"

namespace poncelet {

double Ellipse::boundary_residual(const Point2& p) const {
    // exact for circles; for ellipses, implicit value rescaled by the local
    // gradient so the result is a length
    Point2 l = to_local(p);
    double f = l.x * l.x / (a * a) + l.y * l.y / (b * b) - 1.0;
    double gx = 2.0 * l.x / (a * a), gy = 2.0 * l.y / (b * b);
    double g = std::hypot(gx, gy);
    if (g < 1e-300) return std::abs(f) * std::min(a, b);
    return std::abs(f) / g;
}

double Ellipse::line_tangency_residual(const Line& line) const {
    // express the line in the ellipse frame as u x + v y = w
    Point2 nl = rotated(line.n, -angle);
    double w = line.c - dot(line.n, center);
    // tangency iff (a u)^2 + (b v)^2 = w^2; convert back to a length
    double rad = std::hypot(a * nl.x, b * nl.y);
    return std::abs(rad - std::abs(w));
}

TriangleMetrics metrics(const Triangle& t) {
    TriangleMetrics m;
    m.side = t.sides();
    const double s1 = m.side[0], s2 = m.side[1], s3 = m.side[2];
    m.area = t.area();
    if (!(m.area > 0.0) || !std::isfinite(m.area))
        throw std::domain_error("degenerate triangle: collinear vertices");
    m.perimeter = s1 + s2 + s3;
    m.semiperimeter = 0.5 * m.perimeter;
    m.inradius = m.area / m.semiperimeter;
    m.circumradius = s1 * s2 * s3 / (4.0 * m.area);
    m.sum_sq_sides = s1 * s1 + s2 * s2 + s3 * s3;
    m.brocard_angle = std::atan2(4.0 * m.area, m.sum_sq_sides);
    auto ang = [](double sa, double sb, double sc) {
        double c = (sb * sb + sc * sc - sa * sa) / (2.0 * sb * sc);
        c = std::clamp(c, -1.0, 1.0);
        return std::acos(c);
    };
    m.angle = {ang(s1, s2, s3), ang(s2, s3, s1), ang(s3, s1, s2)};
    return m;
}

}  // namespace poncelet
