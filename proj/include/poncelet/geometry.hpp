#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace poncelet {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    Point2() = default;
    Point2(double x_, double y_) : x(x_), y(y_) {}

    Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
    Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
    Point2 operator*(double s) const { return {x * s, y * s}; }
    Point2 operator/(double s) const { return {x / s, y / s}; }
    Point2& operator+=(const Point2& o) { x += o.x; y += o.y; return *this; }
    Point2& operator-=(const Point2& o) { x -= o.x; y -= o.y; return *this; }
};

inline Point2 operator*(double s, const Point2& p) { return p * s; }
inline double dot(const Point2& u, const Point2& v) { return u.x * v.x + u.y * v.y; }
inline double cross(const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; }
inline double norm(const Point2& p) { return std::hypot(p.x, p.y); }
inline double dist(const Point2& p, const Point2& q) { return norm(p - q); }
inline Point2 normalized(const Point2& p) {
    double n = norm(p);
    if (n == 0.0) throw std::domain_error("cannot normalize zero vector");
    return p / n;
}
inline Point2 rotated(const Point2& p, double ang) {
    double c = std::cos(ang), s = std::sin(ang);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

// Line in normal form n.p = c with |n| = 1.
struct Line {
    Point2 n;
    double c = 0.0;

    static Line through(const Point2& p, const Point2& q) {
        Point2 d = q - p;
        double len = norm(d);
        if (len == 0.0) throw std::domain_error("line through coincident points");
        Point2 nn{d.y / len, -d.x / len};
        return {nn, dot(nn, p)};
    }
    double signed_distance(const Point2& p) const { return dot(n, p) - c; }
};

// Ellipse with center, semi-axis a along direction `angle`, semi-axis b orthogonal.
// a == b gives a circle, angle irrelevant then.
struct Ellipse {
    Point2 center;
    double a = 1.0;
    double b = 1.0;
    double angle = 0.0;

    Ellipse() = default;
    Ellipse(double a_, double b_, Point2 c = {0.0, 0.0}, double ang = 0.0)
        : center(c), a(a_), b(b_), angle(ang) {
        if (!(a_ > 0.0) || !(b_ > 0.0))
            throw std::domain_error("ellipse semi-axes must be positive");
    }

    bool is_circle(double tol = 1e-12) const { return std::abs(a - b) <= tol * a; }

    Point2 to_local(const Point2& p) const { return rotated(p - center, -angle); }
    Point2 to_world(const Point2& p) const { return rotated(p, angle) + center; }

    // point at parameter t
    Point2 at(double t) const { return to_world({a * std::cos(t), b * std::sin(t)}); }

    // parameter of (a point near) the ellipse
    double param_of(const Point2& p) const {
        Point2 l = to_local(p);
        return std::atan2(l.y / b, l.x / a);
    }

    // implicit value x^2/a^2 + y^2/b^2 - 1 in the local frame
    double implicit(const Point2& p) const {
        Point2 l = to_local(p);
        return l.x * l.x / (a * a) + l.y * l.y / (b * b) - 1.0;
    }

    // distance-like residual of a point from the ellipse boundary
    double boundary_residual(const Point2& p) const;

    // geometric residual of a line from tangency
    double line_tangency_residual(const Line& line) const;
};

struct Triangle {
    std::array<Point2, 3> v;

    const Point2& operator[](int i) const { return v[static_cast<size_t>(i)]; }
    Point2& operator[](int i) { return v[static_cast<size_t>(i)]; }

    // side s_i is opposite vertex i
    std::array<double, 3> sides() const {
        return {dist(v[1], v[2]), dist(v[2], v[0]), dist(v[0], v[1])};
    }
    double signed_area() const {
        return 0.5 * cross(v[1] - v[0], v[2] - v[0]);
    }
    double area() const { return std::abs(signed_area()); }
};

struct TriangleMetrics {
    std::array<double, 3> side;     // s1, s2, s3
    std::array<double, 3> angle;    // internal angles, radians
    double area = 0.0;
    double perimeter = 0.0;
    double semiperimeter = 0.0;
    double inradius = 0.0;
    double circumradius = 0.0;
    double brocard_angle = 0.0;     // tan(w) = 4A / L2
    double sum_sq_sides = 0.0;      // L2
};

TriangleMetrics metrics(const Triangle& t);

using PointList = std::vector<Point2>;

}  // namespace poncelet
