#pragma once

#include <optional>
#include <span>
#include <string>

#include "poncelet/geometry.hpp"

namespace poncelet {

// N=3 closure relation for a concentric, axis-aligned ellipse pair:
// inner_a/outer_a + inner_b/outer_b - 1. Zero means the pair carries a
// one-parameter family of triangles.
double cayley_residual(double outer_a, double outer_b, double inner_a, double inner_b);

// radius of the fixed incircle of the ellipse-incircle family
double incircle_radius(double a, double b);

// caustic of the confocal pair (elliptic billiard) admitting 3-periodics
std::pair<double, double> confocal_caustic(double alpha, double beta);

// Implicit conic A x^2 + B xy + C y^2 + D x + E y + F = 0, |coeffs| = 1.
struct ConicImplicit {
    std::array<double, 6> c{};  // A,B,C,D,E,F

    double eval(const Point2& p) const {
        return c[0] * p.x * p.x + c[1] * p.x * p.y + c[2] * p.y * p.y +
               c[3] * p.x + c[4] * p.y + c[5];
    }
    double discriminant() const { return c[1] * c[1] - 4.0 * c[0] * c[2]; }
    void normalize();
    // center and semi-axes of a central conic; nullopt when degenerate
    std::optional<Ellipse> as_ellipse() const;
};

// Quartic in the even basis {x^4, x^2 y^2, y^4, x^2, y^2, 1} when symmetric,
// otherwise the full 15-monomial basis x^i y^j with i + j <= 4.
struct QuarticImplicit {
    bool symmetric = true;
    std::array<double, 6> even{};           // used when symmetric
    std::array<double, 15> full{};          // used otherwise, graded lex

    static QuarticImplicit from_even(const std::array<double, 6>& e);
    double eval(const Point2& p) const;
    void normalize();                       // unit norm, positive leading sign
    // angle (radians) between the two normalized coefficient vectors
    static double coefficient_angle(const QuarticImplicit& p, const QuarticImplicit& q);
};

struct ConicFit {
    ConicImplicit conic;      // in the original (absolute) coordinates
    double residual = 0.0;    // RMS of |conic| on centroid/unit-RMS normalized coords
    double max_residual = 0.0;
    Point2 centroid;          // normalization applied before fitting
    double scale = 1.0;
};

struct QuarticFit {
    QuarticImplicit quartic;  // in normalized coordinates
    double residual = 0.0;
    double max_residual = 0.0;
    Point2 centroid;
    double scale = 1.0;
};

// Least-squares implicit conic through >= 6 points (smallest singular
// direction of the monomial design matrix). Points are internally translated
// to their centroid and scaled to unit RMS radius.
ConicFit fit_conic(std::span<const Point2> pts);

QuarticFit fit_quartic(std::span<const Point2> pts, bool symmetric = true);

enum class LocusClass { StationaryPoint, Circle, Ellipse, Quartic, NonConic };

std::string to_string(LocusClass c);

struct ClassifyTolerances {
    double point_diameter = 1e-9;   // times scale
    double fit_residual = 1e-7;
    double circle_axis_ratio = 1e-6;
};

struct Classification {
    LocusClass label = LocusClass::NonConic;
    std::optional<Ellipse> shape;       // for Circle / Ellipse
    std::optional<Point2> point;        // for StationaryPoint
    double conic_residual = 0.0;
    double quartic_residual = 0.0;
    std::optional<ConicFit> conic_fit;
    std::optional<QuarticFit> quartic_fit;
};

Classification classify_locus(std::span<const Point2> pts, double scale,
                              const ClassifyTolerances& tol = {});

}  // namespace poncelet
