#pragma once

#include "poncelet/conic_pair.hpp"
#include "poncelet/geometry.hpp"

namespace poncelet {

// Closed-form 3-periodic vertices. P1 = (a cos t, b sin t) except for the
// circumellipse family, where P1 = (a+b)(cos t, sin t).
Triangle confocal_orbit(double a, double b, double t);
Triangle incircle_orbit(double a, double b, double t);
Triangle circumellipse_orbit(double a, double b, double t);
Triangle homothetic_orbit(double a, double b, double t);

// Next vertex of the Poncelet polygon from P on the outer conic: take the
// tangent to the inner conic on the chosen side and intersect it again with
// the outer conic. branch = +1 walks counterclockwise, -1 clockwise.
Point2 poncelet_step(const ConicPair& pair, const Point2& P, int branch = +1);

struct NGonOrbit {
    std::vector<Point2> vertices;
    double closure_residual = 0.0;
};

// N-gon orbit generated by poncelet_step from the outer-conic point at
// parameter t. For N = 3 pairs this closes by the porism.
NGonOrbit step_orbit(const ConicPair& pair, double t, int n = 3);

Triangle poristic_orbit(double R, double r, double t);
Triangle brocard_orbit(double R, double omega, double t);
Triangle brocard_orbit(const ConicPair& brocard_pair, double t);

// triangle of the family carried by the pair, at parameter t
Triangle orbit(const ConicPair& pair, double t);

// Bisection on the inner conic's scale until the orbit from (a, 0) closes
// after n steps with winding number 1. The (a, b) arguments generate the
// family: for Incircle/Homothetic/Confocal they are the outer ellipse; for
// Circumellipse the outer circle has radius a + b and the caustic is the
// scaled (a, b) ellipse.
ConicPair tune_caustic_for_closure(const Ellipse& outer, Family family, int n);

// residual diagnostics for a polygon against its pair
double vertex_on_outer_residual(const ConicPair& pair, const Point2& v);
double side_tangency_residual(const ConicPair& pair, const Point2& p, const Point2& q);
double max_orbit_residual(const ConicPair& pair, const std::vector<Point2>& poly);

// polygon measures used by the N > 3 sweeps
double ngon_perimeter(const std::vector<Point2>& poly);
double ngon_area(const std::vector<Point2>& poly);
double ngon_sum_sq_sides(const std::vector<Point2>& poly);
double ngon_sum_cosines(const std::vector<Point2>& poly);

}  // namespace poncelet
