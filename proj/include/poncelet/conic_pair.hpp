#pragma once

#include <optional>
#include <string>

#include "poncelet/conic_core.hpp"
#include "poncelet/geometry.hpp"

namespace poncelet {

enum class Family { Confocal, Incircle, Circumellipse, Homothetic, Poristic, Brocard };

std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);

// Outer/inner conic pair carrying a Poncelet triangle family. The four
// concentric families are axis-aligned and centered at the origin; the
// poristic pair is two circles with the incircle offset to (d, 0); the
// Brocard pair is the circumcircle plus the Brocard inellipse.
struct ConicPair {
    Family family = Family::Incircle;
    Ellipse outer;
    Ellipse inner;

    // generator parameters
    double a = 0.0, b = 0.0;      // concentric families
    double R = 0.0, r = 0.0, d = 0.0;  // poristic
    double omega = 0.0;           // brocard

    double closure_residual() const;  // Cayley residual where applicable
};

ConicPair make_confocal_pair(double a, double b);
ConicPair make_incircle_pair(double a, double b);
ConicPair make_circumellipse_pair(double a, double b);  // outer circle R = a+b, inner (a,b)
ConicPair make_homothetic_pair(double a, double b);
ConicPair make_poristic_pair(double R, double r);       // d = sqrt(R(R-2r))
ConicPair make_brocard_pair(double R, double omega);    // 0 < omega < pi/6

}  // namespace poncelet
