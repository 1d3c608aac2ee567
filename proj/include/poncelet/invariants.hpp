#pragma once

#include <functional>
#include <optional>
#include <string>

#include "poncelet/conic_pair.hpp"
#include "poncelet/orbits.hpp"

namespace poncelet {

// measured quantities on one triangle
double sum_cosines(const Triangle& t);
double product_half_sines(const Triangle& t);
double product_cosines(const Triangle& t);
double circumradius_inv(const Triangle& t);
double power_of_center(const Triangle& t);  // |X3|^2 - R^2 about the pair center O
double side_product_over_semiperimeter(const Triangle& t);
double sum_sq_sides(const Triangle& t);
double area_inv(const Triangle& t);
double sum_cotangents(const Triangle& t);
double perimeter_inv(const Triangle& t);

struct InvariantSpec {
    std::string name;
    std::function<double(const Triangle&)> measure;
    // closed-form expected value as a function of the family generator (a, b);
    // empty means constancy-only (no closed form asserted)
    std::function<double(double, double)> expected;
};

struct InvariantReport {
    std::string name;
    int samples = 0;
    int skipped = 0;
    double mean = 0.0;
    std::optional<double> expected;
    double max_abs_dev = 0.0;   // from expected, or from the mean if none
    double max_rel_dev = 0.0;
};

// invariants the paper states for each concentric family
std::vector<InvariantSpec> family_invariants(Family f);

InvariantReport sweep(const ConicPair& pair, const InvariantSpec& spec, int samples);

// N > 3: constancy sweep of a polygon measure over a tuned pair
InvariantReport ngon_constancy_sweep(const ConicPair& pair, int n,
                                     const std::string& name,
                                     const std::function<double(const std::vector<Point2>&)>& measure,
                                     int samples);

}  // namespace poncelet
