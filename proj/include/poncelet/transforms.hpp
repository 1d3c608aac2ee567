#pragma once

#include <optional>
#include <string>

#include "poncelet/conic_pair.hpp"
#include "poncelet/orbits.hpp"

namespace poncelet {

struct PlanarMap {
    enum class Kind { Affine, Similarity, Rigid } kind = Kind::Affine;
    // x -> M x + t
    std::array<double, 4> m{1, 0, 0, 1};  // row major
    Point2 t;

    Point2 apply(const Point2& p) const {
        return {m[0] * p.x + m[1] * p.y + t.x, m[2] * p.x + m[3] * p.y + t.y};
    }
    Triangle apply(const Triangle& tr) const {
        return {{apply(tr[0]), apply(tr[1]), apply(tr[2])}};
    }
    double det() const { return m[0] * m[3] - m[1] * m[2]; }
};

struct Certificate {
    std::string relation;
    int samples = 0;
    double max_discrepancy = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Thm 3: fixed affine image of the confocal pair onto an ellipse-incircle pair
std::pair<PlanarMap, ConicPair> affine_image_I(double alpha, double beta);
// Thm 5: fixed affine image onto a circumcircle-inellipse pair
std::pair<PlanarMap, ConicPair> affine_image_II(double alpha, double beta);

// Thm 2: in the frame centered at X1 facing X3, family I triangles are the
// poristic family with (R, r, d) = ((a+b)/2, ab/(a+b), (a-b)/2)
Certificate rotation_certificate_I(double a, double b, int samples);
// Thm 6: family II orthic triangles, in the frame centered at X5(reference)
// facing X4, are the poristic family with the same parameters
Certificate rotation_certificate_II(double a, double b, int samples);
// Thm 7: family III triangle shapes match the Brocard porism with
// omega = acot(sqrt(3)(a^2+b^2)/(2ab)) under a variable similarity
Certificate similarity_certificate_III(double a, double b, int samples);

struct IsolationReport {
    double residual_iii_vs_i = 0.0;       // best fixed affine map, family III -> family I
    double residual_control_identity = 0.0;   // family I -> family I
    double residual_control_confocal = 0.0;   // confocal -> family I (Thm 3 map)
    bool isolated = false;
};

// numeric falsification probe for the isolated clique claim: no single fixed
// affine map carries family III triangles into family I
IsolationReport group_isolation_check(double a, double b, int samples = 24);

// conic measurements used by the kinship observations
struct MeasuredConic {
    double axis_major = 0.0;
    double axis_minor = 0.0;
    double spread = 0.0;     // max axis variation over the sweep
    double angle_variation = 0.0;
};

// circumconic of the poristic family centered on the fixed incenter
MeasuredConic obs1_poristic_circumconic(double R, double r, int samples);
// inconic of family II triangles centered on the common circumcenter
MeasuredConic obs2_familyII_inconic(double a, double b, int samples);
// MacBeath inconic of family II triangles (center X5, foci X3 and X4)
MeasuredConic obs3_familyII_macbeath(double a, double b, int samples);

// unique conic through the triangle's vertices with the prescribed center
std::optional<Ellipse> circumconic_centered(const Triangle& t, const Point2& ctr);
// unique inconic of the triangle with the prescribed center
std::optional<Ellipse> inconic_centered(const Triangle& t, const Point2& ctr);

}  // namespace poncelet
