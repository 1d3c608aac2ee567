#pragma once

#include <cmath>
#include <random>

#include "poncelet/geometry.hpp"

namespace testutil {

using poncelet::Point2;
using poncelet::Triangle;

inline std::mt19937& rng() {
    static std::mt19937 gen(987654321u);
    return gen;
}

inline double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng());
}

// random non-degenerate triangle with sides O(1)
inline Triangle random_triangle() {
    for (;;) {
        Triangle t;
        for (int i = 0; i < 3; ++i) t[i] = {uniform(-2, 2), uniform(-2, 2)};
        if (t.area() > 0.2) return t;
    }
}

inline Point2 circumcenter_of(const Triangle& t) {
    const Point2 &A = t[0], &B = t[1], &C = t[2];
    double d = 2.0 * (A.x * (B.y - C.y) + B.x * (C.y - A.y) + C.x * (A.y - B.y));
    double ux = (dot(A, A) * (B.y - C.y) + dot(B, B) * (C.y - A.y) + dot(C, C) * (A.y - B.y)) / d;
    double uy = (dot(A, A) * (C.x - B.x) + dot(B, B) * (A.x - C.x) + dot(C, C) * (B.x - A.x)) / d;
    return {ux, uy};
}

inline Point2 incenter_of(const Triangle& t) {
    auto s = t.sides();
    return (s[0] * t[0] + s[1] * t[1] + s[2] * t[2]) / (s[0] + s[1] + s[2]);
}

inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

}  // namespace testutil
