#pragma once

#include <functional>
#include <map>
#include <string>

#include "poncelet/geometry.hpp"

namespace poncelet {

// First trilinear coordinate as a function of the sidelengths (s1, s2, s3);
// the other two coordinates follow by cyclic rotation of the arguments.
using TrilinearFn = std::function<double(double, double, double)>;

struct CenterSpec {
    int k = 0;
    std::string name;
    TrilinearFn first;
};

// Cartesian point of the trilinear triple (u : v : w) on triangle T.
// P = (u s1 PA + v s2 PB + w s3 PC) / (u s1 + v s2 + w s3).
Point2 trilinear_to_cartesian(const Triangle& t, double u, double v, double w);

class CenterRegistry {
  public:
    // registry with every center required at startup
    static const CenterRegistry& standard();

    const CenterSpec& at(int k) const;
    bool contains(int k) const { return specs_.count(k) > 0; }
    const std::map<int, CenterSpec>& all() const { return specs_; }

    void add(CenterSpec spec);
    // extension table: lines "k, name, expression" with sidelength symbols
    // s1 s2 s3, arithmetic + - * / ^, sqrt(), parentheses
    void load_extension_file(const std::string& path);
    void load_extension_text(const std::string& text);

    Point2 center(const Triangle& t, int k) const;

    static const std::vector<int>& required_indices();

  private:
    std::map<int, CenterSpec> specs_;
};

// convenience: evaluate X_k with the standard registry
Point2 center(const Triangle& t, int k);

Triangle excentral_triangle(const Triangle& t);
Triangle orthic_triangle(const Triangle& t);
std::pair<Point2, Point2> brocard_points(const Triangle& t);

// parse a trilinear expression in s1, s2, s3 (used by the extension file)
TrilinearFn parse_trilinear_expression(const std::string& expr);

}  // namespace poncelet
