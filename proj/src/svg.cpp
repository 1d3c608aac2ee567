#include "poncelet/svg.hpp"

#include <cmath>
#include <sstream>

namespace poncelet {

namespace {

struct Mapper {
    double sx, sy, ox, oy;
    Point2 operator()(const Point2& p) const { return {ox + sx * p.x, oy - sy * p.y}; }
};

void ellipse_path(std::ostream& os, const Ellipse& e, const Mapper& map,
                  const char* stroke, const char* dash) {
    os << "  <path d=\"";
    const int n = 128;
    for (int i = 0; i <= n; ++i) {
        Point2 p = map(e.at(2.0 * M_PI * i / n));
        os << (i == 0 ? "M" : "L") << p.x << " " << p.y << " ";
    }
    os << "Z\" fill=\"none\" stroke=\"" << stroke << "\"";
    if (dash) os << " stroke-dasharray=\"" << dash << "\"";
    os << "/>\n";
}

}  // namespace

std::string locus_svg(const ConicPair& pair, const PointList& samples,
                      const std::optional<ExpectedLocus>& expected,
                      int width, int height) {
    const double extent = 1.15 * std::max({pair.outer.a, pair.outer.b, pair.R});
    Mapper map{width / (2.0 * extent), height / (2.0 * extent) * (width / double(height)),
               width / 2.0, height / 2.0};
    map.sy = map.sx;  // isotropic

    std::ostringstream os;
    os.precision(6);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
       << "\" height=\"" << height << "\">\n"
       << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    ellipse_path(os, pair.outer, map, "black", nullptr);
    ellipse_path(os, pair.inner, map, "#8060c0", nullptr);

    if (expected) {
        if (const auto* ci = std::get_if<ExpectedCircle>(&expected->shape))
            ellipse_path(os, Ellipse(ci->radius, ci->radius, ci->center), map, "#2a9d2a", "6 4");
        else if (const auto* el = std::get_if<ExpectedEllipseAxes>(&expected->shape))
            ellipse_path(os, Ellipse(std::max(el->a, el->b), std::min(el->a, el->b), el->center,
                                     el->a >= el->b ? 0.0 : M_PI / 2.0),
                         map, "#2a9d2a", "6 4");
        else if (const auto* pt = std::get_if<ExpectedPoint>(&expected->shape)) {
            Point2 p = map(pt->at);
            os << "  <circle cx=\"" << p.x << "\" cy=\"" << p.y
               << "\" r=\"5\" fill=\"none\" stroke=\"#2a9d2a\"/>\n";
        }
    }
    for (const auto& s : samples) {
        Point2 p = map(s);
        os << "  <circle cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"1.5\" fill=\"#c03030\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace poncelet
