#include "poncelet/invariants.hpp"

#include <cmath>

#include "poncelet/centers.hpp"

namespace poncelet {

double sum_cosines(const Triangle& t) {
    auto m = metrics(t);
    return std::cos(m.angle[0]) + std::cos(m.angle[1]) + std::cos(m.angle[2]);
}

double product_half_sines(const Triangle& t) {
    auto m = metrics(t);
    return std::sin(m.angle[0] / 2) * std::sin(m.angle[1] / 2) * std::sin(m.angle[2] / 2);
}

double product_cosines(const Triangle& t) {
    auto m = metrics(t);
    return std::cos(m.angle[0]) * std::cos(m.angle[1]) * std::cos(m.angle[2]);
}

double circumradius_inv(const Triangle& t) { return metrics(t).circumradius; }

double power_of_center(const Triangle& t) {
    Point2 x3 = center(t, 3);
    double R = metrics(t).circumradius;
    return dot(x3, x3) - R * R;
}

double side_product_over_semiperimeter(const Triangle& t) {
    auto m = metrics(t);
    return m.side[0] * m.side[1] * m.side[2] / (4.0 * m.semiperimeter);
}

double sum_sq_sides(const Triangle& t) { return metrics(t).sum_sq_sides; }

double area_inv(const Triangle& t) { return t.area(); }

double sum_cotangents(const Triangle& t) {
    auto m = metrics(t);
    return 1.0 / std::tan(m.angle[0]) + 1.0 / std::tan(m.angle[1]) + 1.0 / std::tan(m.angle[2]);
}

double perimeter_inv(const Triangle& t) { return metrics(t).perimeter; }

std::vector<InvariantSpec> family_invariants(Family f) {
    switch (f) {
        case Family::Incircle:
            return {
                {"circumradius R", circumradius_inv,
                 [](double a, double b) { return (a + b) / 2.0; }},
                {"sum of cosines", sum_cosines,
                 [](double a, double b) { return (a * a + 4.0 * a * b + b * b) / ((a + b) * (a + b)); }},
                {"product of half-sines", product_half_sines,
                 [](double a, double b) { return a * b / (2.0 * (a + b) * (a + b)); }},
                {"power of O wrt circumcircle", power_of_center,
                 [](double a, double b) { return -a * b; }},
                {"s1 s2 s3 / (4 s)", side_product_over_semiperimeter,
                 [](double a, double b) { return a * b / 2.0; }},
            };
        case Family::Circumellipse:
            return {
                {"circumradius R", circumradius_inv,
                 [](double a, double b) { return a + b; }},
                {"sum of squared sides L2", sum_sq_sides,
                 [](double a, double b) { return 4.0 * (a + 2.0 * b) * (2.0 * a + b); }},
                {"product of cosines", product_cosines,
                 [](double a, double b) { return a * b / (2.0 * (a + b) * (a + b)); }},
            };
        case Family::Homothetic:
            return {
                {"area A", area_inv,
                 [](double a, double b) { return 3.0 * std::sqrt(3.0) / 4.0 * a * b; }},
                {"sum of squared sides L2", sum_sq_sides,
                 [](double a, double b) { return 4.5 * (a * a + b * b); }},
                {"sum of cotangents", sum_cotangents,
                 [](double a, double b) { return std::sqrt(3.0) * (a * a + b * b) / (2.0 * a * b); }},
            };
        case Family::Confocal:
            return {
                {"perimeter L", perimeter_inv, {}},
                {"sum of cosines", sum_cosines,
                 [](double a, double b) {
                     double delta = std::sqrt(a * a * a * a - a * a * b * b + b * b * b * b);
                     double rR = 2.0 * (delta - b * b) * (a * a - delta) /
                                 ((a * a - b * b) * (a * a - b * b));
                     return 1.0 + rR;
                 }},
            };
        case Family::Poristic:
            return {
                {"circumradius R", circumradius_inv, {}},
                {"inradius r", [](const Triangle& t) { return metrics(t).inradius; }, {}},
                {"sum of cosines", sum_cosines, {}},
            };
        case Family::Brocard:
            return {
                {"Brocard angle", [](const Triangle& t) { return metrics(t).brocard_angle; }, {}},
                {"sum of cotangents", sum_cotangents, {}},
            };
    }
    return {};
}

namespace {

void accumulate(InvariantReport& rep, double value) {
    rep.mean += value;
    ++rep.samples;
}

}  // namespace

InvariantReport sweep(const ConicPair& pair, const InvariantSpec& spec, int samples) {
    if (samples < 16) throw std::invalid_argument("sweep: samples >= 16");
    InvariantReport rep;
    rep.name = spec.name;
    if (spec.expected) rep.expected = spec.expected(pair.a, pair.b);

    std::vector<double> values;
    values.reserve(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        double t = 2.0 * M_PI * (i + 0.5) / samples;
        try {
            Triangle tr = orbit(pair, t);
            double v = spec.measure(tr);
            if (!std::isfinite(v)) throw std::domain_error("non-finite measure");
            values.push_back(v);
            accumulate(rep, v);
        } catch (const std::exception&) {
            ++rep.skipped;
        }
    }
    if (rep.samples == 0) throw std::domain_error("sweep: all samples degenerate");
    rep.mean /= rep.samples;

    const double ref = rep.expected ? *rep.expected : rep.mean;
    const double scale2 = std::max(pair.a * pair.a, pair.R * pair.R);
    for (double v : values) {
        double dev = std::abs(v - ref);
        rep.max_abs_dev = std::max(rep.max_abs_dev, dev);
        if (std::abs(ref) > 1e-6 * scale2)
            rep.max_rel_dev = std::max(rep.max_rel_dev, dev / std::abs(ref));
        else
            rep.max_rel_dev = rep.max_abs_dev;
    }
    return rep;
}

InvariantReport ngon_constancy_sweep(const ConicPair& pair, int n,
                                     const std::string& name,
                                     const std::function<double(const std::vector<Point2>&)>& measure,
                                     int samples) {
    if (samples < 16) throw std::invalid_argument("ngon sweep: samples >= 16");
    InvariantReport rep;
    rep.name = name;
    std::vector<double> values;
    for (int i = 0; i < samples; ++i) {
        double t = 2.0 * M_PI * (i + 0.5) / samples;
        try {
            NGonOrbit o = step_orbit(pair, t, n);
            double v = measure(o.vertices);
            if (!std::isfinite(v)) throw std::domain_error("non-finite measure");
            values.push_back(v);
            accumulate(rep, v);
        } catch (const std::exception&) {
            ++rep.skipped;
        }
    }
    if (rep.samples == 0) throw std::domain_error("ngon sweep: all samples degenerate");
    rep.mean /= rep.samples;
    for (double v : values) {
        double dev = std::abs(v - rep.mean);
        rep.max_abs_dev = std::max(rep.max_abs_dev, dev);
        if (std::abs(rep.mean) > 1e-12)
            rep.max_rel_dev = std::max(rep.max_rel_dev, dev / std::abs(rep.mean));
    }
    return rep;
}

}  // namespace poncelet
