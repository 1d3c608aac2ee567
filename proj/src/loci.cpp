#include "poncelet/loci.hpp"

#include <cmath>

namespace poncelet {

std::string to_string(DerivedTriangle d) {
    switch (d) {
        case DerivedTriangle::Reference: return "reference";
        case DerivedTriangle::Excentral: return "excentral";
        case DerivedTriangle::Orthic: return "orthic";
    }
    return "?";
}

std::optional<DerivedTriangle> derived_from_string(const std::string& s) {
    if (s == "reference") return DerivedTriangle::Reference;
    if (s == "excentral") return DerivedTriangle::Excentral;
    if (s == "orthic") return DerivedTriangle::Orthic;
    return std::nullopt;
}

PointList sample_locus(const ConicPair& pair, int k, DerivedTriangle derived, int n,
                       SampleStats* stats, const CenterRegistry& reg) {
    if (n < 8) throw std::invalid_argument("sample_locus: n >= 8");
    if (!reg.contains(k)) throw std::out_of_range("sample_locus: unregistered center");
    PointList pts;
    pts.reserve(static_cast<size_t>(n));
    SampleStats st;
    st.requested = n;
    const double scale = std::max(pair.outer.a, pair.R);
    for (int i = 0; i < n; ++i) {
        double t = 2.0 * M_PI * (i + 0.25) / n;
        try {
            Triangle tr = orbit(pair, t);
            if (derived == DerivedTriangle::Excentral) tr = excentral_triangle(tr);
            else if (derived == DerivedTriangle::Orthic) tr = orthic_triangle(tr);
            Point2 p = reg.center(tr, k);
            // numerically-at-infinity evaluations count as degenerate
            if (!std::isfinite(p.x) || !std::isfinite(p.y) || norm(p) > 1e10 * scale)
                throw std::domain_error("center at infinity");
            pts.push_back(p);
        } catch (const std::exception&) {
            ++st.skipped;
        }
    }
    if (stats) *stats = st;
    if (pts.empty()) throw std::domain_error("sample_locus: all samples degenerate");
    return pts;
}

std::vector<double> homothetic_circle_radius_candidates(double a, double b) {
    const double z = 2.0 * (a + b);
    return {(a - b) / 2.0, (a + b) / 2.0, (a - b) * (a - b) / z, (a + b) * (a + b) / z};
}

namespace {

QuarticImplicit incircle_x6_quartic(double a, double b) {
    // (p x^2 + q y^2)^2 - a^2 b^2 (a-b)^2 (u x^2 + v y^2) with
    // p = b(b+2a)(a^2+2ab+3b^2), q = a(a+2b)(3a^2+2ab+b^2),
    // u = b^2(b+2a)^2, v = a^2(a+2b)^2
    const double p = b * (b + 2 * a) * (a * a + 2 * a * b + 3 * b * b);
    const double q = a * (a + 2 * b) * (3 * a * a + 2 * a * b + b * b);
    const double w = a * a * b * b * (a - b) * (a - b);
    const double u = b * b * (b + 2 * a) * (b + 2 * a);
    const double v = a * a * (a + 2 * b) * (a + 2 * b);
    return QuarticImplicit::from_even({p * p, 2 * p * q, q * q, -w * u, -w * v, 0.0});
}

QuarticImplicit circumellipse_x1_quartic(double a, double b) {
    // (x^2+y^2)^2 - 2(a+3b)(a+b) x^2 - 2(a+b)(3a+b) y^2 + (a^2-b^2)^2
    const double cx = -2.0 * (a + 3 * b) * (a + b);
    const double cy = -2.0 * (a + b) * (3 * a + b);
    const double c0 = (a * a - b * b) * (a * a - b * b);
    return QuarticImplicit::from_even({1.0, 2.0, 1.0, cx, cy, c0});
}

QuarticImplicit homothetic_x1_quartic(double a, double b) {
    // 16 (a^2 y^2 + b^2 x^2)(a^2 x^2 + b^2 y^2) - 8 b^2 (a^4 + 5 a^2 b^2 + 2 b^4) x^2
    //   - 8 a^2 (2 a^4 + 5 a^2 b^2 + b^4) y^2 + a^2 b^2 (a^2 - b^2)^2
    const double a2 = a * a, b2 = b * b;
    return QuarticImplicit::from_even(
        {16 * a2 * b2, 16 * (a2 * a2 + b2 * b2), 16 * a2 * b2,
         -8 * b2 * (a2 * a2 + 5 * a2 * b2 + 2 * b2 * b2),
         -8 * a2 * (2 * a2 * a2 + 5 * a2 * b2 + b2 * b2),
         a2 * b2 * (a2 - b2) * (a2 - b2)});
}

QuarticImplicit confocal_x6_quartic(double a, double b) {
    // c1 x^4 + c2 y^4 + c3 x^2 y^2 + c4 x^2 + c5 y^2 = 0
    const double a2 = a * a, b2 = b * b;
    const double delta = std::sqrt(a2 * a2 - a2 * b2 + b2 * b2);
    const double d2 = delta * delta;
    const double c1 = b2 * b2 * (5 * d2 - 4 * (a2 - b2) * delta - a2 * b2);
    const double c2 = a2 * a2 * (5 * d2 + 4 * (a2 - b2) * delta - a2 * b2);
    const double c3 = 2 * a2 * b2 * (a2 * b2 + 3 * d2);
    const double c4 = a2 * b2 * b2 * (3 * b2 * b2 + 2 * (2 * a2 - b2) * delta - 5 * d2);
    const double c5 = a2 * a2 * b2 * (3 * a2 * a2 + 2 * (2 * b2 - a2) * delta - 5 * d2);
    return QuarticImplicit::from_even({c1, c3, c2, c4, c5, 0.0});
}

}  // namespace

std::optional<ExpectedLocus> expected_locus(Family family, int k, double a, double b) {
    const Point2 O{0.0, 0.0};
    switch (family) {
        case Family::Incircle:
            switch (k) {
                case 1: return ExpectedLocus{ExpectedPoint{O}, "stationary incenter"};
                case 2: return ExpectedLocus{ExpectedEllipseAxes{O, a * (a - b) / (3 * (a + b)),
                                                                 b * (a - b) / (3 * (a + b))},
                                             "barycenter ellipse"};
                case 3: return ExpectedLocus{ExpectedCircle{O, (a - b) / 2.0}, "circumcenter circle"};
                case 4: return ExpectedLocus{ExpectedEllipseAxes{O, (a - b) * b / (a + b),
                                                                 (a - b) * a / (a + b)},
                                             "orthocenter ellipse"};
                case 5: return ExpectedLocus{ExpectedCircle{O, (a - b) * (a - b) / (4 * (a + b))},
                                             "nine-point-center circle"};
                case 6: return ExpectedLocus{ExpectedQuartic{incircle_x6_quartic(a, b)},
                                             "symmedian quartic"};
                default: return std::nullopt;
            }
        case Family::Circumellipse:
            switch (k) {
                case 3: return ExpectedLocus{ExpectedPoint{O}, "stationary circumcenter"};
                case 4: return ExpectedLocus{ExpectedCircle{O, a - b}, "orthocenter circle 2d'"};
                case 5: return ExpectedLocus{ExpectedCircle{O, (a - b) / 2.0}, "nine-point circle d'"};
                case 6: return ExpectedLocus{ExpectedEllipseAxes{O, (a * a - b * b) / (a + 2 * b),
                                                                 (a * a - b * b) / (2 * a + b)},
                                             "symmedian ellipse"};
                case 1: return ExpectedLocus{ExpectedQuartic{circumellipse_x1_quartic(a, b)},
                                             "incenter quartic"};
                default: return std::nullopt;
            }
        case Family::Homothetic:
            switch (k) {
                case 2: return ExpectedLocus{ExpectedPoint{O}, "stationary barycenter"};
                case 1: return ExpectedLocus{ExpectedQuartic{homothetic_x1_quartic(a, b)},
                                             "incenter quartic"};
                case 6: return ExpectedLocus{ExpectedEllipseAxes{O, a * (a * a - b * b) / (2 * (a * a + b * b)),
                                                                 b * (a * a - b * b) / (2 * (a * a + b * b))},
                                             "symmedian ellipse"};
                case 13: return ExpectedLocus{ExpectedCircle{O, (a - b) / 2.0}, "isogonic circle"};
                case 14: return ExpectedLocus{ExpectedCircle{O, (a + b) / 2.0}, "isogonic circle"};
                case 15: return ExpectedLocus{ExpectedCircle{O, (a - b) * (a - b) / (2 * (a + b))},
                                             "isodynamic circle"};
                case 16: return ExpectedLocus{ExpectedCircle{O, (a + b) * (a + b) / (2 * (a - b))},
                                             "isodynamic circle (radius resolved numerically; "
                                             "the printed z = 2(a+b) duplicates the X(14) value)"};
                default: return std::nullopt;
            }
        case Family::Confocal: {
            const double delta = std::sqrt(a * a * a * a - a * a * b * b + b * b * b * b);
            switch (k) {
                case 9: return ExpectedLocus{ExpectedPoint{O}, "stationary mittenpunkt"};
                case 1: return ExpectedLocus{ExpectedEllipseAxes{O, (delta - b * b) / a,
                                                                 (a * a - delta) / b},
                                             "incenter ellipse"};
                case 6: return ExpectedLocus{ExpectedQuartic{confocal_x6_quartic(a, b)},
                                             "symmedian quartic"};
                default: return std::nullopt;
            }
        }
        case Family::Poristic:
            // a, b arguments unused; the pair carries R, r, d
            return std::nullopt;
        case Family::Brocard:
            return std::nullopt;
    }
    return std::nullopt;
}

namespace {

// semi-axes of a fitted central conic along the coordinate axes (the paper's
// loci are axis-aligned and centered)
struct AxisAxes {
    Point2 center;
    double sx, sy;
};

std::optional<AxisAxes> axis_aligned_axes(const ConicImplicit& c) {
    const double A = c.c[0], B = c.c[1], C = c.c[2], D = c.c[3], E = c.c[4], F = c.c[5];
    const double det = 4.0 * A * C - B * B;
    if (!(det > 0.0)) return std::nullopt;
    const double cx = (B * E - 2.0 * C * D) / det;
    const double cy = (B * D - 2.0 * A * E) / det;
    const double Fc = F + 0.5 * (D * cx + E * cy);
    if (!(A * (-Fc) > 0.0) || !(C * (-Fc) > 0.0)) return std::nullopt;
    return AxisAxes{{cx, cy}, std::sqrt(-Fc / A), std::sqrt(-Fc / C)};
}

// transform an even quartic from absolute coordinates to x -> x/s
QuarticImplicit scale_even_quartic(const QuarticImplicit& q, double s) {
    QuarticImplicit out = q;
    const double s2 = s * s, s4 = s2 * s2;
    out.even = {q.even[0] * s4, q.even[1] * s4, q.even[2] * s4,
                q.even[3] * s2, q.even[4] * s2, q.even[5]};
    out.normalize();
    return out;
}

}  // namespace

LocusFit verify_locus(const ConicPair& pair, int k, DerivedTriangle derived, int n,
                      const CenterRegistry& reg) {
    LocusFit fit;
    fit.k = k;
    fit.derived = derived;
    PointList pts = sample_locus(pair, k, derived, n, &fit.stats, reg);
    const double scale = std::max(pair.outer.a, pair.R);
    fit.classification = classify_locus(pts, scale);

    auto expected = (derived == DerivedTriangle::Reference)
                        ? expected_locus(pair.family, k, pair.a, pair.b)
                        : std::nullopt;
    if (!expected) return fit;
    fit.expected_source = expected->source;

    if (const auto* pt = std::get_if<ExpectedPoint>(&expected->shape)) {
        Point2 c{0, 0};
        for (const auto& p : pts) c += p;
        c = c / static_cast<double>(pts.size());
        fit.match_rel_error = dist(c, pt->at) / scale;
    } else if (const auto* ci = std::get_if<ExpectedCircle>(&expected->shape)) {
        if (fit.classification.shape) {
            const Ellipse& e = *fit.classification.shape;
            double radius = 0.5 * (e.a + e.b);
            double err = std::abs(radius - ci->radius) / ci->radius;
            err = std::max(err, dist(e.center, ci->center) / scale);
            fit.match_rel_error = err;
        }
    } else if (const auto* el = std::get_if<ExpectedEllipseAxes>(&expected->shape)) {
        if (fit.classification.conic_fit) {
            auto ax = axis_aligned_axes(fit.classification.conic_fit->conic);
            if (ax) {
                double err = std::abs(ax->sx - el->a) / el->a;
                err = std::max(err, std::abs(ax->sy - el->b) / el->b);
                err = std::max(err, dist(ax->center, el->center) / scale);
                fit.match_rel_error = err;
            }
        }
    } else if (const auto* qu = std::get_if<ExpectedQuartic>(&expected->shape)) {
        // residual of the paper's implicit on the samples, points scaled by 1/a
        QuarticImplicit scaled = scale_even_quartic(qu->q, scale);
        double worst = 0.0;
        for (const auto& p : pts)
            worst = std::max(worst, std::abs(scaled.eval({p.x / scale, p.y / scale})));
        fit.expected_max_residual = worst;
        if (fit.classification.quartic_fit && fit.classification.quartic_fit->quartic.symmetric) {
            // compare coefficient vectors in the fit's normalized frame
            const auto& qf = *fit.classification.quartic_fit;
            QuarticImplicit expected_in_fit_frame = scale_even_quartic(qu->q, qf.scale);
            fit.quartic_angle =
                QuarticImplicit::coefficient_angle(qf.quartic, expected_in_fit_frame);
        }
    }
    return fit;
}

// ---- Table 1 ---------------------------------------------------------------

const std::vector<std::pair<int, std::array<const char*, 8>>>& table1_expected() {
    static const std::vector<std::pair<int, std::array<const char*, 8>>> grid{
        {1, {"E", "P", "P", "X", "X", "X", "4", "X"}},
        {2, {"E", "E", "C", "E", "C", "P", "P", "C"}},
        {3, {"E", "C", "P", "E", "P", "P", "E", "P"}},
        {4, {"E", "E", "C", "E", "C", "P", "E", "C"}},
        {5, {"E", "C", "C", "E", "C", "P", "E", "C"}},
        {6, {"4", "4", "E", "P", "E", "C", "E", "P"}},
        {7, {"E", "E", "C", "X", "X", "X", "X", "X"}},
        {8, {"E", "E", "C", "X", "X", "X", "X", "X"}},
        {9, {"P", "E", "C", "X", "X", "X", "X", "X"}},
        {10, {"E", "E", "C", "X", "X", "X", "X", "X"}},
        {11, {"E''", "C''", "C''", "X", "X", "C5", "X", "X"}},
        {12, {"E", "C", "C", "X", "X", "X", "X", "X"}},
        {13, {"X", "X", "X", "X", "X", "X", "C", "C"}},
        {14, {"X", "X", "X", "X", "X", "X", "C", "C"}},
        {15, {"X", "X", "X", "X", "X", "X", "C", "P"}},
        {16, {"X", "X", "X", "X", "X", "X", "C", "P"}},
        {99, {"X", "X", "C'", "X", "C'", "C'", "E'", "C'"}},
        {100, {"E'", "E'", "C'", "X", "C'", "C'", "X", "C'"}},
        {110, {"X", "X", "C'", "E'", "C'", "C'", "X", "C'"}},
    };
    return grid;
}

namespace {

char base_label(const std::string& s) { return s.empty() ? '?' : s[0]; }

std::string measure_cell(const ConicPair& pair, DerivedTriangle derived, int k, int n,
                         double scale) {
    try {
        PointList pts = sample_locus(pair, k, derived, n);
        Classification c = classify_locus(pts, scale);
        switch (c.label) {
            case LocusClass::StationaryPoint: return "P";
            case LocusClass::Circle: return "C";
            case LocusClass::Ellipse: return "E";
            case LocusClass::Quartic: return "4";
            case LocusClass::NonConic: return "X";
        }
    } catch (const std::exception&) {
        return "!";
    }
    return "!";
}

}  // namespace

std::vector<Table1Cell> locus_table(double a, double b, int n) {
    const double Rpor = (a + b) / 2.0, rpor = a * b / (a + b);
    const double cot_omega = std::sqrt(3.0) * (a * a + b * b) / (2.0 * a * b);
    const double omega = std::atan(1.0 / cot_omega);

    struct Col {
        Table1Column id;
        ConicPair pair;
        DerivedTriangle derived;
    };
    const std::array<Col, 8> cols{
        Col{Table1Column::Confocal, make_confocal_pair(a, b), DerivedTriangle::Reference},
        Col{Table1Column::FamilyI, make_incircle_pair(a, b), DerivedTriangle::Reference},
        Col{Table1Column::Poristic, make_poristic_pair(Rpor, rpor), DerivedTriangle::Reference},
        Col{Table1Column::ConfocalExcentral, make_confocal_pair(a, b), DerivedTriangle::Excentral},
        Col{Table1Column::FamilyII, make_circumellipse_pair(a, b), DerivedTriangle::Reference},
        Col{Table1Column::PoristicExcentral, make_poristic_pair(Rpor, rpor),
            DerivedTriangle::Excentral},
        Col{Table1Column::FamilyIII, make_homothetic_pair(a, b), DerivedTriangle::Reference},
        Col{Table1Column::Brocard, make_brocard_pair(1.0, omega), DerivedTriangle::Reference},
    };

    std::vector<Table1Cell> cells;
    for (const auto& [k, labels] : table1_expected()) {
        for (size_t j = 0; j < cols.size(); ++j) {
            Table1Cell cell;
            cell.k = k;
            cell.col = cols[j].id;
            cell.expected = labels[j];
            const double scale = std::max(cols[j].pair.outer.a, cols[j].pair.R);
            cell.measured = measure_cell(cols[j].pair, cols[j].derived, k, n, scale);
            const char want = base_label(cell.expected);
            const char got = base_label(cell.measured);
            if (want == 'X')
                cell.match = (got == 'X' || got == '4');
            else
                cell.match = (want == got);
            cells.push_back(cell);
        }
    }
    return cells;
}

// ---- probes ----------------------------------------------------------------

ConjectureProbe probe_conjecture1(const ConicPair& pair, int n) {
    PointList pts;
    pts.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double t = 2.0 * M_PI * (i + 0.37) / n;
        try {
            NGonOrbit o = step_orbit(pair, t, 3);
            Triangle tr{{o.vertices[0], o.vertices[1], o.vertices[2]}};
            pts.push_back(center(tr, 1));
        } catch (const std::exception&) {
        }
    }
    if (pts.size() < 12) throw std::domain_error("probe_conjecture1: too few samples");

    ConjectureProbe probe;
    const double scale = std::max(pair.outer.a, pair.R);
    Classification c = classify_locus(pts, scale);
    probe.label = c.label;
    if (c.label == LocusClass::StationaryPoint) return probe;

    ConicFit cf = c.conic_fit ? *c.conic_fit : fit_conic(pts);
    probe.conic_residual = cf.residual;
    // geometric (Sampson) distance in the normalized frame
    const auto& co = cf.conic.c;
    double worst = 0.0;
    for (const auto& praw : pts) {
        Point2 p = (praw - cf.centroid) / cf.scale;
        // conic in normalized frame: re-derive by substitution x -> s x + c
        const double x = praw.x, y = praw.y;
        const double Q = co[0] * x * x + co[1] * x * y + co[2] * y * y + co[3] * x +
                         co[4] * y + co[5];
        const double gx = 2 * co[0] * x + co[1] * y + co[3];
        const double gy = co[1] * x + 2 * co[2] * y + co[4];
        const double g = std::hypot(gx, gy);
        if (g > 1e-300) worst = std::max(worst, std::abs(Q) / g / cf.scale);
        (void)p;
    }
    probe.sampson_max = worst;
    return probe;
}

std::string to_string(ScanNormalization n) {
    switch (n) {
        case ScanNormalization::FixB: return "fix-b";
        case ScanNormalization::FixArea: return "fix-area";
        case ScanNormalization::FixSum: return "fix-sum";
    }
    return "?";
}

namespace {

std::pair<double, double> axes_for_ratio(double rho, ScanNormalization norm) {
    switch (norm) {
        case ScanNormalization::FixB: return {rho, 1.0};
        case ScanNormalization::FixArea: return {std::sqrt(rho), 1.0 / std::sqrt(rho)};
        case ScanNormalization::FixSum: return {2.0 * rho / (1.0 + rho), 2.0 / (1.0 + rho)};
    }
    return {rho, 1.0};
}

}  // namespace

ScanResult x16_radius_scan(const std::vector<double>& ratios, ScanNormalization norm,
                           int samples_per_ratio) {
    if (ratios.size() < 3) throw std::invalid_argument("x16_radius_scan: need >= 3 ratios");
    ScanResult res;
    res.normalization = norm;

    auto radius_at = [&](double rho) {
        auto [a, b] = axes_for_ratio(rho, norm);
        ConicPair pair = make_homothetic_pair(a, b);
        PointList pts = sample_locus(pair, 16, DerivedTriangle::Reference, samples_per_ratio);
        double acc = 0.0;
        for (const auto& p : pts) acc += poncelet::norm(p);
        return acc / static_cast<double>(pts.size());
    };

    for (double rho : ratios) res.radius_curve.emplace_back(rho, radius_at(rho));

    size_t imin = 0;
    for (size_t i = 1; i < res.radius_curve.size(); ++i)
        if (res.radius_curve[i].second < res.radius_curve[imin].second) imin = i;
    res.interior_minimum = imin > 0 && imin + 1 < res.radius_curve.size();
    if (!res.interior_minimum) {
        res.argmin = res.radius_curve[imin].first;
        return res;
    }
    // golden-section refinement inside the bracketing grid interval
    double lo = res.radius_curve[imin - 1].first;
    double hi = res.radius_curve[imin + 1].first;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c1 = hi - gr * (hi - lo), c2 = lo + gr * (hi - lo);
    double f1 = radius_at(c1), f2 = radius_at(c2);
    for (int it = 0; it < 120 && hi - lo > 1e-10; ++it) {
        if (f1 < f2) {
            hi = c2; c2 = c1; f2 = f1;
            c1 = hi - gr * (hi - lo);
            f1 = radius_at(c1);
        } else {
            lo = c1; c1 = c2; f1 = f2;
            c2 = lo + gr * (hi - lo);
            f2 = radius_at(c2);
        }
    }
    res.argmin = 0.5 * (lo + hi);
    return res;
}

}  // namespace poncelet
