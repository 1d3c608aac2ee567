#include "poncelet/conic_core.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace poncelet {

double cayley_residual(double outer_a, double outer_b, double inner_a, double inner_b) {
    if (!(outer_a > 0.0) || !(outer_b > 0.0) || !(inner_a > 0.0) || !(inner_b > 0.0))
        throw std::domain_error("cayley_residual: semi-axes must be positive");
    return inner_a / outer_a + inner_b / outer_b - 1.0;
}

double incircle_radius(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("incircle_radius: semi-axes must be positive");
    return a * b / (a + b);
}

std::pair<double, double> confocal_caustic(double alpha, double beta) {
    if (!(alpha > beta) || !(beta > 0.0))
        throw std::domain_error("confocal_caustic: requires alpha > beta > 0");
    const double a2 = alpha * alpha, b2 = beta * beta;
    const double delta = std::sqrt(a2 * a2 - a2 * b2 + b2 * b2);
    const double den = a2 - b2;
    return {alpha * (delta - b2) / den, beta * (a2 - delta) / den};
}

void ConicImplicit::normalize() {
    double n = 0.0;
    for (double v : c) n += v * v;
    n = std::sqrt(n);
    if (n == 0.0) throw std::domain_error("null conic");
    for (double& v : c) v /= n;
}

std::optional<Ellipse> ConicImplicit::as_ellipse() const {
    const double A = c[0], B = c[1], C = c[2], D = c[3], E = c[4], F = c[5];
    const double det = 4.0 * A * C - B * B;
    if (!(det > 0.0)) return std::nullopt;
    // center solves [2A B; B 2C] ctr = -[D; E]
    const double cx = (B * E - 2.0 * C * D) / det;
    const double cy = (B * D - 2.0 * A * E) / det;
    const double Fc = F + 0.5 * (D * cx + E * cy);
    // eigen-decomposition of [[A, B/2], [B/2, C]]
    const double tr = A + C;
    const double diff = A - C;
    const double rad = std::sqrt(diff * diff + B * B);
    const double l1 = 0.5 * (tr - rad);  // smaller in magnitude ordering below
    const double l2 = 0.5 * (tr + rad);
    if (!(l1 * (-Fc) > 0.0) || !(l2 * (-Fc) > 0.0)) return std::nullopt;
    const double ax1 = std::sqrt(-Fc / l1);
    const double ax2 = std::sqrt(-Fc / l2);
    // eigenvector for l1: (B/2, l1 - A) unless near-zero
    Point2 v{0.5 * B, l1 - A};
    if (norm(v) < 1e-14 * (std::abs(A) + std::abs(C) + std::abs(B))) {
        v = {1.0, 0.0};
    }
    const double ang = std::atan2(v.y, v.x);
    Ellipse e;
    e.center = {cx, cy};
    if (ax1 >= ax2) {
        e.a = ax1; e.b = ax2; e.angle = ang;
    } else {
        e.a = ax2; e.b = ax1; e.angle = ang + M_PI / 2.0;
    }
    return e;
}

QuarticImplicit QuarticImplicit::from_even(const std::array<double, 6>& e) {
    QuarticImplicit q;
    q.symmetric = true;
    q.even = e;
    q.normalize();
    return q;
}

namespace {
// full-basis monomials, graded lex: exponents (i, j) with i + j <= 4
constexpr std::array<std::pair<int, int>, 15> kFullBasis{{
    {4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4},
    {2, 0}, {1, 1}, {0, 2},
    {1, 0}, {0, 1},
    {0, 0},
    {3, 0}, {2, 1}, {1, 2}, {0, 3},
}};
}  // namespace

double QuarticImplicit::eval(const Point2& p) const {
    const double x = p.x, y = p.y;
    if (symmetric) {
        const double x2 = x * x, y2 = y * y;
        return even[0] * x2 * x2 + even[1] * x2 * y2 + even[2] * y2 * y2 +
               even[3] * x2 + even[4] * y2 + even[5];
    }
    double s = 0.0;
    for (size_t i = 0; i < kFullBasis.size(); ++i)
        s += full[i] * std::pow(x, kFullBasis[i].first) * std::pow(y, kFullBasis[i].second);
    return s;
}

void QuarticImplicit::normalize() {
    auto norm_of = [](auto& arr) {
        double n = 0.0;
        for (double v : arr) n += v * v;
        return std::sqrt(n);
    };
    if (symmetric) {
        double n = norm_of(even);
        if (n == 0.0) throw std::domain_error("null quartic");
        double sign = 1.0;
        for (double v : even)
            if (std::abs(v) > 1e-14 * n) { sign = v > 0 ? 1.0 : -1.0; break; }
        for (double& v : even) v /= sign * n;
    } else {
        double n = norm_of(full);
        if (n == 0.0) throw std::domain_error("null quartic");
        double sign = 1.0;
        for (double v : full)
            if (std::abs(v) > 1e-14 * n) { sign = v > 0 ? 1.0 : -1.0; break; }
        for (double& v : full) v /= sign * n;
    }
}

double QuarticImplicit::coefficient_angle(const QuarticImplicit& p, const QuarticImplicit& q) {
    if (p.symmetric != q.symmetric)
        throw std::invalid_argument("coefficient_angle: mismatched bases");
    double d = 0.0, np = 0.0, nq = 0.0;
    auto acc = [&](double a, double b) { d += a * b; np += a * a; nq += b * b; };
    if (p.symmetric)
        for (size_t i = 0; i < 6; ++i) acc(p.even[i], q.even[i]);
    else
        for (size_t i = 0; i < 15; ++i) acc(p.full[i], q.full[i]);
    double cosang = std::abs(d) / std::sqrt(np * nq);
    return std::acos(std::clamp(cosang, 0.0, 1.0));
}

namespace {

struct Normalized {
    std::vector<Point2> pts;
    Point2 centroid;
    double scale = 1.0;
};

Normalized normalize_points(std::span<const Point2> pts) {
    Normalized out;
    Point2 c{0, 0};
    for (const auto& p : pts) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw std::domain_error("fit: non-finite input point");
        c += p;
    }
    c = c / static_cast<double>(pts.size());
    double ms = 0.0;
    for (const auto& p : pts) ms += dot(p - c, p - c);
    ms = std::sqrt(ms / static_cast<double>(pts.size()));
    out.centroid = c;
    out.scale = ms;
    out.pts.reserve(pts.size());
    for (const auto& p : pts) out.pts.push_back(ms > 0 ? (p - c) / ms : (p - c));
    return out;
}

}  // namespace

ConicFit fit_conic(std::span<const Point2> pts) {
    if (pts.size() < 6)
        throw std::invalid_argument("fit_conic: need at least 6 points");
    Normalized nz = normalize_points(pts);
    if (nz.scale < 1e-300)
        throw std::domain_error("fit_conic: degenerate input (coincident points)");

    Eigen::MatrixXd M(static_cast<long>(nz.pts.size()), 6);
    for (long i = 0; i < M.rows(); ++i) {
        const auto& p = nz.pts[static_cast<size_t>(i)];
        M(i, 0) = p.x * p.x;
        M(i, 1) = p.x * p.y;
        M(i, 2) = p.y * p.y;
        M(i, 3) = p.x;
        M(i, 4) = p.y;
        M(i, 5) = 1.0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinV);
    if (svd.rank() < 5)
        throw std::domain_error("fit_conic: rank-deficient design matrix");
    Eigen::VectorXd v = svd.matrixV().col(5);
    Eigen::VectorXd r = M * v;
    ConicFit fit;
    fit.centroid = nz.centroid;
    fit.scale = nz.scale;
    fit.residual = std::sqrt(r.squaredNorm() / static_cast<double>(M.rows()));
    fit.max_residual = r.cwiseAbs().maxCoeff();

    // un-normalize: substitute x -> (X - cx)/s, y -> (Y - cy)/s
    const double A = v(0), B = v(1), C = v(2), D = v(3), E = v(4), F = v(5);
    const double s = nz.scale, cx = nz.centroid.x, cy = nz.centroid.y;
    ConicImplicit co;
    co.c[0] = A;
    co.c[1] = B;
    co.c[2] = C;
    co.c[3] = s * D - 2.0 * A * cx - B * cy;
    co.c[4] = s * E - 2.0 * C * cy - B * cx;
    co.c[5] = A * cx * cx + B * cx * cy + C * cy * cy - s * (D * cx + E * cy) + s * s * F;
    co.normalize();
    fit.conic = co;
    return fit;
}

QuarticFit fit_quartic(std::span<const Point2> pts, bool symmetric) {
    const size_t need = symmetric ? 6 : 15;
    if (pts.size() < need)
        throw std::invalid_argument("fit_quartic: insufficient points");
    Normalized nz;
    if (symmetric) {
        // the even basis presumes origin symmetry: scale only, no translation
        double ms = 0.0;
        for (const auto& p : pts) {
            if (!std::isfinite(p.x) || !std::isfinite(p.y))
                throw std::domain_error("fit: non-finite input point");
            ms += dot(p, p);
        }
        nz.centroid = {0.0, 0.0};
        nz.scale = std::sqrt(ms / static_cast<double>(pts.size()));
        for (const auto& p : pts)
            nz.pts.push_back(nz.scale > 0 ? p / nz.scale : p);
    } else {
        nz = normalize_points(pts);
    }
    if (nz.scale < 1e-300)
        throw std::domain_error("fit_quartic: degenerate input");

    const long cols = symmetric ? 6 : 15;
    Eigen::MatrixXd M(static_cast<long>(nz.pts.size()), cols);
    for (long i = 0; i < M.rows(); ++i) {
        const auto& p = nz.pts[static_cast<size_t>(i)];
        if (symmetric) {
            const double x2 = p.x * p.x, y2 = p.y * p.y;
            M(i, 0) = x2 * x2;
            M(i, 1) = x2 * y2;
            M(i, 2) = y2 * y2;
            M(i, 3) = x2;
            M(i, 4) = y2;
            M(i, 5) = 1.0;
        } else {
            for (long j = 0; j < 15; ++j)
                M(i, j) = std::pow(p.x, kFullBasis[static_cast<size_t>(j)].first) *
                          std::pow(p.y, kFullBasis[static_cast<size_t>(j)].second);
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinV);
    // points on a conic make the quartic null space 3-dimensional; only a
    // truly degenerate cloud is an error
    if (svd.rank() < 3)
        throw std::domain_error("fit_quartic: rank-deficient design matrix");
    Eigen::VectorXd v = svd.matrixV().col(cols - 1);
    Eigen::VectorXd r = M * v;

    QuarticFit fit;
    fit.centroid = nz.centroid;
    fit.scale = nz.scale;
    fit.residual = std::sqrt(r.squaredNorm() / static_cast<double>(M.rows()));
    fit.max_residual = r.cwiseAbs().maxCoeff();
    fit.quartic.symmetric = symmetric;
    if (symmetric)
        for (size_t i = 0; i < 6; ++i) fit.quartic.even[i] = v(static_cast<long>(i));
    else
        for (size_t i = 0; i < 15; ++i) fit.quartic.full[i] = v(static_cast<long>(i));
    fit.quartic.normalize();
    return fit;
}

std::string to_string(LocusClass c) {
    switch (c) {
        case LocusClass::StationaryPoint: return "point";
        case LocusClass::Circle: return "circle";
        case LocusClass::Ellipse: return "ellipse";
        case LocusClass::Quartic: return "quartic";
        case LocusClass::NonConic: return "non-conic";
    }
    return "?";
}

Classification classify_locus(std::span<const Point2> pts, double scale,
                              const ClassifyTolerances& tol) {
    if (pts.empty()) throw std::invalid_argument("classify_locus: empty input");
    if (!(scale > 0.0)) throw std::domain_error("classify_locus: scale must be positive");

    Classification out;
    Point2 c{0, 0};
    for (const auto& p : pts) c += p;
    c = c / static_cast<double>(pts.size());
    double dia = 0.0;
    for (const auto& p : pts) dia = std::max(dia, dist(p, c));
    if (dia < tol.point_diameter * scale) {
        out.label = LocusClass::StationaryPoint;
        out.point = c;
        return out;
    }

    if (pts.size() >= 6) {
        try {
            ConicFit cf = fit_conic(pts);
            out.conic_fit = cf;
            out.conic_residual = cf.residual;
            if (cf.residual < tol.fit_residual) {
                auto e = cf.conic.as_ellipse();
                if (e && cf.conic.discriminant() < 0.0) {
                    out.shape = e;
                    out.label = std::abs(e->a / e->b - 1.0) < tol.circle_axis_ratio
                                    ? LocusClass::Circle
                                    : LocusClass::Ellipse;
                    return out;
                }
            }
        } catch (const std::exception&) {
            // fall through to quartic
        }
    }

    try {
        QuarticFit qf = fit_quartic(pts, true);
        out.quartic_fit = qf;
        out.quartic_residual = qf.residual;
        if (qf.residual < tol.fit_residual) {
            out.label = LocusClass::Quartic;
            return out;
        }
        QuarticFit qf2 = fit_quartic(pts, false);
        if (qf2.residual < tol.fit_residual) {
            out.quartic_fit = qf2;
            out.quartic_residual = qf2.residual;
            out.label = LocusClass::Quartic;
            return out;
        }
    } catch (const std::exception&) {
    }
    out.label = LocusClass::NonConic;
    return out;
}

}  // namespace poncelet
