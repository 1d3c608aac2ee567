#include "poncelet/centers.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

namespace poncelet {

Point2 trilinear_to_cartesian(const Triangle& t, double u, double v, double w) {
    auto s = t.sides();
    const double den = u * s[0] + v * s[1] + w * s[2];
    const double scale = std::abs(u * s[0]) + std::abs(v * s[1]) + std::abs(w * s[2]);
    if (!(std::abs(den) > 1e-14 * scale))
        throw std::domain_error("trilinear_to_cartesian: point at infinity");
    return (u * s[0] * t[0] + v * s[1] * t[1] + w * s[2] * t[2]) / den;
}

namespace {

struct Angles {
    double cA, cB, cC, sA, sB, sC;
};

Angles angles_of(double a, double b, double c) {
    Angles g{};
    g.cA = (b * b + c * c - a * a) / (2.0 * b * c);
    g.cB = (c * c + a * a - b * b) / (2.0 * c * a);
    g.cC = (a * a + b * b - c * c) / (2.0 * a * b);
    g.sA = std::sqrt(std::max(1.0 - g.cA * g.cA, 0.0));
    g.sB = std::sqrt(std::max(1.0 - g.cB * g.cB, 0.0));
    g.sC = std::sqrt(std::max(1.0 - g.cC * g.cC, 0.0));
    return g;
}

double cosA(double a, double b, double c) { return angles_of(a, b, c).cA; }
double sinA(double a, double b, double c) { return angles_of(a, b, c).sA; }
double cosBmC(double a, double b, double c) {
    Angles g = angles_of(a, b, c);
    return g.cB * g.cC + g.sB * g.sC;
}

constexpr double kRoot3 = 1.7320508075688772;

// sin(A +/- pi/3), csc(A +/- pi/3) via the law of cosines
double sinAp(double a, double b, double c) { return 0.5 * sinA(a, b, c) + 0.5 * kRoot3 * cosA(a, b, c); }
double sinAm(double a, double b, double c) { return 0.5 * sinA(a, b, c) - 0.5 * kRoot3 * cosA(a, b, c); }

// normalized barycentric triple of center k (by trilinear first-fn f)
using FirstFn = double (*)(double, double, double);

std::array<double, 3> bary_normalized(FirstFn f, double a, double b, double c) {
    const double al = a * f(a, b, c);
    const double be = b * f(b, c, a);
    const double ga = c * f(c, a, b);
    const double s = al + be + ga;
    return {al / s, be / s, ga / s};
}

// first trilinear of an affine combination of centers in normalized
// barycentrics; used for midpoints, reflections, (anti)complements
template <size_t N>
double combo_first(const std::array<std::pair<double, FirstFn>, N>& terms,
                   double a, double b, double c) {
    double acc = 0.0;
    for (const auto& [coef, fn] : terms) acc += coef * bary_normalized(fn, a, b, c)[0];
    return acc / a;
}

// ---- primitive centers ------------------------------------------------

double f1(double, double, double) { return 1.0; }
double f2(double, double b, double c) { return b * c; }
double f3(double a, double b, double c) { return cosA(a, b, c); }
double f4(double a, double b, double c) {
    Angles g = angles_of(a, b, c);
    return g.cB * g.cC;
}
double f5(double a, double b, double c) { return cosBmC(a, b, c); }
double f6(double a, double, double) { return a; }
double f7(double a, double b, double c) { return b * c / (b + c - a); }
double f8(double a, double b, double c) { return b * c * (b + c - a); }
double f9(double a, double b, double c) { return b + c - a; }
double f10(double, double b, double c) { return b * c * (b + c); }
double f11(double a, double b, double c) { return 1.0 - cosBmC(a, b, c); }
double f12(double a, double b, double c) { return 1.0 + cosBmC(a, b, c); }
double f13(double a, double b, double c) { return 1.0 / sinAp(a, b, c); }
double f14(double a, double b, double c) { return 1.0 / sinAm(a, b, c); }
double f15(double a, double b, double c) { return sinAp(a, b, c); }
double f16(double a, double b, double c) { return sinAm(a, b, c); }
double f20(double a, double b, double c) {
    Angles g = angles_of(a, b, c);
    return g.cA - g.cB * g.cC;
}
double f21(double a, double b, double c) {
    Angles g = angles_of(a, b, c);
    return 1.0 / (g.cB + g.cC);
}
double f35(double a, double b, double c) { return 1.0 + 2.0 * cosA(a, b, c); }
double f36(double a, double b, double c) { return 1.0 - 2.0 * cosA(a, b, c); }
double f39(double a, double b, double c) { return a * (b * b + c * c); }
double f40(double a, double b, double c) {
    Angles g = angles_of(a, b, c);
    return g.cB + g.cC - g.cA - 1.0;
}
double f46(double a, double b, double c) {
    Angles g = angles_of(a, b, c);
    return g.cB + g.cC - g.cA;
}
double f55(double a, double b, double c) { return a * (b + c - a); }
double f56(double a, double b, double c) { return a / (b + c - a); }
double f57(double a, double b, double c) { return 1.0 / (b + c - a); }
double f63(double a, double b, double c) { return cosA(a, b, c) / sinA(a, b, c); }
double f65(double a, double b, double c) { return (b + c) / (b + c - a); }
double f72(double a, double b, double c) { return b * c * (b + c) * cosA(a, b, c); }
double f78(double a, double b, double c) {
    double cA_ = cosA(a, b, c);
    return cA_ / (1.0 - cA_);
}
double f79(double a, double b, double c) { return 1.0 / (1.0 + 2.0 * cosA(a, b, c)); }
double f80(double a, double b, double c) { return 1.0 / (1.0 - 2.0 * cosA(a, b, c)); }
double f84(double a, double b, double c) { return 1.0 / f40(a, b, c); }
double f88(double a, double b, double c) { return 1.0 / (b + c - 2.0 * a); }
double f90(double a, double b, double c) { return 1.0 / f46(a, b, c); }
double f99(double a, double b, double c) { return 1.0 / (a * (b * b - c * c)); }
double f100(double a, double b, double c) { return 1.0 / (b - c); }
double f104(double a, double b, double c) {
    Angles g = angles_of(a, b, c);
    return 1.0 / (g.cB + g.cC - 1.0);
}
double f110(double a, double b, double c) { return a / (b * b - c * c); }
double f190(double a, double b, double c) { return 1.0 / (a * (b - c)); }
double f200(double a, double b, double c) { return (b + c - a) * (b + c - a); }

// ---- derived centers (affine combinations in normalized barycentrics) --

double f119(double a, double b, double c) {  // nine-point-circle antipode of X(11)
    return combo_first<2>({{{2.0, f5}, {-1.0, f11}}}, a, b, c);
}
double f140(double a, double b, double c) {  // midpoint of X(3) and X(5)
    return combo_first<2>({{{0.5, f3}, {0.5, f5}}}, a, b, c);
}
double f142(double a, double b, double c) {  // complement of X(9)
    return combo_first<2>({{{1.5, f2}, {-0.5, f9}}}, a, b, c);
}
double f144(double a, double b, double c) {  // anticomplement of X(7)
    return combo_first<2>({{{3.0, f2}, {-2.0, f7}}}, a, b, c);
}
double f145(double a, double b, double c) {  // anticomplement of X(8)
    return combo_first<2>({{{3.0, f2}, {-2.0, f8}}}, a, b, c);
}
double f149(double a, double b, double c) {  // anticomplement of X(100)
    return combo_first<2>({{{3.0, f2}, {-2.0, f100}}}, a, b, c);
}
double f153(double a, double b, double c) {  // anticomplement of X(104)
    return combo_first<2>({{{3.0, f2}, {-2.0, f104}}}, a, b, c);
}
double f165(double a, double b, double c) {  // centroid of the excentral triangle
    const std::array<double, 3> e1{-a / (b + c - a), b / (b + c - a), c / (b + c - a)};
    const std::array<double, 3> e2{a / (c + a - b), -b / (c + a - b), c / (c + a - b)};
    const std::array<double, 3> e3{a / (a + b - c), b / (a + b - c), -c / (a + b - c)};
    return (e1[0] + e2[0] + e3[0]) / (3.0 * a);
}
double f191(double a, double b, double c) {  // reflection of X(1) in X(21)
    return combo_first<2>({{{2.0, f21}, {-1.0, f1}}}, a, b, c);
}

struct Entry {
    int k;
    const char* name;
    FirstFn fn;
};

constexpr std::array kEntries{
    Entry{1, "incenter", f1},
    Entry{2, "centroid", f2},
    Entry{3, "circumcenter", f3},
    Entry{4, "orthocenter", f4},
    Entry{5, "nine-point center", f5},
    Entry{6, "symmedian point", f6},
    Entry{7, "Gergonne point", f7},
    Entry{8, "Nagel point", f8},
    Entry{9, "mittenpunkt", f9},
    Entry{10, "Spieker center", f10},
    Entry{11, "Feuerbach point", f11},
    Entry{12, "harmonic of X(11)", f12},
    Entry{13, "first isogonic (Fermat) point", f13},
    Entry{14, "second isogonic point", f14},
    Entry{15, "first isodynamic point", f15},
    Entry{16, "second isodynamic point", f16},
    Entry{20, "de Longchamps point", f20},
    Entry{21, "Schiffler point", f21},
    Entry{35, "{1,3}-harmonic conjugate of X(36)", f35},
    Entry{36, "circumcircle inverse of X(1)", f36},
    Entry{39, "Brocard midpoint", f39},
    Entry{40, "Bevan point", f40},
    Entry{46, "X(4)-Ceva conjugate of X(1)", f46},
    Entry{55, "insimilicenter of circumcircle and incircle", f55},
    Entry{56, "exsimilicenter of circumcircle and incircle", f56},
    Entry{57, "isogonal conjugate of X(9)", f57},
    Entry{63, "isogonal conjugate of X(19)", f63},
    Entry{65, "orthocenter of the intouch triangle", f65},
    Entry{72, "isogonal conjugate of X(28)", f72},
    Entry{78, "isogonal conjugate of X(34)", f78},
    Entry{79, "isogonal conjugate of X(35)", f79},
    Entry{80, "isogonal conjugate of X(36)", f80},
    Entry{84, "isogonal conjugate of X(40)", f84},
    Entry{88, "isogonal conjugate of X(44)", f88},
    Entry{90, "isogonal conjugate of X(46)", f90},
    Entry{99, "Steiner point", f99},
    Entry{100, "anticomplement of X(11)", f100},
    Entry{104, "circumcircle antipode of X(100)", f104},
    Entry{110, "Euler reflection point", f110},
    Entry{119, "nine-point-circle antipode of X(11)", f119},
    Entry{140, "midpoint of X(3) and X(5)", f140},
    Entry{142, "complement of X(9)", f142},
    Entry{144, "anticomplement of X(7)", f144},
    Entry{145, "anticomplement of X(8)", f145},
    Entry{149, "anticomplement of X(100)", f149},
    Entry{153, "anticomplement of X(104)", f153},
    Entry{165, "centroid of the excentral triangle", f165},
    Entry{190, "Yff parabolic point", f190},
    Entry{191, "reflection of X(1) in X(21)", f191},
    Entry{200, "barycentric product X(8)*X(9)", f200},
};

}  // namespace

const std::vector<int>& CenterRegistry::required_indices() {
    static const std::vector<int> req = [] {
        std::vector<int> v;
        for (int k = 1; k <= 16; ++k) v.push_back(k);
        for (int k : {20, 35, 36, 39, 40, 55, 56, 57, 63, 65, 72, 78, 79, 80, 84, 88,
                      90, 99, 100, 104, 110, 119, 140, 142, 144, 145, 149, 153, 165,
                      190, 191, 200})
            v.push_back(k);
        return v;
    }();
    return req;
}

const CenterRegistry& CenterRegistry::standard() {
    static const CenterRegistry reg = [] {
        CenterRegistry r;
        for (const auto& e : kEntries)
            r.add({e.k, e.name, TrilinearFn(e.fn)});
        for (int k : required_indices())
            if (!r.contains(k))
                throw std::logic_error("center registry is missing a required index");
        return r;
    }();
    return reg;
}

const CenterSpec& CenterRegistry::at(int k) const {
    auto it = specs_.find(k);
    if (it == specs_.end())
        throw std::out_of_range("unregistered triangle center X(" + std::to_string(k) + ")");
    return it->second;
}

void CenterRegistry::add(CenterSpec spec) { specs_[spec.k] = std::move(spec); }

Point2 CenterRegistry::center(const Triangle& t, int k) const {
    const CenterSpec& spec = at(k);
    auto s = t.sides();
    const double u = spec.first(s[0], s[1], s[2]);
    const double v = spec.first(s[1], s[2], s[0]);
    const double w = spec.first(s[2], s[0], s[1]);
    if (!std::isfinite(u) || !std::isfinite(v) || !std::isfinite(w))
        throw std::domain_error("center: trilinears undefined for this triangle");
    return trilinear_to_cartesian(t, u, v, w);
}

Point2 center(const Triangle& t, int k) { return CenterRegistry::standard().center(t, k); }

Triangle excentral_triangle(const Triangle& t) {
    Triangle e;
    e[0] = trilinear_to_cartesian(t, -1.0, 1.0, 1.0);
    e[1] = trilinear_to_cartesian(t, 1.0, -1.0, 1.0);
    e[2] = trilinear_to_cartesian(t, 1.0, 1.0, -1.0);
    return e;
}

Triangle orthic_triangle(const Triangle& t) {
    auto foot = [](const Point2& p, const Point2& q, const Point2& x) {
        Point2 d = q - p;
        return p + d * (dot(x - p, d) / dot(d, d));
    };
    Triangle h;
    h[0] = foot(t[1], t[2], t[0]);
    h[1] = foot(t[2], t[0], t[1]);
    h[2] = foot(t[0], t[1], t[2]);
    if (!(h.area() > 1e-13 * t.area()))
        throw std::domain_error("orthic_triangle: degenerate (right) reference triangle");
    return h;
}

std::pair<Point2, Point2> brocard_points(const Triangle& t) {
    auto s = t.sides();
    const double a = s[0], b = s[1], c = s[2];
    Point2 o1 = trilinear_to_cartesian(t, c / b, a / c, b / a);
    Point2 o2 = trilinear_to_cartesian(t, b / c, c / a, a / b);
    return {o1, o2};
}

// ---- extension-file expression parser -----------------------------------

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("trilinear expression error at position " +
                                    std::to_string(pos) + ": " + what);
    }

    using Fn = TrilinearFn;

    Fn expression() {
        Fn lhs = term();
        for (;;) {
            if (eat('+')) {
                Fn rhs = term();
                lhs = [lhs, rhs](double a, double b, double c) { return lhs(a, b, c) + rhs(a, b, c); };
            } else if (eat('-')) {
                Fn rhs = term();
                lhs = [lhs, rhs](double a, double b, double c) { return lhs(a, b, c) - rhs(a, b, c); };
            } else {
                return lhs;
            }
        }
    }
    Fn term() {
        Fn lhs = power();
        for (;;) {
            if (eat('*')) {
                Fn rhs = power();
                lhs = [lhs, rhs](double a, double b, double c) { return lhs(a, b, c) * rhs(a, b, c); };
            } else if (eat('/')) {
                Fn rhs = power();
                lhs = [lhs, rhs](double a, double b, double c) { return lhs(a, b, c) / rhs(a, b, c); };
            } else {
                return lhs;
            }
        }
    }
    Fn power() {
        Fn base = unary();
        if (eat('^')) {
            Fn expo = unary();
            return [base, expo](double a, double b, double c) {
                return std::pow(base(a, b, c), expo(a, b, c));
            };
        }
        return base;
    }
    Fn unary() {
        if (eat('-')) {
            Fn inner = unary();
            return [inner](double a, double b, double c) { return -inner(a, b, c); };
        }
        return atom();
    }
    Fn atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end of expression");
        if (eat('(')) {
            Fn inner = expression();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.') {
            size_t end = pos;
            while (end < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '.' ||
                    s[end] == 'e' || s[end] == 'E' ||
                    ((s[end] == '+' || s[end] == '-') && end > pos &&
                     (s[end - 1] == 'e' || s[end - 1] == 'E'))))
                ++end;
            double val = std::stod(s.substr(pos, end - pos));
            pos = end;
            return [val](double, double, double) { return val; };
        }
        if (std::isalpha(static_cast<unsigned char>(s[pos]))) {
            size_t end = pos;
            while (end < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_'))
                ++end;
            std::string word = s.substr(pos, end - pos);
            pos = end;
            if (word == "s1") return [](double a, double, double) { return a; };
            if (word == "s2") return [](double, double b, double) { return b; };
            if (word == "s3") return [](double, double, double c) { return c; };
            if (word == "sqrt") {
                if (!eat('(')) fail("expected '(' after sqrt");
                Fn inner = expression();
                if (!eat(')')) fail("expected ')'");
                return [inner](double a, double b, double c) { return std::sqrt(inner(a, b, c)); };
            }
            fail("unknown symbol '" + word + "'");
        }
        fail(std::string("unexpected character '") + s[pos] + "'");
    }
};

}  // namespace

TrilinearFn parse_trilinear_expression(const std::string& expr) {
    Parser p(expr);
    TrilinearFn fn = p.expression();
    p.skip();
    if (p.pos != expr.size())
        throw std::invalid_argument("trilinear expression error: trailing input");
    return fn;
}

void CenterRegistry::load_extension_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) { blank = false; break; }
        if (blank) continue;
        size_t c1 = line.find(',');
        size_t c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
        if (c2 == std::string::npos)
            throw std::invalid_argument("registry extension: expected 'k, name, expression'");
        int k = std::stoi(line.substr(0, c1));
        std::string name = line.substr(c1 + 1, c2 - c1 - 1);
        size_t b0 = name.find_first_not_of(" \t");
        size_t b1 = name.find_last_not_of(" \t");
        name = b0 == std::string::npos ? "" : name.substr(b0, b1 - b0 + 1);
        add({k, name, parse_trilinear_expression(line.substr(c2 + 1))});
    }
}

void CenterRegistry::load_extension_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open registry extension file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    load_extension_text(ss.str());
}

}  // namespace poncelet
