// Command-line front end: generate orbits, run invariant sweeps, verify and
// plot loci, reproduce the locus-type table, and emit transformation
// certificates.
//
// Exit codes: 0 success, 1 verification failure, 2 configuration error,
// 3 degenerate data.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "poncelet/centers.hpp"
#include "poncelet/conic_pair.hpp"
#include "poncelet/invariants.hpp"
#include "poncelet/loci.hpp"
#include "poncelet/orbits.hpp"
#include "poncelet/svg.hpp"
#include "poncelet/transforms.hpp"

using nlohmann::json;
using namespace poncelet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDegenerate = 3;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
}

struct Options {
    std::string family = "incircle";
    double a = 2.0, b = 1.0;
    double R = 1.5, r = 2.0 / 3.0;
    double omega = 0.3;
    int n = 240;
    int k = 1;
    int nsides = 3;
    double t0 = 0.0;
    std::string derived = "reference";
    std::string relation = "all";
    std::string normalization = "fix-b";
    double lo = 1.5, hi = 6.0;
    int steps = 24;
    int pairs = 50, confocal_pairs = 10;
    unsigned seed = 20240901;
    int samples = 200;
    std::string out, csv, json_path, svg, registry_ext, config;
};

ConicPair pair_from(const Options& o) {
    auto fam = family_from_string(o.family);
    if (!fam) throw CLI::ValidationError("unknown family: " + o.family);
    switch (*fam) {
        case Family::Confocal: return make_confocal_pair(o.a, o.b);
        case Family::Incircle: return make_incircle_pair(o.a, o.b);
        case Family::Circumellipse: return make_circumellipse_pair(o.a, o.b);
        case Family::Homothetic: return make_homothetic_pair(o.a, o.b);
        case Family::Poristic: return make_poristic_pair(o.R, o.r);
        case Family::Brocard: return make_brocard_pair(o.R, o.omega);
    }
    throw CLI::ValidationError("unknown family");
}

json ellipse_json(const Ellipse& e) {
    return {{"center", {e.center.x, e.center.y}},
            {"semi_major", e.a},
            {"semi_minor", e.b},
            {"angle", e.angle}};
}

int cmd_orbit(const Options& o) {
    ConicPair pair = pair_from(o);
    std::string text = "t,x1,y1,x2,y2,x3,y3,L,L2,A,r,R,omega\n";
    int produced = 0;
    for (int i = 0; i < o.n; ++i) {
        double t = o.t0 + 2.0 * M_PI * (i + 0.5) / o.n;
        try {
            Triangle tr = orbit(pair, t);
            TriangleMetrics m = metrics(tr);
            std::string row = fmt17(t);
            for (int v = 0; v < 3; ++v)
                row += "," + fmt17(tr[v].x) + "," + fmt17(tr[v].y);
            row += "," + fmt17(m.perimeter) + "," + fmt17(m.sum_sq_sides) + "," +
                   fmt17(m.area) + "," + fmt17(m.inradius) + "," +
                   fmt17(m.circumradius) + "," + fmt17(m.brocard_angle) + "\n";
            text += row;
            ++produced;
        } catch (const std::domain_error&) {
        }
    }
    if (produced == 0) {
        std::cerr << "orbit: every sample was degenerate\n";
        return kExitDegenerate;
    }
    write_text(o.out, text);
    return kExitOk;
}

int cmd_invariants(const Options& o) {
    ConicPair pair = pair_from(o);
    json out;
    out["family"] = to_string(pair.family);
    out["a"] = pair.a;
    out["b"] = pair.b;
    out["R"] = pair.R;
    out["samples"] = o.n;
    json reports = json::array();
    for (const auto& spec : family_invariants(pair.family)) {
        InvariantReport rep = sweep(pair, spec, o.n);
        json jr = {{"name", rep.name},
                   {"samples", rep.samples},
                   {"skipped", rep.skipped},
                   {"mean", rep.mean},
                   {"max_abs_dev", rep.max_abs_dev},
                   {"max_rel_dev", rep.max_rel_dev}};
        if (rep.expected) jr["expected"] = *rep.expected;
        else jr["expected"] = nullptr;
        if (rep.name == "sum of cotangents")
            jr["note"] = "expected value derived from L2/(4A) and confirmed by sweep";
        reports.push_back(jr);
    }
    out["invariants"] = reports;
    write_text(o.out, out.dump(2) + "\n");
    return kExitOk;
}

int cmd_locus(const Options& o, const CenterRegistry& reg) {
    ConicPair pair = pair_from(o);
    auto derived = derived_from_string(o.derived);
    if (!derived) throw CLI::ValidationError("unknown derived triangle: " + o.derived);

    LocusFit fit = verify_locus(pair, o.k, *derived, o.n, reg);
    PointList pts = sample_locus(pair, o.k, *derived, o.n, nullptr, reg);

    if (!o.csv.empty()) {
        std::string text = "x,y\n";
        for (const auto& p : pts) text += fmt17(p.x) + "," + fmt17(p.y) + "\n";
        write_text(o.csv, text);
    }
    auto expected = (*derived == DerivedTriangle::Reference)
                        ? expected_locus(pair.family, o.k, pair.a, pair.b)
                        : std::nullopt;
    if (!o.svg.empty()) write_text(o.svg, locus_svg(pair, pts, expected));

    json out;
    out["family"] = to_string(pair.family);
    out["k"] = o.k;
    out["derived"] = to_string(*derived);
    out["samples"] = fit.stats.requested;
    out["skipped"] = fit.stats.skipped;
    out["label"] = to_string(fit.classification.label);
    out["conic_residual"] = fit.classification.conic_residual;
    out["quartic_residual"] = fit.classification.quartic_residual;
    if (fit.classification.shape) out["fitted"] = ellipse_json(*fit.classification.shape);
    if (fit.classification.point)
        out["fitted_point"] = {fit.classification.point->x, fit.classification.point->y};
    if (fit.match_rel_error) out["match_rel_error"] = *fit.match_rel_error;
    if (fit.quartic_angle) out["quartic_coeff_angle"] = *fit.quartic_angle;
    if (fit.expected_max_residual) out["expected_max_residual"] = *fit.expected_max_residual;
    if (!fit.expected_source.empty()) out["expected_source"] = fit.expected_source;
    write_text(o.json_path.empty() ? o.out : o.json_path, out.dump(2) + "\n");
    return kExitOk;
}

int cmd_table1(const Options& o) {
    auto cells = locus_table(o.a, o.b, o.n);
    const char* col_names[] = {"Conf.", "F.I", "Por.", "Conf.Exc", "F.II",
                               "Por.Exc.", "F.III", "Broc."};
    std::string text = "k";
    for (const char* c : col_names) text += std::string(",") + c;
    text += "\n";
    int mismatches = 0;
    int row_k = -1;
    std::string row;
    std::string details;
    for (const auto& cell : cells) {
        if (cell.k != row_k) {
            if (row_k != -1) text += row + "\n";
            row_k = cell.k;
            row = "X" + std::to_string(cell.k);
        }
        row += "," + cell.measured;
        if (!cell.match) {
            ++mismatches;
            details += "  mismatch: X(" + std::to_string(cell.k) + ") " +
                       col_names[static_cast<int>(cell.col)] + " expected " +
                       cell.expected + " measured " + cell.measured + "\n";
        }
    }
    text += row + "\n";
    write_text(o.out.empty() ? o.csv : o.out, text);
    if (mismatches > 0) {
        std::cerr << details << "table1: " << mismatches << " cell(s) differ\n";
        return kExitVerifyFail;
    }
    std::cerr << "table1: all " << cells.size() << " cells match\n";
    return kExitOk;
}

json certificate_json(const Certificate& c) {
    return {{"relation", c.relation},
            {"samples", c.samples},
            {"max_discrepancy", c.max_discrepancy},
            {"tolerance", c.tolerance},
            {"pass", c.pass}};
}

int cmd_certify(const Options& o) {
    const double a = o.a, b = o.b;
    json out = json::array();
    bool all_pass = true;
    auto want = [&](const std::string& r) { return o.relation == "all" || o.relation == r; };

    if (want("thm2")) {
        Certificate c = rotation_certificate_I(a, b, o.samples);
        out.push_back(certificate_json(c));
        all_pass &= c.pass;
    }
    if (want("thm6")) {
        Certificate c = rotation_certificate_II(a, b, o.samples);
        out.push_back(certificate_json(c));
        all_pass &= c.pass;
    }
    if (want("thm7")) {
        Certificate c = similarity_certificate_III(a, b, std::min(o.samples, 100));
        out.push_back(certificate_json(c));
        all_pass &= c.pass;
    }
    if (want("thm3")) {
        auto [map, pair] = affine_image_I(a, b);
        (void)map;
        const double a2 = a * a, b2 = b * b;
        const double delta = std::sqrt(a2 * a2 - a2 * b2 + b2 * b2);
        const double rR = 2.0 * (delta - b2) * (a2 - delta) / ((a2 - b2) * (a2 - b2));
        double worst = 0;
        for (int i = 0; i < o.samples; ++i) {
            double t = 2.0 * M_PI * (i + 0.5) / o.samples;
            worst = std::max(worst, std::abs(sum_cosines(orbit(pair, t)) - (1.0 + rR)));
        }
        bool pass = worst < 1e-9;
        out.push_back({{"relation", "thm3: image family keeps the confocal cosine sum"},
                       {"expected_sum", 1.0 + rR},
                       {"max_discrepancy", worst},
                       {"tolerance", 1e-9},
                       {"pass", pass},
                       {"image_pair", {{"outer", ellipse_json(pair.outer)},
                                       {"inner", ellipse_json(pair.inner)}}}});
        all_pass &= pass;
    }
    if (want("thm5")) {
        auto [map, pair] = affine_image_II(a, b);
        (void)map;
        const double a2 = a * a, b2 = b * b;
        const double delta = std::sqrt(a2 * a2 - a2 * b2 + b2 * b2);
        const double rR = 2.0 * (delta - b2) * (a2 - delta) / ((a2 - b2) * (a2 - b2));
        double worst = 0;
        for (int i = 0; i < o.samples; ++i) {
            double t = 2.0 * M_PI * (i + 0.5) / o.samples;
            worst = std::max(worst, std::abs(product_cosines(orbit(pair, t)) - rR / 4.0));
        }
        bool pass = worst < 1e-9;
        out.push_back({{"relation", "thm5: image family keeps the excentral cosine product"},
                       {"expected_product", rR / 4.0},
                       {"max_discrepancy", worst},
                       {"tolerance", 1e-9},
                       {"pass", pass}});
        all_pass &= pass;
    }
    if (want("obs1")) {
        const double R = (a + b) / 2.0, r = a * b / (a + b);
        MeasuredConic m = obs1_poristic_circumconic(R, r, o.samples);
        const double d = std::sqrt(R * (R - 2 * r));
        bool pass = std::abs(m.axis_major - (R + d)) < 1e-9 &&
                    std::abs(m.axis_minor - (R - d)) < 1e-9 && m.spread < 1e-9;
        out.push_back({{"relation", "obs1: X1-centered circumconic of the poristic family"},
                       {"measured_axes", {m.axis_major, m.axis_minor}},
                       {"expected_axes", {R + d, R - d}},
                       {"axis_spread", m.spread},
                       {"pass", pass}});
        all_pass &= pass;
    }
    if (want("obs2")) {
        MeasuredConic m = obs2_familyII_inconic(a, b, o.samples);
        const double Rfull = a + b, Rh = (a + b) / 2.0, dp = (a - b) / 2.0;
        bool pass_printed = std::abs(m.axis_major - (Rfull + dp)) < 1e-9 &&
                            std::abs(m.axis_minor - (Rfull - dp)) < 1e-9;
        bool pass_poristic_R = std::abs(m.axis_major - (Rh + dp)) < 1e-9 &&
                               std::abs(m.axis_minor - (Rh - dp)) < 1e-9 && m.spread < 1e-9;
        out.push_back(
            {{"relation", "obs2: X3-centered inconic of the family II triangles"},
             {"measured_axes", {m.axis_major, m.axis_minor}},
             {"expected_axes", {Rfull + dp, Rfull - dp}},
             {"expected_axes_alt", {Rh + dp, Rh - dp}},
             {"note", "alt uses the poristic circumradius (a+b)/2 in R+d', R-d'; "
                      "the measured inconic is the Poncelet inellipse itself"},
             {"axis_spread", m.spread},
             {"pass", pass_printed},
             {"pass_alt", pass_poristic_R}});
        all_pass &= pass_printed;
    }
    if (want("obs3")) {
        MeasuredConic m = obs3_familyII_macbeath(a, b, o.samples);
        const double Rfull = a + b, Rh = (a + b) / 2.0, dp = (a - b) / 2.0;
        bool pass_printed = std::abs(m.axis_major - Rfull) < 1e-9 &&
                            std::abs(m.axis_minor - std::sqrt(Rfull * Rfull - dp * dp)) < 1e-9;
        bool pass_poristic_R = std::abs(m.axis_major - Rh) < 1e-9 &&
                               std::abs(m.axis_minor - std::sqrt(Rh * Rh - dp * dp)) < 1e-9 &&
                               m.spread < 1e-9;
        out.push_back(
            {{"relation", "obs3: MacBeath inconic of the family II triangles"},
             {"measured_axes", {m.axis_major, m.axis_minor}},
             {"expected_axes", {Rfull, std::sqrt(Rfull * Rfull - dp * dp)}},
             {"expected_axes_alt", {Rh, std::sqrt(Rh * Rh - dp * dp)}},
             {"note", "alt uses the poristic circumradius (a+b)/2 in R, sqrt(R^2-d'^2)"},
             {"axis_spread", m.spread},
             {"pass", pass_printed},
             {"pass_alt", pass_poristic_R}});
        all_pass &= pass_printed;
    }
    if (want("isolation")) {
        IsolationReport rep = group_isolation_check(a, b, 24);
        out.push_back({{"relation", "isolation: no fixed affine map carries family III "
                                    "into family I (numeric evidence, not a proof)"},
                       {"best_affine_residual", rep.residual_iii_vs_i},
                       {"control_identity", rep.residual_control_identity},
                       {"control_confocal_image", rep.residual_control_confocal},
                       {"tolerance", 1e-2},
                       {"pass", rep.isolated}});
        all_pass &= rep.isolated;
    }

    write_text(o.out, out.dump(2) + "\n");
    return all_pass ? kExitOk : kExitVerifyFail;
}

int cmd_caustic(const Options& o) {
    auto fam = family_from_string(o.family);
    if (!fam) throw CLI::ValidationError("unknown family: " + o.family);
    ConicPair tuned = tune_caustic_for_closure(Ellipse(o.a, o.b), *fam, o.nsides);
    NGonOrbit orb = step_orbit(tuned, 0.37, o.nsides);
    json out = {{"family", to_string(*fam)},
                {"n", o.nsides},
                {"outer", ellipse_json(tuned.outer)},
                {"inner", ellipse_json(tuned.inner)},
                {"closure_residual", orb.closure_residual},
                {"orbit_residual", max_orbit_residual(tuned, orb.vertices)}};
    write_text(o.out, out.dump(2) + "\n");
    return kExitOk;
}

int cmd_probe(const Options& o) {
    std::mt19937 rng(o.seed);
    std::uniform_real_distribution<double> Ua(1.3, 3.0);
    std::uniform_real_distribution<double> Uf(0.1, 0.95);
    json out;
    json noncf = json::array();
    int below = 0;
    for (int i = 0; i < o.pairs; ++i) {
        double a = Ua(rng), b = 1.0;
        double delta = std::sqrt(a * a * a * a - a * a + 1.0);
        double conf_ai = a * (delta - 1.0) / (a * a - 1.0);
        double ai, bi;
        for (;;) {
            ai = Uf(rng) * a;
            bi = b * (1.0 - ai / a);
            if (bi > 0.02 && std::abs(ai - conf_ai) > 0.08 * a) break;
        }
        ConicPair pair;
        pair.family = Family::Incircle;  // generic concentric pair, stepped directly
        pair.a = a;
        pair.b = b;
        pair.outer = Ellipse(a, b);
        pair.inner = Ellipse(ai, bi);
        ConjectureProbe probe = probe_conjecture1(pair, o.n);
        bool ok = probe.label == LocusClass::StationaryPoint ||
                  probe.conic_residual > 1e-3;
        below += ok ? 0 : 1;
        noncf.push_back({{"a", a},
                         {"inner", {ai, bi}},
                         {"label", to_string(probe.label)},
                         {"conic_residual", probe.conic_residual},
                         {"sampson_max", probe.sampson_max},
                         {"above_1e-3", ok}});
    }
    json cfj = json::array();
    bool confocal_ok = true;
    for (int i = 0; i < o.confocal_pairs; ++i) {
        double a = Ua(rng);
        ConicPair pair = make_confocal_pair(a, 1.0);
        ConjectureProbe probe = probe_conjecture1(pair, o.n);
        bool ok = probe.label == LocusClass::Ellipse && probe.conic_residual < 1e-9;
        confocal_ok &= ok;
        cfj.push_back({{"a", a},
                       {"label", to_string(probe.label)},
                       {"conic_residual", probe.conic_residual},
                       {"pass", ok}});
    }
    out["non_confocal"] = noncf;
    out["confocal"] = cfj;
    out["non_confocal_below_threshold"] = below;
    out["note"] = "numeric evidence, not a proof; the conic residual of a "
                  "quartic-like locus can fall below 1e-3 for pairs near the "
                  "homothetic member";
    write_text(o.out, out.dump(2) + "\n");
    return (below == 0 && confocal_ok) ? kExitOk : kExitVerifyFail;
}

int cmd_x16_scan(const Options& o) {
    ScanNormalization norm;
    if (o.normalization == "fix-b") norm = ScanNormalization::FixB;
    else if (o.normalization == "fix-area") norm = ScanNormalization::FixArea;
    else if (o.normalization == "fix-sum") norm = ScanNormalization::FixSum;
    else throw CLI::ValidationError("unknown normalization: " + o.normalization);

    std::vector<double> ratios;
    for (int i = 0; i < o.steps; ++i)
        ratios.push_back(o.lo + (o.hi - o.lo) * i / (o.steps - 1.0));
    ScanResult res = x16_radius_scan(ratios, norm, o.n);
    json out;
    out["normalization"] = to_string(res.normalization);
    out["interior_minimum"] = res.interior_minimum;
    out["argmin"] = res.argmin;
    json curve = json::array();
    for (auto [rho, rad] : res.radius_curve) curve.push_back({{"ratio", rho}, {"radius", rad}});
    out["radius_curve"] = curve;
    write_text(o.out, out.dump(2) + "\n");
    return kExitOk;
}

void maybe_apply_config(CLI::App* sub, Options& o) {
    if (o.config.empty()) return;
    std::ifstream f(o.config);
    if (!f) throw CLI::ValidationError("cannot open config file: " + o.config);
    json cfg = json::parse(f);
    auto set_if = [&](const char* flag, auto& target) {
        auto* opt = sub->get_option_no_throw(std::string("--") + flag);
        if (cfg.contains(flag) && (!opt || opt->count() == 0))
            target = cfg[flag].get<std::decay_t<decltype(target)>>();
    };
    set_if("family", o.family);
    set_if("a", o.a);
    set_if("b", o.b);
    set_if("R", o.R);
    set_if("r", o.r);
    set_if("omega", o.omega);
    set_if("n", o.n);
    set_if("k", o.k);
    set_if("N", o.nsides);
    set_if("derived", o.derived);
    set_if("relation", o.relation);
    set_if("samples", o.samples);
    set_if("out", o.out);
    set_if("csv", o.csv);
    set_if("json", o.json_path);
    set_if("svg", o.svg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poncelet 3-periodic family generator and verifier"};
    app.require_subcommand(1);
    Options o;

    app.add_option("--registry-ext", o.registry_ext,
                   "extension table of triangle centers: lines 'k, name, expression'");
    app.add_option("--config", o.config, "JSON file with default option values");

    auto add_pair_opts = [&](CLI::App* sub) {
        sub->add_option("--family", o.family,
                        "confocal|incircle|circumellipse|homothetic|poristic|brocard");
        sub->add_option("--a", o.a, "outer semi-axis a");
        sub->add_option("--b", o.b, "outer semi-axis b");
        sub->add_option("--R", o.R, "circumcircle radius (poristic/brocard)");
        sub->add_option("--r", o.r, "incircle radius (poristic)");
        sub->add_option("--omega", o.omega, "Brocard angle (brocard)");
    };

    CLI::App* orbit_cmd = app.add_subcommand("orbit", "sample family triangles to CSV");
    add_pair_opts(orbit_cmd);
    orbit_cmd->add_option("--n", o.n, "number of samples");
    orbit_cmd->add_option("--t0", o.t0, "starting parameter");
    orbit_cmd->add_option("--out", o.out, "output CSV path (default stdout)");

    CLI::App* inv_cmd = app.add_subcommand("invariants", "invariant sweep report (JSON)");
    add_pair_opts(inv_cmd);
    inv_cmd->add_option("--n", o.n, "sweep samples");
    inv_cmd->add_option("--out", o.out, "output JSON path (default stdout)");

    CLI::App* locus_cmd = app.add_subcommand("locus", "sample, classify and verify a locus");
    add_pair_opts(locus_cmd);
    locus_cmd->add_option("--k", o.k, "triangle center index");
    locus_cmd->add_option("--derived", o.derived, "reference|excentral|orthic");
    locus_cmd->add_option("--n", o.n, "locus samples");
    locus_cmd->add_option("--csv", o.csv, "write sampled points CSV");
    locus_cmd->add_option("--json", o.json_path, "write fit report JSON");
    locus_cmd->add_option("--svg", o.svg, "write schematic SVG");
    locus_cmd->add_option("--out", o.out, "fit report JSON (default stdout)");

    CLI::App* table_cmd = app.add_subcommand("table1", "reproduce the locus-type grid");
    table_cmd->add_option("--a", o.a, "outer semi-axis a");
    table_cmd->add_option("--b", o.b, "outer semi-axis b");
    table_cmd->add_option("--n", o.n, "samples per cell");
    table_cmd->add_option("--out", o.out, "output CSV path (default stdout)");
    table_cmd->add_option("--csv", o.csv, "alias of --out");

    CLI::App* cert_cmd = app.add_subcommand("certify", "transformation certificates (JSON)");
    cert_cmd->add_option("--relation", o.relation,
                         "all|thm2|thm6|thm7|thm3|thm5|obs1|obs2|obs3|isolation");
    cert_cmd->add_option("--a", o.a, "outer semi-axis a");
    cert_cmd->add_option("--b", o.b, "outer semi-axis b");
    cert_cmd->add_option("--samples", o.samples, "samples per certificate");
    cert_cmd->add_option("--out", o.out, "output JSON path (default stdout)");

    CLI::App* caustic_cmd =
        app.add_subcommand("caustic", "tune the caustic for N-periodic closure");
    caustic_cmd->add_option("--family", o.family, "incircle|homothetic|confocal|circumellipse");
    caustic_cmd->add_option("--a", o.a, "generator semi-axis a");
    caustic_cmd->add_option("--b", o.b, "generator semi-axis b");
    caustic_cmd->add_option("--N", o.nsides, "polygon side count");
    caustic_cmd->add_option("--out", o.out, "output JSON path (default stdout)");

    CLI::App* probe_cmd =
        app.add_subcommand("probe-conjecture", "incenter-locus conic residuals over random pairs");
    probe_cmd->add_option("--pairs", o.pairs, "random non-confocal pairs");
    probe_cmd->add_option("--confocal-pairs", o.confocal_pairs, "random confocal pairs");
    probe_cmd->add_option("--n", o.n, "locus samples per pair");
    probe_cmd->add_option("--seed", o.seed, "random seed");
    probe_cmd->add_option("--out", o.out, "output JSON path (default stdout)");

    CLI::App* scan_cmd = app.add_subcommand("x16-scan", "X(16) locus radius vs aspect ratio");
    scan_cmd->add_option("--normalization", o.normalization, "fix-b|fix-area|fix-sum");
    scan_cmd->add_option("--lo", o.lo, "smallest a/b");
    scan_cmd->add_option("--hi", o.hi, "largest a/b");
    scan_cmd->add_option("--steps", o.steps, "grid size");
    scan_cmd->add_option("--n", o.n, "locus samples per ratio");
    scan_cmd->add_option("--out", o.out, "output JSON path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        maybe_apply_config(sub, o);

        CenterRegistry reg = CenterRegistry::standard();
        if (!o.registry_ext.empty()) reg.load_extension_file(o.registry_ext);

        if (sub == orbit_cmd) return cmd_orbit(o);
        if (sub == inv_cmd) return cmd_invariants(o);
        if (sub == locus_cmd) return cmd_locus(o, reg);
        if (sub == table_cmd) return cmd_table1(o);
        if (sub == cert_cmd) return cmd_certify(o);
        if (sub == caustic_cmd) return cmd_caustic(o);
        if (sub == probe_cmd) return cmd_probe(o);
        if (sub == scan_cmd) return cmd_x16_scan(o);
        return kExitConfig;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
