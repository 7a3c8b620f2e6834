#include "hypkin/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hypkin/canonical.hpp"
#include "hypkin/oracle.hpp"

namespace hypkin {
namespace cli {

namespace {

using json = nlohmann::json;

TimeExpr parse_field(const json& j, const std::string& key) {
    if (!j.contains(key) || !j.at(key).is_string())
        throw Error(ErrorKind::InvalidDocument,
                    "missing expression field \"" + key + "\"");
    const std::string text = j.at(key).get<std::string>();
    try {
        return TimeExpr::parse(text);
    } catch (const ParseError& e) {
        throw ParseError(e.offset(),
                         "in field \"" + key + "\": " + e.detail());
    }
}

MotionDocument document_from_json(const json& j) {
    if (!j.is_object())
        throw Error(ErrorKind::InvalidDocument,
                    "document must be a JSON object");
    if (!j.contains("b") || !j.contains("b_prime"))
        throw Error(ErrorKind::InvalidDocument,
                    "document needs \"b\" and \"b_prime\" objects");
    MotionSpec spec(parse_field(j.at("b"), "re"), parse_field(j.at("b"), "uni"),
                    parse_field(j.at("b_prime"), "re"),
                    parse_field(j.at("b_prime"), "uni"),
                    parse_field(j, "phi"), parse_field(j, "psi"));
    MotionDocument doc{std::move(spec)};
    if (j.contains("t_range")) {
        const auto& r = j.at("t_range");
        if (!r.is_array() || r.size() != 2 || !r[0].is_number() ||
            !r[1].is_number())
            throw Error(ErrorKind::InvalidDocument,
                        "\"t_range\" must be [t0, t1]");
        doc.t0 = r[0].get<double>();
        doc.t1 = r[1].get<double>();
    }
    if (j.contains("samples")) {
        if (!j.at("samples").is_number_integer())
            throw Error(ErrorKind::InvalidDocument,
                        "\"samples\" must be an integer");
        doc.samples = j.at("samples").get<int>();
    }
    if (!(doc.t0 < doc.t1) || doc.samples < 2)
        throw Error(ErrorKind::InvalidDocument,
                    "need t0 < t1 and samples >= 2");
    return doc;
}

} // namespace

MotionDocument MotionDocument::load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::InvalidDocument,
                    "cannot open \"" + path + "\"");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidDocument, e.what());
    }
    return document_from_json(j);
}

MotionDocument MotionDocument::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidDocument, e.what());
    }
    return document_from_json(j);
}

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value == 0.0 ? 0.0 : value);
    return buf;
}

// ---- simulate ---------------------------------------------------------

int run_simulate(const MotionDocument& doc, std::ostream& out) {
    out << "t,pole_A_re,pole_A_uni,pole_H_re,pole_H_uni,pole_Hp_re,"
           "pole_Hp_uni,s_dot,r,r_prime,nu_ds\n";
    int failed_rows = 0;
    for (int i = 0; i < doc.samples; ++i) {
        const double t =
            doc.t0 + (doc.t1 - doc.t0) * i / (doc.samples - 1);
        std::vector<std::string> cells(11);
        cells[0] = format_number(t);
        bool row_failed = false;
        bool have_pole = false;
        try {
            const PolePoint p = pole_point(doc.spec, t);
            cells[1] = format_number(p.in_A.re);
            cells[2] = format_number(p.in_A.uni);
            cells[3] = format_number(p.in_H.re);
            cells[4] = format_number(p.in_H.uni);
            cells[5] = format_number(p.in_Hp.re);
            cells[6] = format_number(p.in_Hp.uni);
            have_pole = true;
        } catch (const Error& e) {
            for (int c = 1; c <= 10; ++c)
                cells[c] = to_string(e.kind());
            row_failed = true;
        }
        if (have_pole) {
            try {
                const CanonicalData cd = canonical_data(doc.spec, t);
                cells[7] = format_number(cd.s_dot);
                cells[8] = format_number(cd.r);
                cells[9] = format_number(cd.r_p);
                cells[10] = format_number(cd.nu_dot / cd.s_dot);
            } catch (const Error& e) {
                for (int c = 7; c <= 10; ++c)
                    cells[c] = to_string(e.kind());
                row_failed = true;
            }
        }
        for (std::size_t c = 0; c < cells.size(); ++c)
            out << (c ? "," : "") << cells[c];
        out << "\n";
        if (row_failed)
            ++failed_rows;
    }
    return failed_rows == doc.samples ? kExitAllDegenerate : kExitOk;
}

// ---- euler-savary -----------------------------------------------------

int run_euler_savary(const MotionDocument& doc, double t,
                     HyperbolicNumber x_rel, std::ostream& out) {
    const CanonicalData cd = canonical_data(doc.spec, t);
    const ConjugatePair pair = conjugate_point(cd, x_rel);
    out << format_number(pair.a) << ", " << format_number(pair.alpha) << ", "
        << format_number(pair.a_p) << ", " << format_number(pair.x_rel_p.re)
        << ", " << format_number(pair.x_rel_p.uni) << "\n";
    return kExitOk;
}

// ---- verify -----------------------------------------------------------

namespace {

struct SuiteResult {
    explicit SuiteResult(std::string name_) : name(std::move(name_)) {}

    std::string name;
    bool skipped = false;
    bool passed = true;
    std::string detail;
};

void report(std::ostream& out, const SuiteResult& r) {
    out << std::left << std::setw(16) << r.name
        << (r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL");
    if (!r.detail.empty())
        out << "  (" << r.detail << ")";
    out << "\n";
}

HyperbolicNumber random_number(std::mt19937& rng, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    const double re = dist(rng);
    const double uni = dist(rng);
    return {re, uni};
}

SuiteResult suite_algebra() {
    SuiteResult r{"algebra"};
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    double worst_alg = 0.0;
    double worst_rot = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const HyperbolicNumber z = random_number(rng, -3.0, 3.0);
        const HyperbolicNumber w = random_number(rng, -3.0, 3.0);
        const HyperbolicNumber v = random_number(rng, -3.0, 3.0);
        const double phi = dist(rng);

        const double scale = 1.0 + mag(z) * mag(w) * (1.0 + mag(v));
        worst_alg = std::max(worst_alg,
                             mag(mul(z, w) - mul(w, z)) / scale);
        worst_alg = std::max(
            worst_alg, mag(mul(mul(z, w), v) - mul(z, mul(w, v))) / scale);
        worst_alg = std::max(
            worst_alg,
            mag(mul(z, w + v) - (mul(z, w) + mul(z, v))) / scale);

        const HyperbolicNumber e = exp_j(phi);
        const double lhs = inner(mul(z, e), mul(w, e));
        const double rhs = inner(z, w);
        worst_rot = std::max(worst_rot, std::abs(lhs - rhs) /
                                            (1.0 + std::abs(rhs)));

        const double nm = norm_h(mul(z, w));
        worst_rot = std::max(worst_rot,
                             std::abs(nm - norm_h(z) * norm_h(w)) /
                                 (1.0 + nm));
    }
    r.passed = worst_alg <= 1e-12 && worst_rot <= 1e-9;
    std::ostringstream os;
    os << "alg " << worst_alg << ", rot " << worst_rot;
    r.detail = os.str();
    return r;
}

SuiteResult suite_composition(const MotionDocument& doc) {
    SuiteResult r{"composition"};
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> td(doc.t0, doc.t1);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double t = td(rng);
        const HyperbolicNumber x = random_number(rng, -2.0, 2.0);
        const HyperbolicNumber dx = random_number(rng, -2.0, 2.0);
        const HyperbolicNumber va = absolute_velocity(doc.spec, x, dx, t);
        const HyperbolicNumber vf = sliding_velocity(doc.spec, x, t);
        const HyperbolicNumber vr = relative_velocity(doc.spec, x, dx, t);
        // The relative velocity is an H-chart vector; transfer it into the
        // fixed chart before composing.
        const HyperbolicNumber vr_fixed =
            mul(vr, moving_to_fixed_rotation(doc.spec, t));
        worst = std::max(worst, mag(va - (vf + vr_fixed)) / (1.0 + mag(va)));
    }
    r.passed = worst <= 1e-9;
    r.detail = "worst " + format_number(worst);
    return r;
}

std::vector<double> usable_times(const MotionDocument& doc, int n) {
    std::vector<double> ts;
    for (int i = 0; i < n; ++i) {
        const double t = doc.t0 + (doc.t1 - doc.t0) * i / (n - 1);
        try {
            canonical_data(doc.spec, t);
            ts.push_back(t);
        } catch (const Error&) {
        }
    }
    return ts;
}

SuiteResult suite_rolling(const MotionDocument& doc,
                          const std::vector<double>& ts) {
    SuiteResult r{"rolling"};
    if (ts.empty()) {
        r.skipped = true;
        r.detail = "no_pole";
        return r;
    }
    double worst_speed = 0.0;
    for (double t : ts) {
        const double sm = norm_h(doc.spec.moving_centrode().velocity(t));
        const double sf = norm_h(doc.spec.fixed_centrode().velocity(t));
        worst_speed = std::max(worst_speed, std::abs(sm - sf));
    }
    double worst_arc = 0.0;
    if (ts.size() >= 3) {
        const auto moving =
            oracle::SampledCurve::from_expr_curve(doc.spec.moving_centrode());
        const auto fixed =
            oracle::SampledCurve::from_expr_curve(doc.spec.fixed_centrode());
        const double mid = ts[ts.size() / 2];
        for (auto [a, b] : {std::pair{ts.front(), mid},
                            std::pair{mid, ts.back()}}) {
            if (!(a < b))
                continue;
            try {
                const double lm = oracle::lorentz_arc_length(moving, a, b);
                const double lf = oracle::lorentz_arc_length(fixed, a, b);
                worst_arc =
                    std::max(worst_arc, std::abs(lm - lf) / (1.0 + lm));
            } catch (const Error&) {
                // speed degenerates inside the subinterval; skip it
            }
        }
    }
    r.passed = worst_speed <= 1e-7 && worst_arc <= 1e-6;
    r.detail = "speed " + format_number(worst_speed) + ", arc " +
               format_number(worst_arc);
    return r;
}

SuiteResult suite_frame_identity(const MotionDocument& doc,
                                 const std::vector<double>& ts) {
    SuiteResult r{"frame_identity"};
    if (ts.empty()) {
        r.skipped = true;
        r.detail = "no_pole";
        return r;
    }
    double worst = 0.0;
    for (double t : ts) {
        const CanonicalData cd = canonical_data(doc.spec, t);
        worst = std::max(worst, std::abs(1.0 / cd.r_p - 1.0 / cd.r -
                                         cd.nu_dot / cd.s_dot));
    }
    r.passed = worst <= 1e-8;
    r.detail = "worst " + format_number(worst);
    return r;
}

SuiteResult suite_euler_savary(const MotionDocument& doc,
                               const std::vector<double>& ts) {
    SuiteResult r{"euler_savary"};
    if (ts.empty()) {
        r.skipped = true;
        r.detail = "no_pole";
        return r;
    }
    double worst = 0.0;
    int checked = 0;
    const std::vector<double> alphas{0.7, 1.1, 1.6};
    std::vector<double> probe{ts.front(), ts[ts.size() / 2], ts.back()};
    for (double t : probe) {
        const CanonicalData cd = canonical_data(doc.spec, t);
        const HyperbolicNumber rot = exp_j(cd.psi - cd.phi);
        for (double alpha : alphas) {
            for (const HyperbolicNumber& axis :
                 {cd.tangent_unit, cd.normal_unit()}) {
                for (double sign : {1.0, -1.0}) {
                    const HyperbolicNumber u =
                        mul(sign * 0.5 * exp_j(alpha), axis);
                    ConjugatePair pair;
                    HyperbolicNumber center;
                    try {
                        pair = conjugate_point(cd, u);
                        const auto curve = oracle::SampledCurve::from_expr_curve(
                            doc.spec.trajectory_curve(cd.pole_H + u));
                        center = oracle::osculating_center(curve, t);
                    } catch (const Error&) {
                        continue; // at-infinity configurations are legal
                    }
                    const double oracle_ap = norm_h(center - cd.pole_Hp);
                    worst = std::max(worst, std::abs(pair.a_p - oracle_ap) /
                                                (1.0 + oracle_ap));
                    // The law's center must also agree as a vector once
                    // transferred into the fixed chart.
                    worst = std::max(
                        worst, mag(mul(pair.x_rel_p, rot) -
                                   (center - cd.pole_Hp)) /
                                   (1.0 + oracle_ap));
                    ++checked;
                }
            }
        }
    }
    if (checked == 0) {
        r.skipped = true;
        r.detail = "no usable directions";
        return r;
    }
    r.passed = worst <= 1e-5;
    r.detail = "worst " + format_number(worst) + ", n=" +
               std::to_string(checked);
    return r;
}

} // namespace

int run_verify(const MotionDocument& doc, std::ostream& out) {
    const std::vector<double> ts = usable_times(doc, 48);
    std::vector<SuiteResult> results;
    results.push_back(suite_algebra());
    results.push_back(suite_composition(doc));
    results.push_back(suite_rolling(doc, ts));
    results.push_back(suite_frame_identity(doc, ts));
    results.push_back(suite_euler_savary(doc, ts));
    bool all_ok = true;
    for (const SuiteResult& r : results) {
        report(out, r);
        all_ok = all_ok && (r.passed || r.skipped);
    }
    out << (all_ok ? "verify: ok\n" : "verify: FAILED\n");
    return all_ok ? kExitOk : kExitVerifyFailed;
}

// ---- plot -------------------------------------------------------------

namespace {

struct Box {
    double xmin = -1.0, xmax = 1.0, ymin = -1.0, ymax = 1.0;

    void include(HyperbolicNumber p) {
        xmin = std::min(xmin, p.re);
        xmax = std::max(xmax, p.re);
        ymin = std::min(ymin, p.uni);
        ymax = std::max(ymax, p.uni);
    }
};

std::string svg_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void emit_polyline(std::ostream& out,
                   const std::vector<HyperbolicNumber>& pts,
                   const Box& box, double scale, const char* style) {
    if (pts.size() < 2)
        return;
    out << "<polyline fill=\"none\" " << style << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double x = (pts[i].re - box.xmin) * scale;
        const double y = (box.ymax - pts[i].uni) * scale;
        out << (i ? " " : "") << svg_coord(x) << "," << svg_coord(y);
    }
    out << "\"/>\n";
}

} // namespace

int run_plot(const MotionDocument& doc,
             const std::vector<HyperbolicNumber>& trace_points,
             std::ostream& out) {
    std::vector<HyperbolicNumber> moving, fixed;
    for (int i = 0; i < doc.samples; ++i) {
        const double t =
            doc.t0 + (doc.t1 - doc.t0) * i / (doc.samples - 1);
        try {
            const PolePoint p = pole_point(doc.spec, t);
            moving.push_back(p.in_H);
            fixed.push_back(p.in_Hp);
        } catch (const Error&) {
            // gaps simply shorten the centrode polylines
        }
    }
    std::vector<std::vector<HyperbolicNumber>> trajectories;
    for (const HyperbolicNumber& x_h : trace_points) {
        std::vector<HyperbolicNumber> traj;
        for (int i = 0; i < doc.samples; ++i) {
            const double t =
                doc.t0 + (doc.t1 - doc.t0) * i / (doc.samples - 1);
            traj.push_back(trajectory_in_fixed(doc.spec, x_h, t));
        }
        trajectories.push_back(std::move(traj));
    }

    Box box;
    for (const auto& p : moving)
        box.include(p);
    for (const auto& p : fixed)
        box.include(p);
    for (const auto& traj : trajectories)
        for (const auto& p : traj)
            box.include(p);
    const double pad = 0.1 * std::max(box.xmax - box.xmin,
                                      box.ymax - box.ymin);
    box.xmin -= pad;
    box.xmax += pad;
    box.ymin -= pad;
    box.ymax += pad;
    const double span = std::max(box.xmax - box.xmin, box.ymax - box.ymin);
    const double scale = 640.0 / span;
    const double width = (box.xmax - box.xmin) * scale;
    const double height = (box.ymax - box.ymin) * scale;

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
        << svg_coord(width) << "\" height=\"" << svg_coord(height)
        << "\" viewBox=\"0 0 " << svg_coord(width) << " " << svg_coord(height)
        << "\">\n";

    // Null-line guides y = x and y = -x.
    const double ext = std::max(std::abs(box.xmin), std::abs(box.xmax)) +
                       std::max(std::abs(box.ymin), std::abs(box.ymax));
    const char* guide =
        "stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"6,4\"";
    emit_polyline(out, {HyperbolicNumber{-ext, -ext}, {ext, ext}}, box,
                  scale, guide);
    emit_polyline(out, {HyperbolicNumber{-ext, ext}, {ext, -ext}}, box,
                  scale, guide);

    // Unit-hyperbola backdrop, all four branches.
    const double smax = std::acosh(std::max(2.0, ext));
    for (int branch = 0; branch < 4; ++branch) {
        std::vector<HyperbolicNumber> pts;
        for (int i = 0; i <= 128; ++i) {
            const double s = -smax + 2.0 * smax * i / 128;
            const double c = std::cosh(s), sh = std::sinh(s);
            switch (branch) {
            case 0: pts.push_back({c, sh}); break;
            case 1: pts.push_back({-c, sh}); break;
            case 2: pts.push_back({sh, c}); break;
            default: pts.push_back({sh, -c}); break;
            }
        }
        emit_polyline(out, pts, box, scale,
                      "stroke=\"#cccccc\" stroke-width=\"1\"");
    }

    emit_polyline(out, moving, box, scale,
                  "stroke=\"#1f77b4\" stroke-width=\"2\"");
    emit_polyline(out, fixed, box, scale,
                  "stroke=\"#d62728\" stroke-width=\"2\"");
    for (const auto& traj : trajectories)
        emit_polyline(out, traj, box, scale,
                      "stroke=\"#2ca02c\" stroke-width=\"1.5\"");

    out << "</svg>\n";
    return kExitOk;
}

} // namespace cli
} // namespace hypkin
