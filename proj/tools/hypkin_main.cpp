#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypkin/cli.hpp"

namespace {

using namespace hypkin;
using namespace hypkin::cli;

int exit_code_for(const Error& e) {
    switch (e.kind()) {
    case ErrorKind::Parse:
    case ErrorKind::Eval:
    case ErrorKind::InvalidDocument:
        return kExitInputError;
    default:
        return kExitGeometricError;
    }
}

HyperbolicNumber parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw Error(ErrorKind::InvalidDocument,
                    "--point expects \"re,uni\"");
    try {
        return {std::stod(text.substr(0, comma)),
                std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidDocument,
                    "--point expects \"re,uni\"");
    }
}

void apply_overrides(MotionDocument& doc, const std::string& range,
                     int samples) {
    if (!range.empty()) {
        const auto colon = range.find(':');
        if (colon == std::string::npos)
            throw Error(ErrorKind::InvalidDocument,
                        "--range expects \"t0:t1\"");
        try {
            doc.t0 = std::stod(range.substr(0, colon));
            doc.t1 = std::stod(range.substr(colon + 1));
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidDocument,
                        "--range expects \"t0:t1\"");
        }
    }
    if (samples > 0)
        doc.samples = samples;
    if (!(doc.t0 < doc.t1) || doc.samples < 2)
        throw Error(ErrorKind::InvalidDocument,
                    "need t0 < t1 and samples >= 2");
}

int write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write \"" << path << "\"\n";
        return kExitInputError;
    }
    out << content;
    return out ? kExitOk : kExitInputError;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar hyperbolic kinematics: centrodes, frame data and "
                 "conjugate points"};
    app.require_subcommand(1);

    std::string spec_path, out_path, range, point_text;
    std::vector<std::string> point_list;
    int samples = 0;
    double t_query = 0.0;

    auto* sim = app.add_subcommand("simulate",
                                   "sample pole and frame data to CSV");
    sim->add_option("--spec", spec_path, "motion document (JSON)")
        ->required();
    sim->add_option("--out", out_path, "output CSV path")->required();
    sim->add_option("--range", range, "override t range, \"t0:t1\"");
    sim->add_option("--samples", samples, "override sample count");

    auto* ver = app.add_subcommand("verify", "run the invariant suites");
    ver->add_option("--spec", spec_path, "motion document (JSON)")
        ->required();

    auto* es = app.add_subcommand("euler-savary",
                                  "conjugate point of a pole-relative point");
    es->add_option("--spec", spec_path, "motion document (JSON)")->required();
    es->add_option("--t", t_query, "evaluation time")->required();
    es->add_option("--point", point_text, "pole-relative point \"re,uni\"")
        ->required();

    auto* plot = app.add_subcommand("plot", "draw centrodes to SVG");
    plot->add_option("--spec", spec_path, "motion document (JSON)")
        ->required();
    plot->add_option("--out", out_path, "output SVG path")->required();
    plot->add_option("--point", point_list,
                     "moving-plane point to trace, \"re,uni\" (repeatable)");
    plot->add_option("--range", range, "override t range, \"t0:t1\"");
    plot->add_option("--samples", samples, "override sample count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInputError;
    }

    try {
        MotionDocument doc = MotionDocument::load(spec_path);
        if (sim->parsed()) {
            apply_overrides(doc, range, samples);
            std::ostringstream buf;
            const int rc = run_simulate(doc, buf);
            const int io = write_file(out_path, buf.str());
            return io != kExitOk ? io : rc;
        }
        if (ver->parsed())
            return run_verify(doc, std::cout);
        if (es->parsed())
            return run_euler_savary(doc, t_query, parse_point(point_text),
                                    std::cout);
        apply_overrides(doc, range, samples);
        std::vector<HyperbolicNumber> pts;
        for (const std::string& p : point_list)
            pts.push_back(parse_point(p));
        std::ostringstream buf;
        const int rc = run_plot(doc, pts, buf);
        const int io = write_file(out_path, buf.str());
        return io != kExitOk ? io : rc;
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what()
                  << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
