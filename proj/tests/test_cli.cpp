#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "hypkin/cli.hpp"

using namespace hypkin;
using namespace hypkin::cli;

namespace {

const char* kS1Doc = R"({
  "b":       {"re": "0", "uni": "0"},
  "b_prime": {"re": "t", "uni": "0"},
  "phi": "t",
  "psi": "2*t",
  "t_range": [0.0, 1.0],
  "samples": 11
})";

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("simulate emits the documented header and fixture values") {
    const auto doc = MotionDocument::from_json_text(kS1Doc);
    std::ostringstream out;
    CHECK(run_simulate(doc, out) == kExitOk);

    const auto rows = lines_of(out.str());
    REQUIRE(rows.size() == 12);
    CHECK(rows[0] == "t,pole_A_re,pole_A_uni,pole_H_re,pole_H_uni,"
                     "pole_Hp_re,pole_Hp_uni,s_dot,r,r_prime,nu_ds");

    const auto first = split(rows[1], ',');
    REQUIRE(first.size() == 11);
    CHECK(std::strtod(first[0].c_str(), nullptr) == 0.0);
    CHECK(std::strtod(first[3].c_str(), nullptr) == doctest::Approx(0.0));
    CHECK(std::strtod(first[4].c_str(), nullptr) == doctest::Approx(-1.0));
    CHECK(std::strtod(first[7].c_str(), nullptr) == doctest::Approx(3.0));
    CHECK(std::strtod(first[8].c_str(), nullptr) == doctest::Approx(1.8));
    CHECK(std::strtod(first[9].c_str(), nullptr) == doctest::Approx(1.125));
    CHECK(std::strtod(first[10].c_str(), nullptr) ==
          doctest::Approx(1.0 / 3.0));
}

TEST_CASE("simulate marks degenerate rows and keeps going") {
    auto doc = MotionDocument::from_json_text(kS1Doc);
    doc.t0 = 1.0;
    doc.t1 = 2.0;
    doc.samples = 3; // hits t = 1.5 exactly
    std::ostringstream out;
    CHECK(run_simulate(doc, out) == kExitOk);
    const auto rows = lines_of(out.str());
    REQUIRE(rows.size() == 4);
    CHECK(rows[2].find("isotropic_tangent") != std::string::npos);
    // the pole itself still exists on that row
    CHECK(split(rows[2], ',')[3].find("isotropic") == std::string::npos);
}

TEST_CASE("simulate returns the all-degenerate exit code") {
    const auto doc = MotionDocument::from_json_text(R"({
      "b": {"re": "0", "uni": "0"}, "b_prime": {"re": "0", "uni": "0"},
      "phi": "t", "psi": "t", "samples": 5, "t_range": [0.0, 1.0]})");
    std::ostringstream out;
    CHECK(run_simulate(doc, out) == kExitAllDegenerate);
    CHECK(out.str().find("no_pole") != std::string::npos);
}

TEST_CASE("malformed documents and expressions are input errors") {
    CHECK_THROWS_AS(MotionDocument::from_json_text("{not json"), Error);
    CHECK_THROWS_AS(MotionDocument::from_json_text(R"({"b": {}})"), Error);

    try {
        MotionDocument::from_json_text(R"({
          "b": {"re": "0", "uni": "0"},
          "b_prime": {"re": "0", "uni": "0"},
          "phi": "t+*2", "psi": "t"})");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
        CHECK(std::string(e.what()).find("phi") != std::string::npos);
    }

    try {
        MotionDocument::from_json_text(R"({
          "b": {"re": "0", "uni": "0"},
          "b_prime": {"re": "0", "uni": "0"},
          "phi": "t", "psi": "t", "samples": 1})");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidDocument);
    }
}

TEST_CASE("euler-savary command output") {
    const auto doc = MotionDocument::from_json_text(kS1Doc);
    std::ostringstream out;
    CHECK(run_euler_savary(doc, 0.0, {0, 1}, out) == kExitOk);
    const auto fields = split(lines_of(out.str())[0], ',');
    REQUIRE(fields.size() == 5);
    CHECK(std::strtod(fields[0].c_str(), nullptr) == doctest::Approx(1.0));
    CHECK(std::strtod(fields[2].c_str(), nullptr) == doctest::Approx(0.75));
    CHECK(std::strtod(fields[3].c_str(), nullptr) == doctest::Approx(0.0));
    CHECK(std::strtod(fields[4].c_str(), nullptr) == doctest::Approx(0.75));

    std::ostringstream tangent_out;
    CHECK(run_euler_savary(doc, 0.0, {-0.5, 0}, tangent_out) == kExitOk);
    const auto tf = split(lines_of(tangent_out.str())[0], ',');
    CHECK(std::strtod(tf[2].c_str(), nullptr) == 0.0);

    std::ostringstream null_out;
    try {
        run_euler_savary(doc, 0.0, {1, 1}, null_out);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IsotropicDirection);
    }
}

TEST_CASE("verify passes on both fixtures") {
    const char* docs[] = {
        R"({"b": {"re": "0", "uni": "0"}, "b_prime": {"re": "t", "uni": "0"},
            "phi": "t", "psi": "2*t", "t_range": [0.0, 1.2], "samples": 25})",
        R"({"b": {"re": "0", "uni": "0"}, "b_prime": {"re": "0", "uni": "t"},
            "phi": "t", "psi": "2*t", "t_range": [0.0, 1.2], "samples": 25})",
    };
    for (const char* text : docs) {
        const auto doc = MotionDocument::from_json_text(text);
        std::ostringstream out;
        CHECK(run_verify(doc, out) == kExitOk);
        CHECK(out.str().find("FAIL") == std::string::npos);
    }
}

TEST_CASE("verify skips pole suites when the rotation rates coincide") {
    const auto doc = MotionDocument::from_json_text(R"({
      "b": {"re": "0", "uni": "0"}, "b_prime": {"re": "t", "uni": "0"},
      "phi": "t", "psi": "t", "t_range": [0.0, 1.0], "samples": 11})");
    std::ostringstream out;
    CHECK(run_verify(doc, out) == kExitOk);
    CHECK(out.str().find("no_pole") != std::string::npos);
    CHECK(out.str().find("composition") != std::string::npos);
}

TEST_CASE("simulate and plot are deterministic and consistent") {
    const auto doc = MotionDocument::from_json_text(kS1Doc);

    std::ostringstream csv1, csv2;
    run_simulate(doc, csv1);
    run_simulate(doc, csv2);
    CHECK(csv1.str() == csv2.str());

    const std::vector<HyperbolicNumber> pts{{0, 0}, {-0.5, -1.0}};
    std::ostringstream svg1, svg2;
    CHECK(run_plot(doc, pts, svg1) == kExitOk);
    run_plot(doc, pts, svg2);
    CHECK(svg1.str() == svg2.str());
    CHECK(svg1.str().find("<svg") == 0);

    // the two centrode polylines start at the same mapped point
    const std::string svg = svg1.str();
    const auto first_point = [&svg](const char* stroke) {
        const auto at = svg.find(stroke);
        REQUIRE(at != std::string::npos);
        const auto points = svg.find("points=\"", at);
        const auto end = svg.find(' ', points + 8);
        return svg.substr(points + 8, end - points - 8);
    };
    CHECK(first_point("#1f77b4") == first_point("#d62728"));

    std::ostringstream bare;
    run_plot(doc, {}, bare);
    CHECK(bare.str().find("#2ca02c") == std::string::npos);
    CHECK(bare.str().find("#1f77b4") != std::string::npos);
}
