#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hypkin/motion.hpp"

namespace hypkin {
namespace cli {

// Process exit contract shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitAllDegenerate = 3;
inline constexpr int kExitGeometricError = 4;

/// A motion description parsed from JSON:
///   {"b": {"re": expr, "uni": expr}, "b_prime": {"re": expr, "uni": expr},
///    "phi": expr, "psi": expr, "t_range": [t0, t1], "samples": n}
/// t_range and samples are optional and default to [0, 1] / 101.
struct MotionDocument {
    MotionSpec spec;
    double t0 = 0.0;
    double t1 = 1.0;
    int samples = 101;

    static MotionDocument load(const std::string& path);
    static MotionDocument from_json_text(const std::string& text);
};

/// 12-significant-digit text form used by all numeric output.
std::string format_number(double value);

/// CSV trace of pole coordinates and frame data over the document's range.
/// Rows where a geometric error occurs carry its token in the affected
/// cells.  Returns kExitAllDegenerate when no row produced any value.
int run_simulate(const MotionDocument& doc, std::ostream& out);

/// Runs the invariant suites and prints one row per suite.  Suites that
/// need a pole report no_pole and are skipped when the motion has none.
/// Returns kExitVerifyFailed when any suite fails.
int run_verify(const MotionDocument& doc, std::ostream& out);

/// Prints "a, alpha, a_prime, x_prime_re, x_prime_uni" for the conjugate of
/// the pole-relative point x_rel at time t.  Geometric errors escape as
/// hypkin::Error; the caller maps them to kExitGeometricError.
int run_euler_savary(const MotionDocument& doc, double t,
                     HyperbolicNumber x_rel, std::ostream& out);

/// SVG picture of both centrodes, the trajectories of the given moving-plane
/// points, the null lines, and the unit hyperbola.  Output is deterministic.
int run_plot(const MotionDocument& doc,
             const std::vector<HyperbolicNumber>& trace_points,
             std::ostream& out);

} // namespace cli
} // namespace hypkin
