#include <doctest.h>

#include <cmath>

#include "hypkin/oracle.hpp"

using namespace hypkin;
using oracle::SampledCurve;

namespace {

SampledCurve unit_hyperbola_branch() {
    return SampledCurve::from_callbacks(
        [](double t) { return HyperbolicNumber{std::cosh(t), std::sinh(t)}; },
        [](double t) { return HyperbolicNumber{std::sinh(t), std::cosh(t)}; },
        [](double t) {
            return HyperbolicNumber{std::cosh(t), std::sinh(t)};
        });
}

SampledCurve sample_expr_curve(const ExprCurve& curve, double t0, double t1,
                               int n) {
    std::vector<TimedPoint> samples;
    for (int i = 0; i < n; ++i) {
        const double t = t0 + (t1 - t0) * i / (n - 1);
        samples.push_back({t, curve.point(t)});
    }
    return SampledCurve::from_samples(std::move(samples));
}

} // namespace

TEST_CASE("arc length of a unit-speed hyperbola branch is the parameter") {
    const auto c = unit_hyperbola_branch();
    CHECK(oracle::lorentz_arc_length(c, 0.0, 0.8) ==
          doctest::Approx(0.8).epsilon(1e-10));
    CHECK(oracle::lorentz_arc_length(c, -0.5, 1.5) ==
          doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("centrode arc length over the first half unit") {
    const auto s1 = scenario_s1();
    const auto moving =
        SampledCurve::from_expr_curve(s1.moving_centrode());
    const auto fixed = SampledCurve::from_expr_curve(s1.fixed_centrode());
    const double lm = oracle::lorentz_arc_length(moving, 0.0, 0.5);
    const double lf = oracle::lorentz_arc_length(fixed, 0.0, 0.5);
    CHECK(lm == doctest::Approx(1.4717398274583218).epsilon(1e-8));
    CHECK(std::abs(lm - lf) <= 1e-8 * lm);
}

TEST_CASE("null segments are rejected") {
    const auto line = SampledCurve::from_callbacks(
        [](double t) { return HyperbolicNumber{t, t}; },
        [](double) { return HyperbolicNumber{1, 1}; },
        [](double) { return HyperbolicNumber{0, 0}; });
    CHECK_THROWS_AS(oracle::lorentz_arc_length(line, 0.0, 1.0), Error);
    try {
        oracle::lorentz_arc_length(line, 0.0, 1.0);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IsotropicSegment);
    }
}

TEST_CASE("osculating center of a constant-distance curve is its center") {
    const HyperbolicNumber c0{0.4, -1.3};
    const double rho = 1.7;
    const auto c = SampledCurve::from_callbacks(
        [=](double t) {
            return c0 + rho * HyperbolicNumber{std::cosh(t), std::sinh(t)};
        },
        [=](double t) {
            return rho * HyperbolicNumber{std::sinh(t), std::cosh(t)};
        },
        [=](double t) {
            return rho * HyperbolicNumber{std::cosh(t), std::sinh(t)};
        });
    for (double t : {-0.8, 0.0, 0.6, 1.4})
        CHECK(mag(oracle::osculating_center(c, t) - c0) <= 1e-12);
}

TEST_CASE("osculating centers of s1 trajectories at the start") {
    const auto s1 = scenario_s1();

    const auto through_pole = SampledCurve::from_expr_curve(
        s1.trajectory_curve({-0.5, -1.0}));
    CHECK(mag(oracle::osculating_center(through_pole, 0.0) -
              HyperbolicNumber{0, -1}) <= 1e-12);

    const auto above_pole =
        SampledCurve::from_expr_curve(s1.trajectory_curve({0, 0}));
    CHECK(mag(oracle::osculating_center(above_pole, 0.0) -
              HyperbolicNumber{0, -0.25}) <= 1e-12);
}

TEST_CASE("center minus point is Lorentz-orthogonal to the velocity") {
    const auto s1 = scenario_s1();
    const auto curve =
        SampledCurve::from_expr_curve(s1.trajectory_curve({0.3, 0.2}));
    for (double t : {0.1, 0.5, 0.9, 1.1}) {
        const auto center = oracle::osculating_center(curve, t);
        const auto v = curve.velocity_at(t);
        const auto d = center - curve.position_at(t);
        CHECK(std::abs(inner(d, v)) <= 1e-10 * (1.0 + mag(d) * mag(v)));
    }
}

TEST_CASE("tangent angle rates of the s1 centrodes") {
    const auto s1 = scenario_s1();
    const auto moving =
        SampledCurve::from_expr_curve(s1.moving_centrode());
    const auto fixed = SampledCurve::from_expr_curve(s1.fixed_centrode());
    CHECK(oracle::tangent_angle_rate(moving, 0.0) ==
          doctest::Approx(5.0 / 3.0).epsilon(1e-12));
    CHECK(oracle::tangent_angle_rate(fixed, 0.0) ==
          doctest::Approx(8.0 / 3.0).epsilon(1e-12));
    // frame independence of the relative rotation rate
    for (double t : {0.0, 0.3, 0.7, 1.1})
        CHECK(oracle::tangent_angle_rate(fixed, t) -
                  oracle::tangent_angle_rate(moving, t) ==
              doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("hyperbola-analog curves rotate at unit rate") {
    const auto c = unit_hyperbola_branch();
    for (double t : {-1.0, 0.0, 0.5, 2.0})
        CHECK(oracle::tangent_angle_rate(c, t) ==
              doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sampled and exact modes agree") {
    // the moving centrode keeps speed sqrt(9 - 4t^2) > 0 on [0, 1.2]
    const auto s1 = scenario_s1();
    const auto& expr = s1.moving_centrode();
    const auto exact = SampledCurve::from_expr_curve(expr);
    const auto sampled = sample_expr_curve(expr, 0.0, 1.2, 1201);

    const double t = 0.6; // an interior grid point
    CHECK(mag(oracle::osculating_center(sampled, t) -
              oracle::osculating_center(exact, t)) <=
          1e-6 * (1.0 + mag(oracle::osculating_center(exact, t))));
    CHECK(std::abs(oracle::tangent_angle_rate(sampled, t) -
                   oracle::tangent_angle_rate(exact, t)) <=
          1e-6 * (1.0 + std::abs(oracle::tangent_angle_rate(exact, t))));

    const auto expr_arc =
        oracle::lorentz_arc_length(exact, 0.3, 0.9);
    const auto fd_arc = oracle::lorentz_arc_length(sampled, 0.3, 0.9);
    CHECK(std::abs(expr_arc - fd_arc) <= 1e-6 * expr_arc);
}

TEST_CASE("degenerate oracle queries raise the right kinds") {
    const auto null_curve = SampledCurve::from_callbacks(
        [](double t) { return HyperbolicNumber{0.5 * std::exp(t),
                                               0.5 * std::exp(t)}; },
        [](double t) { return HyperbolicNumber{0.5 * std::exp(t),
                                               0.5 * std::exp(t)}; },
        [](double t) { return HyperbolicNumber{0.5 * std::exp(t),
                                               0.5 * std::exp(t)}; });
    try {
        oracle::osculating_center(null_curve, 0.0);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NullVelocity);
    }

    const auto straight = SampledCurve::from_callbacks(
        [](double t) { return HyperbolicNumber{1 + 2 * t, 3 * t}; },
        [](double) { return HyperbolicNumber{2, 3}; },
        [](double) { return HyperbolicNumber{0, 0}; });
    try {
        oracle::osculating_center(straight, 0.5);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::StraightCurve);
    }
}
