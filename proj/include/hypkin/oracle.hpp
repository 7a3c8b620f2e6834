#pragma once

#include <functional>
#include <vector>

#include "hypkin/hypnum.hpp"
#include "hypkin/motion.hpp"

namespace hypkin {
namespace oracle {

/// Plane curve handed to the oracle either as exact position/velocity/
/// acceleration callbacks or as discrete samples.  In sampled mode the grid
/// must be uniform with at least 5 points; derivatives come from 5-point
/// central stencils at interior samples, endpoints are excluded.
struct SampledCurve {
    std::vector<double> ts;
    std::vector<HyperbolicNumber> points;
    std::function<HyperbolicNumber(double)> position_fn;
    std::function<HyperbolicNumber(double)> velocity_fn;
    std::function<HyperbolicNumber(double)> acceleration_fn;

    static SampledCurve from_samples(std::vector<TimedPoint> samples);
    static SampledCurve
    from_callbacks(std::function<HyperbolicNumber(double)> position,
                   std::function<HyperbolicNumber(double)> velocity,
                   std::function<HyperbolicNumber(double)> acceleration);
    static SampledCurve from_expr_curve(const ExprCurve& curve);

    bool exact() const { return static_cast<bool>(velocity_fn); }

    HyperbolicNumber position_at(double t) const;
    HyperbolicNumber velocity_at(double t) const;
    HyperbolicNumber acceleration_at(double t) const;
};

/// Integral of the Lorentzian speed over [t0, t1].  Exact mode uses
/// adaptive quadrature (relative error <= 1e-8); sampled mode integrates
/// stencil velocities over the interior sample grid.  Throws
/// IsotropicSegment when the speed falls to null anywhere encountered.
double lorentz_arc_length(const SampledCurve& curve, double t0, double t1);

/// Center of the instantaneously stationary Lorentz distance:
/// c(t) + lambda n with n = j v and lambda = <v,v> / <acc, n>.  The center
/// always lies on the Lorentz-normal line through the curve point.  Throws
/// NullVelocity on null v and StraightCurve when <acc, n> vanishes.
HyperbolicNumber osculating_center(const SampledCurve& curve, double t);

/// d/dt of the hyperbolic polar angle of the velocity vector:
/// (v_re a_uni - v_uni a_re) / <v, v>.
double tangent_angle_rate(const SampledCurve& curve, double t);

} // namespace oracle
} // namespace hypkin
