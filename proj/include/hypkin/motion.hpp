#pragma once

#include <vector>

#include "hypkin/hypnum.hpp"
#include "hypkin/timefun.hpp"

namespace hypkin {

/// Pole-existence tolerance: |tau - tau_p| <= kPoleTol * (|tau|+|tau_p|+1)
/// means the instant is translation-like and has no pole.
inline constexpr double kPoleTol = 1e-12;

/// Plane curve with symbolic components and cached derivative trees, so
/// velocities and accelerations are exact.
struct ExprCurve {
    TimeExpr re, uni;
    TimeExpr d_re, d_uni;
    TimeExpr dd_re, dd_uni;

    static ExprCurve from_components(TimeExpr re, TimeExpr uni);

    HyperbolicNumber point(double t) const;
    HyperbolicNumber velocity(double t) const;
    HyperbolicNumber acceleration(double t) const;
};

/// One-parameter motion of the relative plane A against the moving plane H
/// (rotation angle phi, translation b) and the fixed plane H' (rotation
/// angle psi, translation b_p).  A point with A-coordinates x has
/// H-coordinates (b + x) e^{j phi} and H'-coordinates (b_p + x) e^{j psi}.
/// All six defining functions are symbolic, so every derived quantity is
/// evaluated from exact derivatives.
class MotionSpec {
  public:
    MotionSpec(TimeExpr b_re, TimeExpr b_uni, TimeExpr bp_re, TimeExpr bp_uni,
               TimeExpr phi, TimeExpr psi);

    const TimeExpr& b_re() const { return b_re_; }
    const TimeExpr& b_uni() const { return b_uni_; }
    const TimeExpr& bp_re() const { return bp_re_; }
    const TimeExpr& bp_uni() const { return bp_uni_; }
    const TimeExpr& phi() const { return phi_; }
    const TimeExpr& psi() const { return psi_; }
    const TimeExpr& dphi() const { return dphi_; }
    const TimeExpr& dpsi() const { return dpsi_; }
    const TimeExpr& db_re() const { return db_re_; }
    const TimeExpr& db_uni() const { return db_uni_; }
    const TimeExpr& dbp_re() const { return dbp_re_; }
    const TimeExpr& dbp_uni() const { return dbp_uni_; }

    HyperbolicNumber b_at(double t) const;
    HyperbolicNumber bp_at(double t) const;
    double phi_at(double t) const { return phi_.eval(t); }
    double psi_at(double t) const { return psi_.eval(t); }

    /// Locus of the pole in H coordinates (the moving centrode).
    const ExprCurve& moving_centrode() const { return moving_; }
    /// Locus of the pole in H' coordinates (the fixed centrode).
    const ExprCurve& fixed_centrode() const { return fixed_; }

    /// H'-trajectory of the point whose H-coordinates are fixed at x_h.
    ExprCurve trajectory_curve(HyperbolicNumber x_h) const;

  private:
    TimeExpr b_re_, b_uni_, bp_re_, bp_uni_, phi_, psi_;
    TimeExpr db_re_, db_uni_, dbp_re_, dbp_uni_, dphi_, dpsi_;
    ExprCurve moving_, fixed_;
};

/// Instantaneous translation/rotation rates of both motions at time t.
/// sigma and sigma_p are the translational rates db + j b phi' and
/// db_p + j b_p psi'; tau and tau_p are the rotation rates phi', psi'.
struct PfaffianState {
    HyperbolicNumber sigma;
    double tau = 0.0;
    HyperbolicNumber sigma_p;
    double tau_p = 0.0;
    double t = 0.0;
};

/// The instantaneous rotation pole in all three coordinate charts.
struct PolePoint {
    HyperbolicNumber in_A;  // A-plane coordinates
    HyperbolicNumber in_H;  // moving-plane coordinates
    HyperbolicNumber in_Hp; // fixed-plane coordinates
};

struct TimedPoint {
    double t = 0.0;
    HyperbolicNumber point;
};

struct CurvePair {
    std::vector<TimedPoint> moving; // pole locus in H
    std::vector<TimedPoint> fixed;  // pole locus in H'
};

/// Throws DegenerateMotion when either rotation rate vanishes at t.
PfaffianState pfaffians(const MotionSpec& spec, double t);

/// Velocity against H of the point with A-coordinates x_in_a and
/// A-coordinate rate dx_in_a, expressed in the H chart:
/// (sigma + j tau x + dx) e^{j phi}.
HyperbolicNumber relative_velocity(const MotionSpec& spec,
                                   HyperbolicNumber x_in_a,
                                   HyperbolicNumber dx_in_a, double t);

/// Velocity against H', expressed in the H' chart:
/// (sigma_p + j tau_p x + dx) e^{j psi}.
HyperbolicNumber absolute_velocity(const MotionSpec& spec,
                                   HyperbolicNumber x_in_a,
                                   HyperbolicNumber dx_in_a, double t);

/// Velocity in H' of the H-material point currently at A-coordinates
/// x_in_a: ((sigma_p - sigma) + j (tau_p - tau) x) e^{j psi}.  Vanishes
/// exactly at the pole.
HyperbolicNumber sliding_velocity(const MotionSpec& spec,
                                  HyperbolicNumber x_in_a, double t);

/// Throws NoPole when |tau - tau_p| is below kPoleTol (scale-aware).
PolePoint pole_point(const MotionSpec& spec, double t);

/// Uniform samples of the two centrodes over [t0, t1]; propagates NoPole.
CurvePair trace_pole_curves(const MotionSpec& spec, double t0, double t1,
                            int samples);

/// H'-coordinates at time t of the point fixed in H at x_h.
HyperbolicNumber trajectory_in_fixed(const MotionSpec& spec,
                                     HyperbolicNumber x_h, double t);

/// Chart-transfer rotation e^{j(psi - phi)}: an H-chart vector v represents
/// the same instantaneous plane vector as v * moving_to_fixed_rotation.
HyperbolicNumber moving_to_fixed_rotation(const MotionSpec& spec, double t);

/// The same physical motion with the roles of H and H' exchanged.
MotionSpec inverse_motion(const MotionSpec& spec);

// Built-in closed-form fixtures.  Both share the pole (0,-1) at t = 0 with
// centrode speed sqrt(9 - 4t^2); s1 has a Left-sector pole tangent, s2 a
// Down-sector one.
MotionSpec scenario_s1(); // b = 0, b' = t,  phi = t, psi = 2t
MotionSpec scenario_s2(); // b = 0, b' = jt, phi = t, psi = 2t

} // namespace hypkin
