#include "hypkin/motion.hpp"

#include <cmath>
#include <utility>

namespace hypkin {

ExprCurve ExprCurve::from_components(TimeExpr re, TimeExpr uni) {
    ExprCurve c;
    c.re = std::move(re);
    c.uni = std::move(uni);
    c.d_re = c.re.differentiate();
    c.d_uni = c.uni.differentiate();
    c.dd_re = c.d_re.differentiate();
    c.dd_uni = c.d_uni.differentiate();
    return c;
}

HyperbolicNumber ExprCurve::point(double t) const {
    return {re.eval(t), uni.eval(t)};
}

HyperbolicNumber ExprCurve::velocity(double t) const {
    return {d_re.eval(t), d_uni.eval(t)};
}

HyperbolicNumber ExprCurve::acceleration(double t) const {
    return {dd_re.eval(t), dd_uni.eval(t)};
}

namespace {

// Components of (v_re + j v_uni) e^{j angle} as expression trees.
std::pair<TimeExpr, TimeExpr> rotated(const TimeExpr& v_re,
                                      const TimeExpr& v_uni,
                                      const TimeExpr& angle) {
    TimeExpr c = cosh(angle);
    TimeExpr s = sinh(angle);
    return {v_re * c + v_uni * s, v_re * s + v_uni * c};
}

} // namespace

MotionSpec::MotionSpec(TimeExpr b_re, TimeExpr b_uni, TimeExpr bp_re,
                       TimeExpr bp_uni, TimeExpr phi, TimeExpr psi)
    : b_re_(std::move(b_re)), b_uni_(std::move(b_uni)),
      bp_re_(std::move(bp_re)), bp_uni_(std::move(bp_uni)),
      phi_(std::move(phi)), psi_(std::move(psi)) {
    db_re_ = b_re_.differentiate();
    db_uni_ = b_uni_.differentiate();
    dbp_re_ = bp_re_.differentiate();
    dbp_uni_ = bp_uni_.differentiate();
    dphi_ = phi_.differentiate();
    dpsi_ = psi_.differentiate();

    // Translational rate components: sigma = db + j b phi'.
    TimeExpr s1 = db_re_ + b_uni_ * dphi_;
    TimeExpr s2 = db_uni_ + b_re_ * dphi_;
    TimeExpr sp1 = dbp_re_ + bp_uni_ * dpsi_;
    TimeExpr sp2 = dbp_uni_ + bp_re_ * dpsi_;

    // Pole in A coordinates: j (sigma_p - sigma) / (tau - tau_p).
    TimeExpr denom = dphi_ - dpsi_;
    TimeExpr pole_re = (sp2 - s2) / denom;
    TimeExpr pole_uni = (sp1 - s1) / denom;

    auto [m_re, m_uni] =
        rotated(b_re_ + pole_re, b_uni_ + pole_uni, phi_);
    moving_ = ExprCurve::from_components(std::move(m_re), std::move(m_uni));
    auto [f_re, f_uni] =
        rotated(bp_re_ + pole_re, bp_uni_ + pole_uni, psi_);
    fixed_ = ExprCurve::from_components(std::move(f_re), std::move(f_uni));
}

HyperbolicNumber MotionSpec::b_at(double t) const {
    return {b_re_.eval(t), b_uni_.eval(t)};
}

HyperbolicNumber MotionSpec::bp_at(double t) const {
    return {bp_re_.eval(t), bp_uni_.eval(t)};
}

ExprCurve MotionSpec::trajectory_curve(HyperbolicNumber x_h) const {
    // A-coordinates of the tracked point: x_h e^{-j phi} - b.
    TimeExpr c = cosh(phi_);
    TimeExpr s = sinh(phi_);
    TimeExpr xr = TimeExpr::constant(x_h.re);
    TimeExpr xu = TimeExpr::constant(x_h.uni);
    TimeExpr a_re = xr * c - xu * s - b_re_;
    TimeExpr a_uni = xu * c - xr * s - b_uni_;
    auto [g_re, g_uni] = rotated(bp_re_ + a_re, bp_uni_ + a_uni, psi_);
    return ExprCurve::from_components(std::move(g_re), std::move(g_uni));
}

namespace {

PfaffianState pfaffians_unchecked(const MotionSpec& m, double t) {
    PfaffianState st;
    st.t = t;
    st.tau = m.dphi().eval(t);
    st.tau_p = m.dpsi().eval(t);
    const HyperbolicNumber b = m.b_at(t);
    const HyperbolicNumber bp = m.bp_at(t);
    const HyperbolicNumber db{m.db_re().eval(t), m.db_uni().eval(t)};
    const HyperbolicNumber dbp{m.dbp_re().eval(t), m.dbp_uni().eval(t)};
    st.sigma = db + st.tau * mul_j(b);
    st.sigma_p = dbp + st.tau_p * mul_j(bp);
    return st;
}

} // namespace

PfaffianState pfaffians(const MotionSpec& spec, double t) {
    PfaffianState st = pfaffians_unchecked(spec, t);
    if (st.tau == 0.0 || st.tau_p == 0.0)
        throw Error(ErrorKind::DegenerateMotion,
                    "rotation rate vanishes at t = " + std::to_string(t));
    return st;
}

HyperbolicNumber relative_velocity(const MotionSpec& spec,
                                   HyperbolicNumber x_in_a,
                                   HyperbolicNumber dx_in_a, double t) {
    const PfaffianState st = pfaffians_unchecked(spec, t);
    const HyperbolicNumber bracket =
        st.sigma + st.tau * mul_j(x_in_a) + dx_in_a;
    return mul(bracket, exp_j(spec.phi_at(t)));
}

HyperbolicNumber absolute_velocity(const MotionSpec& spec,
                                   HyperbolicNumber x_in_a,
                                   HyperbolicNumber dx_in_a, double t) {
    const PfaffianState st = pfaffians_unchecked(spec, t);
    const HyperbolicNumber bracket =
        st.sigma_p + st.tau_p * mul_j(x_in_a) + dx_in_a;
    return mul(bracket, exp_j(spec.psi_at(t)));
}

HyperbolicNumber sliding_velocity(const MotionSpec& spec,
                                  HyperbolicNumber x_in_a, double t) {
    const PfaffianState st = pfaffians_unchecked(spec, t);
    const HyperbolicNumber bracket =
        (st.sigma_p - st.sigma) + (st.tau_p - st.tau) * mul_j(x_in_a);
    return mul(bracket, exp_j(spec.psi_at(t)));
}

PolePoint pole_point(const MotionSpec& spec, double t) {
    const PfaffianState st = pfaffians_unchecked(spec, t);
    const double denom = st.tau - st.tau_p;
    if (std::abs(denom) <=
        kPoleTol * (std::abs(st.tau) + std::abs(st.tau_p) + 1.0))
        throw Error(ErrorKind::NoPole,
                    "relative rotation rate vanishes at t = " +
                        std::to_string(t));
    PolePoint p;
    p.in_A = mul_j(st.sigma_p - st.sigma) / denom;
    p.in_H = mul(spec.b_at(t) + p.in_A, exp_j(spec.phi_at(t)));
    p.in_Hp = mul(spec.bp_at(t) + p.in_A, exp_j(spec.psi_at(t)));
    return p;
}

CurvePair trace_pole_curves(const MotionSpec& spec, double t0, double t1,
                            int samples) {
    if (samples < 2 || !(t0 < t1))
        throw Error(ErrorKind::InvalidDocument,
                    "need t0 < t1 and at least 2 samples");
    CurvePair out;
    out.moving.reserve(samples);
    out.fixed.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        const double t = t0 + (t1 - t0) * i / (samples - 1);
        const PolePoint p = pole_point(spec, t);
        out.moving.push_back({t, p.in_H});
        out.fixed.push_back({t, p.in_Hp});
    }
    return out;
}

HyperbolicNumber trajectory_in_fixed(const MotionSpec& spec,
                                     HyperbolicNumber x_h, double t) {
    const HyperbolicNumber in_a =
        mul(x_h, exp_j(-spec.phi_at(t))) - spec.b_at(t);
    return mul(spec.bp_at(t) + in_a, exp_j(spec.psi_at(t)));
}

HyperbolicNumber moving_to_fixed_rotation(const MotionSpec& spec, double t) {
    return exp_j(spec.psi_at(t) - spec.phi_at(t));
}

MotionSpec inverse_motion(const MotionSpec& spec) {
    return MotionSpec(spec.bp_re(), spec.bp_uni(), spec.b_re(), spec.b_uni(),
                      spec.psi(), spec.phi());
}

MotionSpec scenario_s1() {
    return MotionSpec(TimeExpr::constant(0), TimeExpr::constant(0),
                      TimeExpr::time(), TimeExpr::constant(0),
                      TimeExpr::time(),
                      TimeExpr::constant(2) * TimeExpr::time());
}

MotionSpec scenario_s2() {
    return MotionSpec(TimeExpr::constant(0), TimeExpr::constant(0),
                      TimeExpr::constant(0), TimeExpr::time(),
                      TimeExpr::time(),
                      TimeExpr::constant(2) * TimeExpr::time());
}

} // namespace hypkin
