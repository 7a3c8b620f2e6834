#include "hypkin/canonical.hpp"

#include <cmath>

namespace hypkin {

namespace {

double tangent_angle_rate_of(HyperbolicNumber v, HyperbolicNumber acc) {
    return (v.re * acc.uni - v.uni * acc.re) / inner(v, v);
}

struct SignedPolar {
    double a = 0.0;     // signed distance along e^{j alpha} * axis
    double alpha = 0.0; // hyperbolic angle within the sector
    bool tangent_pair = false;
    HyperbolicNumber axis;
};

// Decompose x = a e^{j alpha} axis with axis the tangent or normal unit,
// whichever spans the sector pair containing x.
SignedPolar decompose(const CanonicalData& cd, HyperbolicNumber x) {
    if (is_zero(x) || is_isotropic(x))
        throw Error(ErrorKind::IsotropicDirection,
                    "direction through the pole must be nonzero and "
                    "non-null");
    SignedPolar sp;
    sp.tangent_pair =
        (inner(x, x) > 0.0) == (inner(cd.tangent_unit, cd.tangent_unit) > 0.0);
    sp.axis = sp.tangent_pair ? cd.tangent_unit : cd.normal_unit();
    const HyperbolicNumber w = x / sp.axis;
    sp.a = std::copysign(norm_h(w), w.re);
    sp.alpha = std::atanh(w.uni / w.re);
    return sp;
}

} // namespace

CanonicalData canonical_data(const MotionSpec& spec, double t) {
    const PolePoint pole = pole_point(spec, t);

    const HyperbolicNumber v = spec.moving_centrode().velocity(t);
    const HyperbolicNumber vf = spec.fixed_centrode().velocity(t);
    if (is_zero(v) || is_isotropic(v) || is_zero(vf) || is_isotropic(vf))
        throw Error(ErrorKind::IsotropicTangent,
                    "pole-curve velocity is null at t = " + std::to_string(t));

    CanonicalData cd;
    cd.t = t;
    cd.pole_H = pole.in_H;
    cd.pole_Hp = pole.in_Hp;
    cd.s_dot = norm_h(v);
    cd.tangent_unit = v / cd.s_dot;
    cd.sector = classify(cd.tangent_unit);
    cd.theta_rate_moving =
        tangent_angle_rate_of(v, spec.moving_centrode().acceleration(t));
    cd.theta_rate_fixed =
        tangent_angle_rate_of(vf, spec.fixed_centrode().acceleration(t));
    cd.r = cd.s_dot / cd.theta_rate_moving;
    cd.r_p = cd.s_dot / cd.theta_rate_fixed;
    cd.nu_dot = spec.dpsi().eval(t) - spec.dphi().eval(t);
    cd.phi = spec.phi_at(t);
    cd.psi = spec.psi_at(t);
    return cd;
}

ConjugatePair conjugate_point(const CanonicalData& cd,
                              HyperbolicNumber x_rel) {
    const SignedPolar sp = decompose(cd, x_rel);
    const double dnu_ds = cd.nu_dot / cd.s_dot;

    ConjugatePair pair;
    pair.x_rel = x_rel;
    pair.a = std::abs(sp.a);
    pair.alpha = sp.alpha;

    if (sp.tangent_pair && sp.alpha == 0.0) {
        // On the pole tangent the center collapses into the pole.
        pair.x_rel_p = HyperbolicNumber{0.0, 0.0};
        pair.a_p = 0.0;
        return pair;
    }

    double correction; // 1/a' = 1/a + correction, distances signed
    if (sp.tangent_pair)
        correction = dnu_ds / std::sinh(sp.alpha);
    else
        correction = -dnu_ds / std::cosh(sp.alpha);
    const double inv_ap = 1.0 / sp.a + correction;
    if (std::abs(inv_ap) <=
        1e-12 * (std::abs(1.0 / sp.a) + std::abs(correction)))
        throw Error(ErrorKind::NoConjugate, "curvature center at infinity");

    const double ap = 1.0 / inv_ap;
    pair.x_rel_p = mul(ap * exp_j(sp.alpha), sp.axis);
    pair.a_p = std::abs(ap);
    return pair;
}

HyperbolicNumber euler_savary_residual(const CanonicalData& cd,
                                       const ConjugatePair& pair) {
    const SignedPolar sp = decompose(cd, pair.x_rel);
    double a_p_signed = 0.0;
    if (!is_zero(pair.x_rel_p)) {
        const HyperbolicNumber w = pair.x_rel_p / sp.axis;
        a_p_signed = std::copysign(norm_h(w), w.re);
    }
    const HyperbolicNumber rotational =
        cd.nu_dot * sp.a * a_p_signed * mul_j(exp_j(sp.alpha));
    return HyperbolicNumber{0.0, cd.s_dot * (sp.a - a_p_signed)} + rotational;
}

HyperbolicNumber canonical_fixed_flow(const CanonicalData& cd,
                                      HyperbolicNumber x, Frame which) {
    const double rate = which == Frame::Moving ? cd.theta_rate_moving
                                               : cd.theta_rate_fixed;
    if (cd.tangent_on_j_axis())
        return {-rate * x.uni, -cd.s_dot - rate * x.re};
    return {-cd.s_dot - rate * x.uni, -rate * x.re};
}

HyperbolicNumber canonical_sliding(const CanonicalData& cd,
                                   HyperbolicNumber x) {
    return mul(cd.nu_dot * mul_j(x), exp_j(cd.psi));
}

CanonicalData swap_roles(const CanonicalData& cd) {
    CanonicalData sw = cd;
    std::swap(sw.pole_H, sw.pole_Hp);
    std::swap(sw.r, sw.r_p);
    std::swap(sw.theta_rate_moving, sw.theta_rate_fixed);
    std::swap(sw.phi, sw.psi);
    sw.nu_dot = -cd.nu_dot;
    return sw;
}

} // namespace hypkin
