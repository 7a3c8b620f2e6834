#include "hypkin/hypnum.hpp"

namespace hypkin {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NonFinite: return "non_finite";
    case ErrorKind::ZeroInput: return "zero_input";
    case ErrorKind::IsotropicInput: return "isotropic_input";
    case ErrorKind::Parse: return "parse_error";
    case ErrorKind::Eval: return "eval_error";
    case ErrorKind::DegenerateMotion: return "degenerate_motion";
    case ErrorKind::NoPole: return "no_pole";
    case ErrorKind::IsotropicTangent: return "isotropic_tangent";
    case ErrorKind::IsotropicDirection: return "isotropic_direction";
    case ErrorKind::NoConjugate: return "no_conjugate";
    case ErrorKind::NullVelocity: return "null_velocity";
    case ErrorKind::StraightCurve: return "straight_curve";
    case ErrorKind::IsotropicSegment: return "isotropic_segment";
    case ErrorKind::InvalidDocument: return "invalid_document";
    }
    return "unknown";
}

const char* to_string(Sector sector) {
    switch (sector) {
    case Sector::Right: return "right";
    case Sector::Up: return "up";
    case Sector::Left: return "left";
    case Sector::Down: return "down";
    case Sector::IsotropicPlus: return "isotropic_plus";
    case Sector::IsotropicMinus: return "isotropic_minus";
    case Sector::Zero: return "zero";
    }
    return "unknown";
}

HyperbolicNumber operator/(HyperbolicNumber z, HyperbolicNumber w) {
    const double n = inner(w, w); // w * conj(w)
    if (is_zero(w) || is_isotropic(w))
        throw Error(ErrorKind::IsotropicInput,
                    "division by a null hyperbolic number");
    return mul(z, conj(w)) / n;
}

Sector classify(HyperbolicNumber z) {
    if (is_zero(z))
        return Sector::Zero;
    if (is_isotropic(z))
        return z.re * z.uni > 0.0 ? Sector::IsotropicPlus
                                  : Sector::IsotropicMinus;
    if (z.re > std::abs(z.uni))
        return Sector::Right;
    if (z.uni > std::abs(z.re))
        return Sector::Up;
    if (z.re < -std::abs(z.uni))
        return Sector::Left;
    return Sector::Down;
}

HyperbolicPolar to_polar(HyperbolicNumber z) {
    if (is_zero(z))
        throw Error(ErrorKind::ZeroInput, "polar form of zero");
    if (is_isotropic(z))
        throw Error(ErrorKind::IsotropicInput,
                    "polar form on a null direction");
    const Sector sector = classify(z);
    const bool diagonal = sector == Sector::Right || sector == Sector::Left;
    const double angle =
        diagonal ? std::atanh(z.uni / z.re) : std::atanh(z.re / z.uni);
    return {norm_h(z), angle, sector};
}

HyperbolicNumber from_polar(const HyperbolicPolar& polar) {
    const HyperbolicNumber e = exp_j(polar.angle);
    switch (polar.sector) {
    case Sector::Right: return polar.radius * e;
    case Sector::Left: return -polar.radius * e;
    case Sector::Up: return polar.radius * mul_j(e);
    case Sector::Down: return -polar.radius * mul_j(e);
    default:
        throw Error(ErrorKind::IsotropicInput,
                    "polar form exists only inside the four sectors");
    }
}

std::array<std::array<double, 2>, 2> rotation_matrix(double phi) {
    const double c = std::cosh(phi);
    const double s = std::sinh(phi);
    return {{{c, s}, {s, c}}};
}

} // namespace hypkin
