#pragma once

#include <array>
#include <cmath>

#include "hypkin/errors.hpp"

namespace hypkin {

/// Scale-invariant isotropy tolerance: z counts as isotropic when
/// |re^2 - uni^2| <= kIsotropyTol * (re^2 + uni^2).
inline constexpr double kIsotropyTol = 1e-12;

/// The four cone regions of the Lorentzian plane, bounded by the null lines
/// y = +-x, plus the null lines themselves and the origin.  Right contains
/// +1, Up contains +j, Left contains -1, Down contains -j.
enum class Sector {
    Right,
    Up,
    Left,
    Down,
    IsotropicPlus,  // the line y = x (minus the origin)
    IsotropicMinus, // the line y = -x (minus the origin)
    Zero,
};

const char* to_string(Sector sector);

/// Split-complex value re + j*uni with j^2 = +1.  Components are always
/// finite; constructors reject NaN/inf.
struct HyperbolicNumber {
    double re = 0.0;
    double uni = 0.0;

    HyperbolicNumber() = default;

    HyperbolicNumber(double re_, double uni_) : re(re_), uni(uni_) {
        if (!std::isfinite(re) || !std::isfinite(uni))
            throw Error(ErrorKind::NonFinite,
                        "non-finite hyperbolic number component");
    }

    HyperbolicNumber operator-() const { return {-re, -uni}; }

    friend HyperbolicNumber operator+(HyperbolicNumber a, HyperbolicNumber b) {
        return {a.re + b.re, a.uni + b.uni};
    }
    friend HyperbolicNumber operator-(HyperbolicNumber a, HyperbolicNumber b) {
        return {a.re - b.re, a.uni - b.uni};
    }
    friend HyperbolicNumber operator*(double k, HyperbolicNumber z) {
        return {k * z.re, k * z.uni};
    }
    friend HyperbolicNumber operator*(HyperbolicNumber z, double k) {
        return {k * z.re, k * z.uni};
    }
    friend HyperbolicNumber operator/(HyperbolicNumber z, double k) {
        return {z.re / k, z.uni / k};
    }
    friend bool operator==(HyperbolicNumber a, HyperbolicNumber b) {
        return a.re == b.re && a.uni == b.uni;
    }
};

/// Product rule (xu + yv) + j(xv + yu); commutative and associative.
inline HyperbolicNumber mul(HyperbolicNumber z, HyperbolicNumber w) {
    return {z.re * w.re + z.uni * w.uni, z.re * w.uni + z.uni * w.re};
}

inline HyperbolicNumber operator*(HyperbolicNumber z, HyperbolicNumber w) {
    return mul(z, w);
}

/// Multiplication by j; maps any vector to a Lorentz-orthogonal one.
inline HyperbolicNumber mul_j(HyperbolicNumber z) { return {z.uni, z.re}; }

inline HyperbolicNumber conj(HyperbolicNumber z) { return {z.re, -z.uni}; }

/// Lorentzian inner product <z,w> = Re(z * conj(w)) = xu - yv.
inline double inner(HyperbolicNumber z, HyperbolicNumber w) {
    return z.re * w.re - z.uni * w.uni;
}

/// Lorentzian modulus sqrt(|x^2 - y^2|); zero on the null lines.
inline double norm_h(HyperbolicNumber z) {
    return std::sqrt(std::abs(inner(z, z)));
}

/// Euclidean component magnitude, used for error measures and tolerances
/// (the Lorentzian modulus cannot see null-direction discrepancies).
inline double mag(HyperbolicNumber z) { return std::hypot(z.re, z.uni); }

inline bool is_zero(HyperbolicNumber z) { return z.re == 0.0 && z.uni == 0.0; }

inline bool is_isotropic(HyperbolicNumber z) {
    return std::abs(inner(z, z)) <=
           kIsotropyTol * (z.re * z.re + z.uni * z.uni);
}

/// Division z/w; throws IsotropicInput when w has no inverse.
HyperbolicNumber operator/(HyperbolicNumber z, HyperbolicNumber w);

/// cosh(phi) + j sinh(phi): the unit-modulus rotation operator.
inline HyperbolicNumber exp_j(double phi) {
    return {std::cosh(phi), std::sinh(phi)};
}

Sector classify(HyperbolicNumber z);

/// Polar decomposition of a nonzero, non-null value.  The sector carries the
/// branch: Right = +r e^{j angle}, Left = -r e^{j angle},
/// Up = +r j e^{j angle}, Down = -r j e^{j angle}.
struct HyperbolicPolar {
    double radius = 0.0; // > 0
    double angle = 0.0;  // hyperbolic angle, unbounded
    Sector sector = Sector::Zero;
};

HyperbolicPolar to_polar(HyperbolicNumber z);
HyperbolicNumber from_polar(const HyperbolicPolar& polar);

/// [[cosh phi, sinh phi], [sinh phi, cosh phi]]; applying it to (re, uni)
/// equals mul(z, exp_j(phi)).
std::array<std::array<double, 2>, 2> rotation_matrix(double phi);

} // namespace hypkin
