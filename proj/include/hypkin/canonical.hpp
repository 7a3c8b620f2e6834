#pragma once

#include "hypkin/hypnum.hpp"
#include "hypkin/motion.hpp"

namespace hypkin {

enum class Frame { Moving, Fixed };

/// Pole-anchored frame data at one instant.  tangent_unit is the common
/// centrode tangent in the H chart, oriented along the actual pole velocity
/// so the arc rate s_dot is positive.  The curvature radii are signed by the
/// side of the directed tangent the centers fall on.  nu_dot is the relative
/// rotation rate psi' - phi'; nu_dot / s_dot equals 1/r_p - 1/r.
struct CanonicalData {
    HyperbolicNumber pole_H;
    HyperbolicNumber pole_Hp;
    HyperbolicNumber tangent_unit;
    Sector sector = Sector::Zero; // sector of tangent_unit
    double s_dot = 0.0;           // common centrode speed, > 0
    double r = 0.0;               // moving-centrode curvature radius
    double r_p = 0.0;             // fixed-centrode curvature radius
    double nu_dot = 0.0;

    double phi = 0.0; // chart angles at the instant, for transfers
    double psi = 0.0;
    double theta_rate_moving = 0.0; // tangent-angle rates of the centrodes
    double theta_rate_fixed = 0.0;
    double t = 0.0;

    HyperbolicNumber normal_unit() const { return mul_j(tangent_unit); }

    /// Frame basis vector carried to 1 by frame coordinates: whichever of
    /// tangent/normal has positive Lorentz square.  The other axis is its
    /// j-multiple.
    HyperbolicNumber frame_axis() const {
        return inner(tangent_unit, tangent_unit) > 0.0 ? tangent_unit
                                                       : normal_unit();
    }

    /// True when the tangent lies in the Up/Down sectors, i.e. on the
    /// frame's j axis.
    bool tangent_on_j_axis() const {
        return inner(tangent_unit, tangent_unit) < 0.0;
    }
};

/// A point x_rel (pole-relative, H chart) and the instantaneous curvature
/// center x_rel_p of its fixed-plane trajectory, on the same ray through the
/// pole.  a and a_p are the Lorentzian distances from the pole; alpha is the
/// hyperbolic angle of x_rel within its sector, measured from the tangent
/// axis (tangent-sector points) or the normal axis (normal-sector points).
struct ConjugatePair {
    HyperbolicNumber x_rel;
    HyperbolicNumber x_rel_p;
    double a = 0.0;
    double a_p = 0.0;
    double alpha = 0.0;
};

/// Builds the canonical frame at time t from exact centrode derivatives.
/// Throws NoPole (via pole_point) or IsotropicTangent when the centrode
/// velocity is null and no tangent direction exists.
CanonicalData canonical_data(const MotionSpec& spec, double t);

/// Conjugate-point map: the scalar reciprocal laws
///   tangent sector:  (1/a - 1/a') sinh(alpha) = 1/r - 1/r_p
///   normal  sector:  (1/a - 1/a') cosh(alpha) = 1/r_p - 1/r
/// with distances signed along the ray.  Points exactly on the pole tangent
/// return the pole itself (a' = 0 by continuity).  Throws IsotropicDirection
/// for null x_rel and NoConjugate when the center recedes to infinity.
ConjugatePair conjugate_point(const CanonicalData& cd,
                              HyperbolicNumber x_rel);

/// Diagnostic residual j s_dot (a - a') + j a a' e^{j alpha} nu_dot with
/// signed distances.  For a consistent pair the unipotent component (the
/// pole-normal law component) vanishes at alpha = 0 and stays
/// O(sinh^2(alpha)) * s_dot (a - a') off axis; the real component has no
/// zero for off-axis pairs and is exposed for diagnostics only.
HyperbolicNumber euler_savary_residual(const CanonicalData& cd,
                                       const ConjugatePair& pair);

/// Coordinate rates, per unit t, of a point with canonical frame
/// coordinates x that is fixed in H (Moving) or in H' (Fixed).  The frame
/// translation rate s_dot sits on whichever frame axis carries the tangent.
HyperbolicNumber canonical_fixed_flow(const CanonicalData& cd,
                                      HyperbolicNumber x, Frame which);

/// Sliding velocity of the point with pole-relative A-coordinates x,
/// expressed in the fixed chart: j nu_dot x e^{j psi}.  Vanishes iff x = 0.
HyperbolicNumber canonical_sliding(const CanonicalData& cd,
                                   HyperbolicNumber x);

/// The same instant seen from the inverse motion: poles and radii swapped,
/// rotation rate reversed.  conjugate_point under the swapped data inverts
/// the original map.
CanonicalData swap_roles(const CanonicalData& cd);

} // namespace hypkin
