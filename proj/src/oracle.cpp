#include "hypkin/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace hypkin {
namespace oracle {

SampledCurve SampledCurve::from_samples(std::vector<TimedPoint> samples) {
    if (samples.size() < 5)
        throw std::invalid_argument("sampled mode needs at least 5 points");
    SampledCurve c;
    c.ts.reserve(samples.size());
    c.points.reserve(samples.size());
    for (const TimedPoint& s : samples) {
        if (!c.ts.empty() && !(s.t > c.ts.back()))
            throw std::invalid_argument("sample times must increase");
        c.ts.push_back(s.t);
        c.points.push_back(s.point);
    }
    const double h = c.ts[1] - c.ts[0];
    for (std::size_t i = 1; i + 1 < c.ts.size(); ++i)
        if (std::abs(c.ts[i + 1] - c.ts[i] - h) > 1e-9 * std::abs(h))
            throw std::invalid_argument("sample grid must be uniform");
    return c;
}

SampledCurve SampledCurve::from_callbacks(
    std::function<HyperbolicNumber(double)> position,
    std::function<HyperbolicNumber(double)> velocity,
    std::function<HyperbolicNumber(double)> acceleration) {
    SampledCurve c;
    c.position_fn = std::move(position);
    c.velocity_fn = std::move(velocity);
    c.acceleration_fn = std::move(acceleration);
    return c;
}

SampledCurve SampledCurve::from_expr_curve(const ExprCurve& curve) {
    return from_callbacks([curve](double t) { return curve.point(t); },
                          [curve](double t) { return curve.velocity(t); },
                          [curve](double t) { return curve.acceleration(t); });
}

namespace {

std::size_t stencil_index(const SampledCurve& c, double t) {
    const double h = c.ts[1] - c.ts[0];
    const double pos = (t - c.ts.front()) / h;
    const auto i = static_cast<std::ptrdiff_t>(std::lround(pos));
    if (i < 0 || i >= static_cast<std::ptrdiff_t>(c.ts.size()) ||
        std::abs(c.ts[static_cast<std::size_t>(i)] - t) >
            1e-9 * (1.0 + std::abs(t)))
        throw std::invalid_argument(
            "sampled mode evaluates only at sample times");
    if (i < 2 || i + 2 >= static_cast<std::ptrdiff_t>(c.ts.size()))
        throw std::invalid_argument(
            "sampled mode evaluates only at interior samples");
    return static_cast<std::size_t>(i);
}

HyperbolicNumber stencil_velocity(const SampledCurve& c, std::size_t i) {
    const double h = c.ts[1] - c.ts[0];
    const auto& p = c.points;
    return (p[i - 2] - 8.0 * p[i - 1] + 8.0 * p[i + 1] - p[i + 2]) /
           (12.0 * h);
}

HyperbolicNumber stencil_acceleration(const SampledCurve& c, std::size_t i) {
    const double h = c.ts[1] - c.ts[0];
    const auto& p = c.points;
    return (-1.0 * p[i - 2] + 16.0 * p[i - 1] - 30.0 * p[i] +
            16.0 * p[i + 1] - p[i + 2]) /
           (12.0 * h * h);
}

double speed_checked(const SampledCurve& c, double t) {
    const HyperbolicNumber v = c.velocity_at(t);
    if (is_zero(v) || is_isotropic(v))
        throw Error(ErrorKind::IsotropicSegment,
                    "curve speed is null at t = " + std::to_string(t));
    return norm_h(v);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double fa, double m, double fm, double b, double fb,
                        double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson(f, a, fa, lm, flm, m, fm, left, 0.5 * tol,
                            depth - 1) +
           adaptive_simpson(f, m, fm, rm, frm, b, fb, right, 0.5 * tol,
                            depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, fa, m, fm, b, fb, whole, tol, 40);
}

} // namespace

HyperbolicNumber SampledCurve::position_at(double t) const {
    if (position_fn)
        return position_fn(t);
    return points[stencil_index(*this, t)];
}

HyperbolicNumber SampledCurve::velocity_at(double t) const {
    if (velocity_fn)
        return velocity_fn(t);
    return stencil_velocity(*this, stencil_index(*this, t));
}

HyperbolicNumber SampledCurve::acceleration_at(double t) const {
    if (acceleration_fn)
        return acceleration_fn(t);
    return stencil_acceleration(*this, stencil_index(*this, t));
}

double lorentz_arc_length(const SampledCurve& curve, double t0, double t1) {
    if (!(t0 < t1))
        throw std::invalid_argument("need t0 < t1");
    if (curve.exact()) {
        auto speed = [&curve](double t) { return speed_checked(curve, t); };
        return integrate(speed, t0, t1, 1e-12 * (1.0 + (t1 - t0)));
    }
    // Sampled mode: trapezoid over the interior samples inside [t0, t1].
    std::size_t i0 = stencil_index(curve, t0);
    std::size_t i1 = stencil_index(curve, t1);
    double total = 0.0;
    double prev = speed_checked(curve, curve.ts[i0]);
    for (std::size_t i = i0 + 1; i <= i1; ++i) {
        const double cur = speed_checked(curve, curve.ts[i]);
        total += 0.5 * (prev + cur) * (curve.ts[i] - curve.ts[i - 1]);
        prev = cur;
    }
    return total;
}

HyperbolicNumber osculating_center(const SampledCurve& curve, double t) {
    const HyperbolicNumber v = curve.velocity_at(t);
    if (is_zero(v) || is_isotropic(v))
        throw Error(ErrorKind::NullVelocity,
                    "curve velocity is null at t = " + std::to_string(t));
    const HyperbolicNumber acc = curve.acceleration_at(t);
    const HyperbolicNumber n = mul_j(v);
    const double denom = inner(acc, n);
    const double vv = inner(v, v);
    if (std::abs(denom) <= 1e-12 * (mag(acc) * mag(n) + std::abs(vv)))
        throw Error(ErrorKind::StraightCurve,
                    "osculating center at infinity");
    return curve.position_at(t) + (vv / denom) * n;
}

double tangent_angle_rate(const SampledCurve& curve, double t) {
    const HyperbolicNumber v = curve.velocity_at(t);
    if (is_zero(v) || is_isotropic(v))
        throw Error(ErrorKind::NullVelocity,
                    "curve velocity is null at t = " + std::to_string(t));
    const HyperbolicNumber acc = curve.acceleration_at(t);
    return (v.re * acc.uni - v.uni * acc.re) / inner(v, v);
}

} // namespace oracle
} // namespace hypkin
