#include "nbody/timeangle.hpp"

#include <cmath>
#include <stdexcept>

#include "nbody/errors.hpp"
#include "nbody/quadrature.hpp"

namespace nbody {
namespace {

// Continuous antiderivative of x^2(theta_k), up to the 2/(h R^3) prefactor:
//
//     g(theta_k) = k1 R T / D - k2 A
//
// with T = tan(0.5 phi - 0.5 theta_k), D = -k1 T^2 + k1 + k2 + k2 T^2,
// R = sqrt((k1 + k2)(k2 - k1)) and A the arctangent block
// atan((k2 - k1) T / R). The principal-branch arctangent alone would make
// the map piecewise: T has a pole once per revolution, where A jumps by pi
// while the rational term vanishes. Adding pi times the branch index of the
// half angle restores one continuous monotone antiderivative; exactly at a
// pole the limit value -k2 A survives. dg/dtheta = R^3 x^2 / 2, which the
// tests check against the quadrature route.
double antiderivative(const ConicCoefficients& c, double r, double theta_k) {
    const double half = 0.5 * (c.phi - theta_k);
    // Branch reduction through IEEE remainder keeps the index consistent
    // with the value tan() actually produces when the half angle sits on a
    // branch boundary; an independently rounded index can land one branch
    // off there and shift the map by a whole period.
    const double reduced = std::remainder(half, kPi);  // in [-pi/2, pi/2]
    const double branch = std::nearbyint((half - reduced) / kPi);
    const double t = std::tan(reduced);
    const double beta = c.k2 - c.k1;
    const double a = std::atan(beta * t / r) + branch * kPi;
    if (std::isinf(t)) return -c.k2 * a;
    const double d = (c.k1 + c.k2) + beta * t * t;
    return c.k1 * r * t / d - c.k2 * a;
}

double conic_denominator(const ConicCoefficients& c, double theta_k) {
    return c.k1 * std::cos(theta_k - c.phi) + c.k2;
}

// Smallest value of the conic denominator over the sweep [lo, hi].
double min_denominator(const ConicCoefficients& c, double lo, double hi) {
    double dmin = std::min(conic_denominator(c, lo), conic_denominator(c, hi));
    if (c.k1 == 0.0) return dmin;
    if (hi - lo >= kTwoPi) return c.k2 - std::abs(c.k1);
    // worst angle: cos(theta - phi) = +1 for k1 < 0, -1 for k1 > 0
    const double worst0 = c.phi + (c.k1 < 0.0 ? 0.0 : kPi);
    const double m = std::ceil((lo - worst0) / kTwoPi);
    if (worst0 + m * kTwoPi <= hi) dmin = std::min(dmin, c.k2 - std::abs(c.k1));
    return dmin;
}

}  // namespace

TimeAngleContext make_time_context(const TwoBodyAnalogue& an,
                                   const ConicCoefficients& coeffs) {
    TimeAngleContext ctx;
    ctx.coeffs = coeffs;
    ctx.h = an.relative0.x * an.relative0.x * an.relative0.thetadot;
    ctx.t0 = an.t0;
    return ctx;
}

double time_closed(const TimeAngleContext& ctx, double theta_k) {
    const ConicCoefficients& c = ctx.coeffs;
    if (!is_bounded(c.orbit_class))
        throw UnboundedOrbitError(
            "closed-form time map needs a bounded orbit; use time_quadrature");
    const double r = std::sqrt((c.k1 + c.k2) * (c.k2 - c.k1));
    const double pref = 2.0 / (ctx.h * r * r * r);
    return ctx.t0 +
           pref * (antiderivative(c, r, theta_k) - antiderivative(c, r, c.theta_k0));
}

double time_quadrature(const TimeAngleContext& ctx, double theta_k,
                       double rel_tol) {
    if (!(rel_tol > 0.0) || rel_tol > 1e-3)
        throw std::invalid_argument("rel_tol must lie in (0, 1e-3]");
    const ConicCoefficients& c = ctx.coeffs;
    const double lo = std::min(c.theta_k0, theta_k);
    const double hi = std::max(c.theta_k0, theta_k);
    if (!(min_denominator(c, lo, hi) > 0.0))
        throw UnboundedOrbitError("sweep leaves the reachable arc of the conic");

    quad::Options opts;
    opts.rel_tol = rel_tol;
    const auto integral = quad::integrate_adaptive(
        [&c](double th) {
            const double den = conic_denominator(c, th);
            return 1.0 / (den * den);
        },
        c.theta_k0, theta_k, opts);
    return ctx.t0 + integral.value / ctx.h;
}

double period(const TimeAngleContext& ctx) {
    const ConicCoefficients& c = ctx.coeffs;
    if (!is_bounded(c.orbit_class))
        throw UnboundedOrbitError("period undefined for an unbounded orbit");
    const double r2 = (c.k1 + c.k2) * (c.k2 - c.k1);
    return kTwoPi * c.k2 / (std::abs(ctx.h) * r2 * std::sqrt(r2));
}

double angle_of_time(const TimeAngleContext& ctx, double t, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    const ConicCoefficients& c = ctx.coeffs;
    if (!is_bounded(c.orbit_class))
        throw UnboundedOrbitError("angle_of_time needs a bounded orbit");

    const double p = period(ctx);
    const double dir = ctx.h > 0.0 ? 1.0 : -1.0;
    const double revs = std::floor((t - ctx.t0) / p);
    const double frac = (t - ctx.t0) - revs * p;  // in [0, p)
    const double target = ctx.t0 + frac;

    // Solve on one revolution from the epoch in the direction of motion,
    // in the sweep coordinate s (theta = theta_k0 + dir * s, s in [0, 2pi]).
    // Elapsed time grows monotonically in s, so bisection brackets stay
    // valid and Newton steps (dt/ds = x^2 / |h|) only accelerate it.
    double s_lo = 0.0, s_hi = kTwoPi;
    double s = kTwoPi * frac / p;  // linear first guess
    for (int it = 0; it < 200; ++it) {
        const double theta = c.theta_k0 + dir * s;
        const double g = time_closed(ctx, theta) - target;
        if (std::abs(g) <= tol * p)
            return theta + revs * dir * kTwoPi;
        if (g > 0.0)
            s_hi = s;
        else
            s_lo = s;
        const double x = separation(c, theta);
        double next = s - g * std::abs(ctx.h) / (x * x);
        if (!(next > s_lo) || !(next < s_hi)) next = 0.5 * (s_lo + s_hi);
        if (next == s) return c.theta_k0 + dir * s + revs * dir * kTwoPi;
        s = next;
    }
    throw NumericsError("angle_of_time did not converge within 200 iterations");
}

}  // namespace nbody
