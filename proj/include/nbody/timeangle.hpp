#pragma once

#include "nbody/conic.hpp"

namespace nbody {

// Everything needed to map the body angle to time and back: the conic, the
// (signed) specific angular momentum of the relative orbit, and the epoch.
struct TimeAngleContext {
    ConicCoefficients coeffs;
    double h = 0.0;   // x_o^2 * thetadot_o, nonzero, sign follows the motion
    double t0 = 0.0;
};

TimeAngleContext make_time_context(const TwoBodyAnalogue& analogue,
                                   const ConicCoefficients& coeffs);

// Closed-form time at body angle theta_k: the explicit antiderivative of
// x^2(theta) / h, continued across the half-angle tangent poles so the map
// is continuous and monotone. Circular and elliptic orbits only.
double time_closed(const TimeAngleContext& ctx, double theta_k);

// Same map through adaptive quadrature of x^2(theta) / h from theta_k0 to
// theta_k. Serves every orbit class on the reachable arc; this is the
// independent check for time_closed. rel_tol must lie in (0, 1e-3].
double time_quadrature(const TimeAngleContext& ctx, double theta_k,
                       double rel_tol = 1e-10);

// Radial period 2*pi*k2 / (|h| * (k2^2 - k1^2)^(3/2)). Bounded orbits only.
double period(const TimeAngleContext& ctx);

// Inverse of time_closed: the body angle at time t, located by reducing
// t modulo the period and running safeguarded Newton on one revolution.
// Satisfies |time_closed(result) - t| <= tol * period. Bounded orbits only.
double angle_of_time(const TimeAngleContext& ctx, double t, double tol = 1e-12);

}  // namespace nbody
