#include "nbody/conic.hpp"

#include <cmath>

#include "nbody/errors.hpp"

namespace nbody {

const char* to_string(OrbitClass c) {
    switch (c) {
        case OrbitClass::Circular: return "circular";
        case OrbitClass::Elliptic: return "elliptic";
        case OrbitClass::Parabolic: return "parabolic";
        case OrbitClass::Hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

OrbitClass classify(double k1, double k2) {
    const double a = std::abs(k1);
    const double tol = 1e-12 * k2;
    if (a <= tol) return OrbitClass::Circular;
    if (std::abs(a - k2) <= tol) return OrbitClass::Parabolic;
    return a < k2 ? OrbitClass::Elliptic : OrbitClass::Hyperbolic;
}

ConicCoefficients conic_constants(const TwoBodyAnalogue& an) {
    const PolarState& rel = an.relative0;
    if (rel.thetadot == 0.0)
        throw DegenerateInputError("conic undefined for zero angular rate");
    if (!(rel.x > 0.0))
        throw DegenerateInputError("conic undefined for nonpositive separation");

    const double h = rel.x * rel.x * rel.thetadot;
    const double k2 = an.mu / (h * h);
    if (!std::isfinite(k2))
        throw DegenerateInputError("angular momentum too small: conic constants overflow");

    // u = 1/x obeys u'' + u = k2 in the relative angle; fit the integration
    // constants to u and du/dtheta at the epoch.
    const double u0 = 1.0 / rel.x;
    const double du0 = -rel.xdot / (rel.x * rel.x * rel.thetadot);
    const double amp = u0 - k2;
    const double c1 = amp * std::cos(rel.theta) - du0 * std::sin(rel.theta);
    const double c2 = amp * std::sin(rel.theta) + du0 * std::cos(rel.theta);

    // Rewriting in the body angle theta_k = theta + pi negates both
    // projections, so the amplitude keeps that sign instead of being
    // forced nonnegative.
    ConicCoefficients out;
    out.k1 = -std::hypot(c1, c2);
    out.k2 = k2;
    out.phi = (c1 == 0.0 && c2 == 0.0) ? 0.0 : std::atan2(c2, c1);
    out.theta_k0 = wrap_angle(rel.theta + kPi);
    out.orbit_class = classify(out.k1, out.k2);
    return out;
}

double separation(const ConicCoefficients& c, double theta_k) {
    const double den = c.k1 * std::cos(theta_k - c.phi) + c.k2;
    if (!(den > 0.0))
        throw UnboundedOrbitError("angle outside the reachable arc of the conic");
    return 1.0 / den;
}

}  // namespace nbody
