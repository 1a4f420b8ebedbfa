#pragma once

#include <cmath>

#include "nbody/decomposition.hpp"

namespace nbody {

enum class OrbitClass { Circular, Elliptic, Parabolic, Hyperbolic };

const char* to_string(OrbitClass c);

inline bool is_bounded(OrbitClass c) {
    return c == OrbitClass::Circular || c == OrbitClass::Elliptic;
}

// Polar conic for the relative separation, expressed in the body angle
// theta_k (the relative angle shifted by pi):
//
//     x(theta_k) = 1 / (k1 * cos(theta_k - phi) + k2)
//
// k1 carries the sign produced by the angle substitution (k1 <= 0 here);
// classification and eccentricity use |k1|.
struct ConicCoefficients {
    double k1 = 0.0;        // signed amplitude (1/m)
    double k2 = 0.0;        // mu / h^2 (1/m), positive
    double phi = 0.0;       // phase (rad)
    double theta_k0 = 0.0;  // body angle at the epoch, in (-pi, pi]
    OrbitClass orbit_class = OrbitClass::Circular;
};

// Fit the conic constants to the analogue's epoch state.
// Requires thetadot_o != 0 and x_o > 0.
ConicCoefficients conic_constants(const TwoBodyAnalogue& analogue);

// Relative separation at body angle theta_k. Throws UnboundedOrbitError when
// the angle lies outside the reachable arc (nonpositive denominator).
double separation(const ConicCoefficients& coeffs, double theta_k);

// |k1| = 0 -> circular, < k2 -> elliptic, = k2 -> parabolic, > k2 ->
// hyperbolic, with boundaries taken at relative tolerance 1e-12 of k2.
OrbitClass classify(double k1, double k2);
inline OrbitClass classify(const ConicCoefficients& c) { return classify(c.k1, c.k2); }

inline double eccentricity(const ConicCoefficients& c) { return std::abs(c.k1) / c.k2; }

}  // namespace nbody
