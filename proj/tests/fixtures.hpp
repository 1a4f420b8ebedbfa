#pragma once

#include <cmath>
#include <random>

#include "nbody/conic.hpp"
#include "nbody/decomposition.hpp"

namespace fixtures {

// Equal masses on a circular mutual orbit: relative separation 1, relative
// rate sqrt(0.5). The velocity literal is sqrt(0.125) to full precision so
// the configuration is circular to rounding.
inline nbody::SystemConfig system_a() {
    nbody::SystemConfig cfg;
    cfg.G = 1.0;
    cfg.t0 = 0.0;
    cfg.bodies = {{0.25, {0.5, 0.0}, {0.0, 0.35355339059327373}},
                  {0.25, {-0.5, 0.0}, {0.0, -0.35355339059327373}}};
    return cfg;
}

// Same geometry, slower: relative orbit starts at apoapsis with e = 0.28.
inline nbody::SystemConfig system_b() {
    nbody::SystemConfig cfg;
    cfg.G = 1.0;
    cfg.t0 = 0.0;
    cfg.bodies = {{0.25, {0.5, 0.0}, {0.0, 0.3}},
                  {0.25, {-0.5, 0.0}, {0.0, -0.3}}};
    return cfg;
}

// The System B family: apoapsis start at separation 1 with eccentricity e.
inline nbody::SystemConfig eccentric_system(double e) {
    const double v = std::sqrt((1.0 - e) * 0.5);  // relative speed, mu = 0.5
    nbody::SystemConfig cfg;
    cfg.G = 1.0;
    cfg.t0 = 0.0;
    cfg.bodies = {{0.25, {0.5, 0.0}, {0.0, 0.5 * v}},
                  {0.25, {-0.5, 0.0}, {0.0, -0.5 * v}}};
    return cfg;
}

inline double rand_in(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Random analogue whose body/aggregate split is exactly consistent with the
// relative orbit (radii and radial rates sum to the relative values, angles
// opposite), as the collinear reduction assumes. Rejection keeps the orbit
// comfortably elliptic.
inline nbody::TwoBodyAnalogue random_consistent_analogue(std::mt19937_64& rng) {
    using namespace nbody;
    for (;;) {
        const double x_o = rand_in(rng, 0.4, 2.5);
        const double theta_o = rand_in(rng, -kPi, kPi);
        const double thetadot_o =
            (rng() % 2 ? 1.0 : -1.0) * rand_in(rng, 0.25, 0.9);
        const double xdot_o = rand_in(rng, -0.25, 0.25) * x_o * std::abs(thetadot_o);
        const double m_k = rand_in(rng, 0.1, 2.0);
        const double M_k = rand_in(rng, 0.1, 2.0);
        const double mu = m_k + M_k;  // G = 1

        TwoBodyAnalogue an;
        an.index = 1;
        an.m_k = m_k;
        an.M_k = M_k;
        an.mu = mu;
        an.relative0 = {x_o, theta_o, xdot_o, thetadot_o};
        const double split = rand_in(rng, 0.2, 0.8);
        const double xdot_k = rand_in(rng, -0.3, 0.3);
        an.body0 = {split * x_o, wrap_angle(theta_o + kPi), xdot_k, thetadot_o};
        an.aggregate0 = {x_o - an.body0.x, theta_o, xdot_o - xdot_k, thetadot_o};
        an.t0 = rand_in(rng, -1.0, 1.0);

        const ConicCoefficients c = conic_constants(an);
        if (c.orbit_class == OrbitClass::Elliptic && eccentricity(c) < 0.8 &&
            eccentricity(c) > 1e-6)
            return an;
    }
}

}  // namespace fixtures
