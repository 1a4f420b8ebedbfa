#include <cmath>
#include <random>

#include <doctest.h>

#include "fixtures.hpp"
#include "nbody/conic.hpp"
#include "nbody/errors.hpp"

using namespace nbody;

TEST_CASE("circular pair gives a constant conic") {
    const TwoBodyAnalogue a = build_analogue(fixtures::system_a(), 1);
    const ConicCoefficients c = conic_constants(a);
    CHECK(std::abs(c.k1) <= 1e-12 * c.k2);
    CHECK(c.k2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.orbit_class == OrbitClass::Circular);
    for (double th = -7.0; th < 7.0; th += 0.37)
        CHECK(separation(c, th) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eccentric pair starts at apoapsis with e = 0.28") {
    const TwoBodyAnalogue a = build_analogue(fixtures::system_b(), 1);
    const ConicCoefficients c = conic_constants(a);
    CHECK(c.k2 == doctest::Approx(0.5 / 0.36).epsilon(1e-13));
    CHECK(std::abs(c.k1) == doctest::Approx(0.5 / 0.36 - 1.0).epsilon(1e-12));
    CHECK(eccentricity(c) == doctest::Approx(0.28).epsilon(1e-12));
    CHECK(c.orbit_class == OrbitClass::Elliptic);

    // epoch radius recovered, opposite angle is the periapsis 1/(k2 + |k1|)
    CHECK(separation(c, c.theta_k0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(separation(c, c.theta_k0 + kPi) ==
          doctest::Approx(1.0 / (c.k2 + std::abs(c.k1))).epsilon(1e-13));
    CHECK(separation(c, c.theta_k0 + kPi) == doctest::Approx(0.5625).epsilon(1e-12));
}

TEST_CASE("zero radial rate at the circular balance gives k1 = 0 exactly") {
    TwoBodyAnalogue an;
    an.m_k = 0.25;
    an.M_k = 0.25;
    an.mu = 0.5;
    const double x_o = 1.0;
    const double rate = std::sqrt(an.mu / (x_o * x_o * x_o));
    an.relative0 = {x_o, 0.3, 0.0, rate};
    an.body0 = {0.5, wrap_angle(0.3 + kPi), 0.0, rate};
    an.aggregate0 = {0.5, 0.3, 0.0, rate};
    const ConicCoefficients c = conic_constants(an);
    CHECK(std::abs(c.k1) <= 1e-15 * c.k2);
    CHECK(c.orbit_class == OrbitClass::Circular);
}

TEST_CASE("classify boundaries") {
    CHECK(classify(0.0, 1.0) == OrbitClass::Circular);
    CHECK(classify(-0.38889, 1.38889) == OrbitClass::Elliptic);
    CHECK(classify(-2.0, 1.0) == OrbitClass::Hyperbolic);
    CHECK(classify(1.0, 1.0) == OrbitClass::Parabolic);
    CHECK(classify(1.0 + 1e-15, 1.0) == OrbitClass::Parabolic);
    CHECK(classify(1e-13, 1.0) == OrbitClass::Circular);
    CHECK(classify(1e-11, 1.0) == OrbitClass::Elliptic);
}

TEST_CASE("degenerate analogues are rejected") {
    TwoBodyAnalogue an;
    an.mu = 0.5;
    an.relative0 = {1.0, 0.0, 0.1, 0.0};
    CHECK_THROWS_AS(conic_constants(an), DegenerateInputError);
    an.relative0 = {0.0, 0.0, 0.1, 0.5};
    CHECK_THROWS_AS(conic_constants(an), DegenerateInputError);
}

TEST_CASE("hyperbolic separation rejects the unreachable arc") {
    // transverse speed above escape at separation 1
    TwoBodyAnalogue an;
    an.m_k = 0.25;
    an.M_k = 0.25;
    an.mu = 0.5;
    an.relative0 = {1.0, kPi, 0.0, 1.2};
    an.body0 = {0.5, 0.0, 0.0, 1.2};
    an.aggregate0 = {0.5, kPi, 0.0, 1.2};
    const ConicCoefficients c = conic_constants(an);
    CHECK(c.orbit_class == OrbitClass::Hyperbolic);
    CHECK_NOTHROW(separation(c, c.theta_k0));
    CHECK_THROWS_AS(separation(c, c.theta_k0 + kPi), UnboundedOrbitError);
}

TEST_CASE("epoch consistency on random analogues") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 300; ++i) {
        const TwoBodyAnalogue an = fixtures::random_consistent_analogue(rng);
        const ConicCoefficients c = conic_constants(an);
        CHECK(std::abs(separation(c, c.theta_k0) - an.relative0.x) <=
              1e-10 * an.relative0.x);
    }
}

TEST_CASE("separation slope at the epoch matches xdot / thetadot") {
    std::mt19937_64 rng(102);
    int tested = 0;
    while (tested < 200) {
        const TwoBodyAnalogue an = fixtures::random_consistent_analogue(rng);
        const double expected = an.relative0.xdot / an.relative0.thetadot;
        if (std::abs(expected) < 0.02 * an.relative0.x) continue;  // avoid 0/0 scaling
        ++tested;
        const ConicCoefficients c = conic_constants(an);
        const double d = 1e-6;
        const double slope =
            (separation(c, c.theta_k0 + d) - separation(c, c.theta_k0 - d)) / (2 * d);
        CHECK(std::abs(slope - expected) <= 1e-6 * std::abs(expected));
    }
}

TEST_CASE("inverse separation satisfies the radial equation u'' + u = k2") {
    std::mt19937_64 rng(103);
    for (int i = 0; i < 50; ++i) {
        const TwoBodyAnalogue an = fixtures::random_consistent_analogue(rng);
        const ConicCoefficients c = conic_constants(an);
        const double d = 2e-3;
        double worst = 0.0;
        for (int g = 0; g <= 64; ++g) {
            const double th = c.theta_k0 + g * (kTwoPi / 64.0);
            const auto u = [&](double t) { return 1.0 / separation(c, t); };
            // fourth-order central second difference
            const double upp = (-u(th + 2 * d) + 16 * u(th + d) - 30 * u(th) +
                                16 * u(th - d) - u(th - 2 * d)) /
                               (12 * d * d);
            worst = std::max(worst, std::abs(upp + u(th) - c.k2));
        }
        CHECK(worst <= 1e-8);
    }
}
