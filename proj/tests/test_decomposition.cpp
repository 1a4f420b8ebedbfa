#include <algorithm>
#include <cmath>
#include <random>

#include <doctest.h>

#include "fixtures.hpp"
#include "nbody/decomposition.hpp"
#include "nbody/errors.hpp"

using namespace nbody;

TEST_CASE("aggregate_complement sums masses and mass-weights states") {
    SystemConfig cfg;
    cfg.bodies = {{1.0, {0.0, 5.0}, {0.0, 0.0}},
                  {2.0, {1.0, 0.0}, {1.0, 0.0}},
                  {3.0, {0.0, 1.0}, {0.0, 2.0}}};
    const Complement agg = aggregate_complement(cfg, 1);
    CHECK(agg.mass == 5.0);
    CHECK(agg.position.x == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(agg.position.y == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(agg.velocity.x == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(agg.velocity.y == doctest::Approx(1.2).epsilon(1e-15));

    SUBCASE("two bodies: the complement is the other body exactly") {
        const SystemConfig a = fixtures::system_a();
        const Complement c = aggregate_complement(a, 1);
        CHECK(c.position.x == a.bodies[1].position.x);
        CHECK(c.position.y == a.bodies[1].position.y);
        CHECK(c.velocity.y == a.bodies[1].velocity.y);
    }
    SUBCASE("index out of range") {
        CHECK_THROWS_AS(aggregate_complement(cfg, 0), ConfigError);
        CHECK_THROWS_AS(aggregate_complement(cfg, 4), ConfigError);
    }
    SUBCASE("single body rejected") {
        SystemConfig one;
        one.bodies = {{1.0, {1.0, 0.0}, {0.0, 0.0}}};
        CHECK_THROWS_AS(aggregate_complement(one, 1), ConfigError);
    }
}

TEST_CASE("to_polar handles the reference cases") {
    const PolarState a = to_polar({3.0, 4.0}, {0.0, 0.0});
    CHECK(a.x == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(a.theta == doctest::Approx(std::atan2(4.0, 3.0)).epsilon(1e-15));
    CHECK(a.xdot == 0.0);
    CHECK(a.thetadot == 0.0);

    const PolarState b = to_polar({1.0, 0.0}, {0.0, 1.0});
    CHECK(b.x == 1.0);
    CHECK(b.theta == 0.0);
    CHECK(b.xdot == 0.0);
    CHECK(b.thetadot == 1.0);

    const PolarState c = to_polar({0.0, 2.0}, {0.0, 1.0});
    CHECK(c.x == 2.0);
    CHECK(c.theta == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(c.xdot == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c.thetadot == 0.0);

    CHECK_THROWS_AS(to_polar({0.0, 0.0}, {1.0, 1.0}), DegenerateInputError);
}

TEST_CASE("to_polar round trip reproduces the state") {
    std::mt19937_64 rng(20260811);
    for (int i = 0; i < 500; ++i) {
        PolarState s;
        s.x = fixtures::rand_in(rng, 1e-3, 50.0);
        s.theta = fixtures::rand_in(rng, -kPi, kPi);
        s.xdot = fixtures::rand_in(rng, -5.0, 5.0);
        s.thetadot = fixtures::rand_in(rng, -3.0, 3.0);
        const auto [pos, vel] = from_polar(s);
        const PolarState back = to_polar(pos, vel);
        CHECK(std::abs(back.x - s.x) <= 1e-12 * s.x);
        CHECK(std::abs(wrap_angle(back.theta - s.theta)) <= 1e-12);
        CHECK(std::abs(back.xdot - s.xdot) <= 1e-12 * (1.0 + std::abs(s.xdot)));
        CHECK(std::abs(back.thetadot - s.thetadot) <=
              1e-12 * (1.0 + std::abs(s.thetadot)));
    }
}

TEST_CASE("build_analogue on the circular pair") {
    const TwoBodyAnalogue a = build_analogue(fixtures::system_a(), 1);
    CHECK(a.M_k == 0.25);
    CHECK(a.mu == 0.5);
    CHECK(a.relative0.x == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(a.relative0.xdot == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(a.relative0.thetadot == doctest::Approx(0.70710678).epsilon(1e-8));
    CHECK(a.collinearity_defect <= 1e-14);
    CHECK_FALSE(a.angular_rate_warning);
}

TEST_CASE("build_analogue on the eccentric pair") {
    const TwoBodyAnalogue a = build_analogue(fixtures::system_b(), 1);
    CHECK(a.relative0.thetadot == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(a.relative0.xdot == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("purely radial relative motion is degenerate") {
    SystemConfig cfg;
    cfg.bodies = {{0.25, {0.5, 0.0}, {0.0, 0.0}},
                  {0.25, {-0.5, 0.0}, {0.2, 0.0}}};
    CHECK_THROWS_AS(build_analogue(cfg, 1), DegenerateInputError);
}

TEST_CASE("angular rate warning raised at the validity bound") {
    SystemConfig cfg;
    cfg.bodies = {{0.25, {0.5, 0.0}, {0.0, 0.8}},
                  {0.25, {-0.5, 0.0}, {0.0, -0.8}}};  // relative rate 1.6
    const TwoBodyAnalogue a = build_analogue(cfg, 1);
    CHECK(a.angular_rate_warning);
}

TEST_CASE("mass and moment identities close for every body") {
    std::mt19937_64 rng(7);
    SystemConfig cfg;
    cfg.G = 1.0;
    for (int i = 0; i < 5; ++i)
        cfg.bodies.push_back({fixtures::rand_in(rng, 0.1, 2.0),
                              {fixtures::rand_in(rng, -3.0, 3.0),
                               fixtures::rand_in(rng, -3.0, 3.0)},
                              {fixtures::rand_in(rng, -1.0, 1.0),
                               fixtures::rand_in(rng, -1.0, 1.0)}});
    double total = 0.0;
    Vec2 moment{}, vmoment{};
    for (const Body& b : cfg.bodies) {
        total += b.mass;
        moment += b.mass * b.position;
        vmoment += b.mass * b.velocity;
    }
    for (int k = 1; k <= 5; ++k) {
        const Complement agg = aggregate_complement(cfg, k);
        const Body& b = cfg.bodies[k - 1];
        CHECK(b.mass + agg.mass == doctest::Approx(total).epsilon(1e-14));
        CHECK(b.mass * b.position.x + agg.mass * agg.position.x ==
              doctest::Approx(moment.x).epsilon(1e-13));
        CHECK(b.mass * b.position.y + agg.mass * agg.position.y ==
              doctest::Approx(moment.y).epsilon(1e-13));
        CHECK(b.mass * b.velocity.x + agg.mass * agg.velocity.x ==
              doctest::Approx(vmoment.x).epsilon(1e-13));
        CHECK(b.mass * b.velocity.y + agg.mass * agg.velocity.y ==
              doctest::Approx(vmoment.y).epsilon(1e-13));
    }
}

TEST_CASE("relabeling bodies permutes analogues unchanged") {
    std::mt19937_64 rng(11);
    SystemConfig cfg;
    for (int i = 0; i < 4; ++i)
        cfg.bodies.push_back({fixtures::rand_in(rng, 0.1, 2.0),
                              {fixtures::rand_in(rng, -3.0, 3.0),
                               fixtures::rand_in(rng, -3.0, 3.0)},
                              {fixtures::rand_in(rng, -1.0, 1.0),
                               fixtures::rand_in(rng, -1.0, 1.0)}});
    SystemConfig shuffled = cfg;
    std::vector<int> perm{2, 0, 3, 1};  // new index -> old index
    for (int i = 0; i < 4; ++i) shuffled.bodies[i] = cfg.bodies[perm[i]];

    // summation order changes under relabeling, so identity holds to rounding
    const auto close = [](double x, double y) {
        return std::abs(x - y) <= 1e-15 * (1.0 + std::max(std::abs(x), std::abs(y)));
    };
    for (int i = 0; i < 4; ++i) {
        const TwoBodyAnalogue a = build_analogue(cfg, perm[i] + 1);
        const TwoBodyAnalogue b = build_analogue(shuffled, i + 1);
        CHECK(a.m_k == b.m_k);
        CHECK(close(a.M_k, b.M_k));
        CHECK(close(a.mu, b.mu));
        CHECK(close(a.relative0.x, b.relative0.x));
        CHECK(close(a.relative0.theta, b.relative0.theta));
        CHECK(close(a.relative0.xdot, b.relative0.xdot));
        CHECK(close(a.relative0.thetadot, b.relative0.thetadot));
        CHECK(a.body0.x == b.body0.x);
        CHECK(close(a.aggregate0.x, b.aggregate0.x));
    }
}

TEST_CASE("config validation") {
    SystemConfig cfg = fixtures::system_a();
    CHECK_NOTHROW(validate(cfg));
    SUBCASE("coincident bodies") {
        cfg.bodies[1].position = cfg.bodies[0].position;
        CHECK_THROWS_AS(validate(cfg), ConfigError);
    }
    SUBCASE("nonpositive mass") {
        cfg.bodies[0].mass = 0.0;
        CHECK_THROWS_AS(validate(cfg), ConfigError);
    }
    SUBCASE("nonpositive G") {
        cfg.G = 0.0;
        CHECK_THROWS_AS(validate(cfg), ConfigError);
    }
}
