#pragma once

#include <vector>

#include "nbody/polar.hpp"
#include "nbody/vec2.hpp"

namespace nbody {

struct Body {
    double mass = 0.0;  // > 0
    Vec2 position;
    Vec2 velocity;
};

struct SystemConfig {
    std::vector<Body> bodies;  // N >= 2
    double G = 1.0;            // gravitation constant, > 0
    double t0 = 0.0;           // epoch (s)
};

// Throws ConfigError unless N >= 2, all masses positive and finite, G > 0,
// and no two bodies share a position.
void validate(const SystemConfig& cfg);

// Mass-weighted complement of body k: total mass and centroid position and
// velocity of every other body.
struct Complement {
    double mass = 0.0;
    Vec2 position;
    Vec2 velocity;
};

// k is 1-based; requires 1 <= k <= N and N >= 2.
Complement aggregate_complement(const SystemConfig& cfg, int k);

// Frozen two-body reduction of body k against the complement point, taken
// once at the epoch and never re-aggregated. All downstream closed forms
// are functions of these constants.
struct TwoBodyAnalogue {
    int index = 0;  // 1-based body index
    double m_k = 0.0;
    double M_k = 0.0;        // sum of the other masses
    double mu = 0.0;         // G * (m_k + M_k)
    PolarState body0;        // body k at the epoch
    PolarState aggregate0;   // complement point at the epoch
    PolarState relative0;    // complement minus body at the epoch
    double t0 = 0.0;
    // Angular distance at the epoch from the assumed opposite-direction
    // alignment of body and complement point. Diagnostic, never an error.
    double collinearity_defect = 0.0;
    // |thetadot_o| >= 1 rad/s lies outside the model's stated validity band.
    bool angular_rate_warning = false;
};

TwoBodyAnalogue build_analogue(const SystemConfig& cfg, int k);
std::vector<TwoBodyAnalogue> build_all_analogues(const SystemConfig& cfg);

}  // namespace nbody
