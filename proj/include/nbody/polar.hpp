#pragma once

#include <cmath>
#include <utility>

#include "nbody/errors.hpp"
#include "nbody/vec2.hpp"

namespace nbody {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Planar polar state: radius, angle, and their time derivatives.
struct PolarState {
    double x = 0.0;         // radius (m)
    double theta = 0.0;     // angle (rad), counterclockwise positive
    double xdot = 0.0;      // radial rate (m/s)
    double thetadot = 0.0;  // angular rate (rad/s)
};

// Reduce an angle to (-pi, pi].
inline double wrap_angle(double a) {
    double r = std::remainder(a, kTwoPi);
    if (r <= -kPi) r += kTwoPi;
    return r;
}

inline PolarState to_polar(Vec2 position, Vec2 velocity) {
    const double r = norm(position);
    if (r == 0.0)
        throw DegenerateInputError("polar state undefined at the origin");
    PolarState s;
    s.x = r;
    s.theta = std::atan2(position.y, position.x);
    if (s.theta == -kPi) s.theta = kPi;
    s.xdot = dot(position, velocity) / r;
    s.thetadot = cross(position, velocity) / (r * r);
    return s;
}

inline std::pair<Vec2, Vec2> from_polar(const PolarState& s) {
    const double c = std::cos(s.theta);
    const double n = std::sin(s.theta);
    const Vec2 position{s.x * c, s.x * n};
    const Vec2 velocity{s.xdot * c - s.x * s.thetadot * n,
                        s.xdot * n + s.x * s.thetadot * c};
    return {position, velocity};
}

}  // namespace nbody
