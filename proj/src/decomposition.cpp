#include "nbody/decomposition.hpp"

#include <cmath>
#include <string>

#include "nbody/errors.hpp"

namespace nbody {

void validate(const SystemConfig& cfg) {
    const std::size_t n = cfg.bodies.size();
    if (n < 2) throw ConfigError("system needs at least two bodies");
    if (!(cfg.G > 0.0) || !std::isfinite(cfg.G))
        throw ConfigError("G must be positive and finite");
    if (!std::isfinite(cfg.t0)) throw ConfigError("t0 must be finite");
    for (std::size_t i = 0; i < n; ++i) {
        const Body& b = cfg.bodies[i];
        if (!(b.mass > 0.0) || !std::isfinite(b.mass))
            throw ConfigError("body " + std::to_string(i + 1) +
                              ": mass must be positive and finite");
        if (!std::isfinite(b.position.x) || !std::isfinite(b.position.y) ||
            !std::isfinite(b.velocity.x) || !std::isfinite(b.velocity.y))
            throw ConfigError("body " + std::to_string(i + 1) +
                              ": position and velocity must be finite");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (cfg.bodies[i].position.x == cfg.bodies[j].position.x &&
                cfg.bodies[i].position.y == cfg.bodies[j].position.y)
                throw ConfigError("bodies " + std::to_string(i + 1) + " and " +
                                  std::to_string(j + 1) + " share a position");
}

Complement aggregate_complement(const SystemConfig& cfg, int k) {
    const int n = static_cast<int>(cfg.bodies.size());
    if (n < 2) throw ConfigError("system needs at least two bodies");
    if (k < 1 || k > n)
        throw ConfigError("body index " + std::to_string(k) +
                          " out of range 1.." + std::to_string(n));
    Complement agg;
    Vec2 moment{}, vmoment{};
    for (int i = 0; i < n; ++i) {
        if (i == k - 1) continue;
        const Body& b = cfg.bodies[i];
        agg.mass += b.mass;
        moment += b.mass * b.position;
        vmoment += b.mass * b.velocity;
    }
    agg.position = moment / agg.mass;
    agg.velocity = vmoment / agg.mass;
    return agg;
}

TwoBodyAnalogue build_analogue(const SystemConfig& cfg, int k) {
    const Complement agg = aggregate_complement(cfg, k);
    const Body& body = cfg.bodies[k - 1];
    const std::string tag = "body " + std::to_string(k);

    const Vec2 rel_pos = agg.position - body.position;
    const Vec2 rel_vel = agg.velocity - body.velocity;
    if (norm2(rel_pos) == 0.0)
        throw DegenerateInputError(tag + " coincides with its aggregate point");
    if (norm2(body.position) == 0.0)
        throw DegenerateInputError(tag + " sits at the origin; polar state undefined");
    if (norm2(agg.position) == 0.0)
        throw DegenerateInputError(tag + ": aggregate point sits at the origin");

    TwoBodyAnalogue a;
    a.index = k;
    a.m_k = body.mass;
    a.M_k = agg.mass;
    a.mu = cfg.G * (body.mass + agg.mass);
    a.t0 = cfg.t0;
    a.body0 = to_polar(body.position, body.velocity);
    a.aggregate0 = to_polar(agg.position, agg.velocity);
    a.relative0 = to_polar(rel_pos, rel_vel);
    if (a.relative0.thetadot == 0.0)
        throw DegenerateInputError(tag + ": purely radial relative motion "
                                         "(zero angular rate)");
    a.collinearity_defect =
        std::abs(wrap_angle(a.aggregate0.theta - a.body0.theta - kPi));
    a.angular_rate_warning = std::abs(a.relative0.thetadot) >= 1.0;
    return a;
}

std::vector<TwoBodyAnalogue> build_all_analogues(const SystemConfig& cfg) {
    std::vector<TwoBodyAnalogue> out;
    out.reserve(cfg.bodies.size());
    for (int k = 1; k <= static_cast<int>(cfg.bodies.size()); ++k)
        out.push_back(build_analogue(cfg, k));
    return out;
}

}  // namespace nbody
