#include "nbody/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "nbody/errors.hpp"

namespace nbody {
namespace {

struct State {
    std::vector<Vec2> pos;
    std::vector<Vec2> vel;
};

double min_pair_distance(const std::vector<Vec2>& pos) {
    double d2 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = i + 1; j < pos.size(); ++j)
            d2 = std::min(d2, norm2(pos[i] - pos[j]));
    return std::sqrt(d2);
}

double max_speed(const std::vector<Vec2>& vel) {
    double v2 = 0.0;
    for (const Vec2& v : vel) v2 = std::max(v2, norm2(v));
    return std::sqrt(v2);
}

bool all_finite(const State& s) {
    for (const Vec2& p : s.pos)
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) return false;
    for (const Vec2& v : s.vel)
        if (!std::isfinite(v.x) || !std::isfinite(v.y)) return false;
    return true;
}

void rk4_step(State& s, double dt, const std::vector<double>& masses, double G) {
    const std::size_t n = s.pos.size();
    const auto a1 = accelerations(s.pos, masses, G);

    State mid;
    mid.pos.resize(n);
    mid.vel.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        mid.pos[i] = s.pos[i] + 0.5 * dt * s.vel[i];
        mid.vel[i] = s.vel[i] + 0.5 * dt * a1[i];
    }
    const auto a2 = accelerations(mid.pos, masses, G);
    const auto v2 = mid.vel;

    for (std::size_t i = 0; i < n; ++i) {
        mid.pos[i] = s.pos[i] + 0.5 * dt * v2[i];
        mid.vel[i] = s.vel[i] + 0.5 * dt * a2[i];
    }
    const auto a3 = accelerations(mid.pos, masses, G);
    const auto v3 = mid.vel;

    for (std::size_t i = 0; i < n; ++i) {
        mid.pos[i] = s.pos[i] + dt * v3[i];
        mid.vel[i] = s.vel[i] + dt * a3[i];
    }
    const auto a4 = accelerations(mid.pos, masses, G);
    const auto v4 = mid.vel;

    const double w = dt / 6.0;
    for (std::size_t i = 0; i < n; ++i) {
        s.pos[i] += w * (s.vel[i] + 2.0 * (v2[i] + v3[i]) + v4[i]);
        s.vel[i] += w * (a1[i] + 2.0 * (a2[i] + a3[i]) + a4[i]);
    }
}

// Hermite basis on [0, 1]
Vec2 hermite(const Vec2& p0, const Vec2& v0, const Vec2& p1, const Vec2& v1,
             double dt, double s) {
    const double s2 = s * s;
    const double s3 = s2 * s;
    return (2.0 * s3 - 3.0 * s2 + 1.0) * p0 + ((s3 - 2.0 * s2 + s) * dt) * v0 +
           (-2.0 * s3 + 3.0 * s2) * p1 + ((s3 - s2) * dt) * v1;
}

}  // namespace

std::vector<Vec2> accelerations(const std::vector<Vec2>& positions,
                                const std::vector<double>& masses, double G) {
    const std::size_t n = positions.size();
    std::vector<Vec2> acc(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec2 d = positions[j] - positions[i];
            const double r2 = norm2(d);
            if (r2 == 0.0)
                throw DegenerateInputError("bodies " + std::to_string(i + 1) +
                                           " and " + std::to_string(j + 1) +
                                           " coincide");
            const double inv_r3 = 1.0 / (r2 * std::sqrt(r2));
            acc[i] += (G * masses[j] * inv_r3) * d;
            acc[j] += (-G * masses[i] * inv_r3) * d;
        }
    }
    return acc;
}

OracleSeries integrate(const SystemConfig& cfg, double t_end, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
    if (t_end < cfg.t0)
        throw std::invalid_argument("t_end must not precede the epoch");
    validate(cfg);

    const std::size_t n = cfg.bodies.size();
    State s;
    s.pos.reserve(n);
    s.vel.reserve(n);
    OracleSeries out;
    out.step = step;
    out.G = cfg.G;
    out.masses.reserve(n);
    for (const Body& b : cfg.bodies) {
        s.pos.push_back(b.position);
        s.vel.push_back(b.velocity);
        out.masses.push_back(b.mass);
    }

    auto record = [&](double t) {
        out.times.push_back(t);
        std::vector<BodyState> row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = {s.pos[i], s.vel[i]};
        out.states.push_back(std::move(row));
    };
    record(cfg.t0);

    double t = cfg.t0;
    long long i = 0;
    while (t < t_end) {
        const double remaining = t_end - t;
        const double dt = std::min(step, remaining);
        // A step that would move the fastest body a sizable fraction of the
        // closest separation cannot resolve the encounter; stop instead of
        // producing a corrupted reference.
        const double dmin = min_pair_distance(s.pos);
        if (dmin == 0.0 || max_speed(s.vel) * dt >= 0.5 * dmin)
            throw OracleAbortError(
                "close encounter at t = " + std::to_string(t) +
                    ": step cannot resolve separation " + std::to_string(dmin),
                t);
        rk4_step(s, dt, out.masses, cfg.G);
        if (!all_finite(s))
            throw OracleAbortError(
                "state no longer finite after t = " + std::to_string(t), t);
        ++i;
        t = (dt == remaining) ? t_end : cfg.t0 + static_cast<double>(i) * step;
        record(t);
    }
    return out;
}

ConservedQuantities invariants(const std::vector<BodyState>& state,
                               const std::vector<double>& masses, double G) {
    ConservedQuantities q;
    const std::size_t n = state.size();
    for (std::size_t i = 0; i < n; ++i) {
        q.energy += 0.5 * masses[i] * norm2(state[i].velocity);
        q.momentum += masses[i] * state[i].velocity;
        q.angular_momentum += masses[i] * cross(state[i].position, state[i].velocity);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = norm(state[i].position - state[j].position);
            if (d == 0.0)
                throw DegenerateInputError("bodies " + std::to_string(i + 1) +
                                           " and " + std::to_string(j + 1) +
                                           " coincide: potential undefined");
            q.energy -= G * masses[i] * masses[j] / d;
        }
    }
    return q;
}

ErrorReport compare(const std::vector<TrajectorySeries>& approx,
                    const OracleSeries& oracle) {
    if (approx.empty()) throw std::invalid_argument("no approximate series");
    if (oracle.times.empty()) throw std::invalid_argument("empty oracle series");
    const std::size_t n = oracle.states.front().size();
    if (approx.size() != n)
        throw std::invalid_argument("series count does not match oracle body count");
    const std::size_t rows = approx.front().rows.size();
    if (rows == 0) throw std::invalid_argument("empty approximate series");
    for (const TrajectorySeries& s : approx) {
        if (s.rows.size() != rows)
            throw std::invalid_argument("approximate series lengths differ");
        for (std::size_t r = 0; r < rows; ++r)
            if (s.rows[r].t != approx.front().rows[r].t)
                throw std::invalid_argument("approximate series time grids differ");
    }
    const double span_lo = oracle.times.front();
    const double span_hi = oracle.times.back();
    const double slack = 1e-9 * std::max(1.0, span_hi - span_lo);
    for (std::size_t r = 0; r < rows; ++r) {
        const double t = approx.front().rows[r].t;
        if (t < span_lo - slack || t > span_hi + slack)
            throw std::invalid_argument("approximate time grid leaves the oracle span");
    }

    ErrorReport report;
    report.per_body.resize(n);
    std::vector<double> sq_sum(n, 0.0);

    for (std::size_t r = 0; r < rows; ++r) {
        const double t = approx.front().rows[r].t;
        // locate the oracle panel containing t
        auto it = std::upper_bound(oracle.times.begin(), oracle.times.end(), t);
        std::size_t hi = static_cast<std::size_t>(it - oracle.times.begin());
        if (hi >= oracle.times.size()) hi = oracle.times.size() - 1;
        const std::size_t lo = hi > 0 ? hi - 1 : 0;
        const double dt = oracle.times[hi] - oracle.times[lo];
        const double u =
            dt > 0.0 ? std::clamp((t - oracle.times[lo]) / dt, 0.0, 1.0) : 0.0;

        std::vector<Vec2> truth(n);
        for (std::size_t k = 0; k < n; ++k)
            truth[k] = hermite(oracle.states[lo][k].position,
                               oracle.states[lo][k].velocity,
                               oracle.states[hi][k].position,
                               oracle.states[hi][k].velocity, dt, u);

        for (std::size_t k = 0; k < n; ++k) {
            const double dev = norm(approx[k].rows[r].point - truth[k]);
            report.per_body[k].max = std::max(report.per_body[k].max, dev);
            sq_sum[k] += dev * dev;

            // collinearity of the aggregate point along the true motion
            double m_sum = 0.0;
            Vec2 moment{};
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                m_sum += oracle.masses[j];
                moment += oracle.masses[j] * truth[j];
            }
            const Vec2 agg = moment / m_sum;
            if (norm2(agg) > 0.0 && norm2(truth[k]) > 0.0) {
                const double defect = std::abs(
                    wrap_angle(std::atan2(agg.y, agg.x) -
                               std::atan2(truth[k].y, truth[k].x) - kPi));
                report.collinearity_defect_max =
                    std::max(report.collinearity_defect_max, defect);
            }
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        report.per_body[k].rms = std::sqrt(sq_sum[k] / static_cast<double>(rows));
        report.max_overall = std::max(report.max_overall, report.per_body[k].max);
        report.angular_rate_warning |= approx[k].diagnostics.angular_rate_warning;
        report.model_breakdown |= approx[k].diagnostics.model_breakdown;
    }
    return report;
}

}  // namespace nbody
