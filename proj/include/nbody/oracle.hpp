#pragma once

#include <string>
#include <vector>

#include "nbody/decomposition.hpp"
#include "nbody/trajectory.hpp"

namespace nbody {

struct BodyState {
    Vec2 position;
    Vec2 velocity;
};

// Direct fixed-step integration of the exact Newtonian equations; the ground
// truth the closed-form approximation is measured against.
struct OracleSeries {
    std::vector<double> times;                   // strictly increasing
    std::vector<std::vector<BodyState>> states;  // one state set per time
    double step = 0.0;
    std::string method = "rk4";
    std::vector<double> masses;  // carried for downstream comparisons
    double G = 1.0;
};

struct ConservedQuantities {
    double energy = 0.0;
    Vec2 momentum;
    double angular_momentum = 0.0;
};

struct BodyDeviation {
    double max = 0.0;  // m
    double rms = 0.0;  // m
};

struct ErrorReport {
    std::vector<BodyDeviation> per_body;
    double max_overall = 0.0;
    double collinearity_defect_max = 0.0;  // rad, tracked along the oracle run
    bool angular_rate_warning = false;
    bool model_breakdown = false;
};

// a_i = sum_{j != i} G m_j (x_j - x_i) / |x_j - x_i|^3
std::vector<Vec2> accelerations(const std::vector<Vec2>& positions,
                                const std::vector<double>& masses, double G);

// Classic fourth-order Runge-Kutta with fixed step; the final partial step is
// shortened to land exactly on t_end, and every step is recorded. Aborts with
// OracleAbortError on a close encounter the step size cannot resolve.
OracleSeries integrate(const SystemConfig& cfg, double t_end, double step);

ConservedQuantities invariants(const std::vector<BodyState>& state,
                               const std::vector<double>& masses, double G);

// Deviation of a by-time approximate trajectory set against the oracle,
// with the oracle cubic-Hermite interpolated to the approximation's stamps.
ErrorReport compare(const std::vector<TrajectorySeries>& approx,
                    const OracleSeries& oracle);

}  // namespace nbody
