#pragma once

#include <vector>

#include "nbody/timeangle.hpp"

namespace nbody {

enum class SamplingMode { ByAngle, ByTime };

// Uniform sampling grid. By-angle start/end are offsets from each body's
// epoch angle (so one spec sweeps every body through the same arc of its own
// orbit); by-time start/end are absolute times.
struct SamplingSpec {
    SamplingMode mode = SamplingMode::ByAngle;
    double start = 0.0;
    double end = 0.0;
    int count = 2;  // >= 2
};

struct TrajectoryRow {
    double t = 0.0;
    double theta_k = 0.0;
    double x_k = 0.0;  // body radius
    double x = 0.0;    // relative separation
    Vec2 point;        // x_k * (cos theta_k, sin theta_k)
};

struct SeriesDiagnostics {
    double collinearity_defect = 0.0;
    bool angular_rate_warning = false;
    bool model_breakdown = false;  // nonpositive x_k encountered
    double breakdown_theta = 0.0;  // first offending angle when it was
};

struct TrajectorySeries {
    int body_index = 0;  // 1-based
    std::vector<TrajectoryRow> rows;
    SeriesDiagnostics diagnostics;
};

// Body radius at theta_k, assembled from the epoch constants, the time map
// and the conic separation:
//   x_k = x_k0 - w x_o + (w xdot_o - xdot_k0) t0
//         + (xdot_k0 - w xdot_o) t(theta_k) + w x(theta_k),  w = M_k/(m_k+M_k)
double radial_body(const TwoBodyAnalogue& analogue, const ConicCoefficients& coeffs,
                   const TimeAngleContext& ctx, double theta_k);

// Complement-point radius from the mirror-image expression with weight
// m_k/(m_k+M_k). radial_body + radial_complement recovers the separation.
double radial_complement(const TwoBodyAnalogue& analogue, const ConicCoefficients& coeffs,
                         const TimeAngleContext& ctx, double theta_k);

TrajectorySeries sample(const TwoBodyAnalogue& analogue, const ConicCoefficients& coeffs,
                        const TimeAngleContext& ctx, const SamplingSpec& spec);

// One series per body, each from its own frozen analogue. By-time mode uses
// a shared time grid across bodies and requires every orbit bounded.
std::vector<TrajectorySeries> approx_system(const SystemConfig& cfg,
                                            const SamplingSpec& spec);

}  // namespace nbody
