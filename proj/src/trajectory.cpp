#include "nbody/trajectory.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nbody/errors.hpp"

namespace nbody {
namespace {

double time_for(const TimeAngleContext& ctx, double theta_k) {
    return is_bounded(ctx.coeffs.orbit_class) ? time_closed(ctx, theta_k)
                                              : time_quadrature(ctx, theta_k);
}

double radial_from(const TwoBodyAnalogue& an, double t, double x) {
    const double w = an.M_k / (an.m_k + an.M_k);
    const PolarState& b = an.body0;
    const PolarState& rel = an.relative0;
    return b.x - w * rel.x + (w * rel.xdot - b.xdot) * an.t0 +
           (b.xdot - w * rel.xdot) * t + w * x;
}

double complement_from(const TwoBodyAnalogue& an, double t, double x) {
    const double w = an.m_k / (an.m_k + an.M_k);
    const PolarState& agg = an.aggregate0;
    const PolarState& rel = an.relative0;
    return agg.x - w * rel.x + (w * rel.xdot - agg.xdot) * an.t0 +
           (agg.xdot - w * rel.xdot) * t + w * x;
}

void check_spec(const SamplingSpec& spec) {
    if (spec.count < 2) throw std::invalid_argument("sampling count must be >= 2");
    if (!(spec.start != spec.end) || !std::isfinite(spec.start) ||
        !std::isfinite(spec.end))
        throw std::invalid_argument("sampling bounds must be finite and distinct");
}

}  // namespace

double radial_body(const TwoBodyAnalogue& an, const ConicCoefficients& coeffs,
                   const TimeAngleContext& ctx, double theta_k) {
    return radial_from(an, time_for(ctx, theta_k), separation(coeffs, theta_k));
}

double radial_complement(const TwoBodyAnalogue& an, const ConicCoefficients& coeffs,
                         const TimeAngleContext& ctx, double theta_k) {
    return complement_from(an, time_for(ctx, theta_k), separation(coeffs, theta_k));
}

TrajectorySeries sample(const TwoBodyAnalogue& an, const ConicCoefficients& coeffs,
                        const TimeAngleContext& ctx, const SamplingSpec& spec) {
    check_spec(spec);
    if (spec.mode == SamplingMode::ByTime && !is_bounded(coeffs.orbit_class))
        throw UnboundedOrbitError("by-time sampling needs a bounded orbit");

    TrajectorySeries series;
    series.body_index = an.index;
    series.diagnostics.collinearity_defect = an.collinearity_defect;
    series.diagnostics.angular_rate_warning = an.angular_rate_warning;
    series.rows.reserve(spec.count);

    const double step = (spec.end - spec.start) / (spec.count - 1);
    for (int i = 0; i < spec.count; ++i) {
        const double v = (i == spec.count - 1) ? spec.end : spec.start + i * step;
        TrajectoryRow row;
        if (spec.mode == SamplingMode::ByAngle) {
            row.theta_k = coeffs.theta_k0 + v;
            row.t = time_for(ctx, row.theta_k);
        } else {
            row.t = v;
            // invert to near machine precision so the inversion residual
            // stays out of downstream error measurements
            row.theta_k = angle_of_time(ctx, row.t, 1e-15);
        }
        row.x = separation(coeffs, row.theta_k);
        row.x_k = radial_from(an, row.t, row.x);
        row.point = {row.x_k * std::cos(row.theta_k),
                     row.x_k * std::sin(row.theta_k)};
        if (row.x_k <= 0.0 && !series.diagnostics.model_breakdown) {
            series.diagnostics.model_breakdown = true;
            series.diagnostics.breakdown_theta = row.theta_k;
        }
        series.rows.push_back(row);
    }
    return series;
}

std::vector<TrajectorySeries> approx_system(const SystemConfig& cfg,
                                            const SamplingSpec& spec) {
    validate(cfg);
    check_spec(spec);
    std::vector<TrajectorySeries> out;
    out.reserve(cfg.bodies.size());
    for (int k = 1; k <= static_cast<int>(cfg.bodies.size()); ++k) {
        const TwoBodyAnalogue an = build_analogue(cfg, k);  // names the body itself
        const std::string tag = "body " + std::to_string(k) + ": ";
        try {
            const ConicCoefficients coeffs = conic_constants(an);
            const TimeAngleContext ctx = make_time_context(an, coeffs);
            out.push_back(sample(an, coeffs, ctx, spec));
        } catch (const UnboundedOrbitError& e) {
            throw UnboundedOrbitError(tag + e.what());
        } catch (const DegenerateInputError& e) {
            throw DegenerateInputError(tag + e.what());
        } catch (const NumericsError& e) {
            throw NumericsError(tag + e.what());
        }
    }
    return out;
}

}  // namespace nbody
