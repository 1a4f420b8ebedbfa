// Command-line front end: decompose a configuration into two-body analogues,
// emit approximate trajectories, run the exact reference integrator, compare
// the two, and sweep error surfaces over eccentricity and angular rate.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nbody/config_io.hpp"
#include "nbody/errors.hpp"
#include "nbody/oracle.hpp"
#include "nbody/trajectory.hpp"

namespace fs = std::filesystem;
using namespace nbody;

namespace {

std::string g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// "start:end:count" -> SamplingSpec bounds
void parse_range(const std::string& text, SamplingSpec& spec) {
    double a = 0.0, b = 0.0;
    int n = 0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &a, &b, &n, &tail) != 3)
        throw ConfigError("range '" + text + "' must be start:end:count");
    spec.start = a;
    spec.end = b;
    spec.count = n;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        out.push_back(std::stod(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    if (out.empty()) throw ConfigError("empty value list");
    return out;
}

void report_warnings(const std::vector<TwoBodyAnalogue>& analogues) {
    for (const TwoBodyAnalogue& a : analogues) {
        if (a.angular_rate_warning)
            std::fprintf(stderr,
                         "warning: body %d relative angular rate %.6g rad/s is "
                         "outside the model's validity band (|rate| < 1)\n",
                         a.index, a.relative0.thetadot);
        if (a.collinearity_defect > 0.1)
            std::fprintf(stderr,
                         "warning: body %d collinearity defect %.6g rad at the "
                         "epoch; the two-body reduction may be poor\n",
                         a.index, a.collinearity_defect);
    }
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    return out;
}

void write_analogue_table(std::ostream& out,
                          const std::vector<TwoBodyAnalogue>& analogues) {
    out << "k,m_k,M_k,mu,x_k0,theta_k0,xdot_k0,thetadot_k0,"
           "x_M0,theta_M0,xdot_M0,thetadot_M0,"
           "x_o,theta_o,xdot_o,thetadot_o,collinearity_defect,angular_rate_warning\n";
    for (const TwoBodyAnalogue& a : analogues) {
        const PolarState& b = a.body0;
        const PolarState& m = a.aggregate0;
        const PolarState& r = a.relative0;
        out << a.index << ',' << g17(a.m_k) << ',' << g17(a.M_k) << ','
            << g17(a.mu) << ',' << g17(b.x) << ',' << g17(b.theta) << ','
            << g17(b.xdot) << ',' << g17(b.thetadot) << ',' << g17(m.x) << ','
            << g17(m.theta) << ',' << g17(m.xdot) << ',' << g17(m.thetadot)
            << ',' << g17(r.x) << ',' << g17(r.theta) << ',' << g17(r.xdot)
            << ',' << g17(r.thetadot) << ',' << g17(a.collinearity_defect)
            << ',' << (a.angular_rate_warning ? 1 : 0) << '\n';
    }
}

void write_series(const fs::path& dir, const SystemConfig& cfg,
                  const std::vector<TrajectorySeries>& series) {
    fs::create_directories(dir);
    for (const TrajectorySeries& s : series) {
        auto out = open_out(dir / ("body_" + std::to_string(s.body_index) + ".csv"));
        out << "t,theta_k,x_k,x,px,py\n";
        for (const TrajectoryRow& row : s.rows)
            out << g17(row.t) << ',' << g17(row.theta_k) << ',' << g17(row.x_k)
                << ',' << g17(row.x) << ',' << g17(row.point.x) << ','
                << g17(row.point.y) << '\n';
    }
    auto out = open_out(dir / "summary.csv");
    out << "k,m_k,M_k,mu,orbit_class,eccentricity,k1,k2,phi,theta_k0,h,period,"
           "collinearity_defect,angular_rate_warning,model_breakdown\n";
    for (const TrajectorySeries& s : series) {
        const TwoBodyAnalogue a = build_analogue(cfg, s.body_index);
        const ConicCoefficients c = conic_constants(a);
        const TimeAngleContext ctx = make_time_context(a, c);
        out << s.body_index << ',' << g17(a.m_k) << ',' << g17(a.M_k) << ','
            << g17(a.mu) << ',' << to_string(c.orbit_class) << ','
            << g17(eccentricity(c)) << ',' << g17(c.k1) << ',' << g17(c.k2)
            << ',' << g17(c.phi) << ',' << g17(c.theta_k0) << ',' << g17(ctx.h)
            << ',' << (is_bounded(c.orbit_class) ? g17(period(ctx)) : "inf")
            << ',' << g17(a.collinearity_defect) << ','
            << (a.angular_rate_warning ? 1 : 0) << ','
            << (s.diagnostics.model_breakdown ? 1 : 0) << '\n';
    }
}

double max_period(const SystemConfig& cfg) {
    double p = 0.0;
    for (const TwoBodyAnalogue& a : build_all_analogues(cfg)) {
        const ConicCoefficients c = conic_constants(a);
        if (!is_bounded(c.orbit_class))
            throw UnboundedOrbitError("body " + std::to_string(a.index) +
                                      ": unbounded orbit has no period");
        p = std::max(p, period(make_time_context(a, c)));
    }
    return p;
}

ErrorReport run_compare(const SystemConfig& cfg, double t_end, double step,
                        int samples, std::vector<TrajectorySeries>* series_out) {
    SamplingSpec spec;
    spec.mode = SamplingMode::ByTime;
    spec.start = cfg.t0;
    spec.end = t_end;
    spec.count = samples;
    auto series = approx_system(cfg, spec);
    const OracleSeries oracle = integrate(cfg, t_end, step);
    ErrorReport report = compare(series, oracle);
    if (series_out) *series_out = std::move(series);
    return report;
}

void write_report(const fs::path& dir, const ErrorReport& report) {
    fs::create_directories(dir);
    auto out = open_out(dir / "report.csv");
    out << "k,max_dev,rms_dev,collinearity_defect_max,angular_rate_warning,"
           "model_breakdown\n";
    double rms = 0.0;
    for (std::size_t k = 0; k < report.per_body.size(); ++k) {
        rms = std::max(rms, report.per_body[k].rms);
        out << (k + 1) << ',' << g17(report.per_body[k].max) << ','
            << g17(report.per_body[k].rms) << ",,,\n";
    }
    out << "overall," << g17(report.max_overall) << ',' << g17(rms) << ','
        << g17(report.collinearity_defect_max) << ','
        << (report.angular_rate_warning ? 1 : 0) << ','
        << (report.model_breakdown ? 1 : 0) << '\n';
}

// Two equal masses on the x axis starting at the relative apoapsis, sized so
// the relative orbit has the requested eccentricity and epoch angular rate.
SystemConfig eccentric_pair(double e, double rate) {
    if (!(e >= 0.0) || e >= 1.0)
        throw ConfigError("eccentricity must lie in [0, 1)");
    if (!(rate > 0.0)) throw ConfigError("angular rate must be positive");
    const double mu = 0.5;  // G = 1, masses 0.25 each
    const double r = std::cbrt(mu * (1.0 - e) / (rate * rate));
    const double v = rate * r;
    SystemConfig cfg;
    cfg.G = 1.0;
    cfg.t0 = 0.0;
    cfg.bodies = {{0.25, {0.5 * r, 0.0}, {0.0, 0.5 * v}},
                  {0.25, {-0.5 * r, 0.0}, {0.0, -0.5 * v}}};
    return cfg;
}

int run(int argc, char** argv) {
    CLI::App app{"Planar N-body trajectories: closed-form two-body reduction "
                 "with an exact Runge-Kutta reference"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".", by_angle, by_time;
    bool echo = false;

    auto* decompose = app.add_subcommand(
        "decompose", "Emit the per-body two-body analogue table");
    decompose->add_option("--config", config_path, "system JSON")->required();
    decompose->add_option("--out", out_dir, "output directory (default: stdout)");
    decompose->add_flag("--echo", echo, "re-emit the parsed config as JSON");

    auto* approx = app.add_subcommand(
        "approx", "Emit closed-form trajectory CSVs, one file per body");
    approx->add_option("--config", config_path, "system JSON")->required();
    approx->add_option("--by-angle", by_angle,
                       "start:end:count, angle offsets from each epoch angle");
    approx->add_option("--by-time", by_time, "start:end:count, absolute times");
    approx->add_option("--out", out_dir, "output directory")->required();

    double t_end = 0.0, step = 1e-3, periods = 1.0;
    auto* integ = app.add_subcommand("integrate", "Exact reference run (RK4)");
    integ->add_option("--config", config_path, "system JSON")->required();
    integ->add_option("--t-end", t_end, "integration end time")->required();
    integ->add_option("--step", step, "fixed step size (default 1e-3)");
    integ->add_option("--out", out_dir, "output directory")->required();

    int samples = 256;
    auto* cmp = app.add_subcommand(
        "compare", "Deviation of the closed form against the reference");
    cmp->add_option("--config", config_path, "system JSON")->required();
    auto* cmp_periods = cmp->add_option(
        "--period", periods, "horizon in units of the longest body period");
    auto* cmp_tend = cmp->add_option("--t-end", t_end, "explicit horizon");
    cmp->add_option("--step", step, "oracle step (default 1e-3)");
    cmp->add_option("--samples", samples, "comparison samples (default 256)");
    cmp->add_option("--out", out_dir, "output directory (default: .)");

    std::string e_list = "0.1,0.28,0.5", rate_list = "0.6";
    auto* sweep = app.add_subcommand(
        "sweep", "Error surface over eccentricity and epoch angular rate");
    sweep->add_option("--e-list", e_list, "comma-separated eccentricities");
    sweep->add_option("--rate-list", rate_list, "comma-separated rates (rad/s)");
    sweep->add_option("--step", step, "oracle step (default 1e-3)");
    sweep->add_option("--samples", samples, "comparison samples (default 256)");
    sweep->add_option("--out", out_dir, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    if (decompose->parsed()) {
        const SystemConfig cfg = load_config(config_path);
        if (echo) {
            std::fputs(serialize_config(cfg).c_str(), stdout);
            return 0;
        }
        const auto analogues = build_all_analogues(cfg);
        report_warnings(analogues);
        if (decompose->count("--out") > 0) {
            fs::create_directories(out_dir);
            auto out = open_out(fs::path(out_dir) / "decompose.csv");
            write_analogue_table(out, analogues);
        } else {
            std::ostringstream buf;
            write_analogue_table(buf, analogues);
            std::fputs(buf.str().c_str(), stdout);
        }
        return 0;
    }

    if (approx->parsed()) {
        const SystemConfig cfg = load_config(config_path);
        if (by_angle.empty() == by_time.empty())
            throw ConfigError("give exactly one of --by-angle or --by-time");
        SamplingSpec spec;
        spec.mode = by_angle.empty() ? SamplingMode::ByTime : SamplingMode::ByAngle;
        parse_range(by_angle.empty() ? by_time : by_angle, spec);
        report_warnings(build_all_analogues(cfg));
        write_series(out_dir, cfg, approx_system(cfg, spec));
        return 0;
    }

    if (integ->parsed()) {
        const SystemConfig cfg = load_config(config_path);
        const OracleSeries oracle = integrate(cfg, t_end, step);
        fs::create_directories(out_dir);
        auto out = open_out(fs::path(out_dir) / "oracle.csv");
        const std::size_t n = cfg.bodies.size();
        out << "t";
        for (std::size_t k = 1; k <= n; ++k)
            out << ",b" << k << "_px,b" << k << "_py,b" << k << "_vx,b" << k << "_vy";
        out << ",energy,mom_x,mom_y,ang_mom\n";
        for (std::size_t r = 0; r < oracle.times.size(); ++r) {
            out << g17(oracle.times[r]);
            for (std::size_t k = 0; k < n; ++k) {
                const BodyState& s = oracle.states[r][k];
                out << ',' << g17(s.position.x) << ',' << g17(s.position.y)
                    << ',' << g17(s.velocity.x) << ',' << g17(s.velocity.y);
            }
            const ConservedQuantities q =
                invariants(oracle.states[r], oracle.masses, oracle.G);
            out << ',' << g17(q.energy) << ',' << g17(q.momentum.x) << ','
                << g17(q.momentum.y) << ',' << g17(q.angular_momentum) << '\n';
        }
        return 0;
    }

    if (cmp->parsed()) {
        const SystemConfig cfg = load_config(config_path);
        if ((cmp_periods->count() > 0) == (cmp_tend->count() > 0))
            throw ConfigError("give exactly one of --period or --t-end");
        report_warnings(build_all_analogues(cfg));
        const double horizon = cmp_tend->count() > 0
                                   ? t_end
                                   : cfg.t0 + periods * max_period(cfg);
        const ErrorReport report = run_compare(cfg, horizon, step, samples, nullptr);
        write_report(out_dir, report);
        std::printf("max_dev=%s\n", g17(report.max_overall).c_str());
        return 0;
    }

    if (sweep->parsed()) {
        fs::create_directories(out_dir);
        auto out = open_out(fs::path(out_dir) / "sweep.csv");
        out << "e,rate,x_o,period,max_dev,rms_dev\n";
        for (double rate : parse_list(rate_list)) {
            for (double e : parse_list(e_list)) {
                const SystemConfig cfg = eccentric_pair(e, rate);
                const double p = max_period(cfg);
                const ErrorReport report =
                    run_compare(cfg, cfg.t0 + p, step, samples, nullptr);
                double rms = 0.0;
                for (const BodyDeviation& d : report.per_body)
                    rms = std::max(rms, d.rms);
                out << g17(e) << ',' << g17(rate) << ','
                    << g17(norm(cfg.bodies[0].position - cfg.bodies[1].position))
                    << ',' << g17(p) << ',' << g17(report.max_overall) << ','
                    << g17(rms) << '\n';
            }
        }
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const DegenerateInputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const UnboundedOrbitError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const OracleAbortError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 5;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
