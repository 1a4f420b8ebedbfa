#include "nbody/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "nbody/errors.hpp"

namespace nbody::quad {
namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1] (QUADPACK dqk15).
constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b;
};

// One G7K15 pass; returns the Kronrod estimate and a QUADPACK-style
// error bound scaled by the integrand's variation on the panel.
double kronrod15(const std::function<double(double)>& f, double a, double b,
                 double& abserr) {
    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);
    const double dhlgth = std::abs(hlgth);

    double fv1[7], fv2[7];
    const double fc = f(centr);
    double resg = fc * wg[3];
    double resk = fc * wgk[7];
    double resabs = std::abs(resk);
    for (int j = 0; j < 7; ++j) {
        const double absc = hlgth * xgk[j];
        fv1[j] = f(centr - absc);
        fv2[j] = f(centr + absc);
        const double fsum = fv1[j] + fv2[j];
        if (j % 2 == 1) resg += wg[j / 2] * fsum;
        resk += wgk[j] * fsum;
        resabs += wgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    }
    const double reskh = resk * 0.5;
    double resasc = wgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

    const double result = resk * hlgth;
    resabs *= dhlgth;
    resasc *= dhlgth;
    abserr = std::abs((resk - resg) * hlgth);
    if (resasc != 0.0 && abserr != 0.0)
        abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
    const double epmach = std::numeric_limits<double>::epsilon();
    const double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * epmach))
        abserr = std::max(epmach * 50.0 * resabs, abserr);
    return result;
}

}  // namespace

Result integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, const Options& opts) {
    Result res;
    if (a == b) return res;

    // First pass sets the absolute tolerance target for the whole interval;
    // each panel then gets a width-proportional share of it.
    double err0 = 0.0;
    const double whole = kronrod15(f, a, b, err0);
    const double tol =
        std::max(opts.abs_tol, opts.rel_tol * std::max(std::abs(whole),
                                                       std::numeric_limits<double>::min()));
    const double span = std::abs(b - a);

    std::vector<Panel> stack{{a, b}};
    int used = 0;
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        double err = 0.0;
        const double val = kronrod15(f, p.a, p.b, err);
        if (err <= tol * (std::abs(p.b - p.a) / span) || err <= opts.abs_tol) {
            res.value += val;
            res.error += err;
            ++res.intervals;
            continue;
        }
        if (++used >= opts.max_intervals)
            throw NumericsError("quadrature budget of " +
                                std::to_string(opts.max_intervals) +
                                " intervals exhausted before tolerance");
        const double mid = 0.5 * (p.a + p.b);
        stack.push_back({p.a, mid});
        stack.push_back({mid, p.b});
    }
    return res;
}

}  // namespace nbody::quad
