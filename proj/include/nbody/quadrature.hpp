#pragma once

#include <functional>

namespace nbody::quad {

struct Options {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;
    int max_intervals = 4000;
};

struct Result {
    double value = 0.0;
    double error = 0.0;  // estimated absolute error
    int intervals = 0;   // intervals accepted
};

// Adaptive Gauss7/Kronrod15 quadrature of f over [a, b]. Limits may be given
// in either order (the result is signed). Throws NumericsError when the
// subdivision budget runs out before the tolerance is met.
Result integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, const Options& opts = {});

}  // namespace nbody::quad
