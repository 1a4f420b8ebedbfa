#pragma once

#include <stdexcept>
#include <string>

namespace nbody {

// Error categories. The command-line tool maps each to a distinct exit code:
// ConfigError -> 2, DegenerateInputError -> 3, UnboundedOrbitError -> 4,
// OracleAbortError -> 5.

// Malformed or inconsistent system configuration.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside the model's domain (zero separation, purely radial motion,
// a polar state at the origin).
struct DegenerateInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation requires a bounded orbit, or a sweep leaves the reachable arc.
struct UnboundedOrbitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The reference integrator hit a close encounter it cannot resolve.
struct OracleAbortError : std::runtime_error {
    OracleAbortError(const std::string& msg, double t)
        : std::runtime_error(msg), time(t) {}
    double time;
};

// A numeric routine ran out of budget before reaching its tolerance.
struct NumericsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nbody
