#pragma once

#include <string>

#include "nbody/decomposition.hpp"

namespace nbody {

// JSON schema: {"G": 1.0, "t0": 0.0,
//               "bodies": [{"mass": m, "position": [x, y], "velocity": [vx, vy]}, ...]}
// Units are the caller's responsibility (consistent units; the bundled
// systems use G = 1).
SystemConfig parse_config(const std::string& json_text);
SystemConfig load_config(const std::string& path);

// Serialization round-trips every double exactly.
std::string serialize_config(const SystemConfig& cfg);

}  // namespace nbody
