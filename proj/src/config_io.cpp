#include "nbody/config_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nbody/errors.hpp"

namespace nbody {
namespace {

double require_number(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw ConfigError(std::string("config: missing numeric field '") + key + "'");
    return j[key].get<double>();
}

Vec2 require_vec2(const nlohmann::json& j, const char* key, int body_index) {
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != 2 ||
        !j[key][0].is_number() || !j[key][1].is_number())
        throw ConfigError("config: body " + std::to_string(body_index) +
                          " field '" + key + "' must be a [x, y] number pair");
    return {j[key][0].get<double>(), j[key][1].get<double>()};
}

}  // namespace

SystemConfig parse_config(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    SystemConfig cfg;
    cfg.G = require_number(j, "G");
    cfg.t0 = require_number(j, "t0");
    if (!j.contains("bodies") || !j["bodies"].is_array())
        throw ConfigError("config: missing 'bodies' array");
    int idx = 0;
    for (const auto& jb : j["bodies"]) {
        ++idx;
        Body b;
        b.mass = require_number(jb, "mass");
        b.position = require_vec2(jb, "position", idx);
        b.velocity = require_vec2(jb, "velocity", idx);
        cfg.bodies.push_back(b);
    }
    validate(cfg);
    return cfg;
}

SystemConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const SystemConfig& cfg) {
    nlohmann::json j;
    j["G"] = cfg.G;
    j["t0"] = cfg.t0;
    j["bodies"] = nlohmann::json::array();
    for (const Body& b : cfg.bodies) {
        j["bodies"].push_back({{"mass", b.mass},
                               {"position", {b.position.x, b.position.y}},
                               {"velocity", {b.velocity.x, b.velocity.y}}});
    }
    return j.dump(2) + "\n";
}

}  // namespace nbody
