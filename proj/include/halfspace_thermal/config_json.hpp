#pragma once

// Strict JSON problem configuration:
//
// {
//   "T0": number, "T0_prime": number,
//   "f0": {"type": "step"} | {"type": "ramp", "a": number, "b": number},
//   "g0": <same as f0>,
//   "material": {"k": number, "ell": number, "rho": number,
//                "c_v": number, "T_star": number}
// }
//
// Unknown keys, wrong types, and out-of-range values are rejected with a
// message naming the offending key.

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "core.hpp"

namespace halfspace_thermal {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProblemConfig {
    ProblemSpec spec;
    MaterialScales scales;
};

namespace detail {

inline double require_number(const nlohmann::json& j, const std::string& path,
                             const std::string& key) {
    if (!j.contains(key))
        throw config_error("missing key: " + path + key);
    if (!j[key].is_number())
        throw config_error("expected a number at: " + path + key);
    const double v = j[key].get<double>();
    if (!std::isfinite(v))
        throw config_error("non-finite value at: " + path + key);
    return v;
}

inline void reject_unknown(const nlohmann::json& j, const std::string& path,
                           std::initializer_list<const char*> allowed) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed)
            if (it.key() == a) { ok = true; break; }
        if (!ok)
            throw config_error("unknown key: " + path + it.key());
    }
}

inline ForcingProfile parse_profile(const nlohmann::json& j,
                                    const std::string& path) {
    if (!j.is_object())
        throw config_error("expected an object at: " + path);
    if (!j.contains("type") || !j["type"].is_string())
        throw config_error("missing or non-string key: " + path + "type");
    const std::string type = j["type"].get<std::string>();
    if (type == "step") {
        reject_unknown(j, path, {"type"});
        return ForcingProfile::step();
    }
    if (type == "ramp") {
        reject_unknown(j, path, {"type", "a", "b"});
        const double a = require_number(j, path, "a");
        const double b = require_number(j, path, "b");
        if (!(a > 0.0 && b > a))
            throw config_error("ramp profile requires 0 < a < b at: " + path);
        return ForcingProfile::ramp(a, b);
    }
    throw config_error("unsupported profile type '" + type + "' at: " + path
                       + "type (expected \"step\" or \"ramp\")");
}

} // namespace detail

inline ProblemConfig parse_problem_config(const nlohmann::json& j) {
    if (!j.is_object())
        throw config_error("top-level configuration must be an object");
    detail::reject_unknown(j, "", {"T0", "T0_prime", "f0", "g0", "material"});

    ProblemConfig cfg;
    cfg.spec.T0 = detail::require_number(j, "", "T0");
    cfg.spec.T0_prime = detail::require_number(j, "", "T0_prime");

    if (!j.contains("f0")) throw config_error("missing key: f0");
    if (!j.contains("g0")) throw config_error("missing key: g0");
    cfg.spec.f0 = detail::parse_profile(j["f0"], "f0.");
    cfg.spec.g0 = detail::parse_profile(j["g0"], "g0.");

    if (!j.contains("material") || !j["material"].is_object())
        throw config_error("missing or non-object key: material");
    const auto& m = j["material"];
    detail::reject_unknown(m, "material.", {"k", "ell", "rho", "c_v", "T_star"});
    try {
        cfg.scales = MaterialScales::validated(
            detail::require_number(m, "material.", "k"),
            detail::require_number(m, "material.", "ell"),
            detail::require_number(m, "material.", "rho"),
            detail::require_number(m, "material.", "c_v"),
            detail::require_number(m, "material.", "T_star"));
    } catch (const std::invalid_argument& e) {
        throw config_error(e.what());
    }
    return cfg;
}

inline ProblemConfig parse_problem_config(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw config_error(std::string("configuration is not valid JSON: ")
                           + e.what());
    }
    return parse_problem_config(j);
}

} // namespace halfspace_thermal
