#include "trim/scenario.hpp"

#include <fstream>

#include "trim/report_json.hpp"

namespace trim {

namespace {

using nlohmann::json;

Vec2 vec2_from(const json& j, const std::string& key) {
    if (!j.is_array() || j.size() != 2)
        throw ConfigError("'" + key + "' must be a 2-element array");
    return {j[0].get<double>(), j[1].get<double>()};
}

AeroModel model_from(const json& j, const std::filesystem::path& base_dir, std::string& desc) {
    const bool has_preset = j.contains("preset");
    const bool has_polar = j.contains("polar");
    if (has_preset == has_polar)
        throw ConfigError("model must name exactly one source: 'preset' or 'polar'");

    if (has_preset) {
        const std::string preset = j.at("preset").get<std::string>();
        const double ka = j.value("ka", 1.0);
        if (preset == "counterexample") {
            const double c0 = j.value("c0", 0.1);
            desc = "counterexample(c0=" + std::to_string(c0) + ")";
            return counterexample_model(c0, ka);
        }
        if (preset == "bisym-flat-plate") {
            const double c0 = j.value("c0", 0.05);
            const double c1 = j.value("c1", 1.2);
            const double c2 = j.value("c2", 1.0);
            desc = "bisym-flat-plate(c0=" + std::to_string(c0) + ", c1=" + std::to_string(c1) +
                   ", c2=" + std::to_string(c2) + ")";
            return bisym_flat_plate_model(c0, c1, c2, ka);
        }
        throw ConfigError("unknown model preset '" + preset +
                          "' (known: counterexample, bisym-flat-plate)");
    }

    std::filesystem::path path = j.at("polar").get<std::string>();
    if (path.is_relative())
        path = base_dir / path;
    if (!std::filesystem::exists(path))
        throw ConfigError("polar file not found: " + path.string());
    PolarTable table = load_polar_csv(path.string());

    const std::string extension = j.value("extension", std::string("none"));
    if (extension == "symmetric")
        table = extend_symmetric(table);
    else if (extension == "bisymmetric")
        table = extend_bisymmetric(table);
    else if (extension != "none")
        throw ConfigError("unknown extension mode '" + extension +
                          "' (known: none, symmetric, bisymmetric)");

    if (!j.contains("ka"))
        throw ConfigError("polar models require 'ka'");
    const double ka = j.at("ka").get<double>();
    const SymmetryClass cls =
        symmetry_class_from_string(j.value("symmetry_class", std::string("generic")));
    desc = "polar(" + path.filename().string() + ", extension=" + extension + ")";
    return build_model(table, ka, cls);
}

} // namespace

Scenario scenario_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
    try {
        const json& jv = j.at("vehicle");
        VehicleParams vehicle(jv.at("mass").get<double>(), jv.at("gravity").get<double>(),
                              Angle::from_degrees(jv.value("delta_deg", 0.0)));

        FlightCondition condition;
        if (j.contains("condition")) {
            const json& jc = j.at("condition");
            condition = FlightCondition(
                jc.contains("v_ref") ? vec2_from(jc.at("v_ref"), "v_ref") : Vec2{},
                jc.contains("a_ref") ? vec2_from(jc.at("a_ref"), "a_ref") : Vec2{},
                jc.contains("v_wind") ? vec2_from(jc.at("v_wind"), "v_wind") : Vec2{},
                jc.value("time", 0.0));
        }

        SolverConfig solver;
        if (j.contains("solver"))
            solver = solver_config_from_json(j.at("solver"));

        std::string desc;
        AeroModel model = model_from(j.at("model"), base_dir, desc);
        return Scenario{std::move(model), vehicle, condition, solver, std::move(desc)};
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad scenario config: ") + e.what());
    }
}

Scenario load_scenario_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("invalid JSON in " + path.string() + ": " + e.what());
    }
    return scenario_from_json(j, path.parent_path());
}

} // namespace trim
