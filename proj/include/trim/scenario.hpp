#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "trim/equilibria.hpp"
#include "trim/polar_io.hpp"

namespace trim {

/// A fully resolved scenario: the model, vehicle, flight condition and
/// solver settings one CLI invocation operates on.
struct Scenario {
    AeroModel model;
    VehicleParams vehicle;
    FlightCondition condition;
    SolverConfig solver;
    std::string model_description;
};

/// Builds a scenario from its JSON form. Exactly one model source must be
/// given (a preset or a polar file); relative polar paths are resolved
/// against `base_dir`. Angles in the file are degrees.
///
/// {
///   "vehicle":   {"mass": 2.0, "gravity": 9.81, "delta_deg": 0.0},
///   "model":     {"preset": "counterexample", "c0": 0.1, "ka": 1.0}
///            or  {"polar": "naca0021.csv", "ka": 0.37,
///                 "symmetry_class": "symmetric", "extension": "symmetric"},
///   "condition": {"v_ref": [0,0], "a_ref": [0,0], "v_wind": [0,0], "time": 0},
///   "solver":    {... optional SolverConfig fields ...}
/// }
Scenario scenario_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);

/// Loads and resolves a scenario file (ConfigError on I/O or schema problems).
Scenario load_scenario_file(const std::filesystem::path& path);

} // namespace trim
