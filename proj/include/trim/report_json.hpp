#pragma once

#include <json.hpp>

#include "trim/equilibria.hpp"
#include "trim/polar_io.hpp"
#include "trim/theorem_suite.hpp"

namespace trim {

// JSON views of the report and result types, used by the CLI and by any
// downstream tooling. Angles are emitted in degrees (degrees at the I/O
// boundary, radians inside).

nlohmann::json to_json(const Equilibrium& e);
nlohmann::json to_json(const EquilibriumSet& set);
nlohmann::json to_json(const SymmetryReport& r);
nlohmann::json to_json(const BisymmetryReport& r);
nlohmann::json to_json(const PassivityReport& r);
nlohmann::json to_json(const StallConditionReport& r);
nlohmann::json to_json(const TheoremCheckReport& r);
nlohmann::json to_json(const Lemma1Report& r);
nlohmann::json to_json(const PolarTable& t);
nlohmann::json to_json(const SolverConfig& cfg);
SolverConfig solver_config_from_json(const nlohmann::json& j);

} // namespace trim
