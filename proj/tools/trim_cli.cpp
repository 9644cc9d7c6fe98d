// trim: longitudinal trim-condition solver and theorem checker.
//
// Subcommands:
//   find            equilibrium orientations and thrusts for a scenario
//   scan            CSV table of f_t over the circle, plot-ready
//   check           symmetry / bisymmetry / passivity / stall-condition /
//                   theorem1 / theorem2 reports
//   counterexample  the passivity counterexample report (Lemma 1 setup)
//
// Exit codes: 0 success (find: at least one equilibrium; check: pass),
// 3 meaningful negative (find: no equilibrium exists; check: fail),
// 1 error (bad config, I/O, ...).

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "trim/report_json.hpp"
#include "trim/scenario.hpp"
#include "trim/theorem_suite.hpp"

using namespace trim;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 3;

#ifndef TRIM_PRESET_DIR
#define TRIM_PRESET_DIR "presets"
#endif

std::filesystem::path preset_dir() {
    if (const char* env = std::getenv("TRIM_PRESET_DIR"))
        return env;
    return TRIM_PRESET_DIR;
}

Scenario resolve_scenario(const std::string& config, const std::string& preset) {
    if (config.empty() == preset.empty())
        throw ConfigError("give exactly one of --config PATH or --preset NAME");
    if (!config.empty())
        return load_scenario_file(config);
    return load_scenario_file(preset_dir() / (preset + ".json"));
}

std::string resolve_output(const std::string& output, const std::string& fallback) {
    if (output.empty())
        return fallback;
    if (output != "json" && output != "csv")
        throw ConfigError("--output must be json or csv");
    return output;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_find(const Scenario& s, const std::string& output) {
    const EquilibriumSet eqs = find_equilibria(s.model, s.vehicle, s.condition, s.solver);
    const EquilibriumSet positive = positive_thrust_subset(eqs);

    if (output == "csv") {
        std::printf("theta_deg,thrust_N,transversality\n");
        for (const Equilibrium& e : eqs.roots)
            std::printf("%.17g,%.17g,%s\n", e.theta_e.degrees(), e.thrust,
                        to_string(e.transversality));
    } else {
        json j = to_json(eqs);
        j["command"] = "find";
        j["model"] = s.model_description;
        j["positive_thrust_equilibria"] = to_json(positive)["equilibria"];
        print_json(j);
    }
    return (eqs.continuum || !eqs.roots.empty()) ? kExitOk : kExitNegative;
}

int cmd_scan(const Scenario& s, int samples, const std::string& output) {
    if (samples < 2)
        throw PreconditionError("scan needs --samples >= 2");
    json rows = json::array();
    if (output == "csv")
        std::printf("theta_deg,f_value\n");
    for (int k = 1; k <= samples; ++k) {
        const Angle theta = wrap(-kPi + kTwoPi * k / samples);
        const double f = f_theta(s.model, s.vehicle, s.condition, theta);
        if (output == "csv")
            std::printf("%.17g,%.17g\n", theta.degrees(), f);
        else
            rows.push_back({theta.degrees(), f});
    }
    if (output != "csv")
        print_json(json{{"command", "scan"}, {"model", s.model_description}, {"scan", rows}});
    return kExitOk;
}

int cmd_check(const Scenario& s, const std::string& which, int samples, std::uint64_t seed) {
    json j;
    j["command"] = "check";
    j["which"] = which;
    j["model"] = s.model_description;
    bool pass = false;

    if (which == "symmetry") {
        const SymmetryReport r = verify_symmetry(s.model);
        j["report"] = to_json(r);
        pass = r.passed;
    } else if (which == "bisymmetry") {
        const BisymmetryReport r = verify_bisymmetry(s.model);
        j["report"] = to_json(r);
        pass = r.passed;
    } else if (which == "passivity") {
        const PassivityReport r = check_passivity(s.model);
        j["report"] = to_json(r);
        pass = r.passed;
    } else if (which == "stall-condition") {
        try {
            const StallConditionReport r = check_stall_condition(s.model);
            j["report"] = to_json(r);
            pass = r.satisfied;
        } catch (const CdOrderingError& e) {
            j["report"] = {{"satisfied", false}, {"reason", e.what()}};
            pass = false;
        }
    } else if (which == "theorem1") {
        const Theorem1Applicability ap = check_theorem1_applicability(s.model, s.vehicle.delta);
        j["applicability"] = to_string(ap);
        if (ap == Theorem1Applicability::ItemI) {
            const TheoremCheckReport r =
                run_theorem1_item_i(s.model, s.vehicle, samples, seed, s.solver);
            j["report"] = to_json(r);
            pass = r.satisfied;
        } else if (ap == Theorem1Applicability::ItemII) {
            const TheoremCheckReport r =
                run_theorem1_item_ii(s.model, s.vehicle, samples, seed, s.solver);
            j["report"] = to_json(r);
            pass = r.satisfied;
        } else {
            j["report"] = {{"satisfied", false},
                           {"reason", "theorem 1 hypotheses do not hold for this model/delta"}};
            pass = false;
        }
    } else if (which == "theorem2") {
        try {
            const StallConditionReport stall = check_stall_condition(s.model);
            j["stall_condition"] = to_json(stall);
            if (stall.satisfied) {
                const TheoremCheckReport r = run_theorem2_existence(
                    s.model, s.vehicle.mass, s.vehicle.gravity, samples, seed, s.solver);
                j["report"] = to_json(r);
                pass = r.satisfied;
            } else {
                j["report"] = {{"satisfied", false},
                               {"reason", "stall condition not satisfied; theorem 2 silent"}};
                pass = false;
            }
        } catch (const CdOrderingError& e) {
            j["report"] = {{"satisfied", false}, {"reason", e.what()}};
            pass = false;
        }
    } else {
        throw ConfigError("unknown check '" + which + "'");
    }

    j["satisfied"] = pass;
    print_json(j);
    return pass ? kExitOk : kExitNegative;
}

int cmd_counterexample(double c0, double ka, double mass, double gravity) {
    const Lemma1Report rep = reproduce_lemma1(c0, ka, mass, gravity);
    json j = to_json(rep);
    j["command"] = "counterexample";
    // The construction is sound when f stays at 1 with no equilibria while
    // the force is passive.
    j["reproduced"] =
        rep.max_abs_dev_from_one <= 1e-9 && rep.equilibrium_count == 0 && rep.passivity.passed;
    print_json(j);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"longitudinal flight trim conditions: solver and theorem checks"};
    app.require_subcommand(1);

    std::string config, preset, output, which;
    int samples = 0;
    std::uint64_t seed = 20240;

    auto add_scenario_flags = [&](CLI::App* cmd) {
        cmd->add_option("--config", config, "scenario config file (JSON)");
        cmd->add_option("--preset", preset, "shipped preset name (hover, lemma1, bisym-demo)");
    };

    CLI::App* find = app.add_subcommand("find", "equilibrium orientations and thrusts");
    add_scenario_flags(find);
    find->add_option("--output", output, "json (default) or csv");

    CLI::App* scan = app.add_subcommand("scan", "sample f_t over the circle");
    add_scenario_flags(scan);
    scan->add_option("--samples", samples, "grid size (default 720)");
    scan->add_option("--output", output, "csv (default) or json");

    CLI::App* check = app.add_subcommand("check", "run a verification report");
    check->add_option("which", which,
                      "symmetry | bisymmetry | passivity | stall-condition | theorem1 | theorem2")
        ->required();
    add_scenario_flags(check);
    check->add_option("--samples", samples, "random scenarios for theorem checks (default 1000)");
    check->add_option("--seed", seed, "rng seed for theorem checks");

    CLI::App* ce = app.add_subcommand("counterexample", "Lemma 1 construction report");
    double c0 = 0.1, ka = 1.0, mass = 1.0, gravity = 9.81;
    ce->add_option("--c0", c0, "drag offset c0 > 0");
    ce->add_option("--ka", ka, "aerodynamic constant k_a > 0");
    ce->add_option("--mass", mass, "vehicle mass [kg]");
    ce->add_option("--gravity", gravity, "gravity [m/s^2]");

    CLI11_PARSE(app, argc, argv);

    try {
        if (find->parsed())
            return cmd_find(resolve_scenario(config, preset), resolve_output(output, "json"));
        if (scan->parsed())
            return cmd_scan(resolve_scenario(config, preset), samples == 0 ? 720 : samples,
                            resolve_output(output, "csv"));
        if (check->parsed())
            return cmd_check(resolve_scenario(config, preset), which,
                             samples == 0 ? 1000 : samples, seed);
        if (ce->parsed())
            return cmd_counterexample(c0, ka, mass, gravity);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
