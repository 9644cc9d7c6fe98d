#include "trim/report_json.hpp"

namespace trim {

using nlohmann::json;

json to_json(const Equilibrium& e) {
    return {{"theta_deg", e.theta_e.degrees()},
            {"thrust_N", e.thrust},
            {"transversality", to_string(e.transversality)},
            {"residual", e.residual},
            {"bracket_deg", {e.bracket.first.degrees(), e.bracket.second.degrees()}}};
}

json to_json(const EquilibriumSet& set) {
    json roots = json::array();
    for (const Equilibrium& e : set.roots)
        roots.push_back(to_json(e));
    json j{{"equilibria", std::move(roots)},
           {"continuum", set.continuum},
           {"max_abs_f", set.max_abs_f}};
    if (!set.scan.empty()) {
        json scan = json::array();
        for (const ScanSample& s : set.scan)
            scan.push_back({s.theta * (180.0 / kPi), s.f});
        j["scan"] = std::move(scan);
    }
    return j;
}

json to_json(const SymmetryReport& r) {
    return {{"satisfied", r.passed},
            {"max_drag_even_error", r.max_drag_even_error},
            {"max_lift_odd_error", r.max_lift_odd_error},
            {"lift_at_zero", r.lift_at_zero},
            {"lift_at_pi", r.lift_at_pi},
            {"worst_alpha_deg", r.worst_alpha * (180.0 / kPi)},
            {"tol", r.tol},
            {"samples", r.samples}};
}

json to_json(const BisymmetryReport& r) {
    return {{"satisfied", r.passed},
            {"max_drag_period_error", r.max_drag_period_error},
            {"max_lift_period_error", r.max_lift_period_error},
            {"worst_alpha_deg", r.worst_alpha * (180.0 / kPi)},
            {"symmetry", to_json(r.symmetry)},
            {"tol", r.tol},
            {"samples", r.samples}};
}

json to_json(const PassivityReport& r) {
    return {{"satisfied", r.passed},
            {"min_drag", r.min_drag},
            {"alpha_at_min_deg", r.alpha_at_min * (180.0 / kPi)},
            {"samples", r.samples}};
}

json to_json(const StallConditionReport& r) {
    json j{{"satisfied", r.satisfied},
           {"margin", r.margin},
           {"cd0", r.cd0},
           {"cd_pi", r.cd_pi},
           {"grid", r.grid}};
    j["alpha_s_deg"] = r.alpha_s ? json(r.alpha_s->degrees()) : json(nullptr);
    return j;
}

json to_json(const TheoremCheckReport& r) {
    return {{"satisfied", r.satisfied},
            {"scenario_count", r.scenario_count},
            {"violation_count", r.violation_count},
            {"worst_case", r.worst_case},
            {"worst_detail", r.worst_detail}};
}

json to_json(const Lemma1Report& r) {
    return {{"c0", r.c0},
            {"ka", r.ka},
            {"mass", r.vehicle.mass},
            {"gravity", r.vehicle.gravity},
            {"delta_deg", r.vehicle.delta.degrees()},
            {"v_ref", {r.condition.v_ref.x1, r.condition.v_ref.x2}},
            {"a_ref", {r.condition.a_ref.x1, r.condition.a_ref.x2}},
            {"f_min", r.f_min},
            {"f_max", r.f_max},
            {"max_abs_dev_from_one", r.max_abs_dev_from_one},
            {"equilibrium_count", r.equilibrium_count},
            {"continuum", r.continuum},
            {"passivity", to_json(r.passivity)},
            {"equilibria", to_json(r.equilibria)}};
}

json to_json(const PolarTable& t) {
    json j{{"alpha_deg", t.alpha_deg}, {"cl", t.cl}, {"cd", t.cd}};
    if (!t.name.empty())
        j["name"] = t.name;
    if (t.reynolds)
        j["reynolds"] = *t.reynolds;
    if (t.mach)
        j["mach"] = *t.mach;
    return j;
}

json to_json(const SolverConfig& cfg) {
    return {{"scan_points", cfg.scan_points}, {"theta_tol", cfg.theta_tol},
            {"grazing_tol", cfg.grazing_tol}, {"continuum_tol", cfg.continuum_tol},
            {"root_tol", cfg.root_tol},       {"merge_tol", cfg.merge_tol}};
}

SolverConfig solver_config_from_json(const json& j) {
    SolverConfig cfg;
    cfg.scan_points = j.value("scan_points", cfg.scan_points);
    cfg.theta_tol = j.value("theta_tol", cfg.theta_tol);
    cfg.grazing_tol = j.value("grazing_tol", cfg.grazing_tol);
    cfg.continuum_tol = j.value("continuum_tol", cfg.continuum_tol);
    cfg.root_tol = j.value("root_tol", cfg.root_tol);
    cfg.merge_tol = j.value("merge_tol", cfg.merge_tol);
    cfg.validate();
    return cfg;
}

} // namespace trim
