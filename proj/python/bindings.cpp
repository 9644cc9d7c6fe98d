#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trim/polar_io.hpp"
#include "trim/scenario.hpp"
#include "trim/theorem_suite.hpp"

namespace py = pybind11;
using namespace trim;

namespace {

// Angles cross the boundary as plain floats in radians.
double opt_angle(const std::optional<Angle>& a, bool& has) {
    has = a.has_value();
    return a ? a->radians() : 0.0;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Longitudinal flight trim conditions: equilibrium solver, "
              "aerodynamic models and theorem checks";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<ConfigError>(m, "ConfigError");
    py::register_exception<Error>(m, "TrimError");

    // --- geometry ---------------------------------------------------------
    py::class_<Vec2>(m, "Vec2")
        .def(py::init<double, double>(), py::arg("x1"), py::arg("x2"))
        .def_readwrite("x1", &Vec2::x1)
        .def_readwrite("x2", &Vec2::x2)
        .def("norm", &Vec2::norm)
        .def("__repr__", [](const Vec2& v) {
            return "Vec2(" + std::to_string(v.x1) + ", " + std::to_string(v.x2) + ")";
        });

    m.def("wrap", [](double theta) { return wrap(theta).radians(); }, py::arg("theta"),
          "Canonical representative of theta mod 2*pi in (-pi, pi].");

    // --- aero models ------------------------------------------------------
    py::enum_<SymmetryClass>(m, "SymmetryClass")
        .value("GENERIC", SymmetryClass::Generic)
        .value("SYMMETRIC", SymmetryClass::Symmetric)
        .value("BISYMMETRIC", SymmetryClass::Bisymmetric);

    py::class_<AeroModel>(m, "AeroModel")
        .def(py::init([](std::function<double(double)> lift, std::function<double(double)> drag,
                         double ka, SymmetryClass cls, double symmetry_tol) {
                 return AeroModel(std::move(lift), std::move(drag), ka, cls, {}, symmetry_tol);
             }),
             py::arg("lift"), py::arg("drag"), py::arg("ka"),
             py::arg("symmetry_class") = SymmetryClass::Generic,
             py::arg("symmetry_tol") = 1e-9)
        .def("lift", [](const AeroModel& mdl, double a) { return mdl.lift(Angle(a)); },
             py::arg("alpha"))
        .def("drag", [](const AeroModel& mdl, double a) { return mdl.drag(Angle(a)); },
             py::arg("alpha"))
        .def_property_readonly("ka", &AeroModel::ka)
        .def_property_readonly("symmetry_class", &AeroModel::symmetry_class)
        .def_property_readonly("name", [](const AeroModel& mdl) { return mdl.metadata().name; });

    m.def("counterexample_model", &counterexample_model, py::arg("c0"), py::arg("ka") = 1.0);
    m.def("bisym_flat_plate_model", &bisym_flat_plate_model, py::arg("c0"), py::arg("c1"),
          py::arg("c2"), py::arg("ka") = 1.0);
    m.def("eval_coeffs",
          [](const AeroModel& mdl, double alpha) { return eval_coeffs(mdl, Angle(alpha)); },
          py::arg("model"), py::arg("alpha"), "(c_L, c_D) at the angle of attack [rad].");

    py::class_<SymmetryReport>(m, "SymmetryReport")
        .def_readonly("passed", &SymmetryReport::passed)
        .def_readonly("max_drag_even_error", &SymmetryReport::max_drag_even_error)
        .def_readonly("max_lift_odd_error", &SymmetryReport::max_lift_odd_error)
        .def_readonly("lift_at_zero", &SymmetryReport::lift_at_zero)
        .def_readonly("lift_at_pi", &SymmetryReport::lift_at_pi)
        .def_readonly("worst_alpha", &SymmetryReport::worst_alpha);

    py::class_<BisymmetryReport>(m, "BisymmetryReport")
        .def_readonly("passed", &BisymmetryReport::passed)
        .def_readonly("max_drag_period_error", &BisymmetryReport::max_drag_period_error)
        .def_readonly("max_lift_period_error", &BisymmetryReport::max_lift_period_error)
        .def_readonly("symmetry", &BisymmetryReport::symmetry);

    py::class_<PassivityReport>(m, "PassivityReport")
        .def_readonly("passed", &PassivityReport::passed)
        .def_readonly("min_drag", &PassivityReport::min_drag)
        .def_readonly("alpha_at_min", &PassivityReport::alpha_at_min);

    m.def("verify_symmetry",
          py::overload_cast<const AeroModel&, int, double>(&verify_symmetry), py::arg("model"),
          py::arg("n_samples"), py::arg("tol"));
    m.def("verify_symmetry", py::overload_cast<const AeroModel&>(&verify_symmetry),
          py::arg("model"));
    m.def("verify_bisymmetry",
          py::overload_cast<const AeroModel&, int, double>(&verify_bisymmetry), py::arg("model"),
          py::arg("n_samples"), py::arg("tol"));
    m.def("verify_bisymmetry", py::overload_cast<const AeroModel&>(&verify_bisymmetry),
          py::arg("model"));
    m.def("check_passivity", &check_passivity, py::arg("model"),
          py::arg("n_samples") = kDefaultSymmetrySamples);

    // --- forces -----------------------------------------------------------
    py::class_<VehicleParams>(m, "VehicleParams")
        .def(py::init([](double mass, double gravity, double delta) {
                 return VehicleParams(mass, gravity, Angle(delta));
             }),
             py::arg("mass"), py::arg("gravity"), py::arg("delta"))
        .def_readonly("mass", &VehicleParams::mass)
        .def_readonly("gravity", &VehicleParams::gravity)
        .def_property_readonly("delta", [](const VehicleParams& v) { return v.delta.radians(); });

    py::class_<FlightCondition>(m, "FlightCondition")
        .def(py::init<Vec2, Vec2, Vec2, double>(), py::arg("v_ref") = Vec2{},
             py::arg("a_ref") = Vec2{}, py::arg("v_wind") = Vec2{}, py::arg("time") = 0.0)
        .def_readonly("v_ref", &FlightCondition::v_ref)
        .def_readonly("a_ref", &FlightCondition::a_ref)
        .def_readonly("v_wind", &FlightCondition::v_wind)
        .def_readonly("time", &FlightCondition::time);

    py::class_<ForceBreakdown>(m, "ForceBreakdown")
        .def_readonly("f_gr", &ForceBreakdown::f_gr)
        .def_readonly("f_aero", &ForceBreakdown::f_aero)
        .def_readonly("f_total", &ForceBreakdown::f_total)
        .def_readonly("airspeed", &ForceBreakdown::airspeed)
        .def_property_readonly("alpha",
                               [](const ForceBreakdown& b) -> py::object {
                                   bool has = false;
                                   const double v = opt_angle(b.alpha, has);
                                   return has ? py::cast(v) : py::none();
                               })
        .def_property_readonly("gamma", [](const ForceBreakdown& b) -> py::object {
            bool has = false;
            const double v = opt_angle(b.gamma, has);
            return has ? py::cast(v) : py::none();
        });

    m.def("relative_velocity", &relative_velocity, py::arg("condition"));
    m.def("angle_of_attack",
          [](double theta, double gamma, double delta) {
              return angle_of_attack(Angle(theta), Angle(gamma), Angle(delta)).radians();
          },
          py::arg("theta"), py::arg("gamma"), py::arg("delta"));
    m.def("apparent_force",
          [](const AeroModel& mdl, const VehicleParams& vp, const FlightCondition& fc,
             double theta) { return apparent_force(mdl, vp, fc, Angle(theta)); },
          py::arg("model"), py::arg("vehicle"), py::arg("condition"), py::arg("theta"));

    // --- equilibria -------------------------------------------------------
    py::enum_<Transversality>(m, "Transversality")
        .value("SIGN_CHANGE", Transversality::SignChange)
        .value("GRAZING", Transversality::Grazing);

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("scan_points", &SolverConfig::scan_points)
        .def_readwrite("theta_tol", &SolverConfig::theta_tol)
        .def_readwrite("grazing_tol", &SolverConfig::grazing_tol)
        .def_readwrite("continuum_tol", &SolverConfig::continuum_tol)
        .def_readwrite("root_tol", &SolverConfig::root_tol)
        .def_readwrite("merge_tol", &SolverConfig::merge_tol)
        .def_readwrite("record_scan", &SolverConfig::record_scan);

    py::class_<Equilibrium>(m, "Equilibrium")
        .def_property_readonly("theta",
                               [](const Equilibrium& e) { return e.theta_e.radians(); })
        .def_property_readonly("theta_deg",
                               [](const Equilibrium& e) { return e.theta_e.degrees(); })
        .def_readonly("thrust", &Equilibrium::thrust)
        .def_readonly("transversality", &Equilibrium::transversality)
        .def_readonly("residual", &Equilibrium::residual)
        .def("__repr__", [](const Equilibrium& e) {
            return "Equilibrium(theta_deg=" + std::to_string(e.theta_e.degrees()) +
                   ", thrust=" + std::to_string(e.thrust) + ")";
        });

    py::class_<EquilibriumSet>(m, "EquilibriumSet")
        .def_readonly("roots", &EquilibriumSet::roots)
        .def_readonly("continuum", &EquilibriumSet::continuum)
        .def_readonly("max_abs_f", &EquilibriumSet::max_abs_f)
        .def("__len__", [](const EquilibriumSet& s) { return s.roots.size(); });

    m.def("f_theta",
          [](const AeroModel& mdl, const VehicleParams& vp, const FlightCondition& fc,
             double theta) { return f_theta(mdl, vp, fc, Angle(theta)); },
          py::arg("model"), py::arg("vehicle"), py::arg("condition"), py::arg("theta"));
    m.def("equilibrium_thrust",
          [](const AeroModel& mdl, const VehicleParams& vp, const FlightCondition& fc,
             double theta) { return equilibrium_thrust(mdl, vp, fc, Angle(theta)); },
          py::arg("model"), py::arg("vehicle"), py::arg("condition"), py::arg("theta"));
    m.def("find_equilibria", &find_equilibria, py::arg("model"), py::arg("vehicle"),
          py::arg("condition"), py::arg("config") = SolverConfig{});
    m.def("positive_thrust_subset", &positive_thrust_subset, py::arg("equilibria"));
    m.def("theta_zero",
          [](const FlightCondition& fc, double delta) -> py::object {
              const auto t = theta_zero(fc, Angle(delta));
              return t ? py::cast(t->radians()) : py::none();
          },
          py::arg("condition"), py::arg("delta"));

    // --- theorem suite ----------------------------------------------------
    py::enum_<Theorem1Applicability>(m, "Theorem1Applicability")
        .value("ITEM_I", Theorem1Applicability::ItemI)
        .value("ITEM_II", Theorem1Applicability::ItemII)
        .value("NOT_APPLICABLE", Theorem1Applicability::NotApplicable);

    m.def("check_theorem1_applicability",
          [](const AeroModel& mdl, double delta) {
              return check_theorem1_applicability(mdl, Angle(delta));
          },
          py::arg("model"), py::arg("delta"));

    py::class_<StallConditionReport>(m, "StallConditionReport")
        .def_readonly("satisfied", &StallConditionReport::satisfied)
        .def_property_readonly("alpha_s",
                               [](const StallConditionReport& r) -> py::object {
                                   return r.alpha_s ? py::cast(r.alpha_s->radians()) : py::none();
                               })
        .def_property_readonly("alpha_s_deg",
                               [](const StallConditionReport& r) -> py::object {
                                   return r.alpha_s ? py::cast(r.alpha_s->degrees()) : py::none();
                               })
        .def_readonly("margin", &StallConditionReport::margin)
        .def_readonly("cd0", &StallConditionReport::cd0)
        .def_readonly("cd_pi", &StallConditionReport::cd_pi);

    m.def("check_stall_condition", &check_stall_condition, py::arg("model"),
          py::arg("grid") = kDefaultStallGrid);

    py::class_<ThmTwoDiagnostics>(m, "ThmTwoDiagnostics")
        .def_readonly("a_t", &ThmTwoDiagnostics::a_t)
        .def_readonly("b_t", &ThmTwoDiagnostics::b_t)
        .def_property_readonly("theta0",
                               [](const ThmTwoDiagnostics& d) { return d.theta0.radians(); })
        .def_readonly("k_v2", &ThmTwoDiagnostics::k_v2)
        .def_readonly("cd0", &ThmTwoDiagnostics::cd0)
        .def_readonly("cd_pi", &ThmTwoDiagnostics::cd_pi)
        .def("delta_a", [](const ThmTwoDiagnostics& d, double a) { return d.delta_a(a); },
             py::arg("alpha_bar"))
        .def("lambda_b", [](const ThmTwoDiagnostics& d, double a) { return d.lambda_b(a); },
             py::arg("alpha_bar"))
        .def_property_readonly("alpha_s",
                               [](const ThmTwoDiagnostics& d) -> py::object {
                                   return d.alpha_s ? py::cast(d.alpha_s->radians()) : py::none();
                               })
        .def_property_readonly("bracket",
                               [](const ThmTwoDiagnostics& d) -> py::object {
                                   if (!d.bracket)
                                       return py::none();
                                   return py::make_tuple(d.bracket->first.radians(),
                                                         d.bracket->second.radians());
                               })
        .def_readonly("grazing_equality", &ThmTwoDiagnostics::grazing_equality);

    m.def("thm2_diagnostics", &thm2_diagnostics, py::arg("model"), py::arg("vehicle"),
          py::arg("condition"));

    py::class_<Lemma1Report>(m, "Lemma1Report")
        .def_readonly("c0", &Lemma1Report::c0)
        .def_readonly("ka", &Lemma1Report::ka)
        .def_readonly("f_min", &Lemma1Report::f_min)
        .def_readonly("f_max", &Lemma1Report::f_max)
        .def_readonly("max_abs_dev_from_one", &Lemma1Report::max_abs_dev_from_one)
        .def_readonly("equilibrium_count", &Lemma1Report::equilibrium_count)
        .def_readonly("continuum", &Lemma1Report::continuum)
        .def_readonly("passivity", &Lemma1Report::passivity)
        .def_readonly("equilibria", &Lemma1Report::equilibria);

    m.def("reproduce_lemma1", &reproduce_lemma1, py::arg("c0"), py::arg("ka"), py::arg("m"),
          py::arg("g"));

    py::class_<TheoremCheckReport>(m, "TheoremCheckReport")
        .def_readonly("satisfied", &TheoremCheckReport::satisfied)
        .def_readonly("scenario_count", &TheoremCheckReport::scenario_count)
        .def_readonly("violation_count", &TheoremCheckReport::violation_count)
        .def_readonly("worst_case", &TheoremCheckReport::worst_case)
        .def_readonly("worst_detail", &TheoremCheckReport::worst_detail);

    m.def("run_theorem1_item_i",
          [](const AeroModel& mdl, const VehicleParams& vp, int n, std::uint64_t seed) {
              return run_theorem1_item_i(mdl, vp, n, seed);
          },
          py::arg("model"), py::arg("vehicle"), py::arg("n_scenarios"), py::arg("seed"));
    m.def("run_theorem1_item_ii",
          [](const AeroModel& mdl, const VehicleParams& vp, int n, std::uint64_t seed) {
              return run_theorem1_item_ii(mdl, vp, n, seed);
          },
          py::arg("model"), py::arg("vehicle"), py::arg("n_scenarios"), py::arg("seed"));
    m.def("run_theorem2_existence",
          [](const AeroModel& mdl, double mass, double gravity, int n, std::uint64_t seed) {
              return run_theorem2_existence(mdl, mass, gravity, n, seed);
          },
          py::arg("model"), py::arg("mass"), py::arg("gravity"), py::arg("n_scenarios"),
          py::arg("seed"));

    // --- polar tables -----------------------------------------------------
    py::class_<PolarTable>(m, "PolarTable")
        .def(py::init<>())
        .def_readwrite("alpha_deg", &PolarTable::alpha_deg)
        .def_readwrite("cl", &PolarTable::cl)
        .def_readwrite("cd", &PolarTable::cd)
        .def_readwrite("name", &PolarTable::name)
        .def_property_readonly("reynolds",
                               [](const PolarTable& t) -> py::object {
                                   return t.reynolds ? py::cast(*t.reynolds) : py::none();
                               })
        .def_property_readonly("mach",
                               [](const PolarTable& t) -> py::object {
                                   return t.mach ? py::cast(*t.mach) : py::none();
                               })
        .def("__len__", &PolarTable::size);

    m.def("parse_polar_csv", py::overload_cast<const std::string&>(&parse_polar_csv),
          py::arg("text"));
    m.def("load_polar_csv", &load_polar_csv, py::arg("path"));
    m.def("write_polar_csv", &write_polar_csv, py::arg("table"));
    m.def("extend_symmetric", &extend_symmetric, py::arg("table"));
    m.def("extend_bisymmetric", &extend_bisymmetric, py::arg("table"));
    m.def("build_model", &build_model, py::arg("table"), py::arg("ka"),
          py::arg("symmetry_class"));

    // --- scenarios --------------------------------------------------------
    py::class_<Scenario>(m, "Scenario")
        .def_readonly("model", &Scenario::model)
        .def_readonly("vehicle", &Scenario::vehicle)
        .def_readonly("condition", &Scenario::condition)
        .def_readonly("solver", &Scenario::solver)
        .def_readonly("model_description", &Scenario::model_description);

    m.def("load_scenario_file",
          [](const std::string& path) { return load_scenario_file(path); }, py::arg("path"));

#ifdef TRIM_VERSION
    m.attr("__version__") = TRIM_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
