#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "relosim/experiments.hpp"
#include "relosim/line_transport.hpp"
#include "relosim/oracles.hpp"
#include "relosim/plane_transport.hpp"
#include "relosim/stochastic.hpp"
#include "relosim/targets.hpp"

namespace py = pybind11;
using namespace relosim;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Robot-assisted sensor relocation: deployments, target plans, "
              "greedy transport schedules, cost bounds and Monte Carlo sweeps.";

    py::register_exception<InfeasiblePlanError>(m, "InfeasiblePlanError");
    py::register_exception<FitUnavailableError>(m, "FitUnavailableError");

    // deployments
    py::class_<Deployment1D>(m, "Deployment1D")
        .def(py::init<>())
        .def_readwrite("positions", &Deployment1D::positions)
        .def_readwrite("rate", &Deployment1D::rate)
        .def_readwrite("seed", &Deployment1D::seed)
        .def("__len__", &Deployment1D::size);
    py::class_<GridDeployment2D>(m, "GridDeployment2D")
        .def(py::init<>())
        .def_readwrite("xs", &GridDeployment2D::xs)
        .def_readwrite("ys", &GridDeployment2D::ys)
        .def_property_readonly("m", &GridDeployment2D::m)
        .def_property_readonly("sensor_count", &GridDeployment2D::sensor_count);
    m.def("sample_poisson_arrivals", &sample_poisson_arrivals, py::arg("n"),
          py::arg("rate"), py::arg("seed"));
    m.def("sample_grid", &sample_grid, py::arg("m"), py::arg("rate"), py::arg("seed"));
    m.def("gamma_moment", &gamma_moment, py::arg("k"), py::arg("a"), py::arg("rate"));
    m.def("derive_stream",
          [](std::uint64_t master, const std::vector<std::uint64_t>& salts) {
              std::uint64_t s = splitmix64(master);
              for (std::uint64_t v : salts) s = splitmix64(s ^ v);
              return s;
          },
          py::arg("master"), py::arg("salts"));

    // target plans
    py::class_<TargetPlan1D>(m, "TargetPlan1D")
        .def(py::init<>())
        .def_readwrite("targets", &TargetPlan1D::targets)
        .def_readwrite("displacements", &TargetPlan1D::displacements)
        .def_readwrite("sensing_radius", &TargetPlan1D::sensing_radius)
        .def_readwrite("interference_distance", &TargetPlan1D::interference_distance)
        .def("__len__", &TargetPlan1D::size);
    py::class_<TargetPlan2D>(m, "TargetPlan2D")
        .def(py::init<>())
        .def_readwrite("x_plan", &TargetPlan2D::x_plan)
        .def_readwrite("y_plan", &TargetPlan2D::y_plan)
        .def_readwrite("square_sensing_radius", &TargetPlan2D::square_sensing_radius);
    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("coverage", &ValidationReport::coverage)
        .def_readonly("interference", &ValidationReport::interference)
        .def_readonly("first_gap", &ValidationReport::first_gap)
        .def_readonly("min_spacing", &ValidationReport::min_spacing)
        .def("ok", &ValidationReport::ok);
    m.def("line_targets", &line_targets, py::arg("deployment"), py::arg("r"),
          py::arg("s"), py::arg("stretch") = 1.0);
    m.def("validate_line_plan", &validate_line_plan, py::arg("plan"));
    m.def("plane_targets", &plane_targets, py::arg("grid"), py::arg("r2"),
          py::arg("s"), py::arg("stretch") = 1.0);
    m.def("validate_plane_plan", &validate_plane_plan, py::arg("plan"));

    // line transport
    py::class_<TrajectoryLeg>(m, "TrajectoryLeg")
        .def_readonly("from_position", &TrajectoryLeg::from)
        .def_readonly("to_position", &TrajectoryLeg::to)
        .def_readonly("carried", &TrajectoryLeg::carried);
    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("legs", &Trajectory::legs)
        .def_readonly("total_distance", &Trajectory::total_distance)
        .def_readonly("end_position", &Trajectory::end_position);
    m.def("greedy_procedure",
          [](double y0, const std::vector<double>& sensors,
             const std::vector<double>& deposits) {
              return greedy_procedure(y0, sensors, deposits);
          },
          py::arg("y0"), py::arg("sensors"), py::arg("deposits"));
    m.def("gm_offset_trajectory", &gm_offset_trajectory, py::arg("deployment"),
          py::arg("plan"), py::arg("k"), py::arg("j"));
    m.def("robot_cost", &robot_cost, py::arg("trajectory"), py::arg("a"));
    m.def("autonomous_cost_line",
          [](const std::vector<double>& displacements, double a) {
              return autonomous_cost_line(displacements, a);
          },
          py::arg("displacements"), py::arg("a"));
    m.def("max_displacement_cost",
          [](const std::vector<double>& displacements, double a) {
              return max_displacement_cost(displacements, a);
          },
          py::arg("displacements"), py::arg("a"));
    m.def("theorem1_bound", &theorem1_bound, py::arg("x_n"), py::arg("m_first"),
          py::arg("m_last"), py::arg("t_as"), py::arg("n"), py::arg("k"), py::arg("a"));
    m.def("lemma1_bound", &lemma1_bound, py::arg("m_first"), py::arg("m_last"),
          py::arg("span"));
    m.def("lower_bound_line", &lower_bound_line, py::arg("x_n"), py::arg("a"));
    py::class_<ExpectedBounds>(m, "ExpectedBounds")
        .def_readonly("lower", &ExpectedBounds::lower)
        .def_readonly("upper", &ExpectedBounds::upper);
    m.def("expected_bounds_line", &expected_bounds_line, py::arg("n"), py::arg("rate"),
          py::arg("k"), py::arg("a"), py::arg("emax_estimate"), py::arg("eas_estimate"));
    py::class_<CostReport>(m, "CostReport")
        .def_readonly("a", &CostReport::a)
        .def_readonly("per_offset_cost", &CostReport::per_offset_cost)
        .def_readonly("min_cost", &CostReport::min_cost)
        .def_readonly("argmin_offset", &CostReport::argmin_offset)
        .def_readonly("autonomous_cost", &CostReport::autonomous_cost)
        .def_readonly("max_displacement_cost", &CostReport::max_displacement_cost)
        .def_readonly("theorem1_bound", &CostReport::theorem1_bound)
        .def_readonly("lower_bound", &CostReport::lower_bound);
    m.def("best_over_offsets", &best_over_offsets, py::arg("deployment"),
          py::arg("plan"), py::arg("k"), py::arg("a"));

    // plane transport
    py::enum_<PlanePhase>(m, "PlanePhase")
        .value("rows", PlanePhase::rows)
        .value("origin_return", PlanePhase::origin_return)
        .value("columns", PlanePhase::columns);
    py::class_<PlaneLeg>(m, "PlaneLeg")
        .def_readonly("x0", &PlaneLeg::x0)
        .def_readonly("y0", &PlaneLeg::y0)
        .def_readonly("x1", &PlaneLeg::x1)
        .def_readonly("y1", &PlaneLeg::y1)
        .def_readonly("phase", &PlaneLeg::phase)
        .def("length", &PlaneLeg::length);
    py::class_<PlaneTrajectory>(m, "PlaneTrajectory")
        .def_readonly("legs", &PlaneTrajectory::legs)
        .def_readonly("total_distance", &PlaneTrajectory::total_distance)
        .def_readonly("phase1", &PlaneTrajectory::phase1)
        .def_readonly("return_leg", &PlaneTrajectory::return_leg)
        .def_readonly("phase2", &PlaneTrajectory::phase2);
    m.def("gm_plane_trajectory", &gm_plane_trajectory, py::arg("grid"), py::arg("plan"),
          py::arg("k"), py::arg("j1"), py::arg("j2"));
    m.def("autonomous_cost_plane",
          [](const std::vector<double>& x_disp, const std::vector<double>& y_disp,
             double a) { return autonomous_cost_plane(x_disp, y_disp, a); },
          py::arg("x_displacements"), py::arg("y_displacements"), py::arg("a"));
    m.def("theorem2_bound", &theorem2_bound, py::arg("x_m"), py::arg("y_m"),
          py::arg("m_first"), py::arg("m_last"), py::arg("n_first"), py::arg("n_last"),
          py::arg("t_as2"), py::arg("n"), py::arg("k"), py::arg("a"));
    m.def("lower_bound_plane", &lower_bound_plane, py::arg("x_first"), py::arg("x_m"),
          py::arg("n"), py::arg("a"));
    py::class_<PlaneCostReport>(m, "PlaneCostReport")
        .def_readonly("a", &PlaneCostReport::a)
        .def_readonly("per_offset_cost", &PlaneCostReport::per_offset_cost)
        .def_readonly("min_cost", &PlaneCostReport::min_cost)
        .def_readonly("argmin_j1", &PlaneCostReport::argmin_j1)
        .def_readonly("argmin_j2", &PlaneCostReport::argmin_j2)
        .def_readonly("autonomous_cost", &PlaneCostReport::autonomous_cost)
        .def_readonly("theorem2_bound", &PlaneCostReport::theorem2_bound)
        .def_readonly("lower_bound", &PlaneCostReport::lower_bound);
    m.def("best_over_offsets_plane", &best_over_offsets_plane, py::arg("grid"),
          py::arg("plan"), py::arg("k"), py::arg("a"));

    // experiments
    py::enum_<Geometry>(m, "Geometry")
        .value("line", Geometry::line)
        .value("plane", Geometry::plane);
    py::enum_<OffsetPolicy>(m, "OffsetPolicy")
        .value("fixed_zero", OffsetPolicy::fixed_zero)
        .value("minimize", OffsetPolicy::minimize);
    py::class_<RateRule>(m, "RateRule")
        .def_static("n", &RateRule::n)
        .def_static("sqrt_of_n", &RateRule::sqrt_of_n)
        .def_static("fixed", &RateRule::fixed)
        .def_static("parse", &RateRule::parse)
        .def("rate_for", &RateRule::rate_for)
        .def("__str__", &RateRule::to_string);
    py::class_<CapacityRule>(m, "CapacityRule")
        .def_static("one_sensor", &CapacityRule::one_sensor)
        .def_static("ceil_sqrt", &CapacityRule::ceil_sqrt)
        .def_static("full", &CapacityRule::full)
        .def_static("fixed", &CapacityRule::fixed)
        .def_static("parse", &CapacityRule::parse)
        .def("capacity_for", &CapacityRule::capacity_for)
        .def("__str__", &CapacityRule::to_string);
    py::class_<ExperimentSpec>(m, "ExperimentSpec")
        .def(py::init<>())
        .def_readwrite("geometry", &ExperimentSpec::geometry)
        .def_readwrite("n_values", &ExperimentSpec::n_values)
        .def_readwrite("rate_rule", &ExperimentSpec::rate_rule)
        .def_readwrite("capacity_rule", &ExperimentSpec::capacity_rule)
        .def_readwrite("a", &ExperimentSpec::a)
        .def_readwrite("stretch", &ExperimentSpec::stretch)
        .def_readwrite("trials", &ExperimentSpec::trials)
        .def_readwrite("group_size", &ExperimentSpec::group_size)
        .def_readwrite("master_seed", &ExperimentSpec::master_seed)
        .def_readwrite("offset_policy", &ExperimentSpec::offset_policy)
        .def("validate", &ExperimentSpec::validate);
    py::class_<TrialRecord>(m, "TrialRecord")
        .def_readonly("n", &TrialRecord::n)
        .def_readonly("trial_index", &TrialRecord::trial_index)
        .def_readonly("seed", &TrialRecord::seed)
        .def_readonly("total_distance", &TrialRecord::total_distance)
        .def_readonly("robot_cost", &TrialRecord::robot_cost)
        .def_readonly("autonomous_cost", &TrialRecord::autonomous_cost)
        .def_readonly("bound_upper", &TrialRecord::bound_upper)
        .def_readonly("bound_lower", &TrialRecord::bound_lower)
        .def_readonly("valid_coverage", &TrialRecord::valid_coverage)
        .def_readonly("valid_interference", &TrialRecord::valid_interference);
    m.def("run_trials", &run_trials, py::arg("spec"), py::arg("n"),
          py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("group_means",
          [](const std::vector<double>& values, int group_size) {
              return group_means(values, group_size);
          },
          py::arg("values"), py::arg("group_size"));
    m.def("group_means",
          [](const std::vector<TrialRecord>& records, int group_size) {
              return group_means(std::span<const TrialRecord>(records), group_size);
          },
          py::arg("records"), py::arg("group_size"));
    py::class_<SweepPoint>(m, "SweepPoint")
        .def_readonly("n", &SweepPoint::n)
        .def_readonly("group_index", &SweepPoint::group_index)
        .def_readonly("mean_distance", &SweepPoint::mean_distance)
        .def_readonly("mean_robot_cost", &SweepPoint::mean_robot_cost)
        .def_readonly("mean_autonomous_cost", &SweepPoint::mean_autonomous_cost)
        .def_readonly("mean_bound_upper", &SweepPoint::mean_bound_upper)
        .def_readonly("mean_bound_lower", &SweepPoint::mean_bound_lower);
    py::class_<PowerLawFit>(m, "PowerLawFit")
        .def_readonly("exponent", &PowerLawFit::exponent)
        .def_readonly("constant", &PowerLawFit::constant);
    py::class_<SweepSeries>(m, "SweepSeries")
        .def_readonly("points", &SweepSeries::points)
        .def_readonly("fit", &SweepSeries::fit);
    m.def("sweep", &sweep, py::arg("spec"), py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("fit_power_law",
          [](const std::vector<std::pair<double, double>>& points) {
              return fit_power_law(points);
          },
          py::arg("points"));

    py::enum_<FigureId>(m, "FigureId")
        .value("fig3", FigureId::fig3)
        .value("fig4", FigureId::fig4)
        .value("fig5", FigureId::fig5)
        .value("fig6", FigureId::fig6)
        .value("fig7", FigureId::fig7)
        .value("fig8", FigureId::fig8)
        .value("fig9", FigureId::fig9)
        .value("fig10", FigureId::fig10);
    py::class_<ReferenceCurve>(m, "ReferenceCurve")
        .def_readonly("theta_exponent", &ReferenceCurve::theta_exponent)
        .def("has_closed_form", &ReferenceCurve::has_closed_form)
        .def("value",
             [](const ReferenceCurve& curve, double n) {
                 if (!curve.has_closed_form())
                     throw std::invalid_argument("no closed form for this figure");
                 return curve.closed_form(n);
             },
             py::arg("n"));
    m.def("reference_curve", &reference_curve, py::arg("id"));
    m.def("figure_preset", &figure_preset, py::arg("id"), py::arg("master_seed") = 1);

    // bound oracle suites
    py::class_<OracleConfig>(m, "OracleConfig")
        .def(py::init<>())
        .def_readwrite("master_seed", &OracleConfig::master_seed)
        .def_readwrite("instances", &OracleConfig::instances)
        .def_readwrite("bound_scale", &OracleConfig::bound_scale);
    py::class_<OracleOutcome>(m, "OracleOutcome")
        .def_readonly("checked", &OracleOutcome::checked)
        .def_readonly("violations", &OracleOutcome::violations)
        .def_readonly("worst_margin", &OracleOutcome::worst_margin)
        .def_readonly("worst_seed", &OracleOutcome::worst_seed);
    py::class_<LineOracleOutcome>(m, "LineOracleOutcome")
        .def_readonly("theorem1", &LineOracleOutcome::theorem1)
        .def_readonly("corollary1", &LineOracleOutcome::corollary1);
    py::class_<PlaneOracleOutcome>(m, "PlaneOracleOutcome")
        .def_readonly("theorem2", &PlaneOracleOutcome::theorem2)
        .def_readonly("reachability", &PlaneOracleOutcome::reachability);
    m.def("check_lemma1", &check_lemma1, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("check_line_bounds", &check_line_bounds, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("check_plane_bounds", &check_plane_bounds, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
}
