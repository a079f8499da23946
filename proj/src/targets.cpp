#include "relosim/targets.hpp"

#include <algorithm>
#include <string>

namespace relosim {

TargetPlan1D line_targets(const Deployment1D& deployment, double r, double s,
                          double stretch) {
    if (!(r > 0.0)) throw std::invalid_argument("line_targets: r must be > 0");
    if (!(s > 0.0)) throw std::invalid_argument("line_targets: s must be > 0");
    if (!(stretch >= 1.0)) throw std::invalid_argument("line_targets: stretch must be >= 1");

    const double spacing = 2.0 * r * stretch;
    if (spacing < s - kValidationTol) {
        throw InfeasiblePlanError("line_targets: anchor spacing " + std::to_string(spacing) +
                                  " below interference distance " + std::to_string(s));
    }

    TargetPlan1D plan;
    plan.sensing_radius = r * stretch;
    plan.interference_distance = s;
    const std::size_t n = deployment.size();
    plan.targets.resize(n);
    plan.displacements.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        plan.targets[i] = stretch * static_cast<double>(2 * i + 1) * r;
        plan.displacements[i] = plan.targets[i] - deployment.positions[i];
    }
    return plan;
}

ValidationReport validate_line_plan(const TargetPlan1D& plan) {
    if (plan.targets.empty()) throw std::invalid_argument("validate_line_plan: empty plan");
    if (!std::is_sorted(plan.targets.begin(), plan.targets.end()))
        throw std::invalid_argument("validate_line_plan: targets not sorted");

    const double r = plan.sensing_radius;
    ValidationReport report;
    report.first_gap = plan.targets.front();
    report.coverage = report.first_gap <= r + kValidationTol;
    for (std::size_t i = 1; i < plan.targets.size(); ++i) {
        const double gap = plan.targets[i] - plan.targets[i - 1];
        report.min_spacing = std::min(report.min_spacing, gap);
        if (gap > 2.0 * r + kValidationTol) report.coverage = false;
    }
    report.interference =
        report.min_spacing >= plan.interference_distance - kValidationTol;
    return report;
}

TargetPlan2D plane_targets(const GridDeployment2D& grid, double r2, double s,
                           double stretch) {
    TargetPlan2D plan;
    plan.x_plan = line_targets(grid.xs, r2, s, stretch);
    plan.y_plan = line_targets(grid.ys, r2, s, stretch);
    plan.square_sensing_radius = r2 * stretch;
    return plan;
}

ValidationReport validate_plane_plan(const TargetPlan2D& plan) {
    const ValidationReport rx = validate_line_plan(plan.x_plan);
    const ValidationReport ry = validate_line_plan(plan.y_plan);
    ValidationReport report;
    report.coverage = rx.coverage && ry.coverage;
    report.interference = rx.interference && ry.interference;
    report.first_gap = std::max(rx.first_gap, ry.first_gap);
    report.min_spacing = std::min(rx.min_spacing, ry.min_spacing);
    return report;
}

}  // namespace relosim
