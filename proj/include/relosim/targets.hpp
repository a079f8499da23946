#pragma once

#include <limits>
#include <stdexcept>
#include <vector>

#include "relosim/stochastic.hpp"

namespace relosim {

// Absolute tolerance on all coverage/interference comparisons. Anchor plans
// routinely hit the spacing bounds exactly, so exact comparisons would flip
// on floating-point noise.
inline constexpr double kValidationTol = 1e-9;

// Requested final positions can violate the interference spacing no anchor
// layout can satisfy.
class InfeasiblePlanError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Final positions on the line plus the per-sensor displacements that reach
// them. sensing_radius is the validation-effective radius (r * stretch).
struct TargetPlan1D {
    std::vector<double> targets;        // non-decreasing
    std::vector<double> displacements;  // targets[i] - positions[i]
    double sensing_radius = 0.0;
    double interference_distance = 0.0;

    std::size_t size() const { return targets.size(); }
};

struct TargetPlan2D {
    TargetPlan1D x_plan;
    TargetPlan1D y_plan;
    double square_sensing_radius = 0.0;  // validation-effective (r2 * stretch)
};

struct ValidationReport {
    bool coverage = false;
    bool interference = false;
    double first_gap = 0.0;    // origin to first target
    double min_spacing = std::numeric_limits<double>::infinity();

    bool ok() const { return coverage && interference; }
};

// Equi-spaced midpoint anchors: targets[i] = stretch * (2i - 1) * r for
// i = 1..n, i.e. spacing d = 2 r stretch. Throws InfeasiblePlanError when
// d < s. The returned plan records r * stretch as its sensing radius.
TargetPlan1D line_targets(const Deployment1D& deployment, double r, double s,
                          double stretch = 1.0);

// coverage: first target within r of the origin and consecutive gaps <= 2r,
// so all of [0, targets.back() + r] is covered. interference: min consecutive
// spacing >= s.
ValidationReport validate_line_plan(const TargetPlan1D& plan);

// The line anchor construction applied independently to both axes.
TargetPlan2D plane_targets(const GridDeployment2D& grid, double r2, double s,
                           double stretch = 1.0);

// Per-axis checks; the grid structure makes the minimum pairwise Euclidean
// distance equal to the minimum axis spacing. first_gap reports the worse
// axis, min_spacing the smaller one.
ValidationReport validate_plane_plan(const TargetPlan2D& plan);

}  // namespace relosim
