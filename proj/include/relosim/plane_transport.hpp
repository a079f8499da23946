#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "relosim/line_transport.hpp"
#include "relosim/stochastic.hpp"
#include "relosim/targets.hpp"

namespace relosim {

enum class PlanePhase {
    rows,           // row-by-row x relocation
    origin_return,  // walk back to (0, 0) between phases
    columns,        // column-by-column y relocation
};

struct PlaneLeg {
    double x0 = 0.0, y0 = 0.0;
    double x1 = 0.0, y1 = 0.0;  // either x0 == x1 or y0 == y1
    PlanePhase phase = PlanePhase::rows;

    double length() const;
};

struct PlaneTrajectory {
    std::vector<PlaneLeg> legs;
    double total_distance = 0.0;
    double phase1 = 0.0;      // rows
    double return_leg = 0.0;  // back to the origin
    double phase2 = 0.0;      // columns
};

// Two-phase grid schedule. Phase 1 climbs the y axis row by row, runs the
// j2-offset line schedule on the x coordinates at each row height, and walks
// back to x = 0 after each row. After returning to the origin, phase 2 walks
// the x axis column by column (at the already-final x positions) and runs the
// j1-offset line schedule on the y coordinates. Every leg is axis-aligned.
PlaneTrajectory gm_plane_trajectory(const GridDeployment2D& grid,
                                    const TargetPlan2D& plan, std::int64_t k,
                                    std::int64_t j1, std::int64_t j2);

// m * (sum |M_i|^a + sum |N_i|^a): each axis displacement is paid once per
// grid row or column.
double autonomous_cost_plane(std::span<const double> x_displacements,
                             std::span<const double> y_displacements, double a);

// Upper bound on min over (j1, j2) of the plane cost; the five-term sum
//   4^a n^(a/2-1/2) B T_AS2 / k
//   + 4^(a-1) n^(a/2) B (2|M_1|^a + 2|M_m|^a)
//   + 4^(a-1) n^(a/2) B (2|N_1|^a + 2|N_m|^a)
//   + (2^(3a-1) + 6^a 4^(a-1) n^(a/2)) y_m^a
//   + (4^(a-1) + 6^a 4^(a-1) n^(a/2)) x_m^a
// with B = (4 floor(sqrt(n)/k) + 16)^(a-1) and n the grid sensor count m^2.
double theorem2_bound(double x_m, double y_m, double m_first, double m_last,
                      double n_first, double n_last, double t_as2,
                      std::int64_t n, std::int64_t k, double a);

// n^(a/2) (x_m - x_first)^a.
double lower_bound_plane(double x_first, double x_m, std::int64_t n, double a);

struct PlaneCostReport {
    double a = 1.0;
    std::vector<std::vector<double>> per_offset_cost;  // [j1][j2]
    double min_cost = 0.0;
    int argmin_j1 = 0;  // lexicographic (j1, j2) on ties
    int argmin_j2 = 0;
    double autonomous_cost = 0.0;
    double theorem2_bound = 0.0;
    double lower_bound = 0.0;
};

// Evaluates all k^2 offset pairs and fills the report.
PlaneCostReport best_over_offsets_plane(const GridDeployment2D& grid,
                                        const TargetPlan2D& plan,
                                        std::int64_t k, double a);

}  // namespace relosim
