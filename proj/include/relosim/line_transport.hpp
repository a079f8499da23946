#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "relosim/stochastic.hpp"
#include "relosim/targets.hpp"

namespace relosim {

struct RobotSpec {
    std::int64_t capacity = 1;  // 1 <= capacity <= n
    double start = 0.0;
};

struct TrajectoryLeg {
    double from = 0.0;
    double to = 0.0;
    int carried = 0;  // sensors on board while traversing this leg
};

// Ordered robot legs on the line. Zero-length legs are not recorded;
// total_distance always equals the sum of |to - from| over legs.
struct Trajectory {
    std::vector<TrajectoryLeg> legs;
    double total_distance = 0.0;
    double end_position = 0.0;
};

// One greedy collect-then-deposit round: sweep right from y0 picking up all
// sensors, continue right to the top deposit if it lies beyond the last
// sensor, sweep left dropping sensors rightmost-first, walk back to the last
// sensor's pickup position. Requires y0 <= sensors[0], both lists sorted and
// of equal length >= 1. The caller enforces len <= robot capacity.
Trajectory greedy_procedure(double y0, std::span<const double> sensors,
                            std::span<const double> deposits);

// Full line schedule with offset j: a prologue round on sensors 1..j (skipped
// when j = 0), floor((n-j)/k) rounds of k, and a remainder round. Each round
// starts where the previous one ended; all sensors end on plan.targets.
Trajectory gm_offset_trajectory(const Deployment1D& deployment,
                                const TargetPlan1D& plan, std::int64_t k,
                                std::int64_t j);

// Transportation cost: the whole travelled distance raised to the power a
// (not a sum of per-leg powers). Requires a >= 1.
double robot_cost(const Trajectory& trajectory, double a);

// Sum of |M_i|^a over all sensors.
double autonomous_cost_line(std::span<const double> displacements, double a);

// max_i |M_i|^a, the per-instance analogue of the expected-maximum metric.
double max_displacement_cost(std::span<const double> displacements, double a);

// Upper bound on min_j robot cost for one instance:
//   6^a x_n^a + (4 floor(n/k) + 16)^(a-1) (2|M_1|^a + 2|M_n|^a + 4 T_AS / k).
double theorem1_bound(double x_n, double m_first, double m_last, double t_as,
                      std::int64_t n, std::int64_t k, double a);

// Per-round distance bound: 2|m_first| + 2|m_last| + 3 span, span = Y_l - Y_0.
double lemma1_bound(double m_first, double m_last, double span);

// Any schedule must at least reach the last sensor: x_n^a.
double lower_bound_line(double x_n, double a);

struct ExpectedBounds {
    double lower = 0.0;
    double upper = 0.0;
};

// Leading-order expectation bounds for the Poisson model:
//   lower = (n/rate)^a
//   upper = 6^a (n/rate)^a + (4 floor(n/k) + 16)^(a-1) (4 E_max + 4 E_AS / k)
// with the displacement moments supplied by the caller (Monte Carlo or
// closed form).
ExpectedBounds expected_bounds_line(std::int64_t n, double rate, std::int64_t k,
                                    double a, double emax_estimate,
                                    double eas_estimate);

struct CostReport {
    double a = 1.0;
    std::vector<double> per_offset_cost;  // indexed by j = 0..k-1
    double min_cost = 0.0;
    int argmin_offset = 0;  // smallest j on ties
    double autonomous_cost = 0.0;
    double max_displacement_cost = 0.0;
    double theorem1_bound = 0.0;
    double lower_bound = 0.0;
};

// Evaluates the schedule for every offset j in {0..k-1} and fills the report.
CostReport best_over_offsets(const Deployment1D& deployment,
                             const TargetPlan1D& plan, std::int64_t k, double a);

}  // namespace relosim
