#include "relosim/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "relosim/line_transport.hpp"
#include "relosim/plane_transport.hpp"
#include "relosim/stochastic.hpp"
#include "relosim/targets.hpp"

namespace relosim {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

void record(OracleOutcome& outcome, double margin, double tolerance,
            std::uint64_t seed) {
    if (outcome.checked == 0 || margin < outcome.worst_margin) {
        outcome.worst_margin = margin;
        outcome.worst_seed = seed;
    }
    ++outcome.checked;
    if (margin < -tolerance) ++outcome.violations;
}

// Sorted targets for the deployment: either the anchor construction or an
// order-preserving random perturbation. Theorem bounds must hold for both.
TargetPlan1D random_plan(std::mt19937_64& rng, const Deployment1D& deployment,
                         bool non_negative) {
    TargetPlan1D plan;
    const std::size_t n = deployment.size();
    plan.targets.resize(n);
    plan.displacements.resize(n);
    if (rng() % 2 == 0) {
        const double spread = uniform(rng, 0.1, 3.0) / deployment.rate;
        for (std::size_t i = 0; i < n; ++i)
            plan.targets[i] = deployment.positions[i] + uniform(rng, -spread, spread);
    } else {
        // a fresh arrival process, decoupled from the initial positions
        const double scale = uniform(rng, 0.2, 2.0);
        double x = non_negative ? 0.0 : uniform(rng, -1.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            x += uniform(rng, 0.0, 2.0 * scale / deployment.rate);
            plan.targets[i] = x;
        }
    }
    std::sort(plan.targets.begin(), plan.targets.end());
    if (non_negative && plan.targets.front() < 0.0) {
        const double shift = -plan.targets.front();
        for (double& t : plan.targets) t += shift;
    }
    for (std::size_t i = 0; i < n; ++i)
        plan.displacements[i] = plan.targets[i] - deployment.positions[i];
    plan.sensing_radius = 1.0;
    plan.interference_distance = 1.0;
    return plan;
}

}  // namespace

OracleOutcome check_lemma1(const OracleConfig& config) {
    constexpr double kTolerance = 1e-9;
    OracleOutcome outcome;
    for (long i = 0; i < config.instances; ++i) {
        const std::uint64_t seed = derive_stream(config.master_seed,
                                                 {0x11, static_cast<std::uint64_t>(i)});
        std::mt19937_64 rng(seed);
        const auto l = static_cast<std::size_t>(uniform_int(rng, 1, 20));
        const double y0 = uniform(rng, -1.0, 2.0);
        std::vector<double> sensors(l), deposits(l);
        double y = y0;
        for (auto& s : sensors) {
            y += uniform(rng, 0.0, 1.0);
            s = y;
        }
        double p = uniform(rng, -3.0, 3.0);
        for (auto& d : deposits) {
            d = p;
            p += uniform(rng, 0.0, 1.5);
        }
        const Trajectory round = greedy_procedure(y0, sensors, deposits);
        const double bound =
            lemma1_bound(deposits.front() - sensors.front(),
                         deposits.back() - sensors.back(), sensors.back() - y0) *
            config.bound_scale;
        record(outcome, bound - round.total_distance, kTolerance, seed);
    }
    return outcome;
}

LineOracleOutcome check_line_bounds(const OracleConfig& config) {
    constexpr double kTheoremTolerance = 1e-9;
    constexpr double kCorollaryTolerance = 1e-12;
    constexpr double kExponents[] = {1.0, 1.5, 2.0, 3.0};
    LineOracleOutcome outcome;
    for (long i = 0; i < config.instances; ++i) {
        const std::uint64_t seed = derive_stream(config.master_seed,
                                                 {0x12, static_cast<std::uint64_t>(i)});
        std::mt19937_64 rng(seed);
        const std::int64_t n = uniform_int(rng, 1, 200);
        const std::int64_t k = uniform_int(rng, 1, n);
        const double a = kExponents[rng() % 4];
        const double rate = uniform(rng, 0.5, 2.0) * static_cast<double>(n);
        const Deployment1D deployment =
            sample_poisson_arrivals(n, rate, derive_stream(seed, {1}));
        const TargetPlan1D plan = random_plan(rng, deployment, false);

        const double x_n = deployment.positions.back();
        double min_cost = std::numeric_limits<double>::infinity();
        for (std::int64_t j = 0; j < k; ++j) {
            const Trajectory t = gm_offset_trajectory(deployment, plan, k, j);
            min_cost = std::min(min_cost, robot_cost(t, a));
            record(outcome.corollary1, t.total_distance - x_n, kCorollaryTolerance,
                   seed);
        }
        const double t_as = autonomous_cost_line(plan.displacements, a);
        const double bound =
            theorem1_bound(x_n, plan.displacements.front(), plan.displacements.back(),
                           t_as, n, k, a) *
            config.bound_scale;
        record(outcome.theorem1, bound - min_cost, kTheoremTolerance, seed);
    }
    return outcome;
}

PlaneOracleOutcome check_plane_bounds(const OracleConfig& config) {
    constexpr double kTheoremTolerance = 1e-6;
    constexpr double kReachTolerance = 1e-12;
    PlaneOracleOutcome outcome;
    for (long i = 0; i < config.instances; ++i) {
        const std::uint64_t seed = derive_stream(config.master_seed,
                                                 {0x13, static_cast<std::uint64_t>(i)});
        std::mt19937_64 rng(seed);
        const std::int64_t m = uniform_int(rng, 1, 20);
        const std::int64_t k = uniform_int(rng, 1, m);
        const double a = (rng() % 2 == 0) ? 1.0 : 2.0;
        const double rate = uniform(rng, 0.5, 2.0) * static_cast<double>(m);
        const GridDeployment2D grid = sample_grid(m, rate, derive_stream(seed, {1}));
        TargetPlan2D plan;
        plan.x_plan = random_plan(rng, grid.xs, true);
        plan.y_plan = random_plan(rng, grid.ys, true);
        plan.square_sensing_radius = 1.0;

        const double min_reach =
            grid.xs.positions.back() + grid.ys.positions.back();
        double min_cost = std::numeric_limits<double>::infinity();
        for (std::int64_t j1 = 0; j1 < k; ++j1) {
            for (std::int64_t j2 = 0; j2 < k; ++j2) {
                const PlaneTrajectory t = gm_plane_trajectory(grid, plan, k, j1, j2);
                min_cost = std::min(min_cost, std::pow(t.total_distance, a));
                record(outcome.reachability, t.total_distance - min_reach,
                       kReachTolerance, seed);
            }
        }
        const double t_as2 = autonomous_cost_plane(plan.x_plan.displacements,
                                                   plan.y_plan.displacements, a);
        const double bound =
            theorem2_bound(grid.xs.positions.back(), grid.ys.positions.back(),
                           plan.x_plan.displacements.front(),
                           plan.x_plan.displacements.back(),
                           plan.y_plan.displacements.front(),
                           plan.y_plan.displacements.back(), t_as2,
                           static_cast<std::int64_t>(grid.sensor_count()), k, a) *
            config.bound_scale;
        record(outcome.theorem2, bound - min_cost, kTheoremTolerance, seed);
    }
    return outcome;
}

}  // namespace relosim
