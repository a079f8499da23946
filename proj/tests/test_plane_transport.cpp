#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "relosim/plane_transport.hpp"
#include "relosim/stochastic.hpp"
#include "relosim/targets.hpp"
#include "step_sim.hpp"

using namespace relosim;

namespace {

Deployment1D axis_of(std::vector<double> positions) {
    Deployment1D d;
    d.positions = std::move(positions);
    d.rate = 1.0;
    return d;
}

TargetPlan1D axis_plan(const Deployment1D& d, std::vector<double> targets) {
    TargetPlan1D plan;
    plan.targets = std::move(targets);
    plan.displacements.resize(plan.targets.size());
    for (std::size_t i = 0; i < plan.targets.size(); ++i)
        plan.displacements[i] = plan.targets[i] - d.positions[i];
    plan.sensing_radius = 1.0;
    plan.interference_distance = 1e-9;
    return plan;
}

// Second, independent transcription of the five-term plane bound, grouped
// through (sqrt n)^a instead of n^(a/2), for cross-checking the library's.
double plane_bound_alt(double xm, double ym, double m1, double mm, double n1,
                       double nm, double tas2, std::int64_t n, std::int64_t k,
                       double a) {
    const double m = std::sqrt(static_cast<double>(n));
    const double block = std::pow(4.0 * std::floor(m / static_cast<double>(k)) + 16.0, a - 1.0);
    const double m_pow_a = std::pow(m, a);
    double total = std::pow(4.0, a) * (m_pow_a / m) * block * tas2 / static_cast<double>(k);
    total += (std::pow(4.0, a) / 4.0) * m_pow_a * block * 2.0 *
             (std::pow(std::abs(m1), a) + std::pow(std::abs(mm), a));
    total += (std::pow(4.0, a) / 4.0) * m_pow_a * block * 2.0 *
             (std::pow(std::abs(n1), a) + std::pow(std::abs(nm), a));
    total += (std::pow(2.0, 3.0 * a) / 2.0 +
              std::pow(6.0, a) * (std::pow(4.0, a) / 4.0) * m_pow_a) *
             std::pow(ym, a);
    total += (std::pow(4.0, a) / 4.0 +
              std::pow(6.0, a) * (std::pow(4.0, a) / 4.0) * m_pow_a) *
             std::pow(xm, a);
    return total;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (static_cast<double>(rng() >> 11) * 0x1.0p-53) * (hi - lo);
}

}  // namespace

TEST_CASE("2x2 zero-displacement grid hand trace") {
    GridDeployment2D grid;
    grid.xs = axis_of({1.0, 2.0});
    grid.ys = axis_of({1.0, 2.0});
    TargetPlan2D plan;
    plan.x_plan = axis_plan(grid.xs, {1.0, 2.0});
    plan.y_plan = axis_plan(grid.ys, {1.0, 2.0});

    const PlaneTrajectory t = gm_plane_trajectory(grid, plan, 2, 0, 0);
    CHECK(t.phase1 == doctest::Approx(14.0).epsilon(1e-12));
    CHECK(t.return_leg == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(t.phase2 == doctest::Approx(14.0).epsilon(1e-12));
    CHECK(t.total_distance == doctest::Approx(30.0).epsilon(1e-12));
}

TEST_CASE("single-sensor grid value frozen from the step simulator") {
    // (0.4, 0.6) -> (0.5, 0.5). The event walk gives phase1 = 0.6 (ascend)
    // + 0.6 (x round) + 0.4 (walk back), return 0.6, phase2 = 0.5 + 0.8 + 0.6.
    const auto oracle =
        stepsim::run_plane_schedule({0.4}, {0.6}, {0.5}, {0.5}, 1, 0, 0);
    REQUIRE(oracle.phase1 == doctest::Approx(1.6).epsilon(1e-12));
    REQUIRE(oracle.return_leg == doctest::Approx(0.6).epsilon(1e-12));
    REQUIRE(oracle.phase2 == doctest::Approx(1.9).epsilon(1e-12));
    REQUIRE(oracle.distance == doctest::Approx(4.1).epsilon(1e-12));

    GridDeployment2D grid;
    grid.xs = axis_of({0.4});
    grid.ys = axis_of({0.6});
    TargetPlan2D plan;
    plan.x_plan = axis_plan(grid.xs, {0.5});
    plan.y_plan = axis_plan(grid.ys, {0.5});
    const PlaneTrajectory t = gm_plane_trajectory(grid, plan, 1, 0, 0);
    CHECK(t.total_distance == doctest::Approx(4.1).epsilon(1e-12));
    CHECK(t.phase1 == doctest::Approx(1.6).epsilon(1e-12));
    CHECK(t.return_leg == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(t.phase2 == doctest::Approx(1.9).epsilon(1e-12));
    CHECK(oracle.final_positions[0][0].first == doctest::Approx(0.5).epsilon(0));
    CHECK(oracle.final_positions[0][0].second == doctest::Approx(0.5).epsilon(0));
}

TEST_CASE("legs are axis-aligned, contiguous, and add up per phase") {
    const GridDeployment2D grid = sample_grid(4, 4.0, 1234);
    const TargetPlan2D plan = plane_targets(grid, 1.0 / 8.0, 1.0 / 4.0, 1.2);
    const PlaneTrajectory t = gm_plane_trajectory(grid, plan, 2, 1, 0);
    double sum = 0.0;
    for (std::size_t i = 0; i < t.legs.size(); ++i) {
        const PlaneLeg& leg = t.legs[i];
        CHECK((leg.x0 == leg.x1 || leg.y0 == leg.y1));
        if (i > 0) {
            CHECK(leg.x0 == t.legs[i - 1].x1);
            CHECK(leg.y0 == t.legs[i - 1].y1);
        }
        sum += leg.length();
    }
    CHECK(sum == doctest::Approx(t.total_distance).epsilon(1e-15));
    CHECK(t.phase1 + t.return_leg + t.phase2 ==
          doctest::Approx(t.total_distance).epsilon(1e-15));
}

TEST_CASE("phase 1 decomposes into m row runs plus the ascent") {
    std::mt19937_64 rng(88);
    for (int trial = 0; trial < 50; ++trial) {
        const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 8);
        const GridDeployment2D grid = sample_grid(m, static_cast<double>(m), rng());
        const TargetPlan2D plan =
            plane_targets(grid, 1.0 / (2.0 * static_cast<double>(m)),
                          1.0 / static_cast<double>(m), 1.2);
        const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % m);
        const PlaneTrajectory t = gm_plane_trajectory(grid, plan, k, 0, 0);
        // horizontal distance of the first row
        double row = 0.0;
        for (const PlaneLeg& leg : t.legs) {
            if (leg.phase == PlanePhase::rows && leg.y0 == leg.y1 &&
                leg.y0 == grid.ys.positions.front())
                row += leg.length();
        }
        const double expected =
            static_cast<double>(m) * row + grid.ys.positions.back();
        CHECK(t.phase1 == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("step simulator agrees with the plane leg algebra") {
    std::mt19937_64 rng(909);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t m = 1 + rng() % 5;
        const std::size_t k = 1 + rng() % std::min<std::size_t>(m, 3);
        const GridDeployment2D grid =
            sample_grid(static_cast<std::int64_t>(m), uniform(rng, 0.5, 3.0), rng());
        std::vector<double> xt(grid.xs.positions), yt(grid.ys.positions);
        for (double& v : xt) v = std::abs(v + uniform(rng, -0.5, 0.5));
        for (double& v : yt) v = std::abs(v + uniform(rng, -0.5, 0.5));
        std::sort(xt.begin(), xt.end());
        std::sort(yt.begin(), yt.end());
        TargetPlan2D plan;
        plan.x_plan = axis_plan(grid.xs, xt);
        plan.y_plan = axis_plan(grid.ys, yt);
        for (std::size_t j1 = 0; j1 < k; ++j1) {
            for (std::size_t j2 = 0; j2 < k; ++j2) {
                const PlaneTrajectory t = gm_plane_trajectory(
                    grid, plan, static_cast<std::int64_t>(k),
                    static_cast<std::int64_t>(j1), static_cast<std::int64_t>(j2));
                const auto oracle = stepsim::run_plane_schedule(
                    grid.xs.positions, grid.ys.positions, xt, yt, k, j1, j2);
                REQUIRE(std::abs(t.total_distance - oracle.distance) < 1e-12);
                REQUIRE(std::abs(t.phase1 - oracle.phase1) < 1e-12);
                REQUIRE(std::abs(t.return_leg - oracle.return_leg) < 1e-12);
                REQUIRE(std::abs(t.phase2 - oracle.phase2) < 1e-12);
                // every sensor lands exactly on its grid target
                for (std::size_t i1 = 0; i1 < m; ++i1)
                    for (std::size_t i2 = 0; i2 < m; ++i2) {
                        REQUIRE(oracle.final_positions[i1][i2].first == xt[i1]);
                        REQUIRE(oracle.final_positions[i1][i2].second == yt[i2]);
                    }
            }
        }
    }
}

TEST_CASE("total distance reaches the far grid corner's coordinates") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 10);
        const GridDeployment2D grid = sample_grid(m, static_cast<double>(m), rng());
        const TargetPlan2D plan =
            plane_targets(grid, 1.0 / (2.0 * static_cast<double>(m)),
                          1.0 / static_cast<double>(m), 1.0);
        const PlaneTrajectory t = gm_plane_trajectory(grid, plan, 1, 0, 0);
        REQUIRE(t.total_distance >=
                grid.xs.positions.back() + grid.ys.positions.back() - 1e-12);
    }
}

TEST_CASE("plane autonomous cost") {
    const std::vector<double> m{0.1, 0.1}, n{0.2, 0.2};
    CHECK(autonomous_cost_plane(m, n, 1.0) == doctest::Approx(1.2).epsilon(1e-12));
    CHECK(autonomous_cost_plane(m, n, 2.0) == doctest::Approx(0.2).epsilon(1e-12));
    const std::vector<double> zeros{0.0, 0.0};
    CHECK(autonomous_cost_plane(zeros, zeros, 1.5) == 0.0);
    const std::vector<double> shorter{0.1};
    CHECK_THROWS_AS(autonomous_cost_plane(m, shorter, 1.0), std::invalid_argument);
}

TEST_CASE("plane bound formula") {
    SUBCASE("zero displacements, a = 1, n = 4") {
        CHECK(theorem2_bound(1.0, 1.0, 0, 0, 0, 0, 0.0, 4, 1, 1.0) ==
              doctest::Approx(29.0).epsilon(1e-12));
        CHECK(plane_bound_alt(1.0, 1.0, 0, 0, 0, 0, 0.0, 4, 1, 1.0) ==
              doctest::Approx(29.0).epsilon(1e-12));
    }
    SUBCASE("dual transcriptions agree on random inputs") {
        std::mt19937_64 rng(9001);
        for (int i = 0; i < 1000; ++i) {
            const double xm = uniform(rng, 0.0, 5.0), ym = uniform(rng, 0.0, 5.0);
            const double m1 = uniform(rng, -2.0, 2.0), mm = uniform(rng, -2.0, 2.0);
            const double n1 = uniform(rng, -2.0, 2.0), nm = uniform(rng, -2.0, 2.0);
            const double tas2 = uniform(rng, 0.0, 100.0);
            const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 30);
            const std::int64_t n = m * m;
            const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % m);
            const double a = 1.0 + uniform(rng, 0.0, 2.0);
            const double ours = theorem2_bound(xm, ym, m1, mm, n1, nm, tas2, n, k, a);
            const double alt = plane_bound_alt(xm, ym, m1, mm, n1, nm, tas2, n, k, a);
            REQUIRE(ours == doctest::Approx(alt).epsilon(1e-12));
        }
    }
    SUBCASE("monotone in the autonomous cost") {
        const double lo = theorem2_bound(1.0, 1.0, 0.1, 0.1, 0.1, 0.1, 1.0, 16, 2, 2.0);
        const double hi = theorem2_bound(1.0, 1.0, 0.1, 0.1, 0.1, 0.1, 2.0, 16, 2, 2.0);
        CHECK(hi > lo);
    }
}

TEST_CASE("plane lower bound") {
    CHECK(lower_bound_plane(1.0, 1.0, 4, 2.0) == 0.0);
    CHECK(lower_bound_plane(0.0, 1.0, 4, 1.0) == doctest::Approx(2.0));
    CHECK(lower_bound_plane(0.0, 1.0, 4, 2.0) == doctest::Approx(4.0));
    CHECK_THROWS_AS(lower_bound_plane(1.0, 0.5, 4, 1.0), std::invalid_argument);
}

TEST_CASE("best_over_offsets_plane fills a coherent report") {
    SUBCASE("k = 1 is a 1x1 matrix") {
        const GridDeployment2D grid = sample_grid(3, 3.0, 2);
        const TargetPlan2D plan = plane_targets(grid, 1.0 / 6.0, 1.0 / 3.0);
        const PlaneCostReport report = best_over_offsets_plane(grid, plan, 1, 1.0);
        REQUIRE(report.per_offset_cost.size() == 1);
        REQUIRE(report.per_offset_cost[0].size() == 1);
        CHECK(report.min_cost == report.per_offset_cost[0][0]);
    }
    SUBCASE("k = 2, m = 4: min under every entry and under the bound") {
        std::mt19937_64 rng(6);
        for (int trial = 0; trial < 25; ++trial) {
            const GridDeployment2D grid = sample_grid(4, 4.0, rng());
            const TargetPlan2D plan = plane_targets(grid, 1.0 / 8.0, 1.0 / 4.0, 1.1);
            const PlaneCostReport report = best_over_offsets_plane(grid, plan, 2, 1.0);
            for (const auto& row : report.per_offset_cost)
                for (double c : row) CHECK(report.min_cost <= c);
            CHECK(report.per_offset_cost[report.argmin_j1][report.argmin_j2] ==
                  report.min_cost);
            CHECK(report.min_cost <= report.theorem2_bound + 1e-6);
            CHECK(report.lower_bound <= report.min_cost + 1e-9);
        }
    }
}

TEST_CASE("plane offset and capacity range checks") {
    const GridDeployment2D grid = sample_grid(3, 3.0, 2);
    const TargetPlan2D plan = plane_targets(grid, 1.0 / 6.0, 1.0 / 3.0);
    CHECK_THROWS_AS(gm_plane_trajectory(grid, plan, 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(gm_plane_trajectory(grid, plan, 4, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(gm_plane_trajectory(grid, plan, 2, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(gm_plane_trajectory(grid, plan, 2, 0, -1), std::invalid_argument);
}
