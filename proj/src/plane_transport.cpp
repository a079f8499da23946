#include "relosim/plane_transport.hpp"

#include <cmath>
#include <stdexcept>

namespace relosim {

double PlaneLeg::length() const {
    return std::abs(x1 - x0) + std::abs(y1 - y0);
}

namespace {

class PlaneTracer {
  public:
    void move_to(double x, double y, PlanePhase phase) {
        if (x != cx_ && y != cy_)
            throw std::logic_error("plane trajectory: diagonal leg");
        const double len = std::abs(x - cx_) + std::abs(y - cy_);
        if (len == 0.0) return;
        t_.legs.push_back({cx_, cy_, x, y, phase});
        t_.total_distance += len;
        switch (phase) {
            case PlanePhase::rows: t_.phase1 += len; break;
            case PlanePhase::origin_return: t_.return_leg += len; break;
            case PlanePhase::columns: t_.phase2 += len; break;
        }
        cx_ = x;
        cy_ = y;
    }

    double x() const { return cx_; }
    double y() const { return cy_; }
    PlaneTrajectory take() { return std::move(t_); }

  private:
    PlaneTrajectory t_;
    double cx_ = 0.0;
    double cy_ = 0.0;
};

}  // namespace

PlaneTrajectory gm_plane_trajectory(const GridDeployment2D& grid,
                                    const TargetPlan2D& plan, std::int64_t k,
                                    std::int64_t j1, std::int64_t j2) {
    const auto m = static_cast<std::int64_t>(grid.m());
    if (m < 1) throw std::invalid_argument("gm_plane_trajectory: empty grid");
    if (k < 1 || k > m)
        throw std::invalid_argument("gm_plane_trajectory: capacity out of range");
    if (j1 < 0 || j1 >= k || j2 < 0 || j2 >= k)
        throw std::invalid_argument("gm_plane_trajectory: offset out of range");

    // Every row shares the same x multiset, so the row schedule is computed
    // once and replayed at each row height; likewise for columns.
    const Trajectory row_run = gm_offset_trajectory(grid.xs, plan.x_plan, k, j2);
    const Trajectory col_run = gm_offset_trajectory(grid.ys, plan.y_plan, k, j1);

    PlaneTracer tracer;
    for (std::int64_t i2 = 0; i2 < m; ++i2) {
        tracer.move_to(0.0, grid.ys.positions[static_cast<std::size_t>(i2)],
                       PlanePhase::rows);
        for (const TrajectoryLeg& leg : row_run.legs)
            tracer.move_to(leg.to, tracer.y(), PlanePhase::rows);
        tracer.move_to(0.0, tracer.y(), PlanePhase::rows);
    }
    tracer.move_to(0.0, 0.0, PlanePhase::origin_return);
    for (std::int64_t i1 = 0; i1 < m; ++i1) {
        tracer.move_to(plan.x_plan.targets[static_cast<std::size_t>(i1)], 0.0,
                       PlanePhase::columns);
        for (const TrajectoryLeg& leg : col_run.legs)
            tracer.move_to(tracer.x(), leg.to, PlanePhase::columns);
        tracer.move_to(tracer.x(), 0.0, PlanePhase::columns);
    }
    return tracer.take();
}

double autonomous_cost_plane(std::span<const double> x_displacements,
                             std::span<const double> y_displacements, double a) {
    if (x_displacements.size() != y_displacements.size())
        throw std::invalid_argument("autonomous_cost_plane: axis length mismatch");
    if (!(a >= 1.0)) throw std::invalid_argument("autonomous_cost_plane: a must be >= 1");
    const double per_axis = autonomous_cost_line(x_displacements, a) +
                            autonomous_cost_line(y_displacements, a);
    return static_cast<double>(x_displacements.size()) * per_axis;
}

double theorem2_bound(double x_m, double y_m, double m_first, double m_last,
                      double n_first, double n_last, double t_as2,
                      std::int64_t n, std::int64_t k, double a) {
    const double nd = static_cast<double>(n);
    const double sqrt_n = std::sqrt(nd);
    const double block = std::pow(4.0 * std::floor(sqrt_n / static_cast<double>(k)) + 16.0,
                                  a - 1.0);
    const double half_pow = std::pow(nd, a / 2.0);
    const double x_boundary =
        2.0 * std::pow(std::abs(m_first), a) + 2.0 * std::pow(std::abs(m_last), a);
    const double y_boundary =
        2.0 * std::pow(std::abs(n_first), a) + 2.0 * std::pow(std::abs(n_last), a);

    return std::pow(4.0, a) * std::pow(nd, a / 2.0 - 0.5) * block * t_as2 /
               static_cast<double>(k) +
           std::pow(4.0, a - 1.0) * half_pow * block * x_boundary +
           std::pow(4.0, a - 1.0) * half_pow * block * y_boundary +
           (std::pow(2.0, 3.0 * a - 1.0) +
            std::pow(6.0, a) * std::pow(4.0, a - 1.0) * half_pow) *
               std::pow(y_m, a) +
           (std::pow(4.0, a - 1.0) +
            std::pow(6.0, a) * std::pow(4.0, a - 1.0) * half_pow) *
               std::pow(x_m, a);
}

double lower_bound_plane(double x_first, double x_m, std::int64_t n, double a) {
    if (x_m < x_first)
        throw std::invalid_argument("lower_bound_plane: x_m below x_first");
    return std::pow(static_cast<double>(n), a / 2.0) * std::pow(x_m - x_first, a);
}

PlaneCostReport best_over_offsets_plane(const GridDeployment2D& grid,
                                        const TargetPlan2D& plan,
                                        std::int64_t k, double a) {
    PlaneCostReport report;
    report.a = a;
    report.per_offset_cost.assign(static_cast<std::size_t>(k),
                                  std::vector<double>(static_cast<std::size_t>(k), 0.0));
    bool first = true;
    for (std::int64_t j1 = 0; j1 < k; ++j1) {
        for (std::int64_t j2 = 0; j2 < k; ++j2) {
            const PlaneTrajectory t = gm_plane_trajectory(grid, plan, k, j1, j2);
            const double cost = std::pow(t.total_distance, a);
            report.per_offset_cost[static_cast<std::size_t>(j1)]
                                  [static_cast<std::size_t>(j2)] = cost;
            if (first || cost < report.min_cost) {
                report.min_cost = cost;
                report.argmin_j1 = static_cast<int>(j1);
                report.argmin_j2 = static_cast<int>(j2);
                first = false;
            }
        }
    }
    const auto n = static_cast<std::int64_t>(grid.sensor_count());
    report.autonomous_cost =
        autonomous_cost_plane(plan.x_plan.displacements, plan.y_plan.displacements, a);
    report.theorem2_bound = relosim::theorem2_bound(
        grid.xs.positions.back(), grid.ys.positions.back(),
        plan.x_plan.displacements.front(), plan.x_plan.displacements.back(),
        plan.y_plan.displacements.front(), plan.y_plan.displacements.back(),
        report.autonomous_cost, n, k, a);
    report.lower_bound =
        lower_bound_plane(grid.xs.positions.front(), grid.xs.positions.back(), n, a);
    return report;
}

}  // namespace relosim
