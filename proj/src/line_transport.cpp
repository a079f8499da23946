#include "relosim/line_transport.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace relosim {

namespace {

void append_leg(Trajectory& t, double& pos, double to, int carried) {
    if (to == pos) return;
    t.legs.push_back({pos, to, carried});
    t.total_distance += std::abs(to - pos);
    pos = to;
}

}  // namespace

Trajectory greedy_procedure(double y0, std::span<const double> sensors,
                            std::span<const double> deposits) {
    const std::size_t l = sensors.size();
    if (l == 0) throw std::invalid_argument("greedy_procedure: no sensors");
    if (deposits.size() != l)
        throw std::invalid_argument("greedy_procedure: sensors/deposits length mismatch");
    if (!std::is_sorted(sensors.begin(), sensors.end()))
        throw std::invalid_argument("greedy_procedure: sensors not sorted");
    if (!std::is_sorted(deposits.begin(), deposits.end()))
        throw std::invalid_argument("greedy_procedure: deposits not sorted");
    if (y0 > sensors.front())
        throw std::invalid_argument("greedy_procedure: robot starts past the first sensor");

    Trajectory t;
    double pos = y0;
    // Collect sweep: the i-th hop carries the i sensors picked up so far.
    for (std::size_t i = 0; i < l; ++i)
        append_leg(t, pos, sensors[i], static_cast<int>(i));
    const double last_pickup = sensors.back();
    // Rightward excursion when the top deposit lies beyond the last pickup.
    append_leg(t, pos, std::max(deposits.back(), last_pickup), static_cast<int>(l));
    // Deposit sweep, rightmost first.
    for (std::size_t i = l; i-- > 0;)
        append_leg(t, pos, deposits[i], static_cast<int>(i + 1));
    // Walk back to q = Y_l.
    append_leg(t, pos, last_pickup, 0);
    t.end_position = last_pickup;
    return t;
}

Trajectory gm_offset_trajectory(const Deployment1D& deployment,
                                const TargetPlan1D& plan, std::int64_t k,
                                std::int64_t j) {
    const auto n = static_cast<std::int64_t>(deployment.size());
    if (n < 1) throw std::invalid_argument("gm_offset_trajectory: empty deployment");
    if (k < 1 || k > n)
        throw std::invalid_argument("gm_offset_trajectory: capacity out of range");
    if (j < 0 || j >= k)
        throw std::invalid_argument("gm_offset_trajectory: offset out of range");
    if (static_cast<std::int64_t>(plan.size()) != n)
        throw std::invalid_argument("gm_offset_trajectory: plan/deployment size mismatch");

    Trajectory out;
    double start = 0.0;  // robot begins at the origin (X_0 = 0)
    const std::span<const double> sensors(deployment.positions);
    const std::span<const double> targets(plan.targets);

    auto run_round = [&](std::int64_t first, std::int64_t count) {
        if (count == 0) return;
        const Trajectory round = greedy_procedure(
            start, sensors.subspan(static_cast<std::size_t>(first), static_cast<std::size_t>(count)),
            targets.subspan(static_cast<std::size_t>(first), static_cast<std::size_t>(count)));
        out.legs.insert(out.legs.end(), round.legs.begin(), round.legs.end());
        out.total_distance += round.total_distance;
        start = round.end_position;
    };

    run_round(0, j);  // prologue
    const std::int64_t full_rounds = (n - j) / k;
    for (std::int64_t i = 0; i < full_rounds; ++i) run_round(j + k * i, k);
    run_round(j + k * full_rounds, n - j - k * full_rounds);  // remainder
    out.end_position = start;
    return out;
}

double robot_cost(const Trajectory& trajectory, double a) {
    if (!(a >= 1.0)) throw std::invalid_argument("robot_cost: a must be >= 1");
    return std::pow(trajectory.total_distance, a);
}

double autonomous_cost_line(std::span<const double> displacements, double a) {
    if (!(a >= 1.0)) throw std::invalid_argument("autonomous_cost_line: a must be >= 1");
    double sum = 0.0;
    for (double m : displacements) sum += std::pow(std::abs(m), a);
    return sum;
}

double max_displacement_cost(std::span<const double> displacements, double a) {
    if (!(a >= 1.0)) throw std::invalid_argument("max_displacement_cost: a must be >= 1");
    double max_abs = 0.0;
    for (double m : displacements) max_abs = std::max(max_abs, std::abs(m));
    return std::pow(max_abs, a);
}

double theorem1_bound(double x_n, double m_first, double m_last, double t_as,
                      std::int64_t n, std::int64_t k, double a) {
    const double block = std::pow(4.0 * static_cast<double>(n / k) + 16.0, a - 1.0);
    return std::pow(6.0, a) * std::pow(x_n, a) +
           block * (2.0 * std::pow(std::abs(m_first), a) +
                    2.0 * std::pow(std::abs(m_last), a) +
                    4.0 * t_as / static_cast<double>(k));
}

double lemma1_bound(double m_first, double m_last, double span) {
    if (span < 0.0) throw std::invalid_argument("lemma1_bound: negative span");
    return 2.0 * std::abs(m_first) + 2.0 * std::abs(m_last) + 3.0 * span;
}

double lower_bound_line(double x_n, double a) {
    return std::pow(x_n, a);
}

ExpectedBounds expected_bounds_line(std::int64_t n, double rate, std::int64_t k,
                                    double a, double emax_estimate,
                                    double eas_estimate) {
    const double mean_span = static_cast<double>(n) / rate;
    const double block = std::pow(4.0 * static_cast<double>(n / k) + 16.0, a - 1.0);
    ExpectedBounds b;
    b.lower = std::pow(mean_span, a);
    b.upper = std::pow(6.0, a) * std::pow(mean_span, a) +
              block * (4.0 * emax_estimate + 4.0 * eas_estimate / static_cast<double>(k));
    return b;
}

CostReport best_over_offsets(const Deployment1D& deployment,
                             const TargetPlan1D& plan, std::int64_t k, double a) {
    CostReport report;
    report.a = a;
    report.per_offset_cost.reserve(static_cast<std::size_t>(k));
    for (std::int64_t j = 0; j < k; ++j) {
        const Trajectory t = gm_offset_trajectory(deployment, plan, k, j);
        report.per_offset_cost.push_back(robot_cost(t, a));
    }
    const auto min_it =
        std::min_element(report.per_offset_cost.begin(), report.per_offset_cost.end());
    report.min_cost = *min_it;
    report.argmin_offset =
        static_cast<int>(min_it - report.per_offset_cost.begin());
    report.autonomous_cost = autonomous_cost_line(plan.displacements, a);
    report.max_displacement_cost = relosim::max_displacement_cost(plan.displacements, a);
    report.theorem1_bound = relosim::theorem1_bound(
        deployment.positions.back(), plan.displacements.front(),
        plan.displacements.back(), report.autonomous_cost,
        static_cast<std::int64_t>(deployment.size()), k, a);
    report.lower_bound = lower_bound_line(deployment.positions.back(), a);
    return report;
}

}  // namespace relosim
