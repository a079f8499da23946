#include "relosim/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "relosim/line_transport.hpp"
#include "relosim/plane_transport.hpp"
#include "relosim/targets.hpp"

namespace relosim {

double RateRule::rate_for(std::int64_t n) const {
    switch (kind) {
        case Kind::proportional_n: return static_cast<double>(n);
        case Kind::sqrt_n: return std::sqrt(static_cast<double>(n));
        case Kind::fixed: return value;
    }
    throw std::logic_error("RateRule: bad kind");
}

std::string RateRule::to_string() const {
    switch (kind) {
        case Kind::proportional_n: return "n";
        case Kind::sqrt_n: return "sqrt";
        case Kind::fixed: return std::to_string(value);
    }
    throw std::logic_error("RateRule: bad kind");
}

RateRule RateRule::parse(const std::string& text) {
    if (text == "n") return RateRule::n();
    if (text == "sqrt") return RateRule::sqrt_of_n();
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used == text.size() && v > 0.0) return RateRule::fixed(v);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("rate rule must be 'n', 'sqrt' or a positive number: " + text);
}

std::int64_t CapacityRule::capacity_for(std::int64_t n) const {
    switch (kind) {
        case Kind::one: return 1;
        case Kind::ceil_sqrt_n:
            return static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
        case Kind::full_n: return n;
        case Kind::fixed: return value;
    }
    throw std::logic_error("CapacityRule: bad kind");
}

std::string CapacityRule::to_string() const {
    switch (kind) {
        case Kind::one: return "1";
        case Kind::ceil_sqrt_n: return "sqrt";
        case Kind::full_n: return "n";
        case Kind::fixed: return std::to_string(value);
    }
    throw std::logic_error("CapacityRule: bad kind");
}

CapacityRule CapacityRule::parse(const std::string& text) {
    if (text == "1") return CapacityRule::one_sensor();
    if (text == "sqrt") return CapacityRule::ceil_sqrt();
    if (text == "n") return CapacityRule::full();
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used == text.size() && v >= 1) return CapacityRule::fixed(v);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("capacity rule must be '1', 'sqrt', 'n' or a positive integer: " +
                                text);
}

namespace {

bool is_perfect_square(std::int64_t n) {
    const auto m = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
    return m * m == n;
}

std::int64_t exact_sqrt(std::int64_t n) {
    return static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
}

}  // namespace

void ExperimentSpec::validate() const {
    if (n_values.empty()) throw std::invalid_argument("experiment: no n values");
    for (std::int64_t n : n_values) {
        if (n < 1) throw std::invalid_argument("experiment: n must be >= 1");
        if (geometry == Geometry::plane && !is_perfect_square(n))
            throw std::invalid_argument("experiment: plane n must be a perfect square, got " +
                                        std::to_string(n));
    }
    if (trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");
    if (group_size < 1 || trials % group_size != 0)
        throw std::invalid_argument("experiment: trials must be divisible by group_size");
    if (!(a >= 1.0)) throw std::invalid_argument("experiment: a must be >= 1");
    if (!(stretch >= 1.0)) throw std::invalid_argument("experiment: stretch must be >= 1");
    if (rate_rule.kind == RateRule::Kind::fixed && !(rate_rule.value > 0.0))
        throw std::invalid_argument("experiment: fixed rate must be > 0");
    if (capacity_rule.kind == CapacityRule::Kind::fixed && capacity_rule.value < 1)
        throw std::invalid_argument("experiment: fixed capacity must be >= 1");
}

namespace {

// The paper's experimental regime: sensing radius 1/(2 lambda) stretched by
// the common factor, interference distance stretched alike.
struct Regime {
    double rate;
    double r;
    double s;
};

Regime regime_for(const ExperimentSpec& spec, std::int64_t n) {
    const double rate = spec.rate_rule.rate_for(n);
    return {rate, 1.0 / (2.0 * rate), spec.stretch / rate};
}

TrialRecord run_line_trial(const ExperimentSpec& spec, std::int64_t n, int trial) {
    const Regime regime = regime_for(spec, n);
    const std::uint64_t seed = derive_stream(
        spec.master_seed, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial)});
    const Deployment1D deployment = sample_poisson_arrivals(n, regime.rate, seed);
    const TargetPlan1D plan = line_targets(deployment, regime.r, regime.s, spec.stretch);
    const ValidationReport validation = validate_line_plan(plan);
    const std::int64_t k = std::clamp<std::int64_t>(spec.capacity_rule.capacity_for(n), 1, n);

    TrialRecord rec;
    rec.n = n;
    rec.trial_index = trial;
    rec.seed = seed;
    if (spec.offset_policy == OffsetPolicy::minimize) {
        const CostReport report = best_over_offsets(deployment, plan, k, spec.a);
        rec.robot_cost = report.min_cost;
        rec.total_distance = std::pow(report.min_cost, 1.0 / spec.a);
        rec.autonomous_cost = report.autonomous_cost;
        rec.bound_upper = report.theorem1_bound;
        rec.bound_lower = report.lower_bound;
    } else {
        const Trajectory t = gm_offset_trajectory(deployment, plan, k, 0);
        rec.total_distance = t.total_distance;
        rec.robot_cost = robot_cost(t, spec.a);
        rec.autonomous_cost = autonomous_cost_line(plan.displacements, spec.a);
        rec.bound_upper = theorem1_bound(deployment.positions.back(),
                                         plan.displacements.front(),
                                         plan.displacements.back(),
                                         rec.autonomous_cost, n, k, spec.a);
        rec.bound_lower = lower_bound_line(deployment.positions.back(), spec.a);
    }
    rec.valid_coverage = validation.coverage;
    rec.valid_interference = validation.interference;
    return rec;
}

TrialRecord run_plane_trial(const ExperimentSpec& spec, std::int64_t n, int trial) {
    const std::int64_t m = exact_sqrt(n);
    const Regime regime = regime_for(spec, n);
    const std::uint64_t seed = derive_stream(
        spec.master_seed, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial)});
    const GridDeployment2D grid = sample_grid(m, regime.rate, seed);
    const TargetPlan2D plan = plane_targets(grid, regime.r, regime.s, spec.stretch);
    const ValidationReport validation = validate_plane_plan(plan);
    const std::int64_t k = std::clamp<std::int64_t>(spec.capacity_rule.capacity_for(n), 1, m);

    TrialRecord rec;
    rec.n = n;
    rec.trial_index = trial;
    rec.seed = seed;
    if (spec.offset_policy == OffsetPolicy::minimize) {
        const PlaneCostReport report = best_over_offsets_plane(grid, plan, k, spec.a);
        rec.robot_cost = report.min_cost;
        rec.total_distance = std::pow(report.min_cost, 1.0 / spec.a);
        rec.autonomous_cost = report.autonomous_cost;
        rec.bound_upper = report.theorem2_bound;
        rec.bound_lower = report.lower_bound;
    } else {
        const PlaneTrajectory t = gm_plane_trajectory(grid, plan, k, 0, 0);
        rec.total_distance = t.total_distance;
        rec.robot_cost = std::pow(t.total_distance, spec.a);
        rec.autonomous_cost = autonomous_cost_plane(plan.x_plan.displacements,
                                                    plan.y_plan.displacements, spec.a);
        rec.bound_upper = theorem2_bound(
            grid.xs.positions.back(), grid.ys.positions.back(),
            plan.x_plan.displacements.front(), plan.x_plan.displacements.back(),
            plan.y_plan.displacements.front(), plan.y_plan.displacements.back(),
            rec.autonomous_cost, n, k, spec.a);
        rec.bound_lower =
            lower_bound_plane(grid.xs.positions.front(), grid.xs.positions.back(), n, spec.a);
    }
    rec.valid_coverage = validation.coverage;
    rec.valid_interference = validation.interference;
    return rec;
}

}  // namespace

std::vector<TrialRecord> run_trials(const ExperimentSpec& spec, std::int64_t n,
                                    int threads) {
    spec.validate();
    if (spec.geometry == Geometry::plane && !is_perfect_square(n))
        throw std::invalid_argument("run_trials: plane n must be a perfect square");

    std::vector<TrialRecord> records(static_cast<std::size_t>(spec.trials));
    auto worker = [&](int trial) {
        records[static_cast<std::size_t>(trial)] =
            spec.geometry == Geometry::line ? run_line_trial(spec, n, trial)
                                            : run_plane_trial(spec, n, trial);
    };

    if (threads <= 1 || spec.trials == 1) {
        for (int t = 0; t < spec.trials; ++t) worker(t);
        return records;
    }

    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto drain = [&] {
        for (;;) {
            const int t = next.fetch_add(1);
            if (t >= spec.trials) return;
            try {
                worker(t);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int count = std::min(threads, spec.trials);
    pool.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) pool.emplace_back(drain);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return records;
}

std::vector<double> group_means(std::span<const double> values, int group_size) {
    if (group_size < 1) throw std::invalid_argument("group_means: group_size must be >= 1");
    if (values.empty() || values.size() % static_cast<std::size_t>(group_size) != 0)
        throw std::invalid_argument("group_means: size must be a positive multiple of group_size");
    std::vector<double> means;
    means.reserve(values.size() / static_cast<std::size_t>(group_size));
    for (std::size_t i = 0; i < values.size(); i += static_cast<std::size_t>(group_size)) {
        double sum = 0.0;
        for (std::size_t q = 0; q < static_cast<std::size_t>(group_size); ++q)
            sum += values[i + q];
        means.push_back(sum / group_size);
    }
    return means;
}

std::vector<double> group_means(std::span<const TrialRecord> records, int group_size) {
    std::vector<double> costs;
    costs.reserve(records.size());
    for (const TrialRecord& r : records) costs.push_back(r.robot_cost);
    return group_means(std::span<const double>(costs), group_size);
}

PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2) throw FitUnavailableError("power-law fit needs >= 2 points");
    std::vector<double> xs, ys;
    xs.reserve(points.size());
    ys.reserve(points.size());
    for (const auto& [n, mean] : points) {
        if (!(n > 0.0) || !(mean > 0.0))
            throw FitUnavailableError("power-law fit needs positive n and means");
        xs.push_back(std::log(n));
        ys.push_back(std::log(mean));
    }
    const double x_mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    const double y_mean = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - x_mean) * (xs[i] - x_mean);
        sxy += (xs[i] - x_mean) * (ys[i] - y_mean);
    }
    if (sxx == 0.0) throw FitUnavailableError("power-law fit needs >= 2 distinct n");
    PowerLawFit fit;
    fit.exponent = sxy / sxx;
    fit.constant = std::exp(y_mean - fit.exponent * x_mean);
    return fit;
}

SweepSeries sweep(const ExperimentSpec& spec, int threads) {
    spec.validate();
    SweepSeries series;
    std::vector<std::pair<double, double>> fit_points;
    for (std::int64_t n : spec.n_values) {
        const std::vector<TrialRecord> records = run_trials(spec, n, threads);
        auto column = [&](auto getter) {
            std::vector<double> values;
            values.reserve(records.size());
            for (const TrialRecord& r : records) values.push_back(getter(r));
            return group_means(std::span<const double>(values), spec.group_size);
        };
        const auto distance = column([](const TrialRecord& r) { return r.total_distance; });
        const auto cost = column([](const TrialRecord& r) { return r.robot_cost; });
        const auto autonomous = column([](const TrialRecord& r) { return r.autonomous_cost; });
        const auto upper = column([](const TrialRecord& r) { return r.bound_upper; });
        const auto lower = column([](const TrialRecord& r) { return r.bound_lower; });
        for (std::size_t g = 0; g < cost.size(); ++g) {
            series.points.push_back({n, static_cast<int>(g), distance[g], cost[g],
                                     autonomous[g], upper[g], lower[g]});
            fit_points.emplace_back(static_cast<double>(n), cost[g]);
        }
    }
    std::vector<std::int64_t> distinct = spec.n_values;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() >= 2) series.fit = fit_power_law(fit_points);
    return series;
}

std::string to_string(FigureId id) {
    switch (id) {
        case FigureId::fig3: return "fig3";
        case FigureId::fig4: return "fig4";
        case FigureId::fig5: return "fig5";
        case FigureId::fig6: return "fig6";
        case FigureId::fig7: return "fig7";
        case FigureId::fig8: return "fig8";
        case FigureId::fig9: return "fig9";
        case FigureId::fig10: return "fig10";
    }
    throw std::logic_error("FigureId: bad value");
}

std::optional<FigureId> parse_figure_id(const std::string& text) {
    for (FigureId id : {FigureId::fig3, FigureId::fig4, FigureId::fig5, FigureId::fig6,
                        FigureId::fig7, FigureId::fig8, FigureId::fig9, FigureId::fig10})
        if (to_string(id) == text) return id;
    return std::nullopt;
}

ReferenceCurve reference_curve(FigureId id) {
    switch (id) {
        case FigureId::fig3:
            return {[](double n) {
                        return std::sqrt(2.0) / std::tgamma(2.5) * std::sqrt(n);
                    },
                    0.5};
        case FigureId::fig5:
            return {[](double n) { return n / 5.0; }, 1.0};
        case FigureId::fig4:
        case FigureId::fig6:
        case FigureId::fig7:
        case FigureId::fig8:
            return {nullptr, 0.0};
        case FigureId::fig9:
            return {nullptr, 1.0};
        case FigureId::fig10:
            return {nullptr, 0.5};
    }
    throw std::logic_error("FigureId: bad value");
}

ExperimentSpec figure_preset(FigureId id, std::uint64_t master_seed) {
    ExperimentSpec spec;
    spec.n_values = {400, 900, 1600, 2500};
    spec.master_seed = master_seed;
    spec.offset_policy = OffsetPolicy::fixed_zero;
    spec.geometry = Geometry::line;
    spec.rate_rule = RateRule::n();
    spec.a = 1.0;
    switch (id) {
        case FigureId::fig3:
            spec.capacity_rule = CapacityRule::one_sensor();
            spec.stretch = 1.0;
            spec.trials = 100;
            spec.group_size = 5;
            break;
        case FigureId::fig4:
            spec.capacity_rule = CapacityRule::ceil_sqrt();
            spec.stretch = 1.0;
            spec.trials = 50;
            spec.group_size = 10;
            break;
        case FigureId::fig5:
            spec.capacity_rule = CapacityRule::one_sensor();
            spec.stretch = 1.2;
            spec.trials = 100;
            spec.group_size = 5;
            break;
        case FigureId::fig6:
            spec.capacity_rule = CapacityRule::full();
            spec.stretch = 1.2;
            spec.trials = 50;
            spec.group_size = 10;
            break;
        case FigureId::fig7:
            spec.capacity_rule = CapacityRule::ceil_sqrt();
            spec.stretch = 1.0;
            spec.a = 2.0;
            spec.trials = 50;
            spec.group_size = 10;
            break;
        case FigureId::fig8:
            spec.capacity_rule = CapacityRule::full();
            spec.stretch = 1.2;
            spec.a = 2.0;
            spec.trials = 50;
            spec.group_size = 10;
            break;
        case FigureId::fig9:
            spec.geometry = Geometry::plane;
            spec.rate_rule = RateRule::sqrt_of_n();
            spec.capacity_rule = CapacityRule::one_sensor();
            spec.stretch = 1.2;
            spec.trials = 100;
            spec.group_size = 5;
            break;
        case FigureId::fig10:
            spec.geometry = Geometry::plane;
            spec.rate_rule = RateRule::sqrt_of_n();
            spec.capacity_rule = CapacityRule::ceil_sqrt();
            spec.stretch = 1.2;
            spec.trials = 100;
            spec.group_size = 5;
            break;
    }
    return spec;
}

}  // namespace relosim
