#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "relosim/stochastic.hpp"

namespace relosim {

enum class Geometry { line, plane };

// Arrival rate as a function of the sensor count.
struct RateRule {
    enum class Kind { proportional_n, sqrt_n, fixed };
    Kind kind = Kind::proportional_n;
    double value = 1.0;  // only for Kind::fixed

    static RateRule n() { return {Kind::proportional_n, 0.0}; }
    static RateRule sqrt_of_n() { return {Kind::sqrt_n, 0.0}; }
    static RateRule fixed(double v) { return {Kind::fixed, v}; }

    double rate_for(std::int64_t n) const;
    std::string to_string() const;
    static RateRule parse(const std::string& text);  // "n" | "sqrt" | number
};

// Robot capacity as a function of the sensor count. The harness clamps the
// result to the schedule's admissible range (<= n on the line, <= sqrt(n)
// on the plane).
struct CapacityRule {
    enum class Kind { one, ceil_sqrt_n, full_n, fixed };
    Kind kind = Kind::one;
    std::int64_t value = 1;  // only for Kind::fixed

    static CapacityRule one_sensor() { return {Kind::one, 0}; }
    static CapacityRule ceil_sqrt() { return {Kind::ceil_sqrt_n, 0}; }
    static CapacityRule full() { return {Kind::full_n, 0}; }
    static CapacityRule fixed(std::int64_t v) { return {Kind::fixed, v}; }

    std::int64_t capacity_for(std::int64_t n) const;
    std::string to_string() const;
    static CapacityRule parse(const std::string& text);  // "1"|"sqrt"|"n"|number
};

enum class OffsetPolicy { fixed_zero, minimize };

struct ExperimentSpec {
    Geometry geometry = Geometry::line;
    std::vector<std::int64_t> n_values;
    RateRule rate_rule = RateRule::n();
    CapacityRule capacity_rule = CapacityRule::one_sensor();
    double a = 1.0;
    double stretch = 1.0;
    int trials = 100;
    int group_size = 5;
    std::uint64_t master_seed = 1;
    OffsetPolicy offset_policy = OffsetPolicy::fixed_zero;

    void validate() const;  // throws std::invalid_argument on bad combinations
};

struct TrialRecord {
    std::int64_t n = 0;
    int trial_index = 0;
    std::uint64_t seed = 0;
    double total_distance = 0.0;
    double robot_cost = 0.0;
    double autonomous_cost = 0.0;
    double bound_upper = 0.0;
    double bound_lower = 0.0;
    bool valid_coverage = false;
    bool valid_interference = false;
};

// Runs spec.trials independent trials at sensor count n. Trial t draws its
// seed stream from (master_seed, n, t) only, so results are identical for
// serial and thread-parallel execution. Infeasible plans propagate as
// InfeasiblePlanError.
std::vector<TrialRecord> run_trials(const ExperimentSpec& spec, std::int64_t n,
                                    int threads = 1);

// Means of consecutive non-overlapping blocks; values.size() must be a
// multiple of group_size.
std::vector<double> group_means(std::span<const double> values, int group_size);
// Convenience overload: group means of robot_cost.
std::vector<double> group_means(std::span<const TrialRecord> records,
                                int group_size);

struct SweepPoint {
    std::int64_t n = 0;
    int group_index = 0;
    double mean_distance = 0.0;
    double mean_robot_cost = 0.0;
    double mean_autonomous_cost = 0.0;
    double mean_bound_upper = 0.0;
    double mean_bound_lower = 0.0;
};

struct PowerLawFit {
    double exponent = 0.0;
    double constant = 0.0;
};

struct SweepSeries {
    std::vector<SweepPoint> points;       // ordered by n, then group index
    std::optional<PowerLawFit> fit;       // over (n, mean_robot_cost); absent
                                          // when fewer than 2 distinct n
};

class FitUnavailableError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Least squares of ln(mean) against ln(n). Requires >= 2 distinct n values
// and strictly positive means; throws FitUnavailableError otherwise.
PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points);

SweepSeries sweep(const ExperimentSpec& spec, int threads = 1);

enum class FigureId { fig3, fig4, fig5, fig6, fig7, fig8, fig9, fig10 };

std::string to_string(FigureId id);
std::optional<FigureId> parse_figure_id(const std::string& text);

struct ReferenceCurve {
    std::function<double(double)> closed_form;  // may be empty
    double theta_exponent = 0.0;

    bool has_closed_form() const { return static_cast<bool>(closed_form); }
};

// The chart overlay for a figure preset: a closed-form curve where one is
// known (fig3: sqrt(2)/Gamma(5/2) sqrt(n); fig5: n/5), otherwise just the
// growth-class exponent to compare fits against.
ReferenceCurve reference_curve(FigureId id);

// The exact experiment each figure preset expands to; documented in the
// README so runs are auditable.
ExperimentSpec figure_preset(FigureId id, std::uint64_t master_seed = 1);

}  // namespace relosim
