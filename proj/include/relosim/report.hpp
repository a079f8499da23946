#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "relosim/experiments.hpp"
#include "relosim/line_transport.hpp"
#include "relosim/plane_transport.hpp"

namespace relosim {

// Shortest decimal that round-trips the double exactly; keeps CSV output
// byte-stable for a fixed configuration.
std::string format_double(double value);

// FNV-1a over the canonical spec text; embedded in SVG metadata.
std::uint64_t fnv1a64(const std::string& text);

// Flat key=value expansion of an experiment spec, one pair per line. Printed
// as '#'-prefixed header lines in every CSV so runs are auditable, and hashed
// for the SVG metadata comment.
std::string describe_spec(const ExperimentSpec& spec);

// CSV columns: n,group_index,mean_distance,mean_robot_cost,
// mean_autonomous_cost,mean_bound_upper,mean_bound_lower.
std::string sweep_csv(const ExperimentSpec& spec, const SweepSeries& series);

// CSV columns: n,trial_index,seed,total_distance,robot_cost,autonomous_cost,
// bound_upper,bound_lower,valid_coverage,valid_interference.
std::string trials_csv(const ExperimentSpec& spec,
                       std::span<const TrialRecord> records);

std::string sweep_json(const ExperimentSpec& spec, const SweepSeries& series);
std::string trials_json(const ExperimentSpec& spec,
                        std::span<const TrialRecord> records);

// One JSON object per line: every leg, then a summary record.
std::string trajectory_jsonl(const Trajectory& trajectory);
std::string trajectory_jsonl(const PlaneTrajectory& trajectory);

struct SvgOptions {
    std::string title;
    std::string x_label = "n";
    std::string y_label = "mean robot cost";
    bool log_log = false;
    int width = 800;
    int height = 600;
};

// Static scatter chart of the sweep's group means with an optional reference
// curve overlay. Embeds the config hash as an SVG comment.
std::string sweep_svg(const ExperimentSpec& spec, const SweepSeries& series,
                      const ReferenceCurve* reference, const SvgOptions& options);

}  // namespace relosim
