// relosim command line: seeded relocation experiments, bound verification,
// trajectory dumps, and figure replication charts.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "relosim/experiments.hpp"
#include "relosim/line_transport.hpp"
#include "relosim/oracles.hpp"
#include "relosim/plane_transport.hpp"
#include "relosim/report.hpp"
#include "relosim/stochastic.hpp"
#include "relosim/targets.hpp"

namespace fs = std::filesystem;
using namespace relosim;

namespace {

struct CliOptions {
    std::string out_dir = ".";
    std::vector<std::string> formats{"csv"};
    std::uint64_t seed = 1;
    int trials = 100;
    int group_size = 5;
    std::vector<std::int64_t> n_values{400, 900, 1600, 2500};
    std::string k_rule = "1";
    std::string rate_rule = "n";
    double a = 1.0;
    double stretch = 1.0;
    std::string offsets = "fixed0";
    int threads = 1;

    bool wants(const std::string& format) const {
        for (const auto& f : formats)
            if (f == format) return true;
        return false;
    }

    ExperimentSpec spec(Geometry geometry) const {
        ExperimentSpec spec;
        spec.geometry = geometry;
        spec.n_values = n_values;
        spec.rate_rule = RateRule::parse(rate_rule);
        spec.capacity_rule = CapacityRule::parse(k_rule);
        spec.a = a;
        spec.stretch = stretch;
        spec.trials = trials;
        spec.group_size = group_size;
        spec.master_seed = seed;
        if (offsets == "fixed0")
            spec.offset_policy = OffsetPolicy::fixed_zero;
        else if (offsets == "minimize")
            spec.offset_policy = OffsetPolicy::minimize;
        else
            throw std::invalid_argument("offsets must be fixed0 or minimize");
        return spec;
    }
};

void add_shared_options(CLI::App& app, CliOptions& options) {
    app.add_option("--out", options.out_dir, "Output directory")
        ->envname("RELOSIM_OUT_DIR")
        ->capture_default_str();
    app.add_option("--formats", options.formats,
                   "Output formats: any of csv,json,svg")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--seed", options.seed, "Master seed")->capture_default_str();
    app.add_option("--trials", options.trials, "Trials per n")->capture_default_str();
    app.add_option("--group-size", options.group_size, "Trials averaged per chart point")
        ->capture_default_str();
    app.add_option("--n", options.n_values, "Sensor counts (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--k-rule", options.k_rule, "Robot capacity: 1, sqrt, n or a number")
        ->capture_default_str();
    app.add_option("--rate-rule", options.rate_rule, "Arrival rate: n, sqrt or a number")
        ->capture_default_str();
    app.add_option("--a", options.a, "Cost exponent (>= 1)")->capture_default_str();
    app.add_option("--stretch", options.stretch, "Anchor stretch factor (>= 1)")
        ->capture_default_str();
    app.add_option("--offsets", options.offsets, "Offset policy: fixed0 or minimize")
        ->capture_default_str();
    app.add_option("--threads", options.threads, "Worker threads for trials")
        ->capture_default_str();
}

fs::path write_file(const fs::path& dir, const std::string& name,
                    const std::string& content) {
    fs::create_directories(dir);
    const fs::path path = dir / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path.string());
    return path;
}

std::int64_t single_n(const CliOptions& options) {
    if (options.n_values.size() != 1)
        throw std::invalid_argument("this subcommand takes a single --n value");
    return options.n_values.front();
}

int run_single(const CliOptions& options, Geometry geometry) {
    ExperimentSpec spec = options.spec(geometry);
    const std::int64_t n = single_n(options);
    spec.n_values = {n};
    const auto records = run_trials(spec, n, options.threads);
    const std::string base = geometry == Geometry::line ? "line_trials" : "plane_trials";
    if (options.wants("csv"))
        std::cout << write_file(options.out_dir, base + ".csv", trials_csv(spec, records)).string()
                  << '\n';
    if (options.wants("json"))
        std::cout << write_file(options.out_dir, base + ".json", trials_json(spec, records)).string()
                  << '\n';
    return 0;
}

int run_sweep(const CliOptions& options, Geometry geometry, const std::string& base,
              const ReferenceCurve* reference, const ExperimentSpec* preset) {
    const ExperimentSpec spec = preset ? *preset : options.spec(geometry);
    const SweepSeries series = sweep(spec, options.threads);
    if (options.wants("csv"))
        std::cout << write_file(options.out_dir, base + ".csv", sweep_csv(spec, series)).string()
                  << '\n';
    if (options.wants("json"))
        std::cout << write_file(options.out_dir, base + ".json", sweep_json(spec, series)).string()
                  << '\n';
    if (options.wants("svg")) {
        SvgOptions svg;
        svg.title = base + (spec.geometry == Geometry::line ? " (line)" : " (plane)");
        std::cout << write_file(options.out_dir, base + ".svg",
                                sweep_svg(spec, series, reference, svg))
                         .string()
                  << '\n';
    }
    if (series.fit)
        std::cout << "fit: exponent " << format_double(series.fit->exponent)
                  << ", constant " << format_double(series.fit->constant) << '\n';
    return 0;
}

int run_verify(std::uint64_t seed, long gp_instances, long line_instances,
               long plane_instances, double bound_scale) {
    int exit_code = 0;
    auto show = [&](const char* name, const OracleOutcome& outcome) {
        std::cout << name << ": instances=" << outcome.checked
                  << " violations=" << outcome.violations
                  << " worst_margin=" << format_double(outcome.worst_margin);
        if (outcome.violations > 0) {
            std::cout << " offending_seed=" << outcome.worst_seed;
            exit_code = 1;
        }
        std::cout << '\n';
    };
    OracleConfig config{seed, gp_instances, bound_scale};
    show("round-bound", check_lemma1(config));
    config.instances = line_instances;
    const LineOracleOutcome line = check_line_bounds(config);
    show("line-min-cost-bound", line.theorem1);
    show("line-reachability", line.corollary1);
    config.instances = plane_instances;
    const PlaneOracleOutcome plane = check_plane_bounds(config);
    show("plane-min-cost-bound", plane.theorem2);
    show("plane-reachability", plane.reachability);
    return exit_code;
}

int run_trace(const CliOptions& options, const std::string& geometry,
              std::int64_t k, std::optional<std::int64_t> j,
              std::int64_t j1, std::int64_t j2) {
    const std::int64_t n = single_n(options);
    if (geometry == "line") {
        const double rate = RateRule::parse(options.rate_rule).rate_for(n);
        const auto d = sample_poisson_arrivals(n, rate, options.seed);
        const auto plan =
            line_targets(d, 1.0 / (2.0 * rate), options.stretch / rate, options.stretch);
        std::vector<std::int64_t> offsets;
        if (j) offsets.push_back(*j);
        else for (std::int64_t o = 0; o < k; ++o) offsets.push_back(o);
        for (std::int64_t o : offsets) {
            const Trajectory t = gm_offset_trajectory(d, plan, k, o);
            const std::string name = "trace_line_j" + std::to_string(o) + ".jsonl";
            std::cout << write_file(options.out_dir, name, trajectory_jsonl(t)).string()
                      << '\n';
        }
        return 0;
    }
    if (geometry == "plane") {
        const std::int64_t m = static_cast<std::int64_t>(
            std::llround(std::sqrt(static_cast<double>(n))));
        if (m * m != n) throw std::invalid_argument("plane trace needs a square n");
        const double rate = RateRule::parse(options.rate_rule).rate_for(n);
        const auto grid = sample_grid(m, rate, options.seed);
        const auto plan = plane_targets(grid, 1.0 / (2.0 * rate),
                                        options.stretch / rate, options.stretch);
        const PlaneTrajectory t = gm_plane_trajectory(grid, plan, k, j1, j2);
        const std::string name = "trace_plane_" + std::to_string(j1) + "_" +
                                 std::to_string(j2) + ".jsonl";
        std::cout << write_file(options.out_dir, name, trajectory_jsonl(t)).string()
                  << '\n';
        return 0;
    }
    throw std::invalid_argument("geometry must be line or plane");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relosim: robot-assisted sensor relocation simulator"};
    app.require_subcommand(1);
    app.fallthrough();  // shared options may appear after the subcommand
    app.set_config("--config", "", "Flat key=value config file; command-line flags win");

    CliOptions options;
    add_shared_options(app, options);

    auto* line_run = app.add_subcommand("line-run", "Per-trial records at one n (line)");
    auto* plane_run = app.add_subcommand("plane-run", "Per-trial records at one n (plane)");

    auto* sweep_cmd = app.add_subcommand("sweep", "Group-mean sweep over several n");
    std::string sweep_geometry = "line";
    sweep_cmd->add_option("--geometry", sweep_geometry, "line or plane")
        ->check(CLI::IsMember({"line", "plane"}))
        ->capture_default_str();

    auto* figure_cmd =
        app.add_subcommand("figure", "Replicate a preset chart (fig3..fig10)");
    std::string figure_name;
    figure_cmd->add_option("id", figure_name, "fig3..fig10")->required();

    auto* verify_cmd =
        app.add_subcommand("verify-bounds", "Randomized bound-oracle suites");
    long gp_instances = 100'000, line_instances = 10'000, plane_instances = 1'000;
    double bound_scale = 1.0;
    verify_cmd->add_option("--gp-instances", gp_instances)->capture_default_str();
    verify_cmd->add_option("--line-instances", line_instances)->capture_default_str();
    verify_cmd->add_option("--plane-instances", plane_instances)->capture_default_str();
    verify_cmd
        ->add_option("--bound-scale", bound_scale,
                     "Scale bounds before comparing (fault injection)")
        ->capture_default_str();

    auto* trace_cmd = app.add_subcommand("trace", "Leg-by-leg trajectory dump");
    std::string trace_geometry = "line";
    std::int64_t trace_k = 1, trace_j1 = 0, trace_j2 = 0;
    std::optional<std::int64_t> trace_j;
    trace_cmd->add_option("--geometry", trace_geometry, "line or plane")
        ->check(CLI::IsMember({"line", "plane"}))
        ->capture_default_str();
    trace_cmd->add_option("--k", trace_k, "Robot capacity")->capture_default_str();
    trace_cmd->add_option("--j", trace_j, "Line offset; omit to dump all offsets");
    trace_cmd->add_option("--j1", trace_j1, "Plane column offset")->capture_default_str();
    trace_cmd->add_option("--j2", trace_j2, "Plane row offset")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (line_run->parsed()) return run_single(options, Geometry::line);
        if (plane_run->parsed()) return run_single(options, Geometry::plane);
        if (sweep_cmd->parsed())
            return run_sweep(options,
                             sweep_geometry == "line" ? Geometry::line : Geometry::plane,
                             "sweep", nullptr, nullptr);
        if (figure_cmd->parsed()) {
            const auto id = parse_figure_id(figure_name);
            if (!id) throw std::invalid_argument("unknown figure id: " + figure_name);
            ExperimentSpec preset = figure_preset(*id, options.seed);
            const ReferenceCurve curve = reference_curve(*id);
            CliOptions figure_options = options;
            if (!figure_options.wants("svg")) figure_options.formats.push_back("svg");
            return run_sweep(figure_options, preset.geometry, to_string(*id), &curve,
                             &preset);
        }
        if (verify_cmd->parsed())
            return run_verify(options.seed, gp_instances, line_instances,
                              plane_instances, bound_scale);
        if (trace_cmd->parsed())
            return run_trace(options, trace_geometry, trace_k, trace_j, trace_j1,
                             trace_j2);
    } catch (const std::exception& error) {
        std::cerr << "relosim: " << error.what() << '\n';
        return 2;
    }
    return 0;
}
