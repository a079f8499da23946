#include "relosim/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace relosim {

std::string format_double(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string describe_spec(const ExperimentSpec& spec) {
    std::ostringstream out;
    out << "geometry=" << (spec.geometry == Geometry::line ? "line" : "plane") << '\n';
    out << "n_values=";
    for (std::size_t i = 0; i < spec.n_values.size(); ++i)
        out << (i ? "," : "") << spec.n_values[i];
    out << '\n';
    out << "rate_rule=" << spec.rate_rule.to_string() << '\n';
    out << "k_rule=" << spec.capacity_rule.to_string() << '\n';
    out << "a=" << format_double(spec.a) << '\n';
    out << "stretch=" << format_double(spec.stretch) << '\n';
    out << "trials=" << spec.trials << '\n';
    out << "group_size=" << spec.group_size << '\n';
    out << "master_seed=" << spec.master_seed << '\n';
    out << "offset_policy="
        << (spec.offset_policy == OffsetPolicy::fixed_zero ? "fixed0" : "minimize") << '\n';
    return out.str();
}

namespace {

void append_spec_header(std::ostringstream& out, const ExperimentSpec& spec) {
    std::istringstream lines(describe_spec(spec));
    for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
}

nlohmann::json spec_json(const ExperimentSpec& spec) {
    return {
        {"geometry", spec.geometry == Geometry::line ? "line" : "plane"},
        {"n_values", spec.n_values},
        {"rate_rule", spec.rate_rule.to_string()},
        {"k_rule", spec.capacity_rule.to_string()},
        {"a", spec.a},
        {"stretch", spec.stretch},
        {"trials", spec.trials},
        {"group_size", spec.group_size},
        {"master_seed", spec.master_seed},
        {"offset_policy",
         spec.offset_policy == OffsetPolicy::fixed_zero ? "fixed0" : "minimize"},
    };
}

}  // namespace

std::string sweep_csv(const ExperimentSpec& spec, const SweepSeries& series) {
    std::ostringstream out;
    append_spec_header(out, spec);
    if (series.fit) {
        out << "# fit_exponent=" << format_double(series.fit->exponent) << '\n';
        out << "# fit_constant=" << format_double(series.fit->constant) << '\n';
    }
    out << "n,group_index,mean_distance,mean_robot_cost,mean_autonomous_cost,"
           "mean_bound_upper,mean_bound_lower\n";
    for (const SweepPoint& p : series.points) {
        out << p.n << ',' << p.group_index << ',' << format_double(p.mean_distance) << ','
            << format_double(p.mean_robot_cost) << ','
            << format_double(p.mean_autonomous_cost) << ','
            << format_double(p.mean_bound_upper) << ','
            << format_double(p.mean_bound_lower) << '\n';
    }
    return out.str();
}

std::string trials_csv(const ExperimentSpec& spec,
                       std::span<const TrialRecord> records) {
    std::ostringstream out;
    append_spec_header(out, spec);
    out << "n,trial_index,seed,total_distance,robot_cost,autonomous_cost,"
           "bound_upper,bound_lower,valid_coverage,valid_interference\n";
    for (const TrialRecord& r : records) {
        out << r.n << ',' << r.trial_index << ',' << r.seed << ','
            << format_double(r.total_distance) << ',' << format_double(r.robot_cost) << ','
            << format_double(r.autonomous_cost) << ',' << format_double(r.bound_upper) << ','
            << format_double(r.bound_lower) << ',' << (r.valid_coverage ? 1 : 0) << ','
            << (r.valid_interference ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string sweep_json(const ExperimentSpec& spec, const SweepSeries& series) {
    nlohmann::json doc;
    doc["spec"] = spec_json(spec);
    if (series.fit) {
        doc["fit"] = {{"exponent", series.fit->exponent},
                      {"constant", series.fit->constant}};
    } else {
        doc["fit"] = nullptr;
    }
    doc["points"] = nlohmann::json::array();
    for (const SweepPoint& p : series.points) {
        doc["points"].push_back({{"n", p.n},
                                 {"group_index", p.group_index},
                                 {"mean_distance", p.mean_distance},
                                 {"mean_robot_cost", p.mean_robot_cost},
                                 {"mean_autonomous_cost", p.mean_autonomous_cost},
                                 {"mean_bound_upper", p.mean_bound_upper},
                                 {"mean_bound_lower", p.mean_bound_lower}});
    }
    return doc.dump(2) + "\n";
}

std::string trials_json(const ExperimentSpec& spec,
                        std::span<const TrialRecord> records) {
    nlohmann::json doc;
    doc["spec"] = spec_json(spec);
    doc["trials"] = nlohmann::json::array();
    for (const TrialRecord& r : records) {
        doc["trials"].push_back({{"n", r.n},
                                 {"trial_index", r.trial_index},
                                 {"seed", r.seed},
                                 {"total_distance", r.total_distance},
                                 {"robot_cost", r.robot_cost},
                                 {"autonomous_cost", r.autonomous_cost},
                                 {"bound_upper", r.bound_upper},
                                 {"bound_lower", r.bound_lower},
                                 {"valid_coverage", r.valid_coverage},
                                 {"valid_interference", r.valid_interference}});
    }
    return doc.dump(2) + "\n";
}

std::string trajectory_jsonl(const Trajectory& trajectory) {
    std::ostringstream out;
    for (const TrajectoryLeg& leg : trajectory.legs) {
        nlohmann::json j = {{"from", leg.from}, {"to", leg.to}, {"carried", leg.carried}};
        out << j.dump() << '\n';
    }
    nlohmann::json summary = {{"total_distance", trajectory.total_distance},
                              {"end_position", trajectory.end_position},
                              {"legs", trajectory.legs.size()}};
    out << summary.dump() << '\n';
    return out.str();
}

namespace {

const char* phase_name(PlanePhase phase) {
    switch (phase) {
        case PlanePhase::rows: return "phase1";
        case PlanePhase::origin_return: return "return";
        case PlanePhase::columns: return "phase2";
    }
    return "?";
}

}  // namespace

std::string trajectory_jsonl(const PlaneTrajectory& trajectory) {
    std::ostringstream out;
    for (const PlaneLeg& leg : trajectory.legs) {
        nlohmann::json j = {{"from", {leg.x0, leg.y0}},
                            {"to", {leg.x1, leg.y1}},
                            {"phase", phase_name(leg.phase)}};
        out << j.dump() << '\n';
    }
    nlohmann::json summary = {{"total_distance", trajectory.total_distance},
                              {"phase1", trajectory.phase1},
                              {"return_leg", trajectory.return_leg},
                              {"phase2", trajectory.phase2},
                              {"legs", trajectory.legs.size()}};
    out << summary.dump() << '\n';
    return out.str();
}

namespace {

struct AxisScale {
    double lo, hi;
    bool log;
    double pixel_lo, pixel_hi;

    double place(double v) const {
        const double a = log ? std::log10(v) : v;
        const double l = log ? std::log10(lo) : lo;
        const double h = log ? std::log10(hi) : hi;
        const double t = h > l ? (a - l) / (h - l) : 0.5;
        return pixel_lo + t * (pixel_hi - pixel_lo);
    }
};

std::string svg_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string sweep_svg(const ExperimentSpec& spec, const SweepSeries& series,
                      const ReferenceCurve* reference, const SvgOptions& options) {
    const int w = options.width, h = options.height;
    const double margin_left = 70, margin_right = 25, margin_top = 45, margin_bottom = 55;

    double x_lo = 1e300, x_hi = -1e300, y_lo = 1e300, y_hi = -1e300;
    for (const SweepPoint& p : series.points) {
        x_lo = std::min(x_lo, static_cast<double>(p.n));
        x_hi = std::max(x_hi, static_cast<double>(p.n));
        y_lo = std::min(y_lo, p.mean_robot_cost);
        y_hi = std::max(y_hi, p.mean_robot_cost);
    }
    if (series.points.empty()) { x_lo = y_lo = 1; x_hi = y_hi = 10; }
    if (reference && reference->has_closed_form()) {
        for (const SweepPoint& p : series.points) {
            const double v = reference->closed_form(static_cast<double>(p.n));
            y_lo = std::min(y_lo, v);
            y_hi = std::max(y_hi, v);
        }
    }
    if (!options.log_log) y_lo = std::min(y_lo, 0.0);
    if (y_hi <= y_lo) y_hi = y_lo + 1.0;
    if (x_hi <= x_lo) x_hi = x_lo + 1.0;

    const AxisScale xs{x_lo, x_hi, options.log_log, margin_left, w - margin_right};
    const AxisScale ys{y_lo, y_hi, options.log_log, h - margin_bottom, margin_top};

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    const std::string description = describe_spec(spec);
    char hash_hex[32];
    std::snprintf(hash_hex, sizeof(hash_hex), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(description)));
    out << "<!-- relosim config hash " << hash_hex << " -->\n";
    out << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" "
           "font-family=\"sans-serif\">"
        << svg_escape(options.title) << "</text>\n";

    // axes
    out << "<line x1=\"" << margin_left << "\" y1=\"" << h - margin_bottom << "\" x2=\""
        << w - margin_right << "\" y2=\"" << h - margin_bottom
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << margin_left << "\" y1=\"" << margin_top << "\" x2=\""
        << margin_left << "\" y2=\"" << h - margin_bottom << "\" stroke=\"black\"/>\n";

    // ticks: one per distinct n, five on y
    std::vector<double> n_ticks;
    for (const SweepPoint& p : series.points)
        if (n_ticks.empty() || n_ticks.back() != static_cast<double>(p.n))
            n_ticks.push_back(static_cast<double>(p.n));
    for (double n : n_ticks) {
        const double px = xs.place(n);
        out << "<line x1=\"" << px << "\" y1=\"" << h - margin_bottom << "\" x2=\"" << px
            << "\" y2=\"" << h - margin_bottom + 5 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << px << "\" y=\"" << h - margin_bottom + 20
            << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">"
            << format_double(n) << "</text>\n";
    }
    for (int i = 0; i <= 4; ++i) {
        const double v = options.log_log
                             ? std::pow(10.0, std::log10(y_lo) +
                                                  i * (std::log10(y_hi) - std::log10(y_lo)) / 4)
                             : y_lo + i * (y_hi - y_lo) / 4;
        const double py = ys.place(v);
        out << "<line x1=\"" << margin_left - 5 << "\" y1=\"" << py << "\" x2=\""
            << margin_left << "\" y2=\"" << py << "\" stroke=\"black\"/>\n";
        char label[32];
        std::snprintf(label, sizeof(label), "%.4g", v);
        out << "<text x=\"" << margin_left - 8 << "\" y=\"" << py + 4
            << "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\">" << label
            << "</text>\n";
    }
    out << "<text x=\"" << (margin_left + w - margin_right) / 2 << "\" y=\"" << h - 10
        << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">"
        << svg_escape(options.x_label) << "</text>\n";
    out << "<text x=\"18\" y=\"" << (margin_top + h - margin_bottom) / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" "
           "transform=\"rotate(-90 18 "
        << (margin_top + h - margin_bottom) / 2 << ")\">" << svg_escape(options.y_label)
        << "</text>\n";

    // reference overlay sampled between the extreme n values
    if (reference && reference->has_closed_form() && !series.points.empty()) {
        out << "<polyline fill=\"none\" stroke=\"#c22\" stroke-width=\"1.5\" points=\"";
        const int samples = 128;
        for (int i = 0; i <= samples; ++i) {
            const double n = options.log_log
                                 ? std::pow(10.0, std::log10(x_lo) +
                                                      i * (std::log10(x_hi) - std::log10(x_lo)) /
                                                          samples)
                                 : x_lo + i * (x_hi - x_lo) / samples;
            out << xs.place(n) << ',' << ys.place(reference->closed_form(n)) << ' ';
        }
        out << "\"/>\n";
    }

    for (const SweepPoint& p : series.points) {
        out << "<circle cx=\"" << xs.place(static_cast<double>(p.n)) << "\" cy=\""
            << ys.place(p.mean_robot_cost) << "\" r=\"3\" fill=\"black\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace relosim
