#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const std::string kCli = RELOSIM_CLI_PATH;

int run(const std::string& args) {
    const int status = std::system((kCli + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// unique scratch directory per test case, removed on exit
struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("relosim_cli_" + tag);
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string str() const { return path.string(); }
};

int jsonl_lines(const fs::path& file) {
    std::ifstream in(file);
    REQUIRE(in.good());
    int lines = 0;
    for (std::string line; std::getline(in, line);) {
        REQUIRE_NOTHROW(nlohmann::json::parse(line));
        ++lines;
    }
    return lines;
}

}  // namespace

TEST_CASE("sweep output is byte-identical across runs") {
    TempDir a("sweep_a"), b("sweep_b");
    const std::string args =
        "sweep --n 16,64 --trials 10 --group-size 5 --seed 7 --formats csv,json,svg --out ";
    REQUIRE(run(args + a.str()) == 0);
    REQUIRE(run(args + b.str()) == 0);
    CHECK(slurp(a.path / "sweep.csv") == slurp(b.path / "sweep.csv"));
    CHECK(slurp(a.path / "sweep.json") == slurp(b.path / "sweep.json"));
    CHECK(slurp(a.path / "sweep.svg") == slurp(b.path / "sweep.svg"));
    CHECK(slurp(a.path / "sweep.csv").find("# master_seed=7") != std::string::npos);
}

TEST_CASE("single-n runs write trial records") {
    TempDir dir("line_run");
    REQUIRE(run("line-run --n 20 --trials 6 --group-size 3 --seed 3 --formats csv,json --out " +
                dir.str()) == 0);
    const std::string csv = slurp(dir.path / "line_trials.csv");
    CHECK(csv.find("n,trial_index,seed,total_distance") != std::string::npos);
    int rows = 0;
    std::istringstream in(csv);
    for (std::string line; std::getline(in, line);)
        if (!line.empty() && line[0] != '#' && line[0] != 'n') ++rows;
    CHECK(rows == 6);
    const auto doc = nlohmann::json::parse(slurp(dir.path / "line_trials.json"));
    CHECK(doc["trials"].size() == 6);
    CHECK(doc["trials"][0]["valid_coverage"] == true);

    TempDir plane_dir("plane_run");
    REQUIRE(run("plane-run --n 16 --trials 4 --group-size 2 --rate-rule sqrt --stretch 1.2 "
                "--out " + plane_dir.str()) == 0);
    CHECK(fs::exists(plane_dir.path / "plane_trials.csv"));
}

TEST_CASE("figure preset writes chart artifacts") {
    TempDir dir("figure");
    REQUIRE(run("figure fig3 --out " + dir.str()) == 0);
    CHECK(fs::exists(dir.path / "fig3.csv"));
    const std::string svg = slurp(dir.path / "fig3.svg");
    CHECK(svg.find("<polyline") != std::string::npos);  // reference overlay
    CHECK(svg.find("relosim config hash") != std::string::npos);
    const std::string csv = slurp(dir.path / "fig3.csv");
    CHECK(csv.find("# trials=100") != std::string::npos);
    CHECK(csv.find("# k_rule=1") != std::string::npos);
}

TEST_CASE("verify-bounds passes clean and trips on an injected fault") {
    CHECK(run("verify-bounds --gp-instances 2000 --line-instances 300 "
              "--plane-instances 50") == 0);
    CHECK(run("verify-bounds --gp-instances 2000 --line-instances 300 "
              "--plane-instances 50 --bound-scale 0.9") != 0);
}

TEST_CASE("trace dumps trajectories as JSON lines") {
    TempDir dir("trace");
    REQUIRE(run("trace --n 8 --k 3 --seed 5 --out " + dir.str()) == 0);
    for (int j = 0; j < 3; ++j) {
        const fs::path file = dir.path / ("trace_line_j" + std::to_string(j) + ".jsonl");
        REQUIRE(fs::exists(file));
        CHECK(jsonl_lines(file) > 1);
    }
    REQUIRE(run("trace --geometry plane --n 9 --k 1 --rate-rule sqrt --seed 5 --out " +
                dir.str()) == 0);
    const fs::path plane_file = dir.path / "trace_plane_0_0.jsonl";
    REQUIRE(fs::exists(plane_file));
    CHECK(jsonl_lines(plane_file) > 1);
    const std::string dump = slurp(plane_file);
    CHECK(dump.find("\"phase\":\"phase1\"") != std::string::npos);
}

TEST_CASE("bad arguments exit nonzero with a diagnostic") {
    CHECK(run("line-run --n 50 --rate-rule bogus") != 0);
    CHECK(run("line-run --n 10,20") != 0);  // single-n subcommand
    CHECK(run("figure fig42") != 0);
    CHECK(run("plane-run --n 50") != 0);  // not a perfect square
}

TEST_CASE("config file feeds defaults and flags win") {
    TempDir dir("config");
    {
        std::ofstream cfg(dir.path / "run.cfg");
        cfg << "trials=4\ngroup-size=2\nseed=2\nn=10\n";
    }
    REQUIRE(run("line-run --config " + (dir.path / "run.cfg").string() + " --out " +
                dir.str()) == 0);
    std::string csv = slurp(dir.path / "line_trials.csv");
    CHECK(csv.find("# trials=4") != std::string::npos);

    REQUIRE(run("line-run --config " + (dir.path / "run.cfg").string() +
                " --trials 2 --out " + dir.str()) == 0);
    csv = slurp(dir.path / "line_trials.csv");
    CHECK(csv.find("# trials=2") != std::string::npos);
}
