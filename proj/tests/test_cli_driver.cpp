#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "manet/cli_driver.hpp"

using namespace manet;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream body;
    body << in.rdbuf();
    return body.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

CliOverrides small_run() {
    CliOverrides ov;
    ov.algorithm = "lidar";
    ov.nodes = 12;
    ov.duration = 40;
    ov.seed = 7;
    return ov;
}

}  // namespace

TEST_CASE("cmd_run writes the report pair and prints aggregates") {
    const fs::path dir = fresh_dir("manet_cli_run");
    std::ostringstream log, err;
    const int rc = cmd_run("", small_run(), dir.string(), 1, log, err);
    CHECK(rc == kExitOk);
    CHECK(err.str().empty());
    CHECK(fs::exists(dir / "run_7.json"));
    CHECK(fs::exists(dir / "run_7.csv"));
    CHECK(log.str().find("algorithm=LIDAR seed=7 ticks=40") != std::string::npos);
    CHECK(log.str().find("total_messages=") != std::string::npos);
}

TEST_CASE("cmd_run is reproducible byte for byte") {
    const fs::path a = fresh_dir("manet_cli_rep_a");
    const fs::path b = fresh_dir("manet_cli_rep_b");
    std::ostringstream log, err;
    REQUIRE(cmd_run("", small_run(), a.string(), 1, log, err) == kExitOk);
    REQUIRE(cmd_run("", small_run(), b.string(), 1, log, err) == kExitOk);
    CHECK(slurp(a / "run_7.json") == slurp(b / "run_7.json"));
    CHECK(slurp(a / "run_7.csv") == slurp(b / "run_7.csv"));
}

TEST_CASE("validation failures name the field and use the invalid exit code") {
    const fs::path dir = fresh_dir("manet_cli_bad");
    const fs::path cfg = fs::temp_directory_path() / "manet_cli_bad.json";
    std::ofstream(cfg) << R"({"w1": 0.5, "w2": 0.3})";
    std::ostringstream log, err;
    CHECK(cmd_run(cfg.string(), {}, dir.string(), 1, log, err) == kExitInvalid);
    CHECK(err.str().find("[w1]") != std::string::npos);
}

TEST_CASE("unknown algorithm override is rejected before running") {
    const fs::path dir = fresh_dir("manet_cli_alg");
    CliOverrides ov;
    ov.algorithm = "dsdv";
    std::ostringstream log, err;
    CHECK(cmd_run("", ov, dir.string(), 1, log, err) == kExitInvalid);
    CHECK(err.str().find("[algorithm]") != std::string::npos);
}

TEST_CASE("unreadable or malformed config files use the I/O exit code") {
    const fs::path dir = fresh_dir("manet_cli_io");
    std::ostringstream log, err;
    CHECK(cmd_run("/nonexistent/nope.json", {}, dir.string(), 1, log, err) == kExitIo);

    const fs::path cfg = fs::temp_directory_path() / "manet_cli_mangled.json";
    std::ofstream(cfg) << "{ not json";
    std::ostringstream log2, err2;
    CHECK(cmd_run(cfg.string(), {}, dir.string(), 1, log2, err2) == kExitIo);
    CHECK_FALSE(err2.str().empty());
}

TEST_CASE("cmd_sweep emits one aggregate row per algorithm-speed cell") {
    const fs::path dir = fresh_dir("manet_cli_sweep");
    CliOverrides ov;
    ov.nodes = 12;
    ov.duration = 40;
    ov.seed = 3;
    SweepSpec sweep;
    sweep.algorithms = {"lid", "hd"};
    sweep.speeds = {1.0, 5.0};
    sweep.n_seeds = 2;
    std::ostringstream log, err;
    REQUIRE(cmd_sweep("", ov, sweep, dir.string(), 2, log, err) == kExitOk);

    const auto rows = lines_of(slurp(dir / "sweep.csv"));
    REQUIRE(rows.size() == 5);  // header + 2 algorithms x 2 speeds
    CHECK(rows[0] == "algorithm,speed_max,mean_total_messages,mean_final_energy_variance");

    // hello-only algorithms on the same fixed HP grid move the same traffic
    std::map<std::string, std::string> msgs_by_cell;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::istringstream row(rows[i]);
        std::string alg, speed, msgs;
        std::getline(row, alg, ',');
        std::getline(row, speed, ',');
        std::getline(row, msgs, ',');
        msgs_by_cell[alg + "@" + speed] = msgs;
    }
    CHECK(msgs_by_cell.at("LID@1") == msgs_by_cell.at("HD@1"));
    CHECK(msgs_by_cell.at("LID@5") == msgs_by_cell.at("HD@5"));
}

TEST_CASE("cmd_sweep rejects an unknown algorithm in the grid") {
    const fs::path dir = fresh_dir("manet_cli_sweep_bad");
    SweepSpec sweep;
    sweep.algorithms = {"lid", "aodv"};
    std::ostringstream log, err;
    CHECK(cmd_sweep("", {}, sweep, dir.string(), 1, log, err) == kExitInvalid);
    CHECK(err.str().find("[algorithm]") != std::string::npos);
}
