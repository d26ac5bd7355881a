#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "manet/cli_driver.hpp"

int main(int argc, char** argv) {
    CLI::App app{"MANET clustering simulator (LID / HD / WCA-lite / LIDAR)"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    int threads = 1;
    manet::CliOverrides ov;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config file (flag > file > default)");
        cmd->add_option("--nodes", ov.nodes, "node count override");
        cmd->add_option("--seed", ov.seed, "base RNG seed override");
        cmd->add_option("--duration", ov.duration, "simulated ticks override");
        cmd->add_option("--out", out_dir, "output directory")->capture_default_str();
        cmd->add_option("--threads", threads, "worker threads")->capture_default_str();
    };

    int rc = manet::kExitOk;

    CLI::App* run = app.add_subcommand("run", "single seeded run; writes run_<seed>.json/.csv");
    add_common(run);
    run->add_option("--algorithm", ov.algorithm, "lid | hd | wca | lidar");
    run->add_option("--speed-max", ov.speed_max, "max node speed, m/s");
    run->callback([&] { rc = manet::cmd_run(config_path, ov, out_dir, threads, std::cout, std::cerr); });

    manet::SweepSpec sweep;
    CLI::App* sw = app.add_subcommand(
        "sweep", "algorithm x speed cross product, n seeds each; writes sweep.csv");
    add_common(sw);
    sw->add_option("--algorithm", sweep.algorithms, "algorithms to sweep (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    sw->add_option("--speed-max", sweep.speeds, "speed_max values to sweep (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    sw->add_option("--seeds", sweep.n_seeds, "replications per cell (seeds seed..seed+n-1)")
        ->capture_default_str();
    sw->callback(
        [&] { rc = manet::cmd_sweep(config_path, ov, sweep, out_dir, threads, std::cout, std::cerr); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? manet::kExitOk : manet::kExitInvalid;
    }
    return rc;
}
