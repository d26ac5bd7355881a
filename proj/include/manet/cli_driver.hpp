#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace manet {

// Field overrides applied on top of the config file (flag > file > default).
struct CliOverrides {
    std::optional<std::string> algorithm;
    std::optional<int> nodes;
    std::optional<double> speed_max;
    std::optional<std::uint64_t> seed;
    std::optional<long> duration;
};

// algorithm list x speed_max list, each point replicated over `n_seeds`
// consecutive seeds starting at the base seed.
struct SweepSpec {
    std::vector<std::string> algorithms{"lid", "hd", "wca", "lidar"};
    std::vector<double> speeds{1.0, 5.0, 10.0, 15.0};
    int n_seeds = 5;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;  // config or override fails validation
inline constexpr int kExitIo = 2;       // unreadable config, unwritable out dir

// Single run: writes <out>/run_<seed>.json and .csv, prints aggregates.
int cmd_run(const std::string& config_path, const CliOverrides& overrides,
            const std::string& out_dir, int threads, std::ostream& log, std::ostream& err);

// Full cross product; writes <out>/sweep.csv with one aggregate row per
// (algorithm, speed) cell, pointwise mean over seeds. With threads > 1 the
// independent runs execute concurrently; each run itself stays serial.
int cmd_sweep(const std::string& config_path, const CliOverrides& overrides,
              const SweepSpec& sweep, const std::string& out_dir, int threads, std::ostream& log,
              std::ostream& err);

}  // namespace manet
