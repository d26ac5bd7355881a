#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace manet {

enum class Algorithm { Lid, Hd, Wca, Lidar };

std::string algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);  // throws std::invalid_argument

struct EnergyParams {
    double e_ord = 0.05;            // units/tick, Ordinary or Gateway
    double e_ch_base = 0.05;        // units/tick, CH base
    double e_ch_per_member = 0.02;  // units/tick per attached member
};

struct WcaParams {
    double c1 = 1.0 / 3.0;     // degree deviation
    double c2 = 1.0 / 3.0;     // CH serving time
    double c3 = 1.0 / 3.0;     // speed
    double ideal_degree = -1;  // < 0: derived from node density
};

// Full experiment parameterization. One tick models one second, so speeds
// in m/s and m/tick coincide. Fields left at -1 are derived by
// finalize_defaults(): direction_hold <- hp_min, m_sat <- 2*p,
// wca.ideal_degree <- n * pi * range^2 / terrain area.
struct SimConfig {
    int n_nodes = 50;
    double terrain_width = 600.0;   // meters
    double terrain_height = 600.0;  // meters
    double range = 150.0;           // transmission radius, meters
    double speed_min = 0.0;         // m/s
    double speed_max = 15.0;        // m/s
    int direction_hold = -1;        // ticks between heading redraws
    int hp_min = 5;                 // ticks
    int hp_max = 25;                // ticks
    int k = 5;                      // reassignment period multiplier: P_LIDAR = k * HP
    int p = 3;                      // mobility-rate depth (row pairs averaged)
    double m_sat = -1;              // mobility value mapped to hp_min
    double w1 = 0.7;
    double w2 = 0.3;
    double battery_lo = 20.0;       // initial battery, uniform [lo, hi]
    double battery_hi = 100.0;
    EnergyParams energy;
    WcaParams wca;
    long duration = 180;            // ticks
    std::uint64_t seed = 1;
    Algorithm algorithm = Algorithm::Lidar;
    int snapshot_every = 1;         // metrics decimation
};

struct ConfigError {
    std::string field;
    std::string message;
};

// Fills the derived fields (-1 placeholders) in place and returns the config.
SimConfig& finalize_defaults(SimConfig& cfg);

// Empty result means the config satisfies every invariant.
std::vector<ConfigError> validate_config(const SimConfig& cfg);

// Thrown on malformed documents, wrong types, or unknown keys.
struct ConfigParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SimConfig config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const SimConfig& cfg);
SimConfig load_config_file(const std::string& path);  // ConfigParseError / std::ios errors

}  // namespace manet
