#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "json.hpp"

#include "manet/cluster.hpp"
#include "manet/config.hpp"
#include "manet/node.hpp"
#include "manet/radio.hpp"

namespace manet {

// Columnar per-tick series; one entry per recorded snapshot. Message
// columns are counts since the previous snapshot, so each column sums to
// its final total.
struct MetricsSeries {
    std::vector<long> tick;
    std::vector<std::uint64_t> msgs_hello;
    std::vector<std::uint64_t> msgs_weight;
    std::vector<std::uint64_t> msgs_newid;
    std::vector<std::uint64_t> msgs_hpadapt;
    std::vector<double> energy_var;
    std::vector<int> n_clusters;
    std::vector<int> reaffiliations;
    std::vector<double> mean_hp;

    std::size_t size() const { return tick.size(); }
};

// Per physical node (stable slot), since IDs move under LIDAR.
struct NodeOutcome {
    int slot = 0;
    std::uint32_t initial_id = 0;
    std::uint32_t final_id = 0;
    long ch_tenure = 0;   // ticks spent as CH
    long death_tick = -1; // -1 = alive at end
};

struct MetricsReport {
    SimConfig config;
    MetricsSeries series;
    std::array<std::uint64_t, kMessageKindCount> total_messages{};
    std::uint64_t total_message_count = 0;
    double final_energy_variance = 0.0;
    long total_reaffiliations = 0;
    long lidar_rounds = 0;  // per-cluster reassignment rounds executed
    std::vector<NodeOutcome> nodes;
};

// Population variance of battery over every initially present node (dead
// nodes count at 0). Throws std::invalid_argument on an empty set.
double energy_variance(std::span<const NodeState> nodes);

// Nodes listed as members in both snapshots whose head changed. Role
// changes (member -> CH or back) do not count.
int reaffiliation_count(const std::vector<ClusterView>& prev,
                        const std::vector<ClusterView>& next);

nlohmann::json report_to_json(const MetricsReport& report);
void write_report_csv(const MetricsReport& report, std::ostream& out);

}  // namespace manet
