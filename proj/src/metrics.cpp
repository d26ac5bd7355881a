#include "manet/metrics.hpp"

#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

namespace manet {

double energy_variance(std::span<const NodeState> nodes) {
    if (nodes.empty()) throw std::invalid_argument("energy_variance of an empty node set");
    double mean = 0.0;
    for (const NodeState& n : nodes) mean += n.battery;
    mean /= static_cast<double>(nodes.size());
    double acc = 0.0;
    for (const NodeState& n : nodes) {
        const double d = n.battery - mean;
        acc += d * d;
    }
    return acc / static_cast<double>(nodes.size());
}

int reaffiliation_count(const std::vector<ClusterView>& prev,
                        const std::vector<ClusterView>& next) {
    std::map<NodeId, NodeId> head_of;
    for (const ClusterView& c : prev) {
        for (NodeId m : c.members) head_of.emplace(m, c.head);
    }
    int count = 0;
    for (const ClusterView& c : next) {
        for (NodeId m : c.members) {
            auto it = head_of.find(m);
            if (it != head_of.end() && it->second != c.head) ++count;
        }
    }
    return count;
}

namespace {

const char* kCountingNote =
    "one ledger increment per transmission, broadcast or unicast, independent of receiver count";
const char* kReclusterNote =
    "ID reassignment re-clusters immediately from the current tick's snapshot";
const char* kThtNote =
    "topology-history rows are relabeled through each applied ID permutation";

nlohmann::json series_to_json(const MetricsSeries& s) {
    return nlohmann::json{
        {"tick", s.tick},
        {"msgs_hello", s.msgs_hello},
        {"msgs_weight", s.msgs_weight},
        {"msgs_newid", s.msgs_newid},
        {"msgs_hpadapt", s.msgs_hpadapt},
        {"energy_var", s.energy_var},
        {"n_clusters", s.n_clusters},
        {"reaffiliations", s.reaffiliations},
        {"mean_hp", s.mean_hp},
    };
}

}  // namespace

nlohmann::json report_to_json(const MetricsReport& r) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const NodeOutcome& n : r.nodes) {
        nlohmann::json entry{
            {"slot", n.slot},
            {"initial_id", n.initial_id},
            {"final_id", n.final_id},
            {"ch_tenure", n.ch_tenure},
        };
        if (n.death_tick >= 0) {
            entry["death_tick"] = n.death_tick;
        } else {
            entry["death_tick"] = nullptr;
        }
        nodes.push_back(std::move(entry));
    }

    return nlohmann::json{
        {"config", config_to_json(r.config)},
        {"metadata",
         {{"message_counting", kCountingNote},
          {"lidar_recluster", kReclusterNote},
          {"tht_relabel", kThtNote},
          {"tick_unit", "1 tick = 1 second; speeds in m/s equal m/tick"}}},
        {"series", series_to_json(r.series)},
        {"totals",
         {{"messages",
           {{"hello", r.total_messages[0]},
            {"weight_report", r.total_messages[1]},
            {"new_id_assign", r.total_messages[2]},
            {"hp_adapt", r.total_messages[3]},
            {"total", r.total_message_count}}},
          {"final_energy_variance", r.final_energy_variance},
          {"reaffiliations", r.total_reaffiliations},
          {"lidar_rounds", r.lidar_rounds}}},
        {"nodes", nodes},
    };
}

void write_report_csv(const MetricsReport& r, std::ostream& out) {
    out << "tick,msgs_hello,msgs_weight,msgs_newid,msgs_hpadapt,energy_var,n_clusters,"
           "reaffiliations,mean_hp\n";
    char buf[64];
    for (std::size_t i = 0; i < r.series.size(); ++i) {
        out << r.series.tick[i] << ',' << r.series.msgs_hello[i] << ',' << r.series.msgs_weight[i]
            << ',' << r.series.msgs_newid[i] << ',' << r.series.msgs_hpadapt[i] << ',';
        std::snprintf(buf, sizeof(buf), "%.10g", r.series.energy_var[i]);
        out << buf << ',' << r.series.n_clusters[i] << ',' << r.series.reaffiliations[i] << ',';
        std::snprintf(buf, sizeof(buf), "%.10g", r.series.mean_hp[i]);
        out << buf << '\n';
    }
}

}  // namespace manet
