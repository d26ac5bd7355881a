#pragma once

#include <map>
#include <vector>

#include "manet/cluster.hpp"
#include "manet/config.hpp"
#include "manet/node.hpp"
#include "manet/radio.hpp"

namespace manet {

struct WeightEntry {
    NodeId node;
    double w = 0.0;         // w1 * battery - w2 * mobility
    double battery = 0.0;
    double mobility = 0.0;
};

// Bijection over one cluster's closed member set (head + members).
using IdAssignment = std::map<NodeId, NodeId>;

// Lowest-ID election. Pass 1: a node whose ID is below every neighbor's
// becomes CH. Uncovered nodes then self-elect in ascending ID order, each
// re-checking against CHs elected so far, which keeps the CH set
// independent (no two CHs in range of each other). Non-CH nodes affiliate
// with the lowest-ID audible CH; nodes hearing two or more CHs are gateways.
std::vector<ClusterView> lid_elect(const NeighborMap& snapshot);

// Highest-degree election: CH iff strictly max degree in the closed
// neighborhood, ties to the lower ID. Affiliation prefers the
// highest-degree audible CH, ties to the lower ID.
std::vector<ClusterView> hd_elect(const NeighborMap& snapshot);

// |a symmetric-difference b| for sorted ID vectors.
std::size_t tht_distance(const std::vector<NodeId>& a, const std::vector<NodeId>& b);

// Mean tht_distance over the min(p, rows-1) most recent consecutive row
// pairs; 0 with fewer than two rows (cold start).
double mobility_rate(const TopologyHistory& tht, int p);

inline double compute_weight(double battery, double mobility, double w1, double w2) {
    return w1 * battery - w2 * mobility;
}

// Permutes the cluster's own current IDs: nodes sorted by weight descending
// (ties to the smaller current ID) receive the pool's IDs in ascending
// order, so the heaviest node gets the pool minimum. `weights` must cover
// exactly head + members, else std::invalid_argument.
IdAssignment reassign_ids(const ClusterView& cluster, const std::vector<WeightEntry>& weights);

// Linear map from mean cluster mobility to a Hello period:
// hp_max at M_c = 0, hp_min at M_c >= m_sat, rounded to the nearest tick.
int adapt_hp(double mean_cluster_mobility, int hp_min, int hp_max, double m_sat);

struct WcaInputs {
    std::map<NodeId, double> speed;         // m/s
    std::map<NodeId, double> serving_time;  // ticks as CH since last elected, 0 if not CH
};

double wca_index(double degree, double serving_time, double speed, const WcaParams& params);

// Simplified combined-metrics election: CH iff strictly minimal index
// I_v = c1*|deg - ideal| + c2*serving + c3*speed in the closed neighborhood
// (ties to the lower ID); affiliation to the audible CH with the lowest
// index. The caller decides when to invoke it (only when some node hears
// no CH).
std::vector<ClusterView> wca_lite_elect(const NeighborMap& snapshot, const WcaInputs& inputs,
                                        const WcaParams& params);

}  // namespace manet
