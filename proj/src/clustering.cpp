#include "manet/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace manet {

namespace {

// Shared election tail: sequential self-election of uncovered nodes in
// ascending ID order (each re-checks against CHs elected so far), then
// affiliation of every non-CH node to its preferred audible CH, then
// gateway marking for nodes hearing two or more CHs.
std::vector<ClusterView> assemble(const NeighborMap& snapshot, std::set<NodeId> chs,
                                  const std::function<bool(NodeId, NodeId)>& prefer) {
    for (const auto& [v, nb] : snapshot) {
        if (chs.count(v)) continue;
        const bool covered = std::any_of(nb.begin(), nb.end(),
                                         [&](NodeId u) { return chs.count(u) != 0; });
        if (!covered) chs.insert(v);
    }

    std::map<NodeId, ClusterView> by_head;
    for (NodeId h : chs) by_head.emplace(h, ClusterView{h, {}, {}});

    for (const auto& [v, nb] : snapshot) {
        if (chs.count(v)) continue;
        std::vector<NodeId> audible;
        for (NodeId u : nb) {
            if (chs.count(u)) audible.push_back(u);
        }
        NodeId best = audible.front();
        for (NodeId u : audible) {
            if (prefer(u, best)) best = u;
        }
        ClusterView& cv = by_head.at(best);
        cv.members.push_back(v);
        if (audible.size() >= 2) cv.gateways.push_back(v);
    }

    std::vector<ClusterView> views;
    views.reserve(by_head.size());
    for (auto& [h, cv] : by_head) views.push_back(std::move(cv));
    return views;  // members/gateways already ascending (snapshot iterates in ID order)
}

}  // namespace

std::vector<ClusterView> lid_elect(const NeighborMap& snapshot) {
    std::set<NodeId> chs;
    for (const auto& [v, nb] : snapshot) {
        if (nb.empty() || v < nb.front()) chs.insert(v);  // nb sorted: front is the minimum
    }
    return assemble(snapshot, std::move(chs), [](NodeId a, NodeId b) { return a < b; });
}

std::vector<ClusterView> hd_elect(const NeighborMap& snapshot) {
    auto deg = [&](NodeId v) { return snapshot.at(v).size(); };
    std::set<NodeId> chs;
    for (const auto& [v, nb] : snapshot) {
        const std::size_t dv = nb.size();
        const bool wins = std::all_of(nb.begin(), nb.end(), [&](NodeId u) {
            const std::size_t du = deg(u);
            return dv > du || (dv == du && v < u);
        });
        if (wins) chs.insert(v);
    }
    return assemble(snapshot, std::move(chs), [&](NodeId a, NodeId b) {
        const std::size_t da = deg(a), db = deg(b);
        return da > db || (da == db && a < b);
    });
}

std::size_t tht_distance(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
    std::size_t count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++count;
            ++ia;
        } else if (*ib < *ia) {
            ++count;
            ++ib;
        } else {
            ++ia;
            ++ib;
        }
    }
    count += static_cast<std::size_t>(a.end() - ia);
    count += static_cast<std::size_t>(b.end() - ib);
    return count;
}

double mobility_rate(const TopologyHistory& tht, int p) {
    const auto& rows = tht.rows();
    if (rows.size() < 2) return 0.0;  // cold start: no evidence yet
    const std::size_t pairs = std::min<std::size_t>(static_cast<std::size_t>(p), rows.size() - 1);
    std::size_t sum = 0;
    for (std::size_t i = 0; i < pairs; ++i) sum += tht_distance(rows[i], rows[i + 1]);
    return static_cast<double>(sum) / static_cast<double>(pairs);
}

IdAssignment reassign_ids(const ClusterView& cluster, const std::vector<WeightEntry>& weights) {
    std::vector<NodeId> pool;
    pool.push_back(cluster.head);
    pool.insert(pool.end(), cluster.members.begin(), cluster.members.end());
    std::sort(pool.begin(), pool.end());

    std::vector<NodeId> covered;
    covered.reserve(weights.size());
    for (const WeightEntry& w : weights) covered.push_back(w.node);
    std::sort(covered.begin(), covered.end());
    if (covered != pool) {
        std::ostringstream os;
        os << "weight entries do not match the cluster's closed member set (head "
           << cluster.head.value << ": " << weights.size() << " entries for "
           << pool.size() << " nodes)";
        throw std::invalid_argument(os.str());
    }

    std::vector<WeightEntry> order = weights;
    std::sort(order.begin(), order.end(), [](const WeightEntry& a, const WeightEntry& b) {
        if (a.w != b.w) return a.w > b.w;
        return a.node < b.node;
    });

    IdAssignment assignment;
    for (std::size_t i = 0; i < order.size(); ++i) assignment[order[i].node] = pool[i];
    return assignment;
}

int adapt_hp(double mean_cluster_mobility, int hp_min, int hp_max, double m_sat) {
    const double m = std::max(mean_cluster_mobility, 0.0);
    const double frac = std::min(m / m_sat, 1.0);
    const double hp = hp_max - (hp_max - hp_min) * frac;
    const int rounded = static_cast<int>(std::llround(hp));
    return std::clamp(rounded, hp_min, hp_max);
}

double wca_index(double degree, double serving_time, double speed, const WcaParams& params) {
    return params.c1 * std::abs(degree - params.ideal_degree) + params.c2 * serving_time +
           params.c3 * speed;
}

std::vector<ClusterView> wca_lite_elect(const NeighborMap& snapshot, const WcaInputs& inputs,
                                        const WcaParams& params) {
    std::map<NodeId, double> index;
    for (const auto& [v, nb] : snapshot) {
        index[v] = wca_index(static_cast<double>(nb.size()), inputs.serving_time.at(v),
                             inputs.speed.at(v), params);
    }
    std::set<NodeId> chs;
    for (const auto& [v, nb] : snapshot) {
        const double iv = index.at(v);
        const bool wins = std::all_of(nb.begin(), nb.end(), [&](NodeId u) {
            const double iu = index.at(u);
            return iv < iu || (iv == iu && v < u);
        });
        if (wins) chs.insert(v);
    }
    return assemble(snapshot, std::move(chs), [&](NodeId a, NodeId b) {
        const double ia = index.at(a), ib = index.at(b);
        return ia < ib || (ia == ib && a < b);
    });
}

}  // namespace manet
