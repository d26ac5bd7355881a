#include "manet/energy.hpp"

#include <algorithm>

namespace manet {

std::vector<int> step_energy(std::span<NodeState> nodes, const std::vector<ClusterView>& clusters,
                             const EnergyParams& params, double dt, const ExecPolicy& policy) {
    const long n = static_cast<long>(nodes.size());

    // Member count per slot, nonzero only for heads.
    std::vector<int> member_count(nodes.size(), 0);
    for (const ClusterView& c : clusters) {
        for (long i = 0; i < n; ++i) {
            if (nodes[i].id == c.head) {
                member_count[i] = static_cast<int>(c.members.size());
                break;
            }
        }
    }

    std::vector<char> was_alive(nodes.size());
    for (long i = 0; i < n; ++i) was_alive[i] = nodes[i].alive();

    auto drain = [&](long i) {
        NodeState& node = nodes[i];
        if (!node.alive()) return;
        const double rate = node.role == Role::ClusterHead
                                ? params.e_ch_base + params.e_ch_per_member * member_count[i]
                                : params.e_ord;
        node.battery = std::max(0.0, node.battery - rate * dt);
    };

    if (policy.parallel()) {
#pragma omp parallel for num_threads(policy.threads) schedule(static)
        for (long i = 0; i < n; ++i) drain(i);
    } else {
        for (long i = 0; i < n; ++i) drain(i);
    }

    std::vector<int> died;
    for (long i = 0; i < n; ++i) {
        if (was_alive[i] && !nodes[i].alive()) died.push_back(static_cast<int>(i));
    }
    return died;
}

}  // namespace manet
