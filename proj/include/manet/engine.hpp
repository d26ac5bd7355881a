#pragma once

#include <functional>
#include <span>

#include "manet/config.hpp"
#include "manet/exec.hpp"
#include "manet/metrics.hpp"

namespace manet {

// Test hook: called after each tick's pipeline with the tick number,
// node states, and current cluster views.
using TickObserver =
    std::function<void(long, std::span<const NodeState>, const std::vector<ClusterView>&)>;

// Deterministic tick loop: mobility -> energy -> Hello/THT at each node's
// HP boundary -> maintenance election -> LIDAR weight rounds at each
// cluster's P_LIDAR boundary -> metrics snapshot. A given config (seed
// included) always produces the same report, bit for bit, for any thread
// count. Throws std::invalid_argument if the config does not validate.
MetricsReport run(const SimConfig& cfg, const ExecPolicy& policy = {},
                  const TickObserver& observer = {});

}  // namespace manet
