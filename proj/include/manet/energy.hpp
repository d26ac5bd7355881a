#pragma once

#include <span>
#include <vector>

#include "manet/cluster.hpp"
#include "manet/config.hpp"
#include "manet/exec.hpp"
#include "manet/node.hpp"

namespace manet {

// Role-dependent linear drain: Ordinary/Gateway lose e_ord*dt, a CH with m
// members loses (e_ch_base + e_ch_per_member*m)*dt. Batteries floor at 0.
// Returns the slots that died this step (battery reached 0), ascending;
// cluster cleanup is the caller's job.
std::vector<int> step_energy(std::span<NodeState> nodes, const std::vector<ClusterView>& clusters,
                             const EnergyParams& params, double dt,
                             const ExecPolicy& policy = {});

}  // namespace manet
