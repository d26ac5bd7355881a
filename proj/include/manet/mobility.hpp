#pragma once

#include <span>

#include "manet/exec.hpp"
#include "manet/node.hpp"
#include "manet/rng.hpp"

namespace manet {

// Random-direction model with boundary reflection. Every direction_hold
// ticks each node redraws speed ~ U[speed_min, speed_max] and heading
// ~ U[0, 2pi); draws come from the Mobility stream keyed by (slot, tick),
// so per-node updates commute and the OpenMP path matches the serial one.
struct MobilityParams {
    double speed_min = 0.0;   // m/tick
    double speed_max = 15.0;  // m/tick
    int direction_hold = 5;   // ticks
    double terrain_width = 600.0;
    double terrain_height = 600.0;
};

// Redraw for one node (used at init and on hold boundaries).
void redraw_velocity(NodeState& node, int slot, long tick, const MobilityParams& params,
                     const StreamRng& rng);

// Advance one node by vel*dt with reflection; flips the velocity component
// on each boundary contact. Dead nodes are left untouched.
void advance_node(NodeState& node, double dt, const MobilityParams& params);

void step_mobility(std::span<NodeState> nodes, const MobilityParams& params, const StreamRng& rng,
                   long tick, double dt = 1.0, const ExecPolicy& policy = {});

}  // namespace manet
