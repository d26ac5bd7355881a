#include "manet/mobility.hpp"

#include <cmath>
#include <numbers>

namespace manet {

void redraw_velocity(NodeState& node, int slot, long tick, const MobilityParams& params,
                     const StreamRng& rng) {
    const auto s = static_cast<std::uint64_t>(slot);
    const auto t = static_cast<std::uint64_t>(tick);
    const double speed = rng.uniform(params.speed_min, params.speed_max, RngStream::Mobility, s, t, 0);
    const double heading = 2.0 * std::numbers::pi * rng.unit(RngStream::Mobility, s, t, 1);
    node.vel = {speed * std::cos(heading), speed * std::sin(heading)};
}

void advance_node(NodeState& node, double dt, const MobilityParams& params) {
    if (!node.alive()) return;
    double x = node.pos.x + node.vel.x * dt;
    double y = node.pos.y + node.vel.y * dt;
    while (x < 0.0 || x > params.terrain_width) {
        x = x < 0.0 ? -x : 2.0 * params.terrain_width - x;
        node.vel.x = -node.vel.x;
    }
    while (y < 0.0 || y > params.terrain_height) {
        y = y < 0.0 ? -y : 2.0 * params.terrain_height - y;
        node.vel.y = -node.vel.y;
    }
    node.pos = {x, y};
}

namespace {

inline void step_one(NodeState& node, int slot, const MobilityParams& params, const StreamRng& rng,
                     long tick, double dt) {
    if (!node.alive()) return;
    if (tick % params.direction_hold == 0) redraw_velocity(node, slot, tick, params, rng);
    advance_node(node, dt, params);
}

}  // namespace

void step_mobility(std::span<NodeState> nodes, const MobilityParams& params, const StreamRng& rng,
                   long tick, double dt, const ExecPolicy& policy) {
    const long n = static_cast<long>(nodes.size());
    if (policy.parallel()) {
#pragma omp parallel for num_threads(policy.threads) schedule(static)
        for (long i = 0; i < n; ++i) step_one(nodes[i], static_cast<int>(i), params, rng, tick, dt);
    } else {
        for (long i = 0; i < n; ++i) step_one(nodes[i], static_cast<int>(i), params, rng, tick, dt);
    }
}

}  // namespace manet
