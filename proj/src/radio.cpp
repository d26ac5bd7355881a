#include "manet/radio.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace manet {

ControlMessage ControlMessage::hello(NodeId src) {
    return {MessageKind::Hello, src, std::nullopt, std::monostate{}};
}

ControlMessage ControlMessage::weight_report(NodeId src, NodeId dst, WeightReportPayload body) {
    return {MessageKind::WeightReport, src, dst, body};
}

ControlMessage ControlMessage::new_id_assign(NodeId src, NodeId dst, NodeId fresh) {
    return {MessageKind::NewIdAssign, src, dst, NewIdPayload{fresh}};
}

ControlMessage ControlMessage::hp_adapt(NodeId src, int hp) {
    return {MessageKind::HpAdapt, src, std::nullopt, HpAdaptPayload{hp}};
}

std::uint64_t TrafficLedger::total() const {
    return std::accumulate(totals_.begin(), totals_.end(), std::uint64_t{0});
}

std::array<std::uint64_t, kMessageKindCount> TrafficLedger::take_delta() {
    std::array<std::uint64_t, kMessageKindCount> delta{};
    for (std::size_t i = 0; i < kMessageKindCount; ++i) {
        delta[i] = totals_[i] - last_[i];
        last_[i] = totals_[i];
    }
    return delta;
}

namespace {

std::vector<NodeId> row_for(std::size_t self, std::span<const NodeState> nodes, double range) {
    std::vector<NodeId> row;
    const double r2 = range * range;
    const Vec2 at = nodes[self].pos;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (j == self || !nodes[j].alive()) continue;
        if (distance_sq(at, nodes[j].pos) <= r2) row.push_back(nodes[j].id);
    }
    std::sort(row.begin(), row.end());
    return row;
}

}  // namespace

std::vector<NodeId> neighborhood(const NodeState& node, std::span<const NodeState> all,
                                 double range) {
    assert(node.alive());
    std::vector<NodeId> row;
    const double r2 = range * range;
    for (const NodeState& other : all) {
        if (other.id == node.id || !other.alive()) continue;
        if (distance_sq(node.pos, other.pos) <= r2) row.push_back(other.id);
    }
    std::sort(row.begin(), row.end());
    return row;
}

std::vector<std::vector<NodeId>> neighbor_rows(std::span<const NodeState> nodes, double range,
                                               const ExecPolicy& policy) {
    std::vector<std::vector<NodeId>> rows(nodes.size());
    const long n = static_cast<long>(nodes.size());
    if (policy.parallel()) {
#pragma omp parallel for num_threads(policy.threads) schedule(static)
        for (long i = 0; i < n; ++i) {
            if (nodes[i].alive()) rows[i] = row_for(static_cast<std::size_t>(i), nodes, range);
        }
    } else {
        for (long i = 0; i < n; ++i) {
            if (nodes[i].alive()) rows[i] = row_for(static_cast<std::size_t>(i), nodes, range);
        }
    }
    return rows;
}

NeighborMap build_neighbor_map(std::span<const NodeState> nodes, double range,
                               const ExecPolicy& policy) {
    auto rows = neighbor_rows(nodes, range, policy);
    NeighborMap map;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].alive()) map.emplace(nodes[i].id, std::move(rows[i]));
    }
    return map;
}

DeliveryResult deliver(const ControlMessage& msg, std::span<const NodeState> nodes, double range,
                       TrafficLedger& ledger) {
    ledger.record(msg.kind);

    const NodeState* src = nullptr;
    for (const NodeState& n : nodes) {
        if (n.id == msg.src) {
            src = &n;
            break;
        }
    }
    assert(src != nullptr && src->alive());

    DeliveryResult result;
    auto in_range = neighborhood(*src, nodes, range);
    if (msg.broadcast()) {
        result.delivered = true;
        result.recipients = std::move(in_range);
    } else {
        result.delivered = std::binary_search(in_range.begin(), in_range.end(), *msg.dst);
        if (result.delivered) result.recipients.push_back(*msg.dst);
    }
    return result;
}

}  // namespace manet
