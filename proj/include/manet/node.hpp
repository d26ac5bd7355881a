#pragma once

#include <compare>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "manet/vec2.hpp"

namespace manet {

// Network-wide unique node identifier. Values are positive; 0 is reserved
// as "invalid". Under LIDAR the value held by a physical node changes over
// time, so engine bookkeeping is keyed by stable slot index instead.
struct NodeId {
    std::uint32_t value = 0;

    constexpr auto operator<=>(const NodeId&) const = default;
    constexpr bool valid() const { return value > 0; }
};

enum class Role { Ordinary, Gateway, ClusterHead };

// Ring of recent neighbor-ID sets, one row per completed Hello period,
// newest first. Rows are kept sorted and never contain the owner's own ID.
class TopologyHistory {
public:
    explicit TopologyHistory(std::size_t capacity = 4) : capacity_(capacity) {}

    void record(std::vector<NodeId> row) {
        rows_.push_front(std::move(row));
        while (rows_.size() > capacity_) rows_.pop_back();
    }

    const std::deque<std::vector<NodeId>>& rows() const { return rows_; }
    std::size_t capacity() const { return capacity_; }
    void clear() { rows_.clear(); }

private:
    std::size_t capacity_;
    std::deque<std::vector<NodeId>> rows_;
};

struct NodeState {
    NodeId id;
    Vec2 pos;                          // meters
    Vec2 vel;                          // meters per tick
    double battery = 0.0;              // energy units, >= 0
    Role role = Role::Ordinary;
    TopologyHistory tht;
    std::optional<NodeId> cluster_of;  // attached CH (own id when role == ClusterHead)
    int hp_local = 0;                  // current Hello period, ticks

    bool alive() const { return battery > 0.0; }
};

}  // namespace manet
