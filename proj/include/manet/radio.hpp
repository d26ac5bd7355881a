#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "manet/exec.hpp"
#include "manet/node.hpp"

namespace manet {

enum class MessageKind : std::size_t { Hello = 0, WeightReport = 1, NewIdAssign = 2, HpAdapt = 3 };
inline constexpr std::size_t kMessageKindCount = 4;

struct WeightReportPayload {
    double w = 0.0;
    double battery = 0.0;
    double mobility = 0.0;
};

struct NewIdPayload {
    NodeId new_id;
};

struct HpAdaptPayload {
    int hp = 0;
};

// Hello and HpAdapt are broadcast (dst empty); WeightReport and NewIdAssign
// are unicast. The factory functions are the only way to build one, which
// keeps the kind/dst pairing valid by construction.
struct ControlMessage {
    MessageKind kind;
    NodeId src;
    std::optional<NodeId> dst;  // empty = broadcast
    std::variant<std::monostate, WeightReportPayload, NewIdPayload, HpAdaptPayload> payload;

    bool broadcast() const { return !dst.has_value(); }

    static ControlMessage hello(NodeId src);
    static ControlMessage weight_report(NodeId src, NodeId dst, WeightReportPayload body);
    static ControlMessage new_id_assign(NodeId src, NodeId dst, NodeId fresh);
    static ControlMessage hp_adapt(NodeId src, int hp);
};

// Counts one transmission per deliver() call, broadcast or unicast,
// independent of how many nodes receive it.
class TrafficLedger {
public:
    void record(MessageKind kind) { totals_[static_cast<std::size_t>(kind)] += 1; }

    std::uint64_t total(MessageKind kind) const { return totals_[static_cast<std::size_t>(kind)]; }
    std::uint64_t total() const;
    const std::array<std::uint64_t, kMessageKindCount>& totals() const { return totals_; }

    // Per-kind counts recorded since the previous call; used for per-tick series.
    std::array<std::uint64_t, kMessageKindCount> take_delta();

private:
    std::array<std::uint64_t, kMessageKindCount> totals_{};
    std::array<std::uint64_t, kMessageKindCount> last_{};
};

// Per-node neighbor sets keyed by current NodeId; values sorted ascending.
using NeighborMap = std::map<NodeId, std::vector<NodeId>>;

// IDs of live nodes other than `node` within `range` (distance == range is
// in range). `node` must be live.
std::vector<NodeId> neighborhood(const NodeState& node, std::span<const NodeState> all,
                                 double range);

// Slot-indexed neighbor rows for all nodes; dead slots get empty rows and
// never appear as neighbors. This is the O(n^2) hot kernel: rows are
// independent, so the OpenMP path is bit-identical to the serial one.
std::vector<std::vector<NodeId>> neighbor_rows(std::span<const NodeState> nodes, double range,
                                               const ExecPolicy& policy = {});

// neighbor_rows assembled into a NeighborMap over live nodes.
NeighborMap build_neighbor_map(std::span<const NodeState> nodes, double range,
                               const ExecPolicy& policy = {});

struct DeliveryResult {
    bool delivered = false;
    std::vector<NodeId> recipients;  // sorted
};

// Instantaneous, lossless delivery within range. Broadcast reaches exactly
// neighborhood(src) and always counts as delivered; unicast reaches dst iff
// dst is in neighborhood(src). The ledger increments by one either way:
// a failed unicast still used the channel.
DeliveryResult deliver(const ControlMessage& msg, std::span<const NodeState> nodes, double range,
                       TrafficLedger& ledger);

}  // namespace manet
