#pragma once

#include <vector>

#include "manet/node.hpp"

namespace manet {

// One cluster as seen at formation time: head is not listed among members,
// gateways are the subset of members that hear two or more CHs.
struct ClusterView {
    NodeId head;
    std::vector<NodeId> members;   // sorted, excludes head
    std::vector<NodeId> gateways;  // sorted subset of members

    friend bool operator==(const ClusterView&, const ClusterView&) = default;
};

}  // namespace manet
