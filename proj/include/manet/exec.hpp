#pragma once

namespace manet {

// Kernel execution policy. threads == 1 selects the serial reference path;
// threads > 1 selects the OpenMP path. Both paths write disjoint per-node
// slots, so results are bit-identical either way.
struct ExecPolicy {
    int threads = 1;

    bool parallel() const { return threads > 1; }
};

}  // namespace manet
