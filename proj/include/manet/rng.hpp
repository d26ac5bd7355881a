#pragma once

#include <cstdint>

namespace manet {

// Counter-based random streams. Every draw is a pure hash of
// (seed, stream, slot, tick, draw), so concerns never perturb each other,
// per-node draws are order-independent, and trajectories are reproducible
// regardless of evaluation order or thread count.
enum class RngStream : std::uint64_t {
    Placement = 1,
    Battery = 2,
    Mobility = 3,
    InitialIds = 4,
};

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class StreamRng {
public:
    explicit StreamRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t word(RngStream stream, std::uint64_t slot, std::uint64_t tick,
                       std::uint64_t draw) const {
        std::uint64_t h = splitmix64(seed_ ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(stream)));
        h = splitmix64(h ^ slot);
        h = splitmix64(h ^ tick);
        h = splitmix64(h ^ draw);
        return h;
    }

    // uniform in [0, 1)
    double unit(RngStream stream, std::uint64_t slot, std::uint64_t tick,
                std::uint64_t draw) const {
        return static_cast<double>(word(stream, slot, tick, draw) >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi, RngStream stream, std::uint64_t slot,
                   std::uint64_t tick, std::uint64_t draw) const {
        return lo + (hi - lo) * unit(stream, slot, tick, draw);
    }

    // uniform integer in [0, n)
    std::uint64_t bounded(std::uint64_t n, RngStream stream, std::uint64_t slot,
                          std::uint64_t tick, std::uint64_t draw) const {
        const unsigned __int128 wide =
            static_cast<unsigned __int128>(word(stream, slot, tick, draw)) * n;
        return static_cast<std::uint64_t>(wide >> 64);
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
};

}  // namespace manet
