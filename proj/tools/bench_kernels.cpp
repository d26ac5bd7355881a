// Times the simulation kernels serial vs OpenMP and checks that both paths
// produce identical results. Usage: bench_kernels [n_nodes] [reps] [threads]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "manet/energy.hpp"
#include "manet/mobility.hpp"
#include "manet/radio.hpp"
#include "manet/rng.hpp"

using namespace manet;

namespace {

std::vector<NodeState> make_nodes(int n, const StreamRng& rng) {
    std::vector<NodeState> nodes;
    nodes.reserve(n);
    for (int s = 0; s < n; ++s) {
        NodeState node;
        node.id = NodeId{static_cast<std::uint32_t>(s + 1)};
        node.pos = {2000.0 * rng.unit(RngStream::Placement, s, 0, 0),
                    2000.0 * rng.unit(RngStream::Placement, s, 0, 1)};
        node.battery = rng.uniform(20.0, 100.0, RngStream::Battery, s, 0, 0);
        node.role = s % 7 == 0 ? Role::ClusterHead : Role::Ordinary;
        nodes.push_back(node);
    }
    return nodes;
}

template <typename F>
double time_ms(int reps, F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) body(i);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

bool same_nodes(const std::vector<NodeState>& a, const std::vector<NodeState>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i].pos == b[i].pos) || !(a[i].vel == b[i].vel) || a[i].battery != b[i].battery)
            return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 2000;
    const int reps = argc > 2 ? std::atoi(argv[2]) : 20;
#ifdef _OPENMP
    const int threads = argc > 3 ? std::atoi(argv[3]) : omp_get_max_threads();
#else
    const int threads = 1;
    std::printf("built without OpenMP; parallel path == serial path\n");
#endif
    const double range = 150.0;
    const StreamRng rng(7);
    const ExecPolicy serial{1}, parallel{threads};
    const MobilityParams mob{0.0, 15.0, 5, 2000.0, 2000.0};
    const EnergyParams energy;

    std::printf("n=%d reps=%d threads=%d\n", n, reps, threads);
    std::printf("%-16s %12s %12s %8s  %s\n", "kernel", "serial ms", "parallel ms", "speedup",
                "identical");

    const auto base = make_nodes(n, rng);

    std::vector<std::vector<NodeId>> rows_s, rows_p;
    const double t_nb_s = time_ms(reps, [&](int) { rows_s = neighbor_rows(base, range, serial); });
    const double t_nb_p = time_ms(reps, [&](int) { rows_p = neighbor_rows(base, range, parallel); });
    std::printf("%-16s %12.3f %12.3f %8.2f  %s\n", "neighbor_rows", t_nb_s, t_nb_p, t_nb_s / t_nb_p,
                rows_s == rows_p ? "yes" : "NO");

    auto mob_s = base, mob_p = base;
    const double t_mob_s =
        time_ms(reps, [&](int i) { step_mobility(mob_s, mob, rng, i, 1.0, serial); });
    const double t_mob_p =
        time_ms(reps, [&](int i) { step_mobility(mob_p, mob, rng, i, 1.0, parallel); });
    std::printf("%-16s %12.3f %12.3f %8.2f  %s\n", "step_mobility", t_mob_s, t_mob_p,
                t_mob_s / t_mob_p, same_nodes(mob_s, mob_p) ? "yes" : "NO");

    auto en_s = base, en_p = base;
    const std::vector<ClusterView> no_clusters;
    const double t_en_s =
        time_ms(reps, [&](int) { step_energy(en_s, no_clusters, energy, 0.001, serial); });
    const double t_en_p =
        time_ms(reps, [&](int) { step_energy(en_p, no_clusters, energy, 0.001, parallel); });
    std::printf("%-16s %12.3f %12.3f %8.2f  %s\n", "step_energy", t_en_s, t_en_p, t_en_s / t_en_p,
                same_nodes(en_s, en_p) ? "yes" : "NO");

    const bool ok = rows_s == rows_p && same_nodes(mob_s, mob_p) && same_nodes(en_s, en_p);
    return ok ? 0 : 1;
}
