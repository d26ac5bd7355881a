#include "manet/engine.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "manet/clustering.hpp"
#include "manet/energy.hpp"
#include "manet/mobility.hpp"
#include "manet/radio.hpp"
#include "manet/rng.hpp"

namespace manet {

namespace {

struct Sim {
    SimConfig cfg;
    ExecPolicy policy;
    StreamRng rng;
    MobilityParams mob;

    std::vector<NodeState> nodes;   // slot-indexed; slots are stable, IDs are not
    std::vector<int> id_to_slot;    // value -> slot, ids are a permutation of 1..n
    std::vector<ClusterView> clusters;

    std::vector<int> attached_slot;  // slot of own CH; CHs point at themselves; -1 unattached
    std::vector<long> ch_since;      // tick the node last became CH, -1 otherwise
    std::vector<long> tenure;
    std::vector<long> death_tick;
    std::vector<long> next_hello;
    std::vector<long> next_lidar;    // pending reassignment round, CHs only

    TrafficLedger ledger;
    long lidar_rounds = 0;
    long reaffil_total = 0;
    int reaffil_window = 0;  // since last metrics snapshot

    explicit Sim(const SimConfig& c, const ExecPolicy& pol)
        : cfg(c),
          policy(pol),
          rng(c.seed),
          mob{c.speed_min, c.speed_max, c.direction_hold, c.terrain_width, c.terrain_height} {}

    int slot_of(NodeId id) const { return id_to_slot[id.value]; }

    void rebuild_id_index() {
        std::fill(id_to_slot.begin(), id_to_slot.end(), -1);
        for (std::size_t s = 0; s < nodes.size(); ++s) id_to_slot[nodes[s].id.value] = static_cast<int>(s);
    }

    void init() {
        const int n = cfg.n_nodes;
        nodes.reserve(n);
        id_to_slot.assign(static_cast<std::size_t>(n) + 1, -1);
        attached_slot.assign(n, -1);
        ch_since.assign(n, -1);
        tenure.assign(n, 0);
        death_tick.assign(n, -1);
        next_hello.assign(n, 0);
        next_lidar.assign(n, -1);

        // Arbitrary startup IDs: a seeded permutation of 1..n.
        std::vector<std::uint32_t> ids(n);
        std::iota(ids.begin(), ids.end(), 1u);
        for (int i = n - 1; i > 0; --i) {
            const auto j = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(i) + 1,
                                                        RngStream::InitialIds, 0, 0,
                                                        static_cast<std::uint64_t>(i)));
            std::swap(ids[i], ids[j]);
        }

        for (int s = 0; s < n; ++s) {
            NodeState node;
            node.id = NodeId{ids[s]};
            node.pos = {cfg.terrain_width * rng.unit(RngStream::Placement, s, 0, 0),
                        cfg.terrain_height * rng.unit(RngStream::Placement, s, 0, 1)};
            node.battery = rng.uniform(cfg.battery_lo, cfg.battery_hi, RngStream::Battery, s, 0, 0);
            node.tht = TopologyHistory(static_cast<std::size_t>(cfg.p) + 1);
            node.hp_local = cfg.hp_min;
            redraw_velocity(node, s, 0, mob, rng);
            nodes.push_back(std::move(node));
        }
        rebuild_id_index();

        // Startup Hello round, first THT rows, initial election.
        NeighborMap snap = hello_round(0);
        apply_election(0, initial_election(snap));
    }

    std::vector<ClusterView> initial_election(const NeighborMap& snap) {
        switch (cfg.algorithm) {
            case Algorithm::Hd: return hd_elect(snap);
            case Algorithm::Wca: return wca_lite_elect(snap, wca_inputs(snap, 0), cfg.wca);
            default: return lid_elect(snap);  // LID, LIDAR
        }
    }

    // Broadcast Hello and append a THT row for every node whose boundary is
    // due. Returns the tick's neighbor snapshot.
    NeighborMap hello_round(long t) {
        NeighborMap snap = build_neighbor_map(nodes, cfg.range, policy);
        for (std::size_t s = 0; s < nodes.size(); ++s) {
            NodeState& node = nodes[s];
            if (!node.alive() || next_hello[s] > t) continue;
            deliver(ControlMessage::hello(node.id), nodes, cfg.range, ledger);
            node.tht.record(snap.at(node.id));
            next_hello[s] = t + node.hp_local;
        }
        return snap;
    }

    bool any_hello_due(long t) const {
        for (std::size_t s = 0; s < nodes.size(); ++s) {
            if (nodes[s].alive() && next_hello[s] <= t) return true;
        }
        return false;
    }

    WcaInputs wca_inputs(const NeighborMap& snap, long t) const {
        WcaInputs in;
        for (const auto& [id, nb] : snap) {
            const int s = slot_of(id);
            in.speed[id] = nodes[s].vel.norm();
            in.serving_time[id] =
                ch_since[s] >= 0 ? static_cast<double>(t - ch_since[s]) : 0.0;
        }
        return in;
    }

    void apply_election(long t, std::vector<ClusterView> views) {
        const int n = cfg.n_nodes;
        std::vector<char> now_ch(n, 0);
        std::vector<int> new_attach(n, -1);
        std::vector<Role> new_role(n, Role::Ordinary);

        for (const ClusterView& c : views) {
            const int hs = slot_of(c.head);
            now_ch[hs] = 1;
            new_attach[hs] = hs;
            new_role[hs] = Role::ClusterHead;
            for (NodeId m : c.members) new_attach[slot_of(m)] = hs;
            for (NodeId g : c.gateways) new_role[slot_of(g)] = Role::Gateway;
        }

        for (int s = 0; s < n; ++s) {
            NodeState& node = nodes[s];
            if (!node.alive()) continue;
            // A node that switched clusters adopts the new cluster's Hello
            // period from its next boundary on; the boundary already
            // scheduled keeps its phase so churn cannot starve the Hello
            // cadence.
            if (!now_ch[s] && new_attach[s] >= 0 && new_attach[s] != attached_slot[s])
                node.hp_local = nodes[new_attach[s]].hp_local;
            if (now_ch[s] && ch_since[s] < 0) {
                ch_since[s] = t;
                if (cfg.algorithm == Algorithm::Lidar)
                    next_lidar[s] = t + static_cast<long>(cfg.k) * node.hp_local;
            } else if (!now_ch[s] && ch_since[s] >= 0) {
                ch_since[s] = -1;
                next_lidar[s] = -1;
            }
            node.role = new_role[s];
            node.cluster_of =
                new_attach[s] >= 0 ? std::optional<NodeId>(nodes[new_attach[s]].id) : std::nullopt;
            attached_slot[s] = new_attach[s];
        }
        clusters = std::move(views);
    }

    void handle_deaths(long t, const std::vector<int>& died) {
        for (int s : died) {
            death_tick[s] = t;
            NodeState& node = nodes[s];
            if (node.role == Role::ClusterHead) {
                // Dissolve: members hang unattached until the next
                // maintenance round re-elects.
                auto it = std::find_if(clusters.begin(), clusters.end(),
                                       [&](const ClusterView& c) { return c.head == node.id; });
                if (it != clusters.end()) {
                    for (NodeId m : it->members) {
                        const int ms = slot_of(m);
                        if (attached_slot[ms] == s) {
                            attached_slot[ms] = -1;
                            nodes[ms].cluster_of.reset();
                            nodes[ms].role = Role::Ordinary;
                        }
                    }
                    clusters.erase(it);
                }
            } else if (attached_slot[s] >= 0) {
                const NodeId head = nodes[attached_slot[s]].id;
                auto it = std::find_if(clusters.begin(), clusters.end(),
                                       [&](const ClusterView& c) { return c.head == head; });
                if (it != clusters.end()) {
                    std::erase(it->members, node.id);
                    std::erase(it->gateways, node.id);
                }
            }
            ch_since[s] = -1;
            next_lidar[s] = -1;
            attached_slot[s] = -1;
            node.cluster_of.reset();
            node.role = Role::Ordinary;
        }
    }

    void maintenance(long t, const NeighborMap& snap) {
        switch (cfg.algorithm) {
            case Algorithm::Hd:
                apply_election(t, hd_elect(snap));
                break;
            case Algorithm::Wca:
                wca_maintenance(t, snap);
                break;
            default:
                apply_election(t, lid_elect(snap));
                break;
        }
    }

    // WCA re-elects only when some live node hears no CH at all; otherwise
    // members just migrate between the existing CHs.
    void wca_maintenance(long t, const NeighborMap& snap) {
        std::map<NodeId, std::vector<NodeId>> audible;
        bool uncovered = false;
        for (const auto& [v, nb] : snap) {
            if (nodes[slot_of(v)].role == Role::ClusterHead) continue;
            std::vector<NodeId>& heard = audible[v];
            for (NodeId u : nb) {
                if (nodes[slot_of(u)].role == Role::ClusterHead) heard.push_back(u);
            }
            if (heard.empty()) uncovered = true;
        }

        if (uncovered) {
            apply_election(t, wca_lite_elect(snap, wca_inputs(snap, t), cfg.wca));
            return;
        }

        std::map<NodeId, double> head_index;
        for (const ClusterView& c : clusters) {
            const int hs = slot_of(c.head);
            head_index[c.head] =
                wca_index(static_cast<double>(snap.at(c.head).size()),
                          static_cast<double>(t - ch_since[hs]), nodes[hs].vel.norm(), cfg.wca);
        }

        std::map<NodeId, ClusterView> by_head;
        for (const ClusterView& c : clusters) by_head.emplace(c.head, ClusterView{c.head, {}, {}});
        for (const auto& [v, heard] : audible) {
            const int vs = slot_of(v);
            NodeId target;
            const int cur = attached_slot[vs];
            if (cur >= 0 &&
                std::binary_search(heard.begin(), heard.end(), nodes[cur].id)) {
                target = nodes[cur].id;  // current CH still audible: stay
            } else {
                target = heard.front();
                for (NodeId u : heard) {
                    const double iu = head_index.at(u), it_ = head_index.at(target);
                    if (iu < it_ || (iu == it_ && u < target)) target = u;
                }
            }
            ClusterView& cv = by_head.at(target);
            cv.members.push_back(v);
            if (heard.size() >= 2) cv.gateways.push_back(v);
        }

        std::vector<ClusterView> views;
        views.reserve(by_head.size());
        for (auto& [h, cv] : by_head) views.push_back(std::move(cv));
        apply_election(t, views);
    }

    // Steps 3..7 for every cluster whose reassignment period elapsed:
    // members unicast weight reports, the CH permutes the cluster's own IDs
    // by weight, sends the new values back, adapts the Hello period from
    // the reported mobility, and the network immediately re-clusters.
    void lidar_rounds_due(long t) {
        std::vector<int> firing;
        for (std::size_t s = 0; s < nodes.size(); ++s) {
            if (nodes[s].alive() && nodes[s].role == Role::ClusterHead && next_lidar[s] >= 0 &&
                next_lidar[s] <= t)
                firing.push_back(static_cast<int>(s));
        }
        if (firing.empty()) return;
        std::sort(firing.begin(), firing.end(),
                  [&](int a, int b) { return nodes[a].id < nodes[b].id; });

        IdAssignment remap;
        for (int hs : firing) {
            const NodeId head = nodes[hs].id;
            auto it = std::find_if(clusters.begin(), clusters.end(),
                                   [&](const ClusterView& c) { return c.head == head; });
            assert(it != clusters.end());

            std::vector<WeightEntry> weights;
            std::vector<NodeId> participants;
            double m_sum = 0.0;

            const double m_head = mobility_rate(nodes[hs].tht, cfg.p);
            weights.push_back({head, compute_weight(nodes[hs].battery, m_head, cfg.w1, cfg.w2),
                               nodes[hs].battery, m_head});
            m_sum += m_head;

            for (NodeId m : it->members) {
                const int ms = slot_of(m);
                const double mob_rate = mobility_rate(nodes[ms].tht, cfg.p);
                const double w = compute_weight(nodes[ms].battery, mob_rate, cfg.w1, cfg.w2);
                auto res = deliver(
                    ControlMessage::weight_report(m, head, {w, nodes[ms].battery, mob_rate}),
                    nodes, cfg.range, ledger);
                if (!res.delivered) continue;  // out of range: keeps its ID this round
                weights.push_back({m, w, nodes[ms].battery, mob_rate});
                participants.push_back(m);
                m_sum += mob_rate;
            }

            ClusterView reduced{head, participants, {}};
            IdAssignment assignment = reassign_ids(reduced, weights);
            for (NodeId m : participants) {
                deliver(ControlMessage::new_id_assign(head, m, assignment.at(m)), nodes,
                        cfg.range, ledger);
            }
            for (const auto& [from, to] : assignment) {
                [[maybe_unused]] const bool fresh = remap.emplace(from, to).second;
                assert(fresh);  // per-cluster pools are disjoint
            }

            const double m_c = m_sum / static_cast<double>(participants.size() + 1);
            const int hp_new = adapt_hp(m_c, cfg.hp_min, cfg.hp_max, cfg.m_sat);
            if (hp_new != nodes[hs].hp_local) {
                auto res = deliver(ControlMessage::hp_adapt(head, hp_new), nodes, cfg.range, ledger);
                for (NodeId m : it->members) {
                    if (!std::binary_search(res.recipients.begin(), res.recipients.end(), m))
                        continue;
                    const int ms = slot_of(m);
                    nodes[ms].hp_local = hp_new;
                    next_hello[ms] = t + hp_new;
                }
                nodes[hs].hp_local = hp_new;
                next_hello[hs] = t + hp_new;
            }
            ++lidar_rounds;
        }

        apply_id_permutation(remap);

        // Step 7: re-cluster on the fresh labels.
        NeighborMap snap = build_neighbor_map(nodes, cfg.range, policy);
        apply_election(t, lid_elect(snap));
        for (int hs : firing) {
            if (nodes[hs].alive() && nodes[hs].role == Role::ClusterHead)
                next_lidar[hs] = t + static_cast<long>(cfg.k) * nodes[hs].hp_local;
        }
    }

    void apply_id_permutation(const IdAssignment& remap) {
        if (remap.empty()) return;
        auto relabel = [&](NodeId id) {
            auto it = remap.find(id);
            return it == remap.end() ? id : it->second;
        };
        for (NodeState& node : nodes) {
            if (!node.alive()) continue;
            node.id = relabel(node.id);
            if (node.cluster_of) node.cluster_of = relabel(*node.cluster_of);
            // Relabel history so future symmetric differences measure real
            // topology churn, not renamed neighbors.
            TopologyHistory fresh(node.tht.capacity());
            std::vector<std::vector<NodeId>> rows(node.tht.rows().begin(), node.tht.rows().end());
            for (auto rit = rows.rbegin(); rit != rows.rend(); ++rit) {
                for (NodeId& v : *rit) v = relabel(v);
                std::sort(rit->begin(), rit->end());
                fresh.record(std::move(*rit));
            }
            node.tht = std::move(fresh);
        }
        for (ClusterView& c : clusters) {
            c.head = relabel(c.head);
            for (NodeId& m : c.members) m = relabel(m);
            for (NodeId& g : c.gateways) g = relabel(g);
            std::sort(c.members.begin(), c.members.end());
            std::sort(c.gateways.begin(), c.gateways.end());
        }
        std::sort(clusters.begin(), clusters.end(),
                  [](const ClusterView& a, const ClusterView& b) { return a.head < b.head; });
        rebuild_id_index();
    }

    MetricsReport finish(MetricsReport&& report) {
        report.total_messages = ledger.totals();
        report.total_message_count = ledger.total();
        report.final_energy_variance = energy_variance(nodes);
        report.total_reaffiliations = reaffil_total;
        report.lidar_rounds = lidar_rounds;
        for (std::size_t s = 0; s < nodes.size(); ++s) {
            report.nodes.push_back({static_cast<int>(s), 0, nodes[s].id.value, tenure[s],
                                    death_tick[s]});
        }
        return std::move(report);
    }
};

}  // namespace

MetricsReport run(const SimConfig& input, const ExecPolicy& policy, const TickObserver& observer) {
    SimConfig cfg = input;
    finalize_defaults(cfg);
    auto errors = validate_config(cfg);
    if (!errors.empty()) {
        std::ostringstream os;
        os << "invalid config:";
        for (const auto& e : errors) os << " [" << e.field << "] " << e.message << ";";
        throw std::invalid_argument(os.str());
    }

    MetricsReport report;
    report.config = cfg;
    if (cfg.duration == 0) return report;

    Sim sim(cfg, policy);
    sim.init();

    std::vector<std::uint32_t> initial_ids(cfg.n_nodes);
    for (int s = 0; s < cfg.n_nodes; ++s) initial_ids[s] = sim.nodes[s].id.value;

    if (observer) observer(0, sim.nodes, sim.clusters);

    std::vector<char> alive0(cfg.n_nodes), ch0(cfg.n_nodes);
    std::vector<int> attach0(cfg.n_nodes);

    for (long t = 1; t <= cfg.duration; ++t) {
        for (int s = 0; s < cfg.n_nodes; ++s) {
            alive0[s] = sim.nodes[s].alive();
            ch0[s] = sim.nodes[s].role == Role::ClusterHead;
            attach0[s] = sim.attached_slot[s];
        }

        step_mobility(sim.nodes, sim.mob, sim.rng, t, 1.0, policy);

        auto died = step_energy(sim.nodes, sim.clusters, cfg.energy, 1.0, policy);
        sim.handle_deaths(t, died);

        if (sim.any_hello_due(t)) {
            NeighborMap snap = sim.hello_round(t);
            sim.maintenance(t, snap);
        }

        if (cfg.algorithm == Algorithm::Lidar) sim.lidar_rounds_due(t);

        int reaffil = 0;
        for (int s = 0; s < cfg.n_nodes; ++s) {
            if (alive0[s] && sim.nodes[s].alive() && !ch0[s] &&
                sim.nodes[s].role != Role::ClusterHead && attach0[s] >= 0 &&
                sim.attached_slot[s] >= 0 && sim.attached_slot[s] != attach0[s])
                ++reaffil;
        }
        sim.reaffil_total += reaffil;
        sim.reaffil_window += reaffil;

        for (int s = 0; s < cfg.n_nodes; ++s) {
            if (sim.nodes[s].alive() && sim.nodes[s].role == Role::ClusterHead) ++sim.tenure[s];
        }

        if (t % cfg.snapshot_every == 0) {
            auto delta = sim.ledger.take_delta();
            report.series.tick.push_back(t);
            report.series.msgs_hello.push_back(delta[0]);
            report.series.msgs_weight.push_back(delta[1]);
            report.series.msgs_newid.push_back(delta[2]);
            report.series.msgs_hpadapt.push_back(delta[3]);
            report.series.energy_var.push_back(energy_variance(sim.nodes));
            report.series.n_clusters.push_back(static_cast<int>(sim.clusters.size()));
            report.series.reaffiliations.push_back(sim.reaffil_window);
            double hp_sum = 0.0;
            for (const ClusterView& c : sim.clusters) hp_sum += sim.nodes[sim.slot_of(c.head)].hp_local;
            report.series.mean_hp.push_back(
                sim.clusters.empty() ? 0.0 : hp_sum / static_cast<double>(sim.clusters.size()));
            sim.reaffil_window = 0;
        }

        if (observer) observer(t, sim.nodes, sim.clusters);
    }

    report = sim.finish(std::move(report));
    for (int s = 0; s < cfg.n_nodes; ++s) report.nodes[s].initial_id = initial_ids[s];
    return report;
}

}  // namespace manet
