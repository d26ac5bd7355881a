#include <vector>

#include "doctest.h"

#include "manet/energy.hpp"

using namespace manet;

namespace {

NodeState make(std::uint32_t id, double battery, Role role = Role::Ordinary) {
    NodeState n;
    n.id = NodeId{id};
    n.battery = battery;
    n.role = role;
    return n;
}

}  // namespace

TEST_CASE("ordinary node drains linearly") {
    std::vector<NodeState> nodes{make(1, 10.0)};
    EnergyParams params{1.0, 1.0, 0.5};
    auto died = step_energy(nodes, {}, params, 3.0);
    CHECK(nodes[0].battery == doctest::Approx(7.0));
    CHECK(died.empty());
}

TEST_CASE("gateway drains at the ordinary rate") {
    std::vector<NodeState> nodes{make(1, 10.0, Role::Gateway)};
    EnergyParams params{0.25, 1.0, 0.5};
    step_energy(nodes, {}, params, 2.0);
    CHECK(nodes[0].battery == doctest::Approx(9.5));
}

TEST_CASE("cluster head drain grows with member count") {
    std::vector<NodeState> nodes{make(1, 50.0, Role::ClusterHead), make(2, 50.0), make(3, 50.0),
                                 make(4, 50.0), make(5, 50.0)};
    std::vector<ClusterView> clusters{
        {NodeId{1}, {NodeId{2}, NodeId{3}, NodeId{4}, NodeId{5}}, {}}};
    EnergyParams params{0.0, 1.0, 0.5};
    step_energy(nodes, clusters, params, 2.0);
    CHECK(nodes[0].battery == doctest::Approx(44.0));  // (1 + 0.5*4) * 2 = 6
    CHECK(nodes[1].battery == doctest::Approx(50.0));
}

TEST_CASE("battery floors at zero and the node is reported dead") {
    std::vector<NodeState> nodes{make(1, 0.5), make(2, 5.0)};
    EnergyParams params{1.0, 1.0, 0.0};
    auto died = step_energy(nodes, {}, params, 1.0);
    CHECK(nodes[0].battery == doctest::Approx(0.0));
    CHECK_FALSE(nodes[0].alive());
    REQUIRE(died.size() == 1);
    CHECK(died[0] == 0);  // slot index
    CHECK(nodes[1].battery == doctest::Approx(4.0));
}

TEST_CASE("dead nodes stop draining and are not re-reported") {
    std::vector<NodeState> nodes{make(1, 1.0)};
    EnergyParams params{1.0, 1.0, 0.0};
    auto died1 = step_energy(nodes, {}, params, 1.0);
    CHECK(died1 == std::vector<int>{0});
    auto died2 = step_energy(nodes, {}, params, 1.0);
    CHECK(died2.empty());
    CHECK(nodes[0].battery == doctest::Approx(0.0));
}

TEST_CASE("loaded CH drains strictly faster than an ordinary node") {
    std::vector<NodeState> nodes{make(1, 50.0, Role::ClusterHead), make(2, 50.0)};
    std::vector<ClusterView> clusters{{NodeId{1}, {NodeId{2}}, {}}};
    EnergyParams params{0.05, 0.05, 0.02};
    for (int i = 0; i < 100; ++i) step_energy(nodes, clusters, params, 1.0);
    CHECK(nodes[0].battery < nodes[1].battery);
}
