#include <sstream>
#include <vector>

#include "doctest.h"

#include "manet/metrics.hpp"

using namespace manet;

namespace {

std::vector<NodeState> batteries(std::initializer_list<double> bs) {
    std::vector<NodeState> nodes;
    std::uint32_t id = 1;
    for (double b : bs) {
        NodeState n;
        n.id = NodeId{id++};
        n.battery = b;
        nodes.push_back(n);
    }
    return nodes;
}

ClusterView cluster(std::uint32_t head, std::initializer_list<std::uint32_t> members) {
    ClusterView c{NodeId{head}, {}, {}};
    for (auto m : members) c.members.push_back(NodeId{m});
    return c;
}

}  // namespace

TEST_CASE("energy variance of equal batteries is zero") {
    CHECK(energy_variance(batteries({4, 4, 4})) == doctest::Approx(0.0));
}

TEST_CASE("energy variance is the population variance") {
    CHECK(energy_variance(batteries({0, 2})) == doctest::Approx(1.0));
    CHECK(energy_variance(batteries({3, 3, 3, 7})) == doctest::Approx(3.0));
}

TEST_CASE("energy variance counts dead nodes at zero") {
    auto nodes = batteries({0, 2});
    CHECK_FALSE(nodes[0].alive());
    CHECK(energy_variance(nodes) == doctest::Approx(1.0));
}

TEST_CASE("energy variance rejects an empty universe") {
    CHECK_THROWS_AS(energy_variance(batteries({})), std::invalid_argument);
}

TEST_CASE("identical snapshots produce zero reaffiliations") {
    std::vector<ClusterView> snap{cluster(1, {2, 3}), cluster(4, {5})};
    CHECK(reaffiliation_count(snap, snap) == 0);
}

TEST_CASE("a member switching heads counts once") {
    std::vector<ClusterView> prev{cluster(1, {2, 3}), cluster(4, {5})};
    std::vector<ClusterView> next{cluster(1, {3}), cluster(4, {2, 5})};
    CHECK(reaffiliation_count(prev, next) == 1);
}

TEST_CASE("role changes are not reaffiliations") {
    std::vector<ClusterView> prev{cluster(1, {2, 3})};
    std::vector<ClusterView> next{cluster(1, {3}), cluster(2, {})};  // 2 became a CH
    CHECK(reaffiliation_count(prev, next) == 0);
    CHECK(reaffiliation_count(next, prev) == 0);  // ...and back
}

TEST_CASE("csv export writes the documented columns and one row per snapshot") {
    MetricsReport report;
    report.series.tick = {1, 2};
    report.series.msgs_hello = {5, 0};
    report.series.msgs_weight = {0, 2};
    report.series.msgs_newid = {0, 2};
    report.series.msgs_hpadapt = {0, 1};
    report.series.energy_var = {1.5, 1.25};
    report.series.n_clusters = {2, 2};
    report.series.reaffiliations = {0, 1};
    report.series.mean_hp = {5.0, 15.0};
    std::ostringstream out;
    write_report_csv(report, out);
    CHECK(out.str() ==
          "tick,msgs_hello,msgs_weight,msgs_newid,msgs_hpadapt,energy_var,n_clusters,"
          "reaffiliations,mean_hp\n"
          "1,5,0,0,0,1.5,2,0,5\n"
          "2,0,2,2,1,1.25,2,1,15\n");
}

TEST_CASE("json report carries config, series, totals and node outcomes") {
    MetricsReport report;
    report.config = SimConfig{};
    finalize_defaults(report.config);
    report.series.tick = {1};
    report.series.msgs_hello = {3};
    report.series.msgs_weight = {0};
    report.series.msgs_newid = {0};
    report.series.msgs_hpadapt = {0};
    report.series.energy_var = {0.5};
    report.series.n_clusters = {1};
    report.series.reaffiliations = {0};
    report.series.mean_hp = {5.0};
    report.total_messages = {3, 0, 0, 0};
    report.total_message_count = 3;
    report.final_energy_variance = 0.5;
    report.nodes = {{0, 2, 7, 10, -1}, {1, 1, 1, 0, 42}};

    auto doc = report_to_json(report);
    CHECK(doc.at("config").at("n_nodes") == 50);
    CHECK(doc.at("series").at("tick").size() == 1);
    CHECK(doc.at("totals").at("messages").at("hello") == 3);
    CHECK(doc.at("totals").at("messages").at("total") == 3);
    CHECK(doc.at("metadata").contains("message_counting"));
    CHECK(doc.at("nodes").size() == 2);
    CHECK(doc.at("nodes").at(0).at("initial_id") == 2);
    CHECK(doc.at("nodes").at(0).at("final_id") == 7);
    CHECK(doc.at("nodes").at(0).at("death_tick").is_null());  // alive
    CHECK(doc.at("nodes").at(1).at("death_tick") == 42);
}
