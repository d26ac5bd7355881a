#include <algorithm>
#include <fstream>

#include "doctest.h"

#include "manet/config.hpp"

using namespace manet;

namespace {

bool has_error(const std::vector<ConfigError>& errors, const std::string& field) {
    return std::any_of(errors.begin(), errors.end(),
                       [&](const ConfigError& e) { return e.field == field; });
}

SimConfig finalized() {
    SimConfig cfg;
    finalize_defaults(cfg);
    return cfg;
}

}  // namespace

TEST_CASE("default config validates cleanly") {
    SimConfig cfg = finalized();
    CHECK(validate_config(cfg).empty());
    CHECK(cfg.w1 == doctest::Approx(0.7));
    CHECK(cfg.w2 == doctest::Approx(0.3));
    CHECK(cfg.n_nodes == 50);
    CHECK(cfg.battery_lo == doctest::Approx(20.0));
    CHECK(cfg.battery_hi == doctest::Approx(100.0));
    CHECK(cfg.speed_max == doctest::Approx(15.0));
    CHECK(cfg.hp_min == 5);
    CHECK(cfg.k == 5);
}

TEST_CASE("finalize_defaults derives the placeholder fields") {
    SimConfig cfg;
    cfg.hp_min = 7;
    cfg.p = 4;
    finalize_defaults(cfg);
    CHECK(cfg.direction_hold == 7);           // one Hello period
    CHECK(cfg.m_sat == doctest::Approx(8.0));  // 2 * p
    // 50 nodes * pi * 150^2 / 360000
    CHECK(cfg.wca.ideal_degree == doctest::Approx(50.0 * 3.14159265358979 * 150.0 * 150.0 / 360000.0)
                                      .epsilon(1e-9));

    SimConfig pinned;
    pinned.direction_hold = 3;
    pinned.m_sat = 11.0;
    pinned.wca.ideal_degree = 6.0;
    finalize_defaults(pinned);
    CHECK(pinned.direction_hold == 3);
    CHECK(pinned.m_sat == doctest::Approx(11.0));
    CHECK(pinned.wca.ideal_degree == doctest::Approx(6.0));
}

TEST_CASE("weight coefficients must sum to one") {
    SimConfig cfg = finalized();
    cfg.w1 = 0.7;
    cfg.w2 = 0.7;
    auto errors = validate_config(cfg);
    REQUIRE(has_error(errors, "w1"));
    bool mentions_sum = false;
    for (const auto& e : errors) mentions_sum |= e.message.find("w1+w2 != 1") != std::string::npos;
    CHECK(mentions_sum);
}

TEST_CASE("hp ordering violation is reported") {
    SimConfig cfg = finalized();
    cfg.hp_min = 10;
    cfg.hp_max = 5;
    auto errors = validate_config(cfg);
    REQUIRE(has_error(errors, "hp_min"));
    bool mentions = false;
    for (const auto& e : errors) mentions |= e.message.find("hp_min > hp_max") != std::string::npos;
    CHECK(mentions);
}

TEST_CASE("validation reports every violated field") {
    SimConfig cfg = finalized();
    cfg.n_nodes = 0;
    cfg.range = -1.0;
    cfg.speed_min = 9.0;
    cfg.speed_max = 3.0;
    cfg.k = 0;
    cfg.p = 0;
    cfg.duration = -5;
    cfg.battery_lo = 0.0;
    cfg.energy.e_ord = 0.5;
    cfg.energy.e_ch_base = 0.1;
    auto errors = validate_config(cfg);
    for (const char* field : {"n_nodes", "range", "speed_max", "k", "p", "duration",
                              "battery_init", "energy.e_ch_base"})
        CHECK_MESSAGE(has_error(errors, field), field);
}

TEST_CASE("config JSON round-trips") {
    SimConfig cfg = finalized();
    cfg.n_nodes = 31;
    cfg.seed = 99;
    cfg.algorithm = Algorithm::Hd;
    cfg.terrain_width = 123.0;
    cfg.energy.e_ch_per_member = 0.125;
    cfg.wca.c1 = 0.5;
    cfg.wca.c2 = 0.25;
    cfg.wca.c3 = 0.25;
    SimConfig back = config_from_json(config_to_json(cfg));
    CHECK(back.n_nodes == cfg.n_nodes);
    CHECK(back.seed == cfg.seed);
    CHECK(back.algorithm == Algorithm::Hd);
    CHECK(back.terrain_width == doctest::Approx(123.0));
    CHECK(back.energy.e_ch_per_member == doctest::Approx(0.125));
    CHECK(back.wca.c1 == doctest::Approx(0.5));
    CHECK(config_to_json(back) == config_to_json(cfg));
}

TEST_CASE("unknown JSON keys are rejected by name") {
    nlohmann::json doc = {{"n_nodes", 10}, {"rnage", 100.0}};
    CHECK_THROWS_WITH_AS(config_from_json(doc), doctest::Contains("rnage"), ConfigParseError);

    nlohmann::json nested = {{"energy", {{"e_ord", 0.1}, {"e_typo", 1.0}}}};
    CHECK_THROWS_WITH_AS(config_from_json(nested), doctest::Contains("energy.e_typo"),
                         ConfigParseError);
}

TEST_CASE("wrong JSON types are rejected") {
    CHECK_THROWS_AS(config_from_json({{"n_nodes", "many"}}), ConfigParseError);
    CHECK_THROWS_AS(config_from_json({{"battery_init", 20.0}}), ConfigParseError);
    CHECK_THROWS_AS(config_from_json({{"algorithm", 4}}), ConfigParseError);
    CHECK_THROWS_AS(config_from_json({{"algorithm", "DIJKSTRA"}}), ConfigParseError);
    CHECK_THROWS_AS(config_from_json(nlohmann::json::array()), ConfigParseError);
}

TEST_CASE("battery_init parses as [lo, hi]") {
    SimConfig cfg = config_from_json({{"battery_init", {40.0, 60.0}}});
    CHECK(cfg.battery_lo == doctest::Approx(40.0));
    CHECK(cfg.battery_hi == doctest::Approx(60.0));
}

TEST_CASE("algorithm names map both ways, case-insensitive inbound") {
    CHECK(algorithm_name(Algorithm::Lidar) == "LIDAR");
    CHECK(algorithm_name(Algorithm::Wca) == "WCA");
    CHECK(algorithm_from_name("lid") == Algorithm::Lid);
    CHECK(algorithm_from_name("HD") == Algorithm::Hd);
    CHECK(algorithm_from_name("Lidar") == Algorithm::Lidar);
    CHECK_THROWS_AS(algorithm_from_name("fastest"), std::invalid_argument);
}

TEST_CASE("load_config_file distinguishes missing files from bad documents") {
    CHECK_THROWS_AS(load_config_file("/nonexistent/nope.json"), std::exception);

    const std::string path = "bad_config_test.json";
    { std::ofstream(path) << "{ not json"; }
    CHECK_THROWS_AS(load_config_file(path), ConfigParseError);
    std::remove(path.c_str());
}
