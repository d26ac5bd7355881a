#include "manet/config.hpp"

#include <cmath>
#include <cctype>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace manet {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

void require_keys(const nlohmann::json& obj, const std::set<std::string>& allowed,
                  const std::string& scope) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key())) {
            throw ConfigParseError("unknown key \"" + scope + it.key() + "\"");
        }
    }
}

template <typename T>
void read(const nlohmann::json& obj, const char* key, T& out) {
    if (!obj.contains(key)) return;
    try {
        out = obj.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ConfigParseError(std::string("key \"") + key + "\" has the wrong type");
    }
}

}  // namespace

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Lid: return "LID";
        case Algorithm::Hd: return "HD";
        case Algorithm::Wca: return "WCA";
        case Algorithm::Lidar: return "LIDAR";
    }
    return "LIDAR";
}

Algorithm algorithm_from_name(const std::string& name) {
    std::string upper = name;
    for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (upper == "LID") return Algorithm::Lid;
    if (upper == "HD") return Algorithm::Hd;
    if (upper == "WCA") return Algorithm::Wca;
    if (upper == "LIDAR") return Algorithm::Lidar;
    throw std::invalid_argument("unknown algorithm \"" + name + "\" (expected LID, HD, WCA or LIDAR)");
}

SimConfig& finalize_defaults(SimConfig& cfg) {
    if (cfg.direction_hold < 0) cfg.direction_hold = cfg.hp_min;
    if (cfg.m_sat < 0) cfg.m_sat = 2.0 * cfg.p;
    if (cfg.wca.ideal_degree < 0) {
        const double area = cfg.terrain_width * cfg.terrain_height;
        cfg.wca.ideal_degree =
            area > 0 ? cfg.n_nodes * std::numbers::pi * cfg.range * cfg.range / area : 0.0;
    }
    return cfg;
}

std::vector<ConfigError> validate_config(const SimConfig& cfg) {
    std::vector<ConfigError> errors;
    auto fail = [&](const std::string& field, const std::string& msg) {
        errors.push_back({field, msg});
    };

    if (cfg.n_nodes < 1) fail("n_nodes", "must be >= 1, got " + std::to_string(cfg.n_nodes));
    if (cfg.terrain_width <= 0)
        fail("terrain.width", "must be > 0, got " + fmt(cfg.terrain_width));
    if (cfg.terrain_height <= 0)
        fail("terrain.height", "must be > 0, got " + fmt(cfg.terrain_height));
    if (cfg.range <= 0) fail("range", "must be > 0, got " + fmt(cfg.range));
    if (cfg.speed_min < 0) fail("speed_min", "must be >= 0, got " + fmt(cfg.speed_min));
    if (cfg.speed_max < cfg.speed_min)
        fail("speed_max", "speed_min > speed_max (" + fmt(cfg.speed_min) + " > " +
                              fmt(cfg.speed_max) + ")");
    if (cfg.direction_hold < 1)
        fail("direction_hold", "must be >= 1, got " + std::to_string(cfg.direction_hold));
    if (cfg.hp_min < 1) fail("hp_min", "must be >= 1, got " + std::to_string(cfg.hp_min));
    if (cfg.hp_min > cfg.hp_max)
        fail("hp_min", "hp_min > hp_max (" + std::to_string(cfg.hp_min) + " > " +
                           std::to_string(cfg.hp_max) + ")");
    if (cfg.k < 1) fail("k", "must be >= 1, got " + std::to_string(cfg.k));
    if (cfg.p < 1) fail("p", "must be >= 1, got " + std::to_string(cfg.p));
    if (cfg.m_sat <= 0) fail("m_sat", "must be > 0, got " + fmt(cfg.m_sat));
    if (cfg.w1 < 0 || cfg.w1 > 1) fail("w1", "must be in [0, 1], got " + fmt(cfg.w1));
    if (cfg.w2 < 0 || cfg.w2 > 1) fail("w2", "must be in [0, 1], got " + fmt(cfg.w2));
    if (std::abs(cfg.w1 + cfg.w2 - 1.0) > 1e-9)
        fail("w1", "w1+w2 != 1 (" + fmt(cfg.w1) + " + " + fmt(cfg.w2) + ")");
    if (cfg.battery_lo <= 0)
        fail("battery_init", "lower bound must be > 0, got " + fmt(cfg.battery_lo));
    if (cfg.battery_lo > cfg.battery_hi)
        fail("battery_init", "lo > hi (" + fmt(cfg.battery_lo) + " > " + fmt(cfg.battery_hi) + ")");
    if (cfg.energy.e_ord < 0)
        fail("energy.e_ord", "must be >= 0, got " + fmt(cfg.energy.e_ord));
    if (cfg.energy.e_ch_base < 0)
        fail("energy.e_ch_base", "must be >= 0, got " + fmt(cfg.energy.e_ch_base));
    if (cfg.energy.e_ch_per_member < 0)
        fail("energy.e_ch_per_member", "must be >= 0, got " + fmt(cfg.energy.e_ch_per_member));
    if (cfg.energy.e_ch_base < cfg.energy.e_ord)
        fail("energy.e_ch_base", "must be >= e_ord (" + fmt(cfg.energy.e_ch_base) + " < " +
                                     fmt(cfg.energy.e_ord) + ")");
    if (cfg.wca.c1 < 0 || cfg.wca.c2 < 0 || cfg.wca.c3 < 0)
        fail("wca", "coefficients must be >= 0");
    if (std::abs(cfg.wca.c1 + cfg.wca.c2 + cfg.wca.c3 - 1.0) > 1e-9)
        fail("wca", "c1+c2+c3 != 1 (" + fmt(cfg.wca.c1) + " + " + fmt(cfg.wca.c2) + " + " +
                        fmt(cfg.wca.c3) + ")");
    if (cfg.wca.ideal_degree <= 0)
        fail("wca.ideal_degree", "must be > 0, got " + fmt(cfg.wca.ideal_degree));
    if (cfg.duration < 0)
        fail("duration", "must be >= 0, got " + std::to_string(cfg.duration));
    if (cfg.snapshot_every < 1)
        fail("snapshot_every", "must be >= 1, got " + std::to_string(cfg.snapshot_every));
    return errors;
}

SimConfig config_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ConfigParseError("config document must be a JSON object");

    static const std::set<std::string> top_keys = {
        "n_nodes", "terrain", "range", "speed_min", "speed_max", "direction_hold",
        "hp_min", "hp_max", "k", "p", "m_sat", "w1", "w2", "battery_init",
        "energy", "wca", "duration", "seed", "algorithm", "snapshot_every"};
    require_keys(doc, top_keys, "");

    SimConfig cfg;
    read(doc, "n_nodes", cfg.n_nodes);
    if (doc.contains("terrain")) {
        const auto& t = doc.at("terrain");
        if (!t.is_object()) throw ConfigParseError("key \"terrain\" must be an object");
        require_keys(t, {"width", "height"}, "terrain.");
        read(t, "width", cfg.terrain_width);
        read(t, "height", cfg.terrain_height);
    }
    read(doc, "range", cfg.range);
    read(doc, "speed_min", cfg.speed_min);
    read(doc, "speed_max", cfg.speed_max);
    read(doc, "direction_hold", cfg.direction_hold);
    read(doc, "hp_min", cfg.hp_min);
    read(doc, "hp_max", cfg.hp_max);
    read(doc, "k", cfg.k);
    read(doc, "p", cfg.p);
    read(doc, "m_sat", cfg.m_sat);
    read(doc, "w1", cfg.w1);
    read(doc, "w2", cfg.w2);
    if (doc.contains("battery_init")) {
        const auto& b = doc.at("battery_init");
        if (!b.is_array() || b.size() != 2)
            throw ConfigParseError("key \"battery_init\" must be a [lo, hi] array");
        cfg.battery_lo = b.at(0).get<double>();
        cfg.battery_hi = b.at(1).get<double>();
    }
    if (doc.contains("energy")) {
        const auto& e = doc.at("energy");
        if (!e.is_object()) throw ConfigParseError("key \"energy\" must be an object");
        require_keys(e, {"e_ord", "e_ch_base", "e_ch_per_member"}, "energy.");
        read(e, "e_ord", cfg.energy.e_ord);
        read(e, "e_ch_base", cfg.energy.e_ch_base);
        read(e, "e_ch_per_member", cfg.energy.e_ch_per_member);
    }
    if (doc.contains("wca")) {
        const auto& w = doc.at("wca");
        if (!w.is_object()) throw ConfigParseError("key \"wca\" must be an object");
        require_keys(w, {"c1", "c2", "c3", "ideal_degree"}, "wca.");
        read(w, "c1", cfg.wca.c1);
        read(w, "c2", cfg.wca.c2);
        read(w, "c3", cfg.wca.c3);
        read(w, "ideal_degree", cfg.wca.ideal_degree);
    }
    read(doc, "duration", cfg.duration);
    read(doc, "seed", cfg.seed);
    if (doc.contains("algorithm")) {
        if (!doc.at("algorithm").is_string())
            throw ConfigParseError("key \"algorithm\" must be a string");
        try {
            cfg.algorithm = algorithm_from_name(doc.at("algorithm").get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ConfigParseError(e.what());
        }
    }
    read(doc, "snapshot_every", cfg.snapshot_every);
    return cfg;
}

nlohmann::json config_to_json(const SimConfig& cfg) {
    return nlohmann::json{
        {"n_nodes", cfg.n_nodes},
        {"terrain", {{"width", cfg.terrain_width}, {"height", cfg.terrain_height}}},
        {"range", cfg.range},
        {"speed_min", cfg.speed_min},
        {"speed_max", cfg.speed_max},
        {"direction_hold", cfg.direction_hold},
        {"hp_min", cfg.hp_min},
        {"hp_max", cfg.hp_max},
        {"k", cfg.k},
        {"p", cfg.p},
        {"m_sat", cfg.m_sat},
        {"w1", cfg.w1},
        {"w2", cfg.w2},
        {"battery_init", {cfg.battery_lo, cfg.battery_hi}},
        {"energy",
         {{"e_ord", cfg.energy.e_ord},
          {"e_ch_base", cfg.energy.e_ch_base},
          {"e_ch_per_member", cfg.energy.e_ch_per_member}}},
        {"wca",
         {{"c1", cfg.wca.c1},
          {"c2", cfg.wca.c2},
          {"c3", cfg.wca.c3},
          {"ideal_degree", cfg.wca.ideal_degree}}},
        {"duration", cfg.duration},
        {"seed", cfg.seed},
        {"algorithm", algorithm_name(cfg.algorithm)},
        {"snapshot_every", cfg.snapshot_every},
    };
}

SimConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open config file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return config_from_json(doc);
}

}  // namespace manet
