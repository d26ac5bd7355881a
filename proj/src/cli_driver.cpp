#include "manet/cli_driver.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "manet/config.hpp"
#include "manet/engine.hpp"
#include "manet/metrics.hpp"

namespace manet {

namespace {

namespace fs = std::filesystem;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// Loads the base config and layers the flag overrides on it.
// Returns kExitOk and fills `cfg`, or prints to `err` and returns a code.
int resolve_config(const std::string& config_path, const CliOverrides& ov, SimConfig& cfg,
                   std::ostream& err) {
    if (!config_path.empty()) {
        try {
            cfg = load_config_file(config_path);
        } catch (const ConfigParseError& e) {
            err << "error: " << config_path << ": " << e.what() << "\n";
            return kExitIo;
        } catch (const std::exception& e) {
            err << "error: cannot read " << config_path << ": " << e.what() << "\n";
            return kExitIo;
        }
    } else {
        cfg = SimConfig{};
    }

    if (ov.algorithm) {
        try {
            cfg.algorithm = algorithm_from_name(*ov.algorithm);
        } catch (const std::invalid_argument& e) {
            err << "error: [algorithm] " << e.what() << "\n";
            return kExitInvalid;
        }
    }
    if (ov.nodes) cfg.n_nodes = *ov.nodes;
    if (ov.speed_max) cfg.speed_max = *ov.speed_max;
    if (ov.seed) cfg.seed = *ov.seed;
    if (ov.duration) cfg.duration = *ov.duration;

    finalize_defaults(cfg);
    auto errors = validate_config(cfg);
    if (!errors.empty()) {
        for (const auto& e : errors) err << "error: [" << e.field << "] " << e.message << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}

int ensure_out_dir(const std::string& out_dir, std::ostream& err) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec || !fs::is_directory(out_dir)) {
        err << "error: cannot create output directory " << out_dir << "\n";
        return kExitIo;
    }
    return kExitOk;
}

bool write_text(const fs::path& path, const std::string& body, std::ostream& err) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << body;
    out.flush();
    if (!out) {
        err << "error: cannot write " << path.string() << "\n";
        return false;
    }
    return true;
}

}  // namespace

int cmd_run(const std::string& config_path, const CliOverrides& overrides,
            const std::string& out_dir, int threads, std::ostream& log, std::ostream& err) {
    SimConfig cfg;
    if (int rc = resolve_config(config_path, overrides, cfg, err); rc != kExitOk) return rc;
    if (int rc = ensure_out_dir(out_dir, err); rc != kExitOk) return rc;

    MetricsReport report = run(cfg, ExecPolicy{threads});

    const fs::path base = fs::path(out_dir) / ("run_" + std::to_string(cfg.seed));
    if (!write_text(fs::path(base).replace_extension(".json"),
                    report_to_json(report).dump(2) + "\n", err))
        return kExitIo;

    std::ofstream csv(fs::path(base).replace_extension(".csv"), std::ios::binary | std::ios::trunc);
    write_report_csv(report, csv);
    csv.flush();
    if (!csv) {
        err << "error: cannot write " << fs::path(base).replace_extension(".csv").string() << "\n";
        return kExitIo;
    }

    log << "algorithm=" << algorithm_name(cfg.algorithm) << " seed=" << cfg.seed
        << " ticks=" << cfg.duration << " total_messages=" << report.total_message_count
        << " final_energy_variance=" << fmt_double(report.final_energy_variance)
        << " reaffiliations=" << report.total_reaffiliations << "\n";
    return kExitOk;
}

int cmd_sweep(const std::string& config_path, const CliOverrides& overrides,
              const SweepSpec& sweep, const std::string& out_dir, int threads, std::ostream& log,
              std::ostream& err) {
    SimConfig base;
    if (int rc = resolve_config(config_path, overrides, base, err); rc != kExitOk) return rc;
    if (sweep.algorithms.empty() || sweep.speeds.empty() || sweep.n_seeds < 1) {
        err << "error: [sweep] needs at least one algorithm, one speed, one seed\n";
        return kExitInvalid;
    }
    if (int rc = ensure_out_dir(out_dir, err); rc != kExitOk) return rc;

    struct Cell {
        Algorithm algorithm;
        double speed_max;
    };
    std::vector<Cell> cells;
    for (const std::string& name : sweep.algorithms) {
        Algorithm alg;
        try {
            alg = algorithm_from_name(name);
        } catch (const std::invalid_argument& e) {
            err << "error: [algorithm] " << e.what() << "\n";
            return kExitInvalid;
        }
        for (double speed : sweep.speeds) cells.push_back({alg, speed});
    }

    // Validate every cell up front so a bad point fails before any run.
    std::vector<SimConfig> configs;
    for (const Cell& cell : cells) {
        for (int i = 0; i < sweep.n_seeds; ++i) {
            SimConfig cfg = base;
            cfg.algorithm = cell.algorithm;
            cfg.speed_max = cell.speed_max;
            cfg.seed = base.seed + static_cast<std::uint64_t>(i);
            finalize_defaults(cfg);
            auto errors = validate_config(cfg);
            if (!errors.empty()) {
                for (const auto& e : errors)
                    err << "error: [" << e.field << "] " << e.message << " (speed_max="
                        << fmt_double(cell.speed_max) << ")\n";
                return kExitInvalid;
            }
            configs.push_back(cfg);
        }
    }

    // Independent seeded runs share nothing; dispatch them in parallel and
    // aggregate serially afterwards.
    std::vector<MetricsReport> reports(configs.size());
#ifdef _OPENMP
#pragma omp parallel for num_threads(threads > 0 ? threads : 1) schedule(dynamic)
#endif
    for (std::size_t i = 0; i < configs.size(); ++i) {
        reports[i] = run(configs[i], ExecPolicy{1});
    }

    std::string table = "algorithm,speed_max,mean_total_messages,mean_final_energy_variance\n";
    for (std::size_t c = 0; c < cells.size(); ++c) {
        double msg_sum = 0.0, var_sum = 0.0;
        for (int i = 0; i < sweep.n_seeds; ++i) {
            const MetricsReport& r = reports[c * sweep.n_seeds + i];
            msg_sum += static_cast<double>(r.total_message_count);
            var_sum += r.final_energy_variance;
        }
        const double n = sweep.n_seeds;
        const std::string row = algorithm_name(cells[c].algorithm) + "," +
                                fmt_double(cells[c].speed_max) + "," + fmt_double(msg_sum / n) +
                                "," + fmt_double(var_sum / n);
        table += row + "\n";
        log << row << "\n";
    }

    if (!write_text(fs::path(out_dir) / "sweep.csv", table, err)) return kExitIo;
    log << "wrote " << (fs::path(out_dir) / "sweep.csv").string() << " (" << cells.size()
        << " rows, " << configs.size() << " runs)\n";
    return kExitOk;
}

}  // namespace manet
