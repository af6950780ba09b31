// Command-line front end: scenario simulation, Table-style validation
// reports, and time-interval sweeps. Exit codes: 0 success, 1 runtime or
// domain failure, 2 usage or configuration failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "caes/io.hpp"
#include "caes/metrics.hpp"
#include "caes/params.hpp"
#include "caes/scenario.hpp"
#include "caes/trace.hpp"
#include "caes/units.hpp"

namespace {

struct CommonOpts {
    std::string params_path;
    std::string out_path;
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
    cmd->add_option("--params", opts->params_path, "Cavern parameter JSON file")
        ->envname("CAES_PARAMS");
    cmd->add_option("--out", opts->out_path, "Output file (stdout when omitted)");
    cmd->add_option("--format", opts->format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

caes::CavernParams resolve_params(const CommonOpts& opts) {
    if (opts.params_path.empty()) {
        return caes::huntorf_params();
    }
    return caes::io::load_params_json(opts.params_path);
}

caes::Scenario resolve_scenario(const std::string& name_or_path) {
    for (const caes::Scenario& s : caes::builtin_scenarios()) {
        if (s.name == name_or_path) {
            return s;
        }
    }
    return caes::io::load_scenario_json(name_or_path);
}

void emit(const CommonOpts& opts, const std::string& content) {
    if (opts.out_path.empty()) {
        std::cout << content;
    } else {
        caes::io::write_file_atomic(opts.out_path, content);
    }
}

struct ValidateBand {
    double lower;  // 0 when only an upper bound applies
    double upper;
};

int cmd_validate(const CommonOpts& opts, double dt, const std::string& extra_model) {
    const caes::CavernParams params = resolve_params(opts);

    // Accuracy bands for the bi-linear model against the reference, per
    // scenario (same bands for pressure and temperature).
    const std::vector<std::pair<std::string, ValidateBand>> bands = {
        {"charging", {1e-4, 5e-3}},
        {"discharging", {0.0, 5e-3}},
        {"idle", {0.0, 1e-4}},
    };

    nlohmann::json jout;
    std::string csv = "quantity,scenario,mare,lower_bound,upper_bound,status\n";
    std::printf("%-12s %-12s %-12s %-12s %s\n", "quantity", "charging", "discharging", "idle",
                "status");

    bool all_pass = true;
    std::vector<caes::ErrorReport> reports;
    for (const auto& [name, band] : bands) {
        const caes::Scenario scenario = caes::builtin_scenario(name);
        const caes::SimulationTrace bilinear =
            caes::run(scenario, caes::ModelKind::BiLinear, dt, params);
        const caes::SimulationTrace oracle =
            caes::run(scenario, caes::ModelKind::ReferenceOracle, dt, params);
        reports.push_back(caes::compare(bilinear, oracle));
    }

    for (int qi = 0; qi < 2; ++qi) {
        const char* quantity = qi == 0 ? "pressure" : "temperature";
        std::string row_status = "PASS";
        char cells[3][24];
        for (size_t si = 0; si < bands.size(); ++si) {
            const double mare = qi == 0 ? reports[si].mare_p : reports[si].mare_T;
            const ValidateBand& band = bands[si].second;
            const bool ok = mare <= band.upper && mare >= band.lower;
            if (!ok) {
                row_status = "FAIL";
                all_pass = false;
            }
            std::snprintf(cells[si], sizeof(cells[si]), "%.4e", mare);
            char lo[24];
            std::snprintf(lo, sizeof(lo), "%g", band.lower);
            char hi[24];
            std::snprintf(hi, sizeof(hi), "%g", band.upper);
            csv += std::string(quantity) + "," + bands[si].first + "," + cells[si] + "," + lo +
                   "," + hi + "," + (ok ? "PASS" : "FAIL") + "\n";
            jout["mare"][quantity][bands[si].first] = mare;
            jout["status"][quantity][bands[si].first] = ok ? "PASS" : "FAIL";
        }
        std::printf("%-12s %-12s %-12s %-12s %s\n", quantity, cells[0], cells[1], cells[2],
                    row_status.c_str());
    }

    if (extra_model == "const-temp" || extra_model == "constant-temperature") {
        // Separation of the isothermal baseline from the bi-linear model on
        // the charging scenario: its error must be at least 10x larger.
        const caes::Scenario charging = caes::builtin_scenario("charging");
        const caes::SimulationTrace oracle =
            caes::run(charging, caes::ModelKind::ReferenceOracle, dt, params);
        const caes::ErrorReport ct = caes::compare(
            caes::run(charging, caes::ModelKind::ConstantTemperature, dt, params), oracle);
        const caes::ErrorReport bi =
            caes::compare(caes::run(charging, caes::ModelKind::BiLinear, dt, params), oracle);
        const double ratio_p = ct.mare_p / bi.mare_p;
        const double ratio_T = ct.mare_T / bi.mare_T;
        const bool ok = ratio_p >= 10.0 && ratio_T >= 10.0;
        if (!ok) {
            all_pass = false;
        }
        std::printf("const-temp/bi-linear MARE ratio: p %.1fx, T %.1fx (>= 10x: %s)\n", ratio_p,
                    ratio_T, ok ? "PASS" : "FAIL");
        char buf[160];
        std::snprintf(buf, sizeof(buf), "separation_ratio,charging,%.4e,10,inf,%s\n",
                      std::min(ratio_p, ratio_T), ok ? "PASS" : "FAIL");
        csv += buf;
        jout["separation_ratio"] = {{"pressure", ratio_p}, {"temperature", ratio_T}};
    }

    if (!opts.out_path.empty()) {
        caes::io::write_file_atomic(opts.out_path, opts.format == "json" ? jout.dump() : csv);
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CAES cavern model toolkit (Huntorf defaults)"};
    app.require_subcommand(1);

    CommonOpts sim_opts;
    std::string sim_scenario;
    std::string sim_model = "bilinear";
    double sim_dt = 0.0;
    CLI::App* simulate = app.add_subcommand("simulate", "Run one scenario with one model");
    simulate->add_option("--scenario", sim_scenario, "Builtin name or scenario JSON path")
        ->required();
    simulate->add_option("--model", sim_model,
                         "exact | bilinear | const-temp | oracle | exact-adiabatic");
    simulate->add_option("--dt", sim_dt, "Step size in seconds (default: per-segment)");
    add_common(simulate, &sim_opts);

    CommonOpts val_opts;
    double val_dt = 1.0;
    std::string val_model;
    CLI::App* validate = app.add_subcommand(
        "validate", "Bi-linear accuracy report over the three builtin scenarios");
    validate->add_option("--dt", val_dt, "Step size in seconds");
    validate->add_option("--model", val_model,
                         "Extra baseline to report (const-temp adds the separation ratio)");
    add_common(validate, &val_opts);

    CommonOpts sweep_opts;
    std::string sweep_scenario;
    std::string intervals_arg = "1,60,300,600,1200,3600";
    CLI::App* sweep = app.add_subcommand("sweep", "Final-state error vs step size");
    sweep->add_option("--scenario", sweep_scenario, "Builtin name or scenario JSON path")
        ->required();
    sweep->add_option("--intervals", intervals_arg, "Comma-separated step sizes in seconds");
    add_common(sweep, &sweep_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    // Configuration phase: errors here are usage errors.
    caes::Scenario scenario;
    caes::CavernParams params = caes::huntorf_params();
    std::vector<double> intervals;
    try {
        if (simulate->parsed()) {
            params = resolve_params(sim_opts);
            scenario = resolve_scenario(sim_scenario);
            (void)caes::model_from_string(sim_model);
        } else if (sweep->parsed()) {
            params = resolve_params(sweep_opts);
            scenario = resolve_scenario(sweep_scenario);
            std::stringstream ss(intervals_arg);
            std::string item;
            while (std::getline(ss, item, ',')) {
                intervals.push_back(std::stod(item));
            }
        }
    } catch (const std::exception& err) {
        std::cerr << "configuration error: " << err.what() << "\n";
        return 2;
    }

    // Execution phase: invalid step/scenario combinations are usage errors,
    // everything else is a runtime failure.
    try {
        if (simulate->parsed()) {
            const caes::SimulationTrace trace =
                caes::run(scenario, caes::model_from_string(sim_model), sim_dt, params);
            for (const auto& [t, msg] : trace.warnings) {
                std::cerr << "warning at t=" << t << " s: " << msg << "\n";
            }
            emit(sim_opts, sim_opts.format == "json" ? caes::io::trace_json(trace)
                                                     : caes::io::trace_csv(trace));
            return 0;
        }
        if (validate->parsed()) {
            return cmd_validate(val_opts, val_dt, val_model);
        }
        const std::vector<caes::SweepRow> rows = caes::interval_sweep(scenario, intervals, params);
        emit(sweep_opts, sweep_opts.format == "json" ? caes::io::sweep_json(rows)
                                                     : caes::io::sweep_csv(rows));
        return 0;
    } catch (const std::invalid_argument& err) {
        std::cerr << "usage error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
