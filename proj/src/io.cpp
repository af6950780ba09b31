#include "caes/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "caes/units.hpp"

namespace caes::io {

namespace {

// Full-precision decimal float: 17 significant digits round-trip doubles.
std::string full(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

nlohmann::json trace_to_json(const SimulationTrace& trace) {
    nlohmann::json j;
    j["model"] = to_string(trace.model);
    j["scenario"] = trace.scenario;
    j["records"] = nlohmann::json::array();
    for (const CavernState& r : trace.records) {
        j["records"].push_back({r.time_s, r.mass_kg, r.pressure_pa, r.temp_k});
    }
    j["warnings"] = nlohmann::json::array();
    for (const auto& [t, msg] : trace.warnings) {
        j["warnings"].push_back({{"t_s", t}, {"message", msg}});
    }
    return j;
}

}  // namespace

std::string trace_csv(const SimulationTrace& trace) {
    std::string out = "t_s,m_kg,p_pa,T_k\n";
    for (const CavernState& r : trace.records) {
        out += full(r.time_s);
        out += ',';
        out += full(r.mass_kg);
        out += ',';
        out += full(r.pressure_pa);
        out += ',';
        out += full(r.temp_k);
        out += '\n';
    }
    return out;
}

std::string trace_json(const SimulationTrace& trace) { return trace_to_json(trace).dump(); }

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "interval_s,final_err_T_k,final_rel_T,final_rel_T_celsius,final_err_p_pa,final_rel_p\n";
    for (const SweepRow& r : rows) {
        out += full(r.interval_s);
        out += ',';
        out += full(r.final_err_T_k);
        out += ',';
        out += full(r.final_rel_T);
        out += ',';
        out += full(r.final_rel_T_celsius);
        out += ',';
        out += full(r.final_err_p_pa);
        out += ',';
        out += full(r.final_rel_p);
        out += '\n';
    }
    return out;
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
    nlohmann::json j = nlohmann::json::array();
    for (const SweepRow& r : rows) {
        j.push_back({{"interval_s", r.interval_s},
                     {"final_err_T_k", r.final_err_T_k},
                     {"final_rel_T", r.final_rel_T},
                     {"final_rel_T_celsius", r.final_rel_T_celsius},
                     {"final_err_p_pa", r.final_err_p_pa},
                     {"final_rel_p", r.final_rel_p}});
    }
    return j.dump();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("write_file_atomic: cannot open " + tmp.string());
        }
        out << content;
        if (!out.flush()) {
            throw std::runtime_error("write_file_atomic: failed writing " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, target);
}

namespace {

nlohmann::json parse_file(const std::string& path, const char* where) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error(std::string(where) + ": cannot open " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string(where) + ": bad JSON in " + path + ": " + e.what());
    }
    return j;
}

double get_or(const nlohmann::json& j, const char* key, double fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    if (!j.at(key).is_number()) {
        throw std::runtime_error(std::string("load_params_json: key '") + key +
                                 "' must be a number");
    }
    return j.at(key).get<double>();
}

}  // namespace

CavernParams load_params_json(const std::string& path) {
    const nlohmann::json j = parse_file(path, "load_params_json");
    const CavernParams base = huntorf_params();
    using units::bar_to_pa;
    using units::celsius_to_kelvin;
    using units::kelvin_to_celsius;
    using units::pa_to_bar;

    return make_params(get_or(j, "V_s_m3", base.volume_m3),
                       get_or(j, "A_c_m2", base.wall_area_m2),
                       get_or(j, "h_c_w_m2k", base.wall_htc_w_m2k),
                       get_or(j, "c_v_j_kgk", base.cv_j_kgk),
                       get_or(j, "R_j_kgk", base.gas_constant_j_kgk),
                       get_or(j, "k", base.adiabatic_index),
                       celsius_to_kelvin(get_or(j, "T_RW_c", kelvin_to_celsius(base.wall_temp_k))),
                       bar_to_pa(get_or(j, "p_in_bar", pa_to_bar(base.inlet_pressure_pa))),
                       celsius_to_kelvin(get_or(j, "T_in_c", kelvin_to_celsius(base.inlet_temp_k))),
                       get_or(j, "rho_av_kg_m3", base.avg_density_kg_m3));
}

Scenario load_scenario_json(const std::string& path) {
    const nlohmann::json j = parse_file(path, "load_scenario_json");
    try {
        Scenario s;
        s.name = j.at("name").get<std::string>();
        s.initial_pressure_pa = units::bar_to_pa(j.at("initial_p_bar").get<double>());
        s.initial_temp_k = units::celsius_to_kelvin(j.at("initial_T_c").get<double>());
        for (const nlohmann::json& seg : j.at("segments")) {
            s.segments.push_back(make_segment(mode_from_string(seg.at("mode").get<std::string>()),
                                              seg.value("mdot_kg_s", 0.0),
                                              seg.at("duration_s").get<double>(),
                                              seg.value("dt_s", 1.0)));
        }
        if (s.segments.empty()) {
            throw std::runtime_error("load_scenario_json: scenario has no segments");
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("load_scenario_json: bad scenario file " + path + ": " +
                                 e.what());
    }
}

}  // namespace caes::io
