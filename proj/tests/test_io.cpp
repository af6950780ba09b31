#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "caes/io.hpp"
#include "caes/thermo.hpp"
#include "caes/trace.hpp"
#include "caes/units.hpp"

using namespace caes;

namespace {

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

void write(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

}  // namespace

TEST_CASE("trace CSV format") {
    const CavernParams prm = huntorf_params();
    const SimulationTrace trace = run(builtin_scenario("idle"), ModelKind::BiLinear, 3600.0, prm);
    const std::string csv = io::trace_csv(trace);

    CHECK(csv.rfind("t_s,m_kg,p_pa,T_k\n", 0) == 0);
    CHECK(csv.find('\r') == std::string::npos);

    // header + 17 records
    size_t lines = 0;
    for (char c : csv) {
        lines += c == '\n';
    }
    CHECK(lines == 18);

    SUBCASE("numbers round-trip exactly at 17 significant digits") {
        std::istringstream in(csv);
        std::string line;
        std::getline(in, line);  // header
        for (const CavernState& r : trace.records) {
            REQUIRE(std::getline(in, line));
            double t = 0;
            double m = 0;
            double p = 0;
            double T = 0;
            REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &t, &m, &p, &T) == 4);
            CHECK(t == r.time_s);
            CHECK(m == r.mass_kg);
            CHECK(p == r.pressure_pa);
            CHECK(T == r.temp_k);
        }
    }
}

TEST_CASE("trace JSON mirrors the trace") {
    const CavernParams prm = huntorf_params();
    const SimulationTrace trace = run(builtin_scenario("idle"), ModelKind::BiLinear, 3600.0, prm);
    const nlohmann::json j = nlohmann::json::parse(io::trace_json(trace));
    CHECK(j["model"] == "bilinear");
    CHECK(j["scenario"] == "idle");
    CHECK(j["records"].size() == trace.records.size());
    CHECK(j["records"][0][0] == 0.0);
    CHECK(j["records"][0][2].get<double>() == trace.records[0].pressure_pa);
    CHECK(j["warnings"].is_array());
}

TEST_CASE("sweep CSV carries both temperature denominators") {
    const CavernParams prm = huntorf_params();
    const std::vector<SweepRow> rows =
        interval_sweep(builtin_scenario("idle"), {3600.0, 7200.0}, prm);
    const std::string csv = io::sweep_csv(rows);
    CHECK(csv.rfind("interval_s,final_err_T_k,final_rel_T,final_rel_T_celsius,"
                    "final_err_p_pa,final_rel_p\n",
                    0) == 0);
    size_t lines = 0;
    for (char c : csv) {
        lines += c == '\n';
    }
    CHECK(lines == 3);
}

TEST_CASE("atomic write replaces the target") {
    const std::filesystem::path path = temp_file("caes_io_atomic.txt");
    io::write_file_atomic(path.string(), "first");
    io::write_file_atomic(path.string(), "second");
    std::ifstream in(path);
    std::string content;
    std::getline(in, content);
    CHECK(content == "second");
    CHECK(!std::filesystem::exists(path.string() + ".tmp"));
    std::filesystem::remove(path);
}

TEST_CASE("params file uses plant-table units and fills defaults") {
    const std::filesystem::path path = temp_file("caes_params.json");
    write(path, R"({"V_s_m3": 141000, "A_c_m2": 25000, "h_c_w_m2k": 30,
                    "c_v_j_kgk": 718.3, "R_j_kgk": 286.7, "k": 1.4,
                    "T_RW_c": 40, "p_in_bar": 66, "T_in_c": 50})");
    const CavernParams prm = io::load_params_json(path.string());
    CHECK(prm.inlet_pressure_pa == 66e5);
    CHECK(prm.inlet_temp_k == 323.15);
    CHECK(prm.wall_temp_k == 313.15);
    CHECK(prm.anchor_mass_kg == prm.avg_density_kg_m3 * prm.volume_m3);

    SUBCASE("partial files override selectively") {
        write(path, R"({"h_c_w_m2k": 0})");
        const CavernParams adiabatic = io::load_params_json(path.string());
        CHECK(adiabatic.wall_htc_w_m2k == 0.0);
        CHECK(adiabatic.volume_m3 == 141000.0);
    }

    SUBCASE("density override moves the anchor") {
        write(path, R"({"rho_av_kg_m3": 64.0})");
        const CavernParams prm2 = io::load_params_json(path.string());
        CHECK(prm2.anchor_mass_kg == 64.0 * 141000.0);
    }

    SUBCASE("bad JSON is rejected") {
        write(path, "{nope");
        CHECK_THROWS(io::load_params_json(path.string()));
    }
    SUBCASE("missing file is rejected") {
        CHECK_THROWS(io::load_params_json("/nonexistent/caes.json"));
    }
    std::filesystem::remove(path);
}

TEST_CASE("scenario file round trip") {
    const std::filesystem::path path = temp_file("caes_scenario.json");
    write(path, R"({"name": "two-phase", "initial_p_bar": 50, "initial_T_c": 25,
                    "segments": [
                      {"mode": "charge", "mdot_kg_s": 40, "duration_s": 7200, "dt_s": 60},
                      {"mode": "idle", "duration_s": 3600, "dt_s": 60}
                    ]})");
    const Scenario s = io::load_scenario_json(path.string());
    CHECK(s.name == "two-phase");
    CHECK(s.initial_pressure_pa == 50e5);
    CHECK(s.initial_temp_k == units::celsius_to_kelvin(25.0));
    REQUIRE(s.segments.size() == 2);
    CHECK(s.segments[0].mode == Mode::Charge);
    CHECK(s.segments[1].mode == Mode::Idle);
    CHECK(s.total_duration_s() == 10800.0);

    // A two-segment schedule runs end to end.
    const CavernParams prm = huntorf_params();
    const SimulationTrace trace = run(s, ModelKind::BiLinear, 0.0, prm);
    CHECK(trace.records.size() == 1 + 120 + 60);

    SUBCASE("missing keys are rejected") {
        write(path, R"({"name": "broken", "segments": []})");
        CHECK_THROWS(io::load_scenario_json(path.string()));
    }
    std::filesystem::remove(path);
}
