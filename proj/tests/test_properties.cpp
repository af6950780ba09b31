#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "caes/coefficients.hpp"
#include "caes/model_constants.hpp"
#include "caes/steps.hpp"
#include "caes/thermo.hpp"

using namespace caes;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

CavernState consistent_state(double mass, double temp, const CavernParams& prm) {
    return CavernState{0.0, mass, ideal_gas_pressure(mass, temp, prm), temp};
}

CavernParams no_heat(const CavernParams& prm) {
    CavernParams out = prm;
    out.wall_htc_w_m2k = 0.0;
    return out;
}

}  // namespace

TEST_CASE("mass balance is exact to the bit for every model") {
    const CavernParams prm = huntorf_params();
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> mass(5e6, 1.2e7);
    std::uniform_real_distribution<double> temp(270.0, 340.0);
    std::uniform_real_distribution<double> flow(1.0, 300.0);
    std::uniform_real_distribution<double> step(0.5, 600.0);

    const std::vector<ModelKind> kinds = {
        ModelKind::ExactAdiabatic, ModelKind::ExactWithHeatTransfer, ModelKind::BiLinear,
        ModelKind::ConstantTemperature, ModelKind::ReferenceOracle};

    for (int i = 0; i < 100; ++i) {
        const CavernState s = consistent_state(mass(rng), temp(rng), prm);
        const double mdot = flow(rng);
        const double dt = step(rng);
        for (ModelKind kind : kinds) {
            CHECK(model_step(kind, s, Mode::Charge, mdot, dt, prm).mass_kg == s.mass_kg + mdot * dt);
            CHECK(model_step(kind, s, Mode::Discharge, mdot, dt, prm).mass_kg ==
                  s.mass_kg - mdot * dt);
            CHECK(model_step(kind, s, Mode::Idle, 0.0, dt, prm).mass_kg == s.mass_kg);
        }
    }
}

TEST_CASE("h_c = 0 reduction identities") {
    const CavernParams prm = no_heat(huntorf_params());
    const double k = prm.adiabatic_index;
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> mass(6e6, 1.1e7);
    std::uniform_real_distribution<double> temp(270.0, 340.0);
    std::uniform_real_distribution<double> flow(1.0, 300.0);

    SUBCASE("bi-linear discharge collapses to the two binomial factors") {
        for (int i = 0; i < 200; ++i) {
            const CavernState s = consistent_state(mass(rng), temp(rng), prm);
            const double mdot = flow(rng);
            const CavernState next = discharge_step_bilinear(s, mdot, 60.0, prm);
            const double x = mdot * 60.0 / s.mass_kg;
            CHECK(rel(next.pressure_pa, (1.0 - k * x) * s.pressure_pa) < 1e-13);
            CHECK(rel(next.temp_k, (1.0 - (k - 1.0) * x) * s.temp_k) < 1e-13);
        }
    }

    SUBCASE("bi-linear charge collapses to the anchored adiabatic form") {
        const ModelConstants mc = make_model_constants(prm);
        for (int i = 0; i < 200; ++i) {
            const CavernState s = consistent_state(mass(rng), temp(rng), prm);
            const double mdot = flow(rng);
            const double t = 60.0;
            const CavernState next = charge_step_bilinear(s, mdot, t, prm);
            const double p_expect = s.pressure_pa * (1.0 + (k - 1.0) * mdot * t / s.mass_kg) +
                                    mc.charge_pressure_coeff * anchor_power_k(s.mass_kg, prm) *
                                        mdot * t / s.mass_kg;
            const double T_expect = s.temp_k * (1.0 + (k - 2.0) * mdot * t / s.mass_kg) +
                                    mc.charge_temp_coeff * anchor_power_km1(s.mass_kg, prm) *
                                        mdot * t / s.mass_kg;
            CHECK(rel(next.pressure_pa, p_expect) < 1e-13);
            CHECK(rel(next.temp_k, T_expect) < 1e-13);
        }
    }

    SUBCASE("at the anchor mass the charge terms carry the true mass powers") {
        const CavernState s = consistent_state(prm.anchor_mass_kg, 300.0, prm);
        const ModelConstants mc = make_model_constants(prm);
        const double t = 1.0;
        const double mdot = 49.1226;
        const CavernState next = charge_step_bilinear(s, mdot, t, prm);
        const double T_expect =
            s.temp_k * (1.0 + (k - 2.0) * mdot * t / s.mass_kg) +
            mc.charge_temp_coeff * std::pow(s.mass_kg, k - 2.0) * mdot * t;
        CHECK(rel(next.temp_k, T_expect) < 1e-13);
    }

    SUBCASE("bi-linear idle becomes the identity") {
        for (int i = 0; i < 50; ++i) {
            const CavernState s = consistent_state(mass(rng), temp(rng), prm);
            const CavernState next = idle_step_bilinear(s, 3600.0, prm);
            CHECK(next.pressure_pa == s.pressure_pa);
            CHECK(next.temp_k == s.temp_k);
        }
    }

    SUBCASE("exact steps with no flow and no heat transfer are identities") {
        const CavernState s = consistent_state(9e6, 310.0, prm);
        for (ModelKind kind : {ModelKind::ExactAdiabatic, ModelKind::ExactWithHeatTransfer,
                               ModelKind::ReferenceOracle}) {
            for (Mode mode : {Mode::Charge, Mode::Discharge, Mode::Idle}) {
                const CavernState next = model_step(kind, s, mode, 0.0, 60.0, prm);
                CHECK(next.pressure_pa == s.pressure_pa);
                CHECK(next.temp_k == s.temp_k);
                CHECK(next.mass_kg == s.mass_kg);
            }
        }
    }

    SUBCASE("the reference with h_c = 0 matches the exact adiabatic composition") {
        const CavernState s = consistent_state(8e6, 300.0, prm);
        for (long long substeps : {1LL, 7LL, 64LL}) {
            const CavernState split = oracle_step(s, Mode::Charge, 49.1226, 60.0, prm, substeps);
            const CavernState direct = charge_step_exact(s, 49.1226, 60.0, prm);
            CHECK(rel(split.pressure_pa, direct.pressure_pa) < 1e-12);
            CHECK(rel(split.temp_k, direct.temp_k) < 1e-12);
        }
    }
}

TEST_CASE("reference integrator consistency") {
    const CavernParams prm = huntorf_params();

    SUBCASE("idle equals the exact idle step for any substep count") {
        const CavernState s = consistent_state(9.2e6, 318.15, prm);
        const CavernState exact = idle_step_exact(s, 3600.0, prm);
        for (long long substeps : {1LL, 10LL, 1000LL}) {
            const CavernState o = oracle_step(s, Mode::Idle, 0.0, 3600.0, prm, substeps);
            CHECK(o.temp_k == exact.temp_k);
            CHECK(o.pressure_pa == exact.pressure_pa);
        }
    }

    SUBCASE("one long step equals the composition of short steps") {
        const CavernState s0 = consistent_state(mass_from_state(46e5, 293.15, prm), 293.15, prm);
        CavernState folded = s0;
        for (int i = 0; i < 60; ++i) {
            folded = oracle_step(folded, Mode::Charge, 49.1226, 1.0, prm, 1);
        }
        const CavernState once = oracle_step(s0, Mode::Charge, 49.1226, 60.0, prm, 60);
        CHECK(rel(once.pressure_pa, folded.pressure_pa) < 1e-12);
        CHECK(rel(once.temp_k, folded.temp_k) < 1e-12);
    }

    SUBCASE("doubling the default substeps moves the answer below 1e-8") {
        const CavernState charge_start =
            consistent_state(mass_from_state(46e5, 293.15, prm), 293.15, prm);
        const CavernState discharge_start =
            consistent_state(mass_from_state(66e5, 313.15, prm), 313.15, prm);
        struct Probe {
            CavernState state;
            Mode mode;
            double mdot;
        };
        for (const Probe& probe : {Probe{charge_start, Mode::Charge, 49.1226},
                                   Probe{discharge_start, Mode::Discharge, 189.6677}}) {
            for (double dt : {1.0, 60.0}) {
                const long long base = static_cast<long long>(std::ceil(dt / 0.1));
                const CavernState a = oracle_step(probe.state, probe.mode, probe.mdot, dt, prm, base);
                const CavernState b =
                    oracle_step(probe.state, probe.mode, probe.mdot, dt, prm, 2 * base);
                CHECK(rel(a.pressure_pa, b.pressure_pa) < 1e-8);
                CHECK(rel(a.temp_k, b.temp_k) < 1e-8);
            }
        }
    }

    SUBCASE("exact-model outputs satisfy the gas law along a charge") {
        CavernState s = consistent_state(mass_from_state(46e5, 293.15, prm), 293.15, prm);
        for (int i = 0; i < 100; ++i) {
            s = model_step(ModelKind::ExactWithHeatTransfer, s, Mode::Charge, 49.1226, 60.0, prm);
            CHECK(rel(s.pressure_pa * prm.volume_m3,
                      s.mass_kg * prm.gas_constant_j_kgk * s.temp_k) < 1e-10);
        }
    }
}

TEST_CASE("per-step bi-linear error shrinks as dt squared") {
    const CavernParams prm = huntorf_params();
    // Nominal operating states at the linearization anchor: there the mass
    // powers are exact and the leftover error is the second-order truncation.
    for (double temp : {300.0, 325.0}) {
        const CavernState s = consistent_state(prm.anchor_mass_kg, temp, prm);
        struct Case {
            Mode mode;
            double mdot;
        };
        for (const Case& c : {Case{Mode::Charge, 49.1226}, Case{Mode::Discharge, 189.6677}}) {
            double disc_p[2];
            double disc_T[2];
            int slot = 0;
            for (double dt : {60.0, 30.0}) {
                const CavernState bi = model_step(ModelKind::BiLinear, s, c.mode, c.mdot, dt, prm);
                const CavernState ref = oracle_step(s, c.mode, c.mdot, dt, prm);
                disc_p[slot] = rel(bi.pressure_pa, ref.pressure_pa);
                disc_T[slot] = rel(bi.temp_k, ref.temp_k);
                ++slot;
            }
            const double ratio_p = disc_p[0] / disc_p[1];
            const double ratio_T = disc_T[0] / disc_T[1];
            CHECK(ratio_p > 3.5);
            CHECK(ratio_p < 4.5);
            CHECK(ratio_T > 3.5);
            CHECK(ratio_T < 4.5);
        }
    }
}

TEST_CASE("exported step coefficients") {
    const CavernParams prm = huntorf_params();
    std::mt19937_64 rng(59);
    std::uniform_real_distribution<double> mass(6e6, 1.1e7);
    std::uniform_real_distribution<double> temp(270.0, 340.0);
    std::uniform_real_distribution<double> flow(1.0, 250.0);

    SUBCASE("affine evaluation reproduces the bi-linear steps") {
        for (int i = 0; i < 200; ++i) {
            const CavernState s = consistent_state(mass(rng), temp(rng), prm);
            const double mdot = flow(rng);
            const double dt = 60.0;

            const StepCoefficients ch = export_step_coefficients(s, Mode::Charge, dt, prm);
            const CavernState cstep = charge_step_bilinear(s, mdot, dt, prm);
            CHECK(rel(ch.alpha_p + ch.beta_p * mdot, cstep.pressure_pa) < 1e-12);
            CHECK(rel(ch.alpha_T + ch.beta_T * mdot, cstep.temp_k) < 1e-12);
            CHECK(rel(evaluate_terms(ch.pressure_terms, s, mdot) / s.mass_kg, cstep.pressure_pa) <
                  1e-12);
            CHECK(rel(evaluate_terms(ch.temperature_terms, s, mdot) / s.mass_kg, cstep.temp_k) <
                  1e-12);

            const StepCoefficients dis = export_step_coefficients(s, Mode::Discharge, dt, prm);
            const CavernState dstep = discharge_step_bilinear(s, mdot, dt, prm);
            CHECK(rel(dis.alpha_p + dis.beta_p * mdot, dstep.pressure_pa) < 1e-12);
            CHECK(rel(dis.alpha_T + dis.beta_T * mdot, dstep.temp_k) < 1e-12);

            const StepCoefficients idle = export_step_coefficients(s, Mode::Idle, dt, prm);
            const CavernState istep = idle_step_bilinear(s, dt, prm);
            CHECK(idle.beta_p == 0.0);
            CHECK(idle.beta_T == 0.0);
            CHECK(rel(idle.alpha_p, istep.pressure_pa) < 1e-12);
            CHECK(rel(idle.alpha_T, istep.temp_k) < 1e-12);
            CHECK(rel(evaluate_terms(idle.pressure_terms, s, 0.0), istep.pressure_pa) < 1e-12);
            CHECK(rel(evaluate_terms(idle.temperature_terms, s, 0.0), istep.temp_k) < 1e-12);
        }
    }

    SUBCASE("step outputs are affine in the flow rate") {
        const CavernState s = consistent_state(9e6, 310.0, prm);
        for (Mode mode : {Mode::Charge, Mode::Discharge}) {
            auto value = [&](double mdot) {
                return mode == Mode::Charge ? charge_step_bilinear(s, mdot, 60.0, prm)
                                            : discharge_step_bilinear(s, mdot, 60.0, prm);
            };
            const CavernState a = value(10.0);
            const CavernState b = value(20.0);
            const CavernState c = value(30.0);
            CHECK(std::abs(a.pressure_pa - 2.0 * b.pressure_pa + c.pressure_pa) <
                  1e-12 * b.pressure_pa);
            CHECK(std::abs(a.temp_k - 2.0 * b.temp_k + c.temp_k) < 1e-12 * b.temp_k);
        }
    }

    SUBCASE("product form is affine in each state variable separately") {
        const CavernState base = consistent_state(9e6, 310.0, prm);
        const double mdot = 100.0;
        for (Mode mode : {Mode::Charge, Mode::Discharge}) {
            const StepCoefficients co = export_step_coefficients(base, mode, 60.0, prm);
            auto second_difference = [&](auto mutate) {
                CavernState lo = base;
                CavernState mid = base;
                CavernState hi = base;
                mutate(lo, -1.0);
                mutate(hi, 1.0);
                for (const auto* terms : {&co.pressure_terms, &co.temperature_terms}) {
                    const double a = evaluate_terms(*terms, lo, mdot);
                    const double b = evaluate_terms(*terms, mid, mdot);
                    const double c = evaluate_terms(*terms, hi, mdot);
                    CHECK(std::abs(a - 2.0 * b + c) < 1e-12 * std::abs(b));
                }
            };
            second_difference([](CavernState& s, double sign) { s.mass_kg += sign * 1e6; });
            second_difference([](CavernState& s, double sign) { s.pressure_pa += sign * 5e5; });
            second_difference([](CavernState& s, double sign) { s.temp_k += sign * 20.0; });
        }
    }

    SUBCASE("flow sensitivity matches a central finite difference") {
        const CavernState s = consistent_state(mass_from_state(66e5, 313.15, prm), 313.15, prm);
        const StepCoefficients co = export_step_coefficients(s, Mode::Discharge, 60.0, prm);
        const double h = 1.0;
        const CavernState up = discharge_step_bilinear(s, 100.0 + h, 60.0, prm);
        const CavernState down = discharge_step_bilinear(s, 100.0 - h, 60.0, prm);
        CHECK(rel((up.pressure_pa - down.pressure_pa) / (2.0 * h), co.beta_p) < 1e-9);
        CHECK(rel((up.temp_k - down.temp_k) / (2.0 * h), co.beta_T) < 1e-9);
        // Leading structure of the flow coefficient: the adiabatic release
        // slope plus the quadratic-in-time wall term.
        const double k = prm.adiabatic_index;
        const double adiabatic_slope = -k * s.pressure_pa * 60.0 / s.mass_kg;
        const double wall_term = co.beta_p - adiabatic_slope;
        CHECK(std::abs(wall_term) < std::abs(adiabatic_slope) * 0.05);
        CHECK(wall_term != 0.0);
    }
}
