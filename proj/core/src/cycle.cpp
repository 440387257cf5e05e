#include "tfopt/cycle.hpp"

#include <cmath>

namespace tfopt {

std::vector<std::pair<const char*, const GasState*>> CycleResult::stations() const {
    return {{"2", &s2},   {"21", &s21}, {"25", &s25}, {"3", &s3},
            {"31", &s31}, {"bleed", &bleed}, {"4", &s4}, {"41", &s41},
            {"45", &s45}, {"46", &s46}, {"5", &s5},   {"6", &s6}, {"7", &s7}};
}

CompressResult compress(const GasState& in, double pi, double e) {
    if (pi == 1.0) return {in, 0.0};
    const double R = gas_constant(in.f);
    const double target = entropy_ref(in.Tt, in.f) + (R / e) * std::log(pi);
    // entropy_ref is strictly increasing in T, so an out-of-window solution
    // can be recognized without running the solve
    if (target > entropy_ref(kTValidMax, in.f))
        throw infeasible_design("compressor_exit_overtemp");
    const double Tout =
        temperature_from_entropy(target, in.f, in.Tt * std::pow(pi, 0.28));
    return {{Tout, in.Pt * pi, in.f, in.mdot},
            enthalpy(Tout, in.f) - enthalpy(in.Tt, in.f)};
}

BurnResult burn(const GasState& in, double Tt4, const ComponentEfficiencies& eff,
                const FuelSpec& fuel) {
    if (Tt4 > kTValidMax) throw infeasible_design("burner_overtemp");
    if (Tt4 <= in.Tt) throw infeasible_design("burner_no_temperature_rise");
    const double h_in = enthalpy(in.Tt, in.f);
    double f = 0.02;
    bool converged = false;
    for (int i = 0; i < 200; ++i) {
        const double f_m = (enthalpy(Tt4, f) - h_in) / (eff.eta_b * fuel.lower_heating_value);
        const double step = std::abs(f_m - f);
        f = 0.5 * (f + f_m);
        // absolute floor keeps the zero-temperature-rise case terminating
        if (step <= 1e-5 * std::abs(f) || step < 1e-12) {
            converged = true;
            break;
        }
    }
    if (!converged) throw convergence_error("burner fuel iteration stalled");
    if (f > 0.05) throw infeasible_design("burner_fuel_air_limit");
    if (f < 0.0) f = 0.0;
    return {{Tt4, in.Pt * eff.pi_b, f, in.mdot * (1.0 + f)}, f};
}

GasState mix(const GasState& main_in, const GasState& coolant) {
    const double m_out = main_in.mdot + coolant.mdot;
    const double fuel_main = main_in.f * main_in.mdot / (1.0 + main_in.f);
    const double air = main_in.mdot / (1.0 + main_in.f) +
                       coolant.mdot / (1.0 + coolant.f);
    const double fuel_cool = coolant.f * coolant.mdot / (1.0 + coolant.f);
    const double f_out = (fuel_main + fuel_cool) / air;
    const double h_out = (main_in.mdot * enthalpy(main_in.Tt, main_in.f) +
                          coolant.mdot * enthalpy(coolant.Tt, coolant.f)) /
                         m_out;
    const double Tout = temperature_from_enthalpy(h_out, f_out, main_in.Tt);
    return {Tout, main_in.Pt, f_out, m_out};
}

TurbineResult expand_turbine(const GasState& in, double power, double e_t) {
    if (power == 0.0) return {in, 1.0};
    const double h_out = enthalpy(in.Tt, in.f) - power / in.mdot;
    if (h_out < enthalpy(kTValidMin, in.f))
        throw infeasible_design("turbine_exit_undertemp");
    const double Tout = temperature_from_enthalpy(h_out, in.f, in.Tt);
    const double pi_t = std::exp((entropy_ref(in.Tt, in.f) - entropy_ref(Tout, in.f)) /
                                 (e_t * gas_constant(in.f)));
    return {{Tout, in.Pt / pi_t, in.f, in.mdot}, pi_t};
}

NozzleResult expand_nozzle(const GasState& in, double pi_n, double P0) {
    const double Pt = in.Pt * pi_n;
    const double R = gas_constant(in.f);
    const double target = entropy_ref(in.Tt, in.f) + R * std::log(P0 / Pt);
    if (target < entropy_ref(kTValidMin, in.f))
        throw infeasible_design("nozzle_exit_undertemp");
    const double Te = temperature_from_entropy(target, in.f,
                                               in.Tt * std::pow(P0 / Pt, 0.25));
    const double dh = enthalpy(in.Tt, in.f) - enthalpy(Te, in.f);
    if (dh < 0.0) throw convergence_error("nozzle expansion produced negative drop");
    return {std::sqrt(2.0 * dh), {Te, P0, in.f, in.mdot}};
}

CycleResult run_cycle(const EngineDesign& d, const FlightCondition& fc,
                      const ComponentEfficiencies& eff, const FuelSpec& fuel,
                      double pi_max) {
    CycleResult r{};
    const Freestream fs = freestream_state(fc);
    r.T0 = fs.ambient.T0;
    r.P0 = fs.ambient.P0;
    r.V0 = fs.V0;
    r.Tt0 = fs.state.Tt;
    r.Pt0 = fs.state.Pt;

    if (!(d.fan_pr * d.lpc_pr * d.hpc_pr < pi_max)) {
        r.violations.push_back("overall_pressure_ratio_limit");
        return r;
    }

    try {
        r.s2 = {fs.state.Tt, fs.state.Pt * eff.pi_d, 0.0, fc.mass_flow};
        const double m_core = fc.mass_flow / (1.0 + d.bypass_ratio);
        const double m_byp = fc.mass_flow - m_core;

        const CompressResult fan = compress(r.s2, d.fan_pr, eff.e_f);
        r.s21 = fan.out;
        r.works.fan = fc.mass_flow * fan.work_per_mass;

        GasState core_in = r.s21;
        core_in.mdot = m_core;
        const CompressResult lpc = compress(core_in, d.lpc_pr, eff.e_c);
        r.s25 = lpc.out;
        r.works.lpc = m_core * lpc.work_per_mass;

        const CompressResult hpc = compress(r.s25, d.hpc_pr, eff.e_c);
        r.s3 = hpc.out;
        r.works.hpc = m_core * hpc.work_per_mass;

        const double m_bleed = d.bleed_fraction * m_core;
        const double m_c1 = d.cooling_hpt * m_core;
        const double m_c2 = d.cooling_lpt * m_core;
        r.bleed = {r.s3.Tt, r.s3.Pt, 0.0, m_bleed};
        r.s31 = {r.s3.Tt, r.s3.Pt, 0.0, m_core - m_bleed - m_c1 - m_c2};

        const BurnResult br = burn(r.s31, d.burner_outlet_temp, eff, fuel);
        r.s4 = br.out;
        r.fuel_flow = br.f * r.s31.mdot;

        r.s41 = mix(r.s4, {r.s3.Tt, r.s3.Pt, 0.0, m_c1});

        const TurbineResult hpt = expand_turbine(r.s41, r.works.hpc / eff.eta_mH, eff.e_t);
        r.s45 = hpt.out;
        r.works.hpt = r.works.hpc / eff.eta_mH;
        r.pi_hpt = hpt.expansion_ratio;

        r.s46 = mix(r.s45, {r.s3.Tt, r.s3.Pt, 0.0, m_c2});

        const TurbineResult lpt =
            expand_turbine(r.s46, (r.works.fan + r.works.lpc) / eff.eta_mL, eff.e_t);
        r.s5 = lpt.out;
        r.works.lpt = (r.works.fan + r.works.lpc) / eff.eta_mL;
        r.pi_lpt = lpt.expansion_ratio;

        r.s6 = {r.s5.Tt, r.s5.Pt * eff.pi_nc, r.s5.f, r.s5.mdot};
        r.s7 = {r.s21.Tt, r.s21.Pt * eff.pi_nf, 0.0, m_byp};
        if (!(r.s6.Pt > r.P0)) r.violations.push_back("core_nozzle_backpressure");
        if (!(r.s7.Pt > r.P0)) r.violations.push_back("bypass_nozzle_backpressure");
        if (!r.violations.empty()) return r;

        r.V6 = expand_nozzle(r.s5, eff.pi_nc, r.P0).velocity;
        r.V7 = expand_nozzle({r.s21.Tt, r.s21.Pt, 0.0, m_byp}, eff.pi_nf, r.P0).velocity;
    } catch (const infeasible_design& e) {
        r.violations.push_back(e.reason());
        return r;
    }

    r.feasible = true;
    return r;
}

CycleResult check_takeoff(const EngineDesign& d, double mass_flow,
                          const ComponentEfficiencies& eff, const FuelSpec& fuel,
                          double pi_max) {
    EngineDesign hot = d;
    hot.burner_outlet_temp = 1.05 * d.burner_outlet_temp;
    return run_cycle(hot, {0.0, 0.0, mass_flow}, eff, fuel, pi_max);
}

}  // namespace tfopt
