#include "tfopt/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace tfopt {
namespace {

// Reference air composition for the product chemical exergy, mole fractions.
constexpr double kAirN2 = 0.7748;
constexpr double kAirO2 = 0.2059;
constexpr double kAirCO2 = 0.0003;
constexpr double kAirH2O = 0.019;
constexpr double kRu = 8.314462618;  // J/(mol K)

double kinetic_gain_w(const CycleResult& cr) {
    const double m0 = cr.s2.mdot;
    return 0.5 * cr.s6.mdot * cr.V6 * cr.V6 + 0.5 * cr.s7.mdot * cr.V7 * cr.V7 -
           0.5 * m0 * cr.V0 * cr.V0;
}

}  // namespace

void thrusts(const CycleResult& cr, double* F6, double* F7) {
    *F6 = cr.s6.mdot * (cr.V6 - cr.V0);
    *F7 = cr.s7.mdot * (cr.V7 - cr.V0);
}

PerformanceReport performance(const CycleResult& cr, const FuelSpec& fuel,
                              EnergyEffMode mode) {
    if (!(cr.fuel_flow > 0.0))
        throw std::invalid_argument("performance metrics need a burning cycle");
    PerformanceReport p{};
    thrusts(cr, &p.thrust_core, &p.thrust_bypass);
    const double F = p.thrust_core + p.thrust_bypass;
    const double m0 = cr.s2.mdot;
    p.specific_thrust = F / m0;
    p.tsfc = 3600.0 * cr.fuel_flow / F;
    const double fuel_power = cr.fuel_flow * fuel.lower_heating_value;
    switch (mode) {
        case EnergyEffMode::overall:
            p.eta_I = F * cr.V0 / fuel_power;
            break;
        case EnergyEffMode::kinetic:
            p.eta_I = kinetic_gain_w(cr) / fuel_power;
            break;
        case EnergyEffMode::momentum:
            p.eta_I = (p.thrust_core * cr.V6 + p.thrust_bypass * cr.V7 -
                       m0 * cr.V0 * cr.V0) /
                      fuel_power;
            break;
    }
    return p;
}

double station_exergy(const GasState& gs, const GasState& dead) {
    const double R = gas_constant(gs.f);
    return enthalpy(gs.Tt, gs.f) - enthalpy(dead.Tt, dead.f) -
           dead.Tt * (entropy_ref(gs.Tt, gs.f) - entropy_ref(dead.Tt, dead.f) -
                      R * std::log(gs.Pt / dead.Pt));
}

double fuel_chemical_exergy(const FuelSpec& fuel) {
    const double h_over_c =
        (fuel.hydrogen_atoms * 1.008) / (fuel.carbon_atoms * 12.011);
    return (1.0401 + 0.1728 * h_over_c) * fuel.lower_heating_value;
}

double product_chemical_exergy(double T0, ProductExergyMode mode) {
    if (mode == ProductExergyMode::constant) return 4.5853 * T0;
    // stoichiometric C12 H23.5 + 17.875 O2; the ambient air carries its own
    // CO2 and H2O through. Molar amounts are per mole of fuel, normalized by
    // the fuel molar mass on the published coefficient's scale.
    const double n_o2 = 12.0 + 23.5 / 4.0;
    const double air = n_o2 / kAirO2;
    const double a_co2 = 12.0 + air * kAirCO2;
    const double a_h2o = 23.5 / 2.0 + air * kAirH2O;
    const double a_n2 = air * kAirN2;
    const double total = a_co2 + a_h2o + a_n2;
    const double sum = a_co2 * std::log(a_co2 / total / kAirCO2) +
                       a_h2o * std::log(a_h2o / total / kAirH2O) +
                       a_n2 * std::log(a_n2 / total / kAirN2);
    return kRu * sum / 167.8141 * T0;
}

const char* component_name(EngineComponent c) {
    switch (c) {
        case EngineComponent::diffuser: return "diffuser";
        case EngineComponent::fan: return "fan";
        case EngineComponent::lpc: return "lpc";
        case EngineComponent::hpc: return "hpc";
        case EngineComponent::burner: return "burner";
        case EngineComponent::hpt_mixer: return "hpt_mixer";
        case EngineComponent::hpt: return "hpt";
        case EngineComponent::lpt_mixer: return "lpt_mixer";
        case EngineComponent::lpt: return "lpt";
        case EngineComponent::core_nozzle: return "core_nozzle";
        case EngineComponent::bypass_nozzle: return "bypass_nozzle";
    }
    return "?";
}

ExergyReport exergy_analysis(const CycleResult& cr, const FuelSpec& fuel,
                             DestructionScope scope, ProductExergyMode chem) {
    if (!cr.feasible)
        throw std::invalid_argument("exergy analysis needs a feasible cycle");
    const GasState dead{cr.Tt0, cr.Pt0, 0.0, 0.0};
    const auto X = [&](const GasState& gs) {
        return gs.mdot * station_exergy(gs, dead);
    };
    // per-kg chemical exergy riding with burned gas; produced at the burner,
    // carried out with the exhaust, so it cancels in every transport step
    const double chi_ch = product_chemical_exergy(cr.T0, chem);

    ExergyReport rep{};
    auto D = [&rep](EngineComponent c) -> double& {
        return rep.destruction[static_cast<int>(c)];
    };

    const GasState coolant1{cr.s3.Tt, cr.s3.Pt, 0.0, cr.s41.mdot - cr.s4.mdot};
    const GasState coolant2{cr.s3.Tt, cr.s3.Pt, 0.0, cr.s46.mdot - cr.s45.mdot};
    const double X21_core = X(cr.s21) * (cr.s25.mdot / cr.s21.mdot);
    const double X21_byp = X(cr.s21) * (cr.s7.mdot / cr.s21.mdot);

    rep.fuel_exergy_rate = cr.fuel_flow * fuel_chemical_exergy(fuel);
    D(EngineComponent::diffuser) = -X(cr.s2);  // inlet stream is at the dead state
    D(EngineComponent::fan) = X(cr.s2) + cr.works.fan - X(cr.s21);
    D(EngineComponent::lpc) = X21_core + cr.works.lpc - X(cr.s25);
    D(EngineComponent::hpc) = X(cr.s25) + cr.works.hpc - X(cr.s3);
    D(EngineComponent::burner) =
        X(cr.s31) + rep.fuel_exergy_rate - X(cr.s4) - cr.s4.mdot * chi_ch;
    D(EngineComponent::hpt_mixer) = X(cr.s4) + X(coolant1) - X(cr.s41);
    D(EngineComponent::hpt) = X(cr.s41) - X(cr.s45) - cr.works.hpc;
    D(EngineComponent::lpt_mixer) = X(cr.s45) + X(coolant2) - X(cr.s46);
    D(EngineComponent::lpt) = X(cr.s46) - X(cr.s5) - (cr.works.fan + cr.works.lpc);
    D(EngineComponent::core_nozzle) = X(cr.s5) - X(cr.s6);
    D(EngineComponent::bypass_nozzle) = X21_byp - X(cr.s7);

    rep.bleed_loss = X(cr.bleed);
    rep.kinetic_gain = kinetic_gain_w(cr);
    rep.exhaust_loss =
        X(cr.s6) + cr.s4.mdot * chi_ch + X(cr.s7) - rep.kinetic_gain;

    double sum_d = 0.0;
    for (double d : rep.destruction) sum_d += d;
    rep.eta_II_internal = 1.0 - sum_d / rep.fuel_exergy_rate;
    rep.eta_II_with_losses =
        1.0 - (sum_d + rep.bleed_loss + rep.exhaust_loss) / rep.fuel_exergy_rate;
    rep.eta_II = scope == DestructionScope::internal ? rep.eta_II_internal
                                                     : rep.eta_II_with_losses;
    return rep;
}

}  // namespace tfopt
