#pragma once
// First-law performance figures and second-law exergy accounting over a
// completed cycle evaluation.

#include <array>

#include "tfopt/cycle.hpp"

namespace tfopt {

// How fuel energy use is credited:
//  overall  - net thrust power over fuel power (the default; equals
//             3600 V0 / (tsfc * LHV) identically)
//  kinetic  - jet kinetic-energy gain over fuel power
//  momentum - per-stream thrust times its exhaust velocity, minus ram drag
//             times flight speed, over fuel power; can go negative at high
//             bypass and is kept only for comparison studies
enum class EnergyEffMode { overall, kinetic, momentum };

struct PerformanceReport {
    double thrust_core;     // N
    double thrust_bypass;   // N
    double specific_thrust; // N per kg/s of inlet flow
    double tsfc;            // kg/(h N)
    double eta_I;
};

// Momentum thrust of the two fully expanded streams.
void thrusts(const CycleResult& cr, double* F6, double* F7);

PerformanceReport performance(const CycleResult& cr, const FuelSpec& fuel,
                              EnergyEffMode mode = EnergyEffMode::overall);

// Specific flow exergy of a stream against the ambient stagnation dead state,
// J/kg. Zero exactly at the dead state.
double station_exergy(const GasState& gs, const GasState& dead);

// Chemical exergy of the fuel per unit mass, J/kg.
double fuel_chemical_exergy(const FuelSpec& fuel);

// Chemical exergy carried by combustion products, J/kg of burned mixture.
//  constant - the fixed published coefficient, 4.5853 * T0
//  computed - evaluated from the stoichiometric product composition of the
//             kerosene surrogate in reference air, normalized to the same
//             scale as the constant mode (lands within a few percent of it)
enum class ProductExergyMode { constant, computed };
double product_chemical_exergy(double T0, ProductExergyMode mode = ProductExergyMode::constant);

// Which terms count against the exergy efficiency:
//  internal    - component destructions only (default)
//  with_losses - also charges the bleed and exhaust residual exergy, which
//                collapses eta_II onto the kinetic energy efficiency scale
enum class DestructionScope { internal, with_losses };

enum class EngineComponent {
    diffuser, fan, lpc, hpc, burner, hpt_mixer, hpt, lpt_mixer, lpt,
    core_nozzle, bypass_nozzle,
};
inline constexpr int kComponentCount = 11;
const char* component_name(EngineComponent c);

struct ExergyReport {
    // destruction rate per component, W; turbine entries are measured against
    // delivered shaft work, so spool transmission loss lands in them
    std::array<double, kComponentCount> destruction;
    double bleed_loss;        // W, exergy leaving with the dumped bleed
    double exhaust_loss;      // W, exhaust exergy not converted to jet KE gain
    double kinetic_gain;      // W, jet kinetic-energy gain over the inlet
    double fuel_exergy_rate;  // W
    double eta_II;            // per the requested scope
    double eta_II_internal;
    double eta_II_with_losses;

    double destruction_of(EngineComponent c) const {
        return destruction[static_cast<int>(c)];
    }
};

ExergyReport exergy_analysis(const CycleResult& cr, const FuelSpec& fuel,
                             DestructionScope scope = DestructionScope::internal,
                             ProductExergyMode chem = ProductExergyMode::constant);

}  // namespace tfopt
