#pragma once
// Shared value types for the engine cycle.

#include <string>
#include <vector>

namespace tfopt {

// Stagnation state of a stream at an engine station.
struct GasState {
    double Tt;    // K
    double Pt;    // Pa
    double f;     // fuel-air mass ratio
    double mdot;  // kg/s
};

// The eight optimization variables.
struct EngineDesign {
    double bypass_ratio;
    double bleed_fraction;
    double cooling_hpt;        // coolant fraction remixed upstream of the HPT
    double cooling_lpt;        // coolant fraction remixed upstream of the LPT
    double fan_pr;
    double lpc_pr;
    double hpc_pr;
    double burner_outlet_temp;  // K
};

// Fixed component quality figures. Defaults reflect current technology level.
struct ComponentEfficiencies {
    double pi_d = 0.99;    // diffuser total-pressure ratio
    double pi_b = 0.96;    // burner total-pressure ratio
    double pi_nf = 0.96;   // bypass nozzle total-pressure ratio
    double pi_nc = 0.96;   // core nozzle total-pressure ratio
    double eta_b = 0.99;   // combustion efficiency
    double eta_mL = 0.99;  // low-spool mechanical transmission
    double eta_mH = 0.99;  // high-spool mechanical transmission
    double e_f = 0.89;     // fan polytropic efficiency
    double e_c = 0.90;     // compressor polytropic efficiency
    double e_t = 0.89;     // turbine polytropic efficiency
};

struct SpoolWorks {
    double fan;  // W, whole inlet flow
    double lpc;
    double hpc;
    double hpt;  // gas-side extraction including transmission loss
    double lpt;
};

// Station ids: 0 freestream, 2 diffuser exit, 21 fan exit (whole flow),
// 25 LPC exit, 3 HPC exit, 31 after bleed/coolant extraction, 4 burner exit,
// 41 after the first coolant mixer, 45 HPT exit, 46 after the second mixer,
// 5 LPT exit, 6 core nozzle total state, 7 bypass nozzle total state.
struct CycleResult {
    double T0, P0, V0, Tt0, Pt0;
    GasState s2, s21, s25, s3, s31, bleed, s4, s41, s45, s46, s5, s6, s7;
    SpoolWorks works;
    double V6 = 0.0, V7 = 0.0;  // fully expanded exit velocities, m/s
    double fuel_flow = 0.0;     // kg/s
    double pi_hpt = 1.0, pi_lpt = 1.0;
    bool feasible = false;
    std::vector<std::string> violations;

    // Stations in flow order, for reporting.
    std::vector<std::pair<const char*, const GasState*>> stations() const;
};

}  // namespace tfopt
