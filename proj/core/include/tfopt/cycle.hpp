#pragma once
// On-design station model of a two-spool turbofan with bleed extraction and
// two turbine cooling streams. All components work on stagnation states with
// variable gas properties; compression and expansion follow the exact
// polytropic entropy relation rather than a mean-gamma approximation.

#include "tfopt/cycle_types.hpp"
#include "tfopt/environment.hpp"
#include "tfopt/fluid.hpp"

namespace tfopt {

// A design that cannot run as a physical cycle. reason() is a stable
// machine-readable token, also surfaced in CycleResult::violations.
class infeasible_design : public std::runtime_error {
public:
    explicit infeasible_design(std::string reason)
        : std::runtime_error(reason), reason_(std::move(reason)) {}
    const std::string& reason() const { return reason_; }

private:
    std::string reason_;
};

struct CompressResult {
    GasState out;
    double work_per_mass;  // J/kg, positive
};

// Polytropic compression through pressure ratio pi at efficiency e:
// sbar(Tout) = sbar(Tin) + (R/e) ln pi, so the entropy generation is
// exactly R (1/e - 1) ln pi. pi = 1 returns the inlet unchanged.
CompressResult compress(const GasState& in, double pi, double e);

struct BurnResult {
    GasState out;
    double f;  // fuel-air ratio of the exit stream
};

// Heat addition to a target outlet temperature. Solves the fuel fraction by
// damped fixed point on f = (h(Tt4, f) - h_in) / (eta_b LHV); the exit flow
// is inlet flow times (1 + f).
BurnResult burn(const GasState& in, double Tt4, const ComponentEfficiencies& eff,
                const FuelSpec& fuel);

// Constant-pressure enthalpy-balance mixer; the coolant is dragged to the
// main stream's total pressure. Fuel mass is conserved, so f dilutes.
GasState mix(const GasState& main_in, const GasState& coolant);

struct TurbineResult {
    GasState out;
    double expansion_ratio;  // Pt_in / Pt_out
};

// Work extraction of `power` watts; outlet pressure from the polytropic
// relation sbar_out - sbar_in = e_t R ln(Pout/Pin).
TurbineResult expand_turbine(const GasState& in, double power, double e_t);

struct NozzleResult {
    double velocity;  // m/s
    GasState exit;    // static exit state at ambient pressure
};

// Applies the nozzle total-pressure ratio, then expands isentropically to
// ambient static pressure (no choking model, momentum thrust only).
NozzleResult expand_nozzle(const GasState& in, double pi_n, double P0);

// Full engine at the given flight point. Infeasible designs come back with
// feasible = false and named violations instead of an exception; numeric
// breakdown (failed solves) still throws.
CycleResult run_cycle(const EngineDesign& design, const FlightCondition& fc,
                      const ComponentEfficiencies& eff, const FuelSpec& fuel,
                      double pi_max = 45.0);

// Sea-level static check at 105% burner temperature with the same inlet flow.
CycleResult check_takeoff(const EngineDesign& design, double mass_flow,
                          const ComponentEfficiencies& eff, const FuelSpec& fuel,
                          double pi_max = 45.0);

}  // namespace tfopt
