#pragma once
// Ambient and freestream conditions feeding station 0 of the engine model.

#include "tfopt/cycle_types.hpp"

namespace tfopt {

struct AmbientState {
    double T0;  // K
    double P0;  // Pa
};

struct FlightCondition {
    double mach = 0.86;
    double altitude = 11000.0;   // m
    double mass_flow = 350.0;    // kg/s through the inlet
};

// International Standard Atmosphere, sea level to 12 km.
// Linear-lapse layer below 11 km, isothermal above.
AmbientState standard_atmosphere(double altitude);

struct Freestream {
    AmbientState ambient;
    double V0;       // flight speed, m/s
    GasState state;  // stagnation state at station 0, mdot = inlet flow
};

// Stagnation state from Mach and altitude with variable-property inversion:
// h(Tt0) = h(T0) + V0^2/2, then Pt0 from the isentropic entropy relation.
Freestream freestream_state(const FlightCondition& fc);

}  // namespace tfopt
