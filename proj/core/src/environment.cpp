#include "tfopt/environment.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tfopt/fluid.hpp"

namespace tfopt {
namespace {

constexpr double kG0 = 9.80665;
constexpr double kSeaLevelT = 288.15;
constexpr double kSeaLevelP = 101325.0;
constexpr double kLapse = 0.0065;        // K/m below the tropopause
constexpr double kTropopause = 11000.0;  // m

}  // namespace

AmbientState standard_atmosphere(double altitude) {
    if (!(altitude >= 0.0 && altitude <= 12000.0)) {
        throw std::out_of_range("altitude " + std::to_string(altitude) +
                                " m outside the supported 0-12000 m band");
    }
    const double R = gas_constant(0.0);
    if (altitude <= kTropopause) {
        const double T = kSeaLevelT - kLapse * altitude;
        const double P = kSeaLevelP * std::pow(T / kSeaLevelT, kG0 / (kLapse * R));
        return {T, P};
    }
    const double T = kSeaLevelT - kLapse * kTropopause;
    const double P11 = kSeaLevelP * std::pow(T / kSeaLevelT, kG0 / (kLapse * R));
    return {T, P11 * std::exp(-kG0 * (altitude - kTropopause) / (R * T))};
}

Freestream freestream_state(const FlightCondition& fc) {
    const AmbientState amb = standard_atmosphere(fc.altitude);
    const double R = gas_constant(0.0);
    const double V0 =
        fc.mach * std::sqrt(heat_capacity_ratio(amb.T0, 0.0) * R * amb.T0);
    const double ht0 = enthalpy(amb.T0, 0.0) + 0.5 * V0 * V0;
    const double Tt0 = temperature_from_enthalpy(ht0, 0.0, amb.T0);
    const double Pt0 =
        amb.P0 * std::exp((entropy_ref(Tt0, 0.0) - entropy_ref(amb.T0, 0.0)) / R);
    return {amb, V0, {Tt0, Pt0, 0.0, fc.mass_flow}};
}

}  // namespace tfopt
