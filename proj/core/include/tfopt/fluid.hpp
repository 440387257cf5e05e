#pragma once
// Caloric gas properties for dry air and lean kerosene combustion products.
// Polynomial fits in T/1000 with a fuel-air-ratio mixing term, valid 200-2000 K.
// Public interface is SI throughout: J, kg, K, Pa.

#include <stdexcept>

namespace tfopt {

struct FuelSpec {
    double lower_heating_value;  // J/kg
    double carbon_atoms;
    double hydrogen_atoms;
    double molar_mass;  // kg/kmol
};

// Liquid kerosene, C12 H23.5.
FuelSpec kerosene();

// An iterative solve ran out of its step budget.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kTValidMin = 200.0;
inline constexpr double kTValidMax = 2000.0;

// Specific heat at constant pressure, J/(kg K). Throws std::out_of_range
// outside the 200-2000 K validity window; f is the fuel-air mass ratio.
double cp(double T, double f);

// Specific enthalpy, J/kg. Exact antiderivative of cp in T.
double enthalpy(double T, double f);

// Temperature part of specific entropy at the reference pressure, J/(kg K).
// Only differences of this function are physically meaningful.
double entropy_ref(double T, double f);

// Specific gas constant, J/(kg K); decreases slightly with f.
double gas_constant(double f);

// cp/(cp - R).
double heat_capacity_ratio(double T, double f);

// Newton inversions of the property fits. Both keep iterates inside the
// validity window and throw convergence_error after 200 steps.
double temperature_from_enthalpy(double h_target, double f, double T_guess);
double temperature_from_entropy(double s_target, double f, double T_guess);

}  // namespace tfopt
