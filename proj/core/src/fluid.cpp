// Property polynomials: 8th-order fits in z = T/1000 for dry air (A series)
// with a combustion-products correction weighted by f/(1+f) (B series).
// The fits produce kJ/(kg K) for cp and entropy and MJ/kg for enthalpy;
// conversion to SI happens here at the boundary, nowhere else.

#include "tfopt/fluid.hpp"

#include <cmath>
#include <string>

namespace tfopt {
namespace {

constexpr double kA[11] = {0.9923,  0.2367, -1.8524, 6.0832, -8.8940, 7.0971,
                           -3.2347, 0.7946, -0.0819, 0.4222, 0.0011};
constexpr double kB[10] = {-0.7189, 8.7475,  -15.8632, 17.2541, -10.2338,
                           3.0818,  -0.3611, 0.0039,   0.0556,  -0.0016};

void require_valid(double T) {
    if (!(T >= kTValidMin && T <= kTValidMax)) {
        throw std::out_of_range("gas temperature " + std::to_string(T) +
                                " K outside the 200-2000 K property range");
    }
}

}  // namespace

FuelSpec kerosene() { return {43124.0e3, 12.0, 23.5, 167.8141}; }

double cp(double T, double f) {
    require_valid(T);
    const double z = T / 1000.0;
    double a = 0.0;
    for (int k = 8; k >= 0; --k) a = a * z + kA[k];
    double b = 0.0;
    for (int k = 7; k >= 0; --k) b = b * z + kB[k];
    return (a + f / (1.0 + f) * b) * 1e3;
}

double enthalpy(double T, double f) {
    require_valid(T);
    const double z = T / 1000.0;
    double a = 0.0;
    for (int k = 8; k >= 0; --k) a = a * z + kA[k] / (k + 1);
    a = kA[9] + a * z;
    double b = 0.0;
    for (int k = 7; k >= 0; --k) b = b * z + kB[k] / (k + 1);
    b = kB[8] + b * z;
    return (a + f / (1.0 + f) * b) * 1e6;
}

double entropy_ref(double T, double f) {
    require_valid(T);
    const double z = T / 1000.0;
    const double lz = std::log(z);
    // the k = 0 term of the power sum is the logarithmic one
    double a = 0.0;
    for (int k = 8; k >= 1; --k) a = a * z + kA[k] / k;
    a = kA[10] + kA[0] * lz + a * z;
    double b = 0.0;
    for (int k = 7; k >= 1; --k) b = b * z + kB[k] / k;
    b = kB[9] + kB[0] * lz + b * z;
    return (a + f / (1.0 + f) * b) * 1e3;
}

double gas_constant(double f) { return 287.05 - 0.0099 * f + 1e-7 * f * f; }

double heat_capacity_ratio(double T, double f) {
    const double c = cp(T, f);
    return c / (c - gas_constant(f));
}

double temperature_from_enthalpy(double h_target, double f, double T_guess) {
    double T = std::fmin(std::fmax(T_guess, kTValidMin), kTValidMax);
    for (int i = 0; i < 200; ++i) {
        const double dT = (h_target - enthalpy(T, f)) / cp(T, f);
        T += dT;
        if (T < kTValidMin) T = kTValidMin;
        if (T > kTValidMax) T = kTValidMax;
        if (std::abs(dT) <= 1e-12 * T) return T;
    }
    throw convergence_error("enthalpy inversion stalled");
}

double temperature_from_entropy(double s_target, double f, double T_guess) {
    double T = std::fmin(std::fmax(T_guess, kTValidMin), kTValidMax);
    for (int i = 0; i < 200; ++i) {
        const double dT = (s_target - entropy_ref(T, f)) * T / cp(T, f);
        T += dT;
        if (T < kTValidMin) T = kTValidMin;
        if (T > kTValidMax) T = kTValidMax;
        if (std::abs(dT) <= 1e-12 * T) return T;
    }
    throw convergence_error("entropy inversion stalled");
}

}  // namespace tfopt
