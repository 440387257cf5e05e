#pragma once
// Binary-chromosome genetic algorithm over the eight engine design variables.
// All random draws happen on the caller's thread; fitness evaluation is pure,
// so histories are reproducible for a fixed seed at any worker count.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tfopt/cycle.hpp"
#include "tfopt/metrics.hpp"

namespace tfopt {

inline constexpr int kGroupBits = 6;
inline constexpr int kGroupCount = 8;
inline constexpr int kChromosomeBits = kGroupBits * kGroupCount;
inline constexpr std::uint64_t kChromosomeMask =
    (std::uint64_t{1} << kChromosomeBits) - 1;

// 48-bit string, eight consecutive 6-bit groups in EngineDesign field order.
// Position 0 is the leftmost bit of the string and the MSB of group 0; within
// a group the first position carries the highest place value.
struct Chromosome {
    std::uint64_t bits = 0;  // low 48 bits used

    bool get(int pos) const {
        return (bits >> (kChromosomeBits - 1 - pos)) & std::uint64_t{1};
    }
    void set(int pos, bool v) {
        const std::uint64_t m = std::uint64_t{1} << (kChromosomeBits - 1 - pos);
        bits = v ? (bits | m) : (bits & ~m);
    }
    void flip(int pos) {
        bits ^= std::uint64_t{1} << (kChromosomeBits - 1 - pos);
    }
    // Integer value of 6-bit group g, in [0, 63].
    unsigned group(int g) const {
        return static_cast<unsigned>(
            (bits >> (kChromosomeBits - kGroupBits * (g + 1))) & 0x3Fu);
    }
    void set_group(int g, unsigned code) {
        const int shift = kChromosomeBits - kGroupBits * (g + 1);
        bits = (bits & ~(std::uint64_t{0x3F} << shift)) |
               (std::uint64_t{code & 0x3Fu} << shift);
    }

    std::string to_string() const;                       // 48 chars of 0/1
    static Chromosome from_string(const std::string&);   // inverse; throws
                                                         // std::invalid_argument
    friend bool operator==(const Chromosome&, const Chromosome&) = default;
};

// Closed decode interval for one design variable.
struct Interval {
    double lo;
    double hi;
};

// Decode ranges, indexed like the chromosome groups / EngineDesign fields.
struct DesignBounds {
    std::array<Interval, kGroupCount> range;
    static DesignBounds defaults();
};

// Lattice map: group code i -> lo + i * (hi - lo) / 63. All-zeros and
// all-ones land exactly on the bound vectors.
EngineDesign decode(const Chromosome& c, const DesignBounds& bounds);

// Nearest lattice point; inverse of decode on lattice values.
Chromosome encode(const EngineDesign& d, const DesignBounds& bounds);

struct GAConfig {
    int population_size = 160;
    int generations = 500;
    double mutation_prob = 0.006;   // per bit
    double crossover_prob = 0.9;
    int elitism = 1;
    double weight_energy = 1.0;     // scales eta_I in the score
    double weight_exergy = 1.0;     // scales eta_II in the score
    double pi_max = 45.0;           // overall pressure ratio cap
    std::uint64_t rng_seed = 0;
    int workers = 1;                // parallel fitness evaluators
    DesignBounds bounds = DesignBounds::defaults();
    EnergyEffMode energy_mode = EnergyEffMode::overall;
    DestructionScope exergy_scope = DestructionScope::internal;
    ProductExergyMode chem_mode = ProductExergyMode::constant;
};

// Throws std::invalid_argument on out-of-range settings.
void validate(const GAConfig& cfg);

struct FitnessResult {
    double score = 0.0;
    bool feasible = false;
    // Solver breakdown rather than a named design constraint; still score 0.
    bool numeric_failure = false;
    std::string violation;          // first violation token, or diagnostic
    double eta_I = 0.0;
    double eta_II = 0.0;
    double specific_thrust = 0.0;   // N per kg/s
    double tsfc = 0.0;              // kg/(h N)
    double turbine_expansion = 0.0; // combined HPT * LPT pressure ratio
};

// Cruise cycle plus sea-level take-off check. Any violation or numeric
// failure maps to score 0; otherwise
// score = sqrt((w_I eta_I)^2 + (w_II eta_II)^2).
FitnessResult fitness(const EngineDesign& design, const FlightCondition& fc,
                      const ComponentEfficiencies& eff, const FuelSpec& fuel,
                      const GAConfig& cfg);

// Canonical [0,1) draw used for every stochastic decision in this module.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Index i with probability scores[i] / sum(scores); uniform fallback when the
// whole population scores zero.
std::size_t roulette_select(const std::vector<double>& scores,
                            std::mt19937_64& rng);

// With probability p, single-point crossover at a uniform cut in [1, 47];
// otherwise clones of the parents.
std::pair<Chromosome, Chromosome> crossover(const Chromosome& a,
                                            const Chromosome& b,
                                            std::mt19937_64& rng, double p);

// Independent per-bit flips; always consumes exactly 48 draws.
Chromosome mutate(const Chromosome& c, std::mt19937_64& rng, double p_bit);

// Best-of-generation snapshot. alpha/Tt4/opr come from the decoded design, the
// remaining metrics from its fitness evaluation (zero when infeasible).
struct GenerationRecord {
    int generation;
    double best_score;
    double eta_I;
    double eta_II;
    double specific_thrust;
    double tsfc;
    double alpha;
    double Tt4;
    double opr;
    double turbine_expansion;
    double mean_score;
    Chromosome best;
};

struct GAResult {
    std::vector<GenerationRecord> history;
    Chromosome best;
    EngineDesign best_design;
    FitnessResult best_fitness;
    CycleResult best_cycle;  // cruise evaluation of the best individual
};

// Generational GA: uniform random 48-bit seeding, roulette selection,
// single-point crossover, per-bit mutation, elitism. The returned best is the
// highest-scoring individual over the whole run.
GAResult run_ga(const GAConfig& cfg, const FlightCondition& fc,
                const ComponentEfficiencies& eff, const FuelSpec& fuel);

}  // namespace tfopt
