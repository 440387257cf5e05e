#include <benchmark/benchmark.h>

#include "tfopt/cycle.hpp"
#include "tfopt/metrics.hpp"
#include "tfopt/optimizer.hpp"

namespace {

using namespace tfopt;

const FlightCondition kCruise{0.86, 11000.0, 350.0};
const ComponentEfficiencies kEff{};
const FuelSpec kFuel = kerosene();
// mid-range reference design, feasible at the default pressure-ratio cap
const EngineDesign kDesign{9.5, 0.01, 0.05, 0.05, 1.6, 5.0, 5.5, 1700.0};

void BM_Properties(benchmark::State& state) {
    double T = 300.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cp(T, 0.02));
        benchmark::DoNotOptimize(enthalpy(T, 0.02));
        benchmark::DoNotOptimize(entropy_ref(T, 0.02));
        T = T < 1900.0 ? T + 1.0 : 300.0;
    }
}
BENCHMARK(BM_Properties);

void BM_EnthalpyInversion(benchmark::State& state) {
    const double h = enthalpy(1400.0, 0.02);
    for (auto _ : state)
        benchmark::DoNotOptimize(temperature_from_enthalpy(h, 0.02, 900.0));
}
BENCHMARK(BM_EnthalpyInversion);

void BM_EntropyInversion(benchmark::State& state) {
    const double s = entropy_ref(1400.0, 0.02);
    for (auto _ : state)
        benchmark::DoNotOptimize(temperature_from_entropy(s, 0.02, 900.0));
}
BENCHMARK(BM_EntropyInversion);

void BM_Compress(benchmark::State& state) {
    const GasState in{253.9, 36693.0, 0.0, 350.0};
    for (auto _ : state) benchmark::DoNotOptimize(compress(in, 5.0, 0.90));
}
BENCHMARK(BM_Compress);

void BM_Cycle(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(run_cycle(kDesign, kCruise, kEff, kFuel));
}
BENCHMARK(BM_Cycle);

void BM_ExergyAnalysis(benchmark::State& state) {
    const CycleResult cr = run_cycle(kDesign, kCruise, kEff, kFuel);
    for (auto _ : state)
        benchmark::DoNotOptimize(exergy_analysis(cr, kFuel));
}
BENCHMARK(BM_ExergyAnalysis);

void BM_Fitness(benchmark::State& state) {
    const GAConfig cfg;
    for (auto _ : state)
        benchmark::DoNotOptimize(fitness(kDesign, kCruise, kEff, kFuel, cfg));
}
BENCHMARK(BM_Fitness);

// one full generational step: seeding plus evaluate, select, cross, mutate
void BM_GAGeneration(benchmark::State& state) {
    GAConfig cfg;
    cfg.population_size = 64;
    cfg.generations = 1;
    cfg.workers = static_cast<int>(state.range(0));
    cfg.rng_seed = 42;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_ga(cfg, kCruise, kEff, kFuel));
}
BENCHMARK(BM_GAGeneration)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
