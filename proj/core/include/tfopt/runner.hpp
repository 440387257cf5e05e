#pragma once
// Experiment orchestration: configuration files, repeated GA runs with fixed
// seed lists, convergence CSVs, summaries, and replay verification. File
// formats are deterministic so a rerun from the same config is byte-identical.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "tfopt/optimizer.hpp"

namespace tfopt {

// Filesystem or stream failure; maps to its own process exit code in the CLI.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Which objective weighting to run: energy-only (1,0), exergy-only (0,1),
// both (1,1), or the weights stored in the GA config.
enum class ExperimentCase { a, b, c, custom };

const char* experiment_case_name(ExperimentCase c);
ExperimentCase experiment_case_from(const std::string& name);

// Stable names used in config files and CLI flags.
const char* energy_mode_name(EnergyEffMode m);
EnergyEffMode energy_mode_from(const std::string& name);
const char* scope_name(DestructionScope s);
DestructionScope scope_from(const std::string& name);
const char* chem_mode_name(ProductExergyMode m);
ProductExergyMode chem_mode_from(const std::string& name);

struct ExperimentConfig {
    FlightCondition flight{};  // cruise point for every evaluation
    double pi_max = 45.0;
    FuelSpec fuel = kerosene();
    ComponentEfficiencies efficiencies{};
    // Weights inside are honored only for ExperimentCase::custom.
    GAConfig ga{};
    ExperimentCase experiment_case = ExperimentCase::c;
    int repetitions = 4;
    std::vector<std::uint64_t> seeds{1001, 1002, 1003, 1004};
    std::string output_dir = "tfopt-run";
};

// Objective weights after applying the case selector.
std::pair<double, double> case_weights(const ExperimentConfig& cfg);

// GA config for one repetition: case weights, shared pi_max, given seed.
GAConfig resolved_ga(const ExperimentConfig& cfg, std::uint64_t seed);

// Throws std::invalid_argument on inconsistent settings (including a seed
// list whose length differs from the repetition count).
void validate(const ExperimentConfig& cfg);

// JSON (missing keys fall back to defaults; seeds/repetitions may imply each
// other). Parse or schema problems throw std::invalid_argument, filesystem
// problems io_error.
ExperimentConfig load_config(const std::filesystem::path& path);
void save_config(const ExperimentConfig& cfg, const std::filesystem::path& path);

// ---- single-point analysis ----

struct AnalysisReport {
    EngineDesign design;
    CycleResult cruise;
    CycleResult takeoff;
    PerformanceReport perf{};  // valid only when cruise.feasible
    ExergyReport exergy{};     // valid only when cruise.feasible
};

// Runs one design at the configured cruise point plus the take-off check.
// Designs outside the configured bounds are a usage error naming the bound.
AnalysisReport analyze(const EngineDesign& design, const ExperimentConfig& cfg);
std::string render_analysis(const AnalysisReport& rep, const ExperimentConfig& cfg);

// ---- optimization runs ----

// Fixed column set of the per-repetition convergence tables.
extern const char* const kConvergenceHeader;
std::string convergence_csv(const std::vector<GenerationRecord>& history);

struct RepetitionOutcome {
    std::uint64_t seed;
    std::string csv_name;
    GAResult result;
};

struct ExperimentResult {
    std::filesystem::path dir;
    std::vector<RepetitionOutcome> reps;
    int best_rep;  // index into reps of the highest final score
};

// Runs the GA once per seed and writes, under cfg.output_dir: config.json
// (the effective configuration, written first so an unwritable directory
// fails before any computation), repK.csv per repetition, summary.json, and
// best_design.txt.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// ---- post-run tooling ----

struct CompareRow {
    std::string metric;
    double first;
    double second;
    double ratio;  // second / first; NaN when first is 0
};

struct CompareReport {
    std::vector<CompareRow> rows;
    std::string text;
};

// Side-by-side best-run metrics of two completed run directories. Refuses
// runs made at different flight conditions.
CompareReport compare_runs(const std::filesystem::path& first,
                           const std::filesystem::path& second);

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> notes;
};

// Recomputes every repetition from the stored config and byte-compares the
// convergence tables against the files on disk.
VerifyReport verify_run(const std::filesystem::path& dir);

}  // namespace tfopt
