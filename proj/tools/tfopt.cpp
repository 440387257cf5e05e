// tfopt: turbofan cycle analysis and GA design optimization.
// Subcommands: analyze, optimize, compare, verify.
// Exit codes: 0 success, 1 failed verification, 2 usage, 3 numeric, 4 I/O.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tfopt/runner.hpp"

namespace {

using namespace tfopt;

struct AnalyzeArgs {
    std::vector<double> design;  // the eight variables in bound order
    std::string out_path;
};

int do_analyze(const ExperimentConfig& cfg, const AnalyzeArgs& a) {
    const EngineDesign d{a.design[0], a.design[1], a.design[2], a.design[3],
                         a.design[4], a.design[5], a.design[6], a.design[7]};
    const std::string text = render_analysis(analyze(d, cfg), cfg);
    std::cout << text;
    if (!a.out_path.empty()) {
        std::ofstream f(a.out_path, std::ios::binary);
        if (!f) throw io_error("cannot write " + a.out_path);
        f << text;
    }
    return 0;
}

int do_optimize(const ExperimentConfig& cfg) {
    const ExperimentResult res = run_experiment(cfg);
    for (std::size_t k = 0; k < res.reps.size(); ++k) {
        const auto& r = res.reps[k];
        const auto& b = r.result.best_fitness;
        std::cout << "rep " << k + 1 << " (seed " << r.seed << "): score "
                  << b.score << ", eta_I " << b.eta_I << ", eta_II " << b.eta_II
                  << ", alpha " << r.result.best_design.bypass_ratio << ", Tt4 "
                  << r.result.best_design.burner_outlet_temp << " K\n";
    }
    std::cout << "best repetition: " << res.best_rep + 1 << "\nartifacts: "
              << res.dir.string() << "\n";
    return 0;
}

int do_compare(const std::string& first, const std::string& second) {
    std::cout << compare_runs(first, second).text;
    return 0;
}

int do_verify(const std::string& dir) {
    const VerifyReport rep = verify_run(dir);
    for (const auto& note : rep.notes) std::cout << note << "\n";
    std::cout << (rep.ok ? "verification passed" : "verification FAILED")
              << "\n";
    return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"turbofan cycle analysis and GA design optimization"};
    app.set_version_flag("--version", "tfopt 1.0.0");
    app.require_subcommand(1);

    // shared configuration options
    std::string config_path, out_dir, preset, case_name;
    std::string energy_mode, exergy_scope, chem_mode;
    double mach = -1.0, altitude = -1.0, mass_flow = -1.0, pi_max = -1.0;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-c,--config", config_path, "JSON config file");
        cmd->add_option("--mach", mach, "cruise Mach number");
        cmd->add_option("--altitude", altitude, "cruise altitude, m");
        cmd->add_option("--mass-flow", mass_flow, "inlet mass flow, kg/s");
        cmd->add_option("--pi-max", pi_max, "overall pressure ratio cap");
        cmd->add_option("--energy-mode", energy_mode,
                        "overall | kinetic | momentum");
        cmd->add_option("--exergy-scope", exergy_scope,
                        "internal | with_losses");
        cmd->add_option("--chem-mode", chem_mode, "constant | computed");
    };

    auto* cmd_analyze =
        app.add_subcommand("analyze", "report one design at the cruise point");
    AnalyzeArgs aa;
    add_common(cmd_analyze);
    cmd_analyze
        ->add_option("-d,--design", aa.design,
                     "alpha, bleed, cooling_hpt, cooling_lpt, fan_pr, lpc_pr, "
                     "hpc_pr, Tt4_K")
        ->required()
        ->expected(8)
        ->delimiter(',');
    cmd_analyze->add_option("-o,--out", aa.out_path, "also write the report here");

    auto* cmd_optimize =
        app.add_subcommand("optimize", "run the GA experiment and write artifacts");
    add_common(cmd_optimize);
    int population = -1, generations = -1, elitism = -1, workers = -1,
        repetitions = -1;
    std::vector<std::uint64_t> seeds;
    std::vector<double> weights;
    cmd_optimize->add_option("--preset", preset,
                             "desk (pop 40, gens 100) or paper (pop 160, gens "
                             "500)");
    cmd_optimize->add_option("--case", case_name, "a | b | c | custom");
    cmd_optimize->add_option("--weights", weights,
                             "energy,exergy weights (implies --case custom)")
        ->expected(2)
        ->delimiter(',');
    cmd_optimize->add_option("-O,--out-dir", out_dir,
                             "artifact directory (default: TFOPT_OUTPUT_DIR, "
                             "then the config value)");
    cmd_optimize->add_option("--population", population, "GA population size");
    cmd_optimize->add_option("--generations", generations, "GA generations");
    cmd_optimize->add_option("--elitism", elitism, "elites kept per generation");
    cmd_optimize->add_option("--workers", workers, "parallel fitness workers");
    cmd_optimize->add_option("--repetitions", repetitions,
                             "independent GA runs (seeds 1001.. unless given)");
    cmd_optimize->add_option("--seeds", seeds, "seed per repetition")
        ->delimiter(',');

    auto* cmd_compare = app.add_subcommand(
        "compare", "side-by-side best metrics of two finished runs");
    std::string dir_a, dir_b;
    cmd_compare->add_option("first", dir_a, "first run directory")->required();
    cmd_compare->add_option("second", dir_b, "second run directory")->required();

    auto* cmd_verify =
        app.add_subcommand("verify", "replay a run from its config and diff");
    std::string verify_dir;
    cmd_verify->add_option("dir", verify_dir, "run directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exit 0
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        ExperimentConfig cfg;
        if (!config_path.empty()) cfg = load_config(config_path);
        if (mach >= 0.0) cfg.flight.mach = mach;
        if (altitude >= 0.0) cfg.flight.altitude = altitude;
        if (mass_flow >= 0.0) cfg.flight.mass_flow = mass_flow;
        if (pi_max >= 0.0) cfg.pi_max = pi_max;
        if (!energy_mode.empty()) cfg.ga.energy_mode = energy_mode_from(energy_mode);
        if (!exergy_scope.empty()) cfg.ga.exergy_scope = scope_from(exergy_scope);
        if (!chem_mode.empty()) cfg.ga.chem_mode = chem_mode_from(chem_mode);

        if (cmd_analyze->parsed()) return do_analyze(cfg, aa);

        if (cmd_optimize->parsed()) {
            if (!preset.empty()) {
                if (preset == "desk") {
                    cfg.ga.population_size = 40;
                    cfg.ga.generations = 100;
                } else if (preset == "paper") {
                    cfg.ga.population_size = 160;
                    cfg.ga.generations = 500;
                } else {
                    throw std::invalid_argument("unknown preset: " + preset +
                                                " (expected desk or paper)");
                }
            }
            if (!case_name.empty())
                cfg.experiment_case = experiment_case_from(case_name);
            if (!weights.empty()) {
                cfg.experiment_case = ExperimentCase::custom;
                cfg.ga.weight_energy = weights[0];
                cfg.ga.weight_exergy = weights[1];
            }
            if (population > 0) cfg.ga.population_size = population;
            if (generations > 0) cfg.ga.generations = generations;
            if (elitism >= 0) cfg.ga.elitism = elitism;
            if (workers > 0) cfg.ga.workers = workers;
            if (!seeds.empty()) {
                cfg.seeds = seeds;
                cfg.repetitions = static_cast<int>(seeds.size());
            }
            if (repetitions > 0) {
                cfg.repetitions = repetitions;
                if (seeds.empty()) {
                    cfg.seeds.clear();
                    for (int k = 0; k < repetitions; ++k)
                        cfg.seeds.push_back(1001 + k);
                }
            }
            if (!out_dir.empty()) {
                cfg.output_dir = out_dir;
            } else if (const char* env = std::getenv("TFOPT_OUTPUT_DIR")) {
                if (*env) cfg.output_dir = env;
            }
            return do_optimize(cfg);
        }

        if (cmd_compare->parsed()) return do_compare(dir_a, dir_b);
        if (cmd_verify->parsed()) return do_verify(verify_dir);
        std::cerr << "usage error: no subcommand\n";
        return 2;
    } catch (const io_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 4;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const convergence_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const std::out_of_range& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
