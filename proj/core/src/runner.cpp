#include "tfopt/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace tfopt {
namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string read_file(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    if (!f) throw io_error("cannot read " + p.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw io_error("cannot write " + p.string());
    f << content;
    f.flush();
    if (!f) throw io_error("short write: " + p.string());
}

constexpr const char* kBoundName[kGroupCount] = {
    "bypass_ratio", "bleed_fraction", "cooling_hpt",  "cooling_lpt",
    "fan_pr",       "lpc_pr",         "hpc_pr",       "burner_outlet_temp"};

std::array<double, kGroupCount> design_values(const EngineDesign& d) {
    return {d.bypass_ratio, d.bleed_fraction, d.cooling_hpt,  d.cooling_lpt,
            d.fan_pr,       d.lpc_pr,         d.hpc_pr,       d.burner_outlet_temp};
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

ordered_json config_json(const ExperimentConfig& c) {
    ordered_json j;
    j["flight"] = {{"mach", c.flight.mach},
                   {"altitude_m", c.flight.altitude},
                   {"mass_flow_kgps", c.flight.mass_flow}};
    j["pi_max"] = c.pi_max;
    j["fuel"] = {{"lower_heating_value_J_per_kg", c.fuel.lower_heating_value},
                 {"carbon_atoms", c.fuel.carbon_atoms},
                 {"hydrogen_atoms", c.fuel.hydrogen_atoms},
                 {"molar_mass_kg_per_kmol", c.fuel.molar_mass}};
    const ComponentEfficiencies& e = c.efficiencies;
    j["efficiencies"] = {{"pi_d", e.pi_d},     {"pi_b", e.pi_b},
                         {"pi_nf", e.pi_nf},   {"pi_nc", e.pi_nc},
                         {"eta_b", e.eta_b},   {"eta_mL", e.eta_mL},
                         {"eta_mH", e.eta_mH}, {"e_f", e.e_f},
                         {"e_c", e.e_c},       {"e_t", e.e_t}};
    ordered_json ga;
    ga["population_size"] = c.ga.population_size;
    ga["generations"] = c.ga.generations;
    ga["mutation_prob"] = c.ga.mutation_prob;
    ga["crossover_prob"] = c.ga.crossover_prob;
    ga["elitism"] = c.ga.elitism;
    ga["workers"] = c.ga.workers;
    ga["weight_energy"] = c.ga.weight_energy;
    ga["weight_exergy"] = c.ga.weight_exergy;
    ga["energy_mode"] = energy_mode_name(c.ga.energy_mode);
    ga["exergy_scope"] = scope_name(c.ga.exergy_scope);
    ga["chemical_exergy_mode"] = chem_mode_name(c.ga.chem_mode);
    ordered_json bounds;
    for (int g = 0; g < kGroupCount; ++g)
        bounds[kBoundName[g]] = {c.ga.bounds.range[g].lo, c.ga.bounds.range[g].hi};
    ga["bounds"] = bounds;
    j["ga"] = ga;
    j["case"] = experiment_case_name(c.experiment_case);
    j["repetitions"] = c.repetitions;
    j["seeds"] = c.seeds;
    j["output_dir"] = c.output_dir;
    return j;
}

ExperimentConfig config_from_json(const ordered_json& j) {
    ExperimentConfig c;
    if (j.contains("flight")) {
        const auto& f = j.at("flight");
        c.flight.mach = f.value("mach", c.flight.mach);
        c.flight.altitude = f.value("altitude_m", c.flight.altitude);
        c.flight.mass_flow = f.value("mass_flow_kgps", c.flight.mass_flow);
    }
    c.pi_max = j.value("pi_max", c.pi_max);
    if (j.contains("fuel")) {
        const auto& f = j.at("fuel");
        c.fuel.lower_heating_value =
            f.value("lower_heating_value_J_per_kg", c.fuel.lower_heating_value);
        c.fuel.carbon_atoms = f.value("carbon_atoms", c.fuel.carbon_atoms);
        c.fuel.hydrogen_atoms = f.value("hydrogen_atoms", c.fuel.hydrogen_atoms);
        c.fuel.molar_mass = f.value("molar_mass_kg_per_kmol", c.fuel.molar_mass);
    }
    if (j.contains("efficiencies")) {
        const auto& e = j.at("efficiencies");
        ComponentEfficiencies& d = c.efficiencies;
        d.pi_d = e.value("pi_d", d.pi_d);
        d.pi_b = e.value("pi_b", d.pi_b);
        d.pi_nf = e.value("pi_nf", d.pi_nf);
        d.pi_nc = e.value("pi_nc", d.pi_nc);
        d.eta_b = e.value("eta_b", d.eta_b);
        d.eta_mL = e.value("eta_mL", d.eta_mL);
        d.eta_mH = e.value("eta_mH", d.eta_mH);
        d.e_f = e.value("e_f", d.e_f);
        d.e_c = e.value("e_c", d.e_c);
        d.e_t = e.value("e_t", d.e_t);
    }
    if (j.contains("ga")) {
        const auto& g = j.at("ga");
        GAConfig& d = c.ga;
        d.population_size = g.value("population_size", d.population_size);
        d.generations = g.value("generations", d.generations);
        d.mutation_prob = g.value("mutation_prob", d.mutation_prob);
        d.crossover_prob = g.value("crossover_prob", d.crossover_prob);
        d.elitism = g.value("elitism", d.elitism);
        d.workers = g.value("workers", d.workers);
        d.weight_energy = g.value("weight_energy", d.weight_energy);
        d.weight_exergy = g.value("weight_exergy", d.weight_exergy);
        if (g.contains("energy_mode"))
            d.energy_mode = energy_mode_from(g.at("energy_mode").get<std::string>());
        if (g.contains("exergy_scope"))
            d.exergy_scope = scope_from(g.at("exergy_scope").get<std::string>());
        if (g.contains("chemical_exergy_mode"))
            d.chem_mode =
                chem_mode_from(g.at("chemical_exergy_mode").get<std::string>());
        if (g.contains("bounds")) {
            const auto& b = g.at("bounds");
            for (int k = 0; k < kGroupCount; ++k) {
                if (!b.contains(kBoundName[k])) continue;
                const auto& pair = b.at(kBoundName[k]);
                d.bounds.range[k] = {pair.at(0).get<double>(),
                                     pair.at(1).get<double>()};
            }
        }
    }
    if (j.contains("case"))
        c.experiment_case = experiment_case_from(j.at("case").get<std::string>());
    const bool has_reps = j.contains("repetitions");
    const bool has_seeds = j.contains("seeds");
    if (has_seeds) c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    if (has_reps)
        c.repetitions = j.at("repetitions").get<int>();
    else if (has_seeds)
        c.repetitions = static_cast<int>(c.seeds.size());
    if (has_reps && !has_seeds && c.repetitions >= 1) {
        c.seeds.clear();
        for (int k = 0; k < c.repetitions; ++k) c.seeds.push_back(1001 + k);
    }
    c.output_dir = j.value("output_dir", c.output_dir);
    return c;
}

// Best-repetition metric block of a stored summary.
ordered_json best_block(const ordered_json& summary, const fs::path& dir) {
    const int rep = summary.at("best_repetition").get<int>();
    const auto& reps = summary.at("repetitions");
    if (rep < 1 || rep > static_cast<int>(reps.size()))
        throw std::invalid_argument("summary in " + dir.string() +
                                    " has an out-of-range best_repetition");
    return reps.at(rep - 1).at("best");
}

}  // namespace

const char* experiment_case_name(ExperimentCase c) {
    switch (c) {
        case ExperimentCase::a: return "a";
        case ExperimentCase::b: return "b";
        case ExperimentCase::c: return "c";
        case ExperimentCase::custom: return "custom";
    }
    return "?";
}

ExperimentCase experiment_case_from(const std::string& name) {
    if (name == "a") return ExperimentCase::a;
    if (name == "b") return ExperimentCase::b;
    if (name == "c") return ExperimentCase::c;
    if (name == "custom") return ExperimentCase::custom;
    throw std::invalid_argument("unknown case: " + name +
                                " (expected a, b, c, or custom)");
}

const char* energy_mode_name(EnergyEffMode m) {
    switch (m) {
        case EnergyEffMode::overall: return "overall";
        case EnergyEffMode::kinetic: return "kinetic";
        case EnergyEffMode::momentum: return "momentum";
    }
    return "?";
}

EnergyEffMode energy_mode_from(const std::string& name) {
    if (name == "overall") return EnergyEffMode::overall;
    if (name == "kinetic") return EnergyEffMode::kinetic;
    if (name == "momentum") return EnergyEffMode::momentum;
    throw std::invalid_argument("unknown energy mode: " + name +
                                " (expected overall, kinetic, or momentum)");
}

const char* scope_name(DestructionScope s) {
    return s == DestructionScope::internal ? "internal" : "with_losses";
}

DestructionScope scope_from(const std::string& name) {
    if (name == "internal") return DestructionScope::internal;
    if (name == "with_losses") return DestructionScope::with_losses;
    throw std::invalid_argument("unknown exergy scope: " + name +
                                " (expected internal or with_losses)");
}

const char* chem_mode_name(ProductExergyMode m) {
    return m == ProductExergyMode::constant ? "constant" : "computed";
}

ProductExergyMode chem_mode_from(const std::string& name) {
    if (name == "constant") return ProductExergyMode::constant;
    if (name == "computed") return ProductExergyMode::computed;
    throw std::invalid_argument("unknown chemical exergy mode: " + name +
                                " (expected constant or computed)");
}

std::pair<double, double> case_weights(const ExperimentConfig& cfg) {
    switch (cfg.experiment_case) {
        case ExperimentCase::a: return {1.0, 0.0};
        case ExperimentCase::b: return {0.0, 1.0};
        case ExperimentCase::c: return {1.0, 1.0};
        case ExperimentCase::custom:
            return {cfg.ga.weight_energy, cfg.ga.weight_exergy};
    }
    return {1.0, 1.0};
}

GAConfig resolved_ga(const ExperimentConfig& cfg, std::uint64_t seed) {
    GAConfig g = cfg.ga;
    g.pi_max = cfg.pi_max;
    const auto [wI, wII] = case_weights(cfg);
    g.weight_energy = wI;
    g.weight_exergy = wII;
    g.rng_seed = seed;
    return g;
}

void validate(const ExperimentConfig& cfg) {
    const auto fail = [](const std::string& msg) {
        throw std::invalid_argument(msg);
    };
    if (cfg.repetitions < 1) fail("repetitions must be at least 1");
    if (cfg.seeds.size() != static_cast<std::size_t>(cfg.repetitions))
        fail(fmt("seed list length %zu must equal repetitions %d",
                 cfg.seeds.size(), cfg.repetitions));
    if (!(cfg.flight.mach >= 0.0)) fail("mach must be non-negative");
    if (!(cfg.flight.mass_flow > 0.0)) fail("mass flow must be positive");
    if (cfg.flight.altitude < 0.0 || cfg.flight.altitude > 12000.0)
        fail("altitude must be within 0 to 12000 m");
    if (!(cfg.fuel.lower_heating_value > 0.0))
        fail("fuel heating value must be positive");
    validate(resolved_ga(cfg, 1));
}

ExperimentConfig load_config(const fs::path& path) {
    const std::string text = read_file(path);
    ExperimentConfig cfg;
    try {
        cfg = config_from_json(ordered_json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config " + path.string() + ": " + e.what());
    }
    validate(cfg);
    return cfg;
}

void save_config(const ExperimentConfig& cfg, const fs::path& path) {
    write_file(path, config_json(cfg).dump(2) + "\n");
}

AnalysisReport analyze(const EngineDesign& design, const ExperimentConfig& cfg) {
    const auto v = design_values(design);
    for (int g = 0; g < kGroupCount; ++g) {
        const Interval& r = cfg.ga.bounds.range[g];
        if (v[g] < r.lo || v[g] > r.hi)
            throw std::invalid_argument(fmt("%s = %g outside [%g, %g]",
                                            kBoundName[g], v[g], r.lo, r.hi));
    }
    AnalysisReport rep;
    rep.design = design;
    try {
        rep.cruise =
            run_cycle(design, cfg.flight, cfg.efficiencies, cfg.fuel, cfg.pi_max);
    } catch (const convergence_error& e) {
        rep.cruise.violations = {std::string("numeric:") + e.what()};
    } catch (const std::out_of_range& e) {
        rep.cruise.violations = {std::string("numeric:") + e.what()};
    }
    try {
        rep.takeoff = check_takeoff(design, cfg.flight.mass_flow,
                                    cfg.efficiencies, cfg.fuel, cfg.pi_max);
    } catch (const convergence_error& e) {
        rep.takeoff.violations = {std::string("numeric:") + e.what()};
    } catch (const std::out_of_range& e) {
        rep.takeoff.violations = {std::string("numeric:") + e.what()};
    }
    if (rep.cruise.feasible) {
        rep.perf = performance(rep.cruise, cfg.fuel, cfg.ga.energy_mode);
        rep.exergy = exergy_analysis(rep.cruise, cfg.fuel, cfg.ga.exergy_scope,
                                     cfg.ga.chem_mode);
    }
    return rep;
}

std::string render_analysis(const AnalysisReport& rep,
                            const ExperimentConfig& cfg) {
    std::string o;
    o += "single-point analysis\n";
    o += fmt("flight: mach %.6g, altitude %.6g m, mass flow %.6g kg/s\n",
             cfg.flight.mach, cfg.flight.altitude, cfg.flight.mass_flow);
    o += fmt("modes: energy %s, exergy %s, chemical exergy %s\n",
             energy_mode_name(cfg.ga.energy_mode), scope_name(cfg.ga.exergy_scope),
             chem_mode_name(cfg.ga.chem_mode));
    o += "design\n";
    const auto v = design_values(rep.design);
    for (int g = 0; g < kGroupCount; ++g)
        o += fmt("  %-20s %.10g\n", kBoundName[g], v[g]);

    const auto violations_line = [](const CycleResult& cr) {
        std::string s;
        for (const auto& t : cr.violations) {
            if (!s.empty()) s += ", ";
            s += t;
        }
        return s.empty() ? std::string("unspecified") : s;
    };

    if (!rep.cruise.feasible) {
        o += "cruise: infeasible (" + violations_line(rep.cruise) + ")\n";
    } else {
        const CycleResult& cr = rep.cruise;
        o += "cruise: feasible\n";
        o += fmt("  ambient: T0 %.6g K, P0 %.6g Pa, V0 %.6g m/s\n", cr.T0, cr.P0,
                 cr.V0);
        o += fmt("  %-6s %12s %14s %12s %12s\n", "stn", "Tt_K", "Pt_Pa", "f",
                 "mdot_kgps");
        for (const auto& [name, gs] : cr.stations())
            o += fmt("  %-6s %12.4f %14.2f %12.8f %12.5f\n", name, gs->Tt, gs->Pt,
                     gs->f, gs->mdot);
        o += fmt("  fuel flow %.8g kg/s, exit velocities: core %.6g m/s, bypass "
                 "%.6g m/s\n",
                 cr.fuel_flow, cr.V6, cr.V7);
        o += fmt("  spool work MW: fan %.5f, lpc %.5f, hpc %.5f, hpt %.5f, lpt "
                 "%.5f\n",
                 cr.works.fan / 1e6, cr.works.lpc / 1e6, cr.works.hpc / 1e6,
                 cr.works.hpt / 1e6, cr.works.lpt / 1e6);
        o += fmt("  turbine expansion: hpt %.6g, lpt %.6g, combined %.6g\n",
                 cr.pi_hpt, cr.pi_lpt, cr.pi_hpt * cr.pi_lpt);
        o += "performance\n";
        o += fmt("  thrust %.4f kN (core %.4f, bypass %.4f)\n",
                 (rep.perf.thrust_core + rep.perf.thrust_bypass) / 1e3,
                 rep.perf.thrust_core / 1e3, rep.perf.thrust_bypass / 1e3);
        o += fmt("  specific thrust %.6g N/(kg/s)\n", rep.perf.specific_thrust);
        o += fmt("  tsfc %.6g kg/(h N)\n", rep.perf.tsfc);
        o += fmt("  eta_I %.6g (%s)\n", rep.perf.eta_I,
                 energy_mode_name(cfg.ga.energy_mode));
        o += "exergy\n";
        o += fmt("  fuel exergy rate %.6f MW\n", rep.exergy.fuel_exergy_rate / 1e6);
        o += "  destruction by component (MW)\n";
        for (int c = 0; c < kComponentCount; ++c)
            o += fmt("    %-14s %.6f\n",
                     component_name(static_cast<EngineComponent>(c)),
                     rep.exergy.destruction[c] / 1e6);
        o += fmt("  bleed loss %.6f MW, exhaust loss %.6f MW, kinetic gain %.6f "
                 "MW\n",
                 rep.exergy.bleed_loss / 1e6, rep.exergy.exhaust_loss / 1e6,
                 rep.exergy.kinetic_gain / 1e6);
        o += fmt("  eta_II internal %.6g, with losses %.6g\n",
                 rep.exergy.eta_II_internal, rep.exergy.eta_II_with_losses);
    }
    if (rep.takeoff.feasible)
        o += fmt("takeoff: feasible (core %.6g m/s, bypass %.6g m/s, fuel flow "
                 "%.8g kg/s)\n",
                 rep.takeoff.V6, rep.takeoff.V7, rep.takeoff.fuel_flow);
    else
        o += "takeoff: infeasible (" + violations_line(rep.takeoff) + ")\n";
    return o;
}

const char* const kConvergenceHeader =
    "generation,best_score,eta_I,eta_II,specific_thrust_N_per_kgps,"
    "tsfc_kg_per_hN,alpha,Tt4_K,opr,turbine_expansion_ratio,mean_score";

std::string convergence_csv(const std::vector<GenerationRecord>& history) {
    std::string out = kConvergenceHeader;
    out += '\n';
    for (const auto& r : history)
        out += fmt("%d,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,"
                   "%.10g\n",
                   r.generation, r.best_score, r.eta_I, r.eta_II,
                   r.specific_thrust, r.tsfc, r.alpha, r.Tt4, r.opr,
                   r.turbine_expansion, r.mean_score);
    return out;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    validate(cfg);
    ExperimentResult out;
    out.dir = fs::path(cfg.output_dir);
    std::error_code ec;
    fs::create_directories(out.dir, ec);
    // fails before any GA work when the directory is unusable
    save_config(cfg, out.dir / "config.json");

    for (int k = 0; k < cfg.repetitions; ++k) {
        RepetitionOutcome rep;
        rep.seed = cfg.seeds[k];
        rep.csv_name = "rep" + std::to_string(k + 1) + ".csv";
        rep.result = run_ga(resolved_ga(cfg, rep.seed), cfg.flight,
                            cfg.efficiencies, cfg.fuel);
        write_file(out.dir / rep.csv_name, convergence_csv(rep.result.history));
        out.reps.push_back(std::move(rep));
    }
    out.best_rep = 0;
    for (int k = 1; k < cfg.repetitions; ++k)
        if (out.reps[k].result.best_fitness.score >
            out.reps[out.best_rep].result.best_fitness.score)
            out.best_rep = k;

    const auto [wI, wII] = case_weights(cfg);
    ordered_json summary;
    summary["case"] = experiment_case_name(cfg.experiment_case);
    summary["weights"] = {{"energy", wI}, {"exergy", wII}};
    summary["flight"] = {{"mach", cfg.flight.mach},
                         {"altitude_m", cfg.flight.altitude},
                         {"mass_flow_kgps", cfg.flight.mass_flow}};
    ordered_json reps = ordered_json::array();
    for (const RepetitionOutcome& r : out.reps) {
        const GAResult& g = r.result;
        ordered_json best;
        best["score"] = g.best_fitness.score;
        best["eta_I"] = g.best_fitness.eta_I;
        best["eta_II"] = g.best_fitness.eta_II;
        best["specific_thrust_N_per_kgps"] = g.best_fitness.specific_thrust;
        best["tsfc_kg_per_hN"] = g.best_fitness.tsfc;
        best["turbine_expansion_ratio"] = g.best_fitness.turbine_expansion;
        best["alpha"] = g.best_design.bypass_ratio;
        best["Tt4_K"] = g.best_design.burner_outlet_temp;
        best["opr"] =
            g.best_design.fan_pr * g.best_design.lpc_pr * g.best_design.hpc_pr;
        best["chromosome"] = g.best.to_string();
        ordered_json design;
        const auto v = design_values(g.best_design);
        for (int i = 0; i < kGroupCount; ++i) design[kBoundName[i]] = v[i];
        best["design"] = design;
        reps.push_back({{"seed", r.seed}, {"csv", r.csv_name}, {"best", best}});
    }
    summary["repetitions"] = reps;
    summary["best_repetition"] = out.best_rep + 1;
    write_file(out.dir / "summary.json", summary.dump(2) + "\n");

    const EngineDesign bd = out.reps[out.best_rep].result.best_design;
    write_file(out.dir / "best_design.txt", render_analysis(analyze(bd, cfg), cfg));
    return out;
}

CompareReport compare_runs(const fs::path& first, const fs::path& second) {
    ordered_json ja, jb;
    try {
        ja = ordered_json::parse(read_file(first / "summary.json"));
        jb = ordered_json::parse(read_file(second / "summary.json"));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("summary parse: ") + e.what());
    }
    for (const char* key : {"mach", "altitude_m", "mass_flow_kgps"}) {
        const double va = ja.at("flight").at(key).get<double>();
        const double vb = jb.at("flight").at(key).get<double>();
        if (va != vb)
            throw std::invalid_argument(
                fmt("flight conditions differ (%s: %.10g vs %.10g); comparison "
                    "would be meaningless",
                    key, va, vb));
    }
    const ordered_json ba = best_block(ja, first);
    const ordered_json bb = best_block(jb, second);

    CompareReport rep;
    rep.text = fmt("comparison: %s (case %s) vs %s (case %s)\n", first.c_str(),
                   ja.at("case").get<std::string>().c_str(), second.c_str(),
                   jb.at("case").get<std::string>().c_str());
    rep.text += fmt("  %-28s %14s %14s %10s\n", "metric", "first", "second",
                    "ratio");
    for (const char* key :
         {"score", "eta_I", "eta_II", "specific_thrust_N_per_kgps",
          "tsfc_kg_per_hN", "alpha", "Tt4_K", "opr", "turbine_expansion_ratio"}) {
        CompareRow row;
        row.metric = key;
        row.first = ba.at(key).get<double>();
        row.second = bb.at(key).get<double>();
        row.ratio = row.first != 0.0
                        ? row.second / row.first
                        : std::numeric_limits<double>::quiet_NaN();
        if (std::isnan(row.ratio))
            rep.text += fmt("  %-28s %14.6g %14.6g %10s\n", key, row.first,
                            row.second, "n/a");
        else
            rep.text += fmt("  %-28s %14.6g %14.6g %10.4f\n", key, row.first,
                            row.second, row.ratio);
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

VerifyReport verify_run(const fs::path& dir) {
    VerifyReport v;
    const ExperimentConfig cfg = load_config(dir / "config.json");
    for (int k = 0; k < cfg.repetitions; ++k) {
        const std::string name = "rep" + std::to_string(k + 1) + ".csv";
        const std::string stored = read_file(dir / name);
        const GAResult res = run_ga(resolved_ga(cfg, cfg.seeds[k]), cfg.flight,
                                    cfg.efficiencies, cfg.fuel);
        const std::string expect = convergence_csv(res.history);
        if (stored == expect) {
            v.notes.push_back(fmt("%s: %zu rows match", name.c_str(),
                                  res.history.size()));
        } else {
            v.ok = false;
            std::size_t i = 0;
            const std::size_t n = std::min(stored.size(), expect.size());
            while (i < n && stored[i] == expect[i]) ++i;
            v.notes.push_back(
                fmt("%s: replay differs from stored file at byte %zu",
                    name.c_str(), i));
        }
    }
    return v;
}

}  // namespace tfopt
