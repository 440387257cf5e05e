#include "tfopt/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <stdexcept>

namespace tfopt {

std::string Chromosome::to_string() const {
    std::string s(kChromosomeBits, '0');
    for (int i = 0; i < kChromosomeBits; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

Chromosome Chromosome::from_string(const std::string& s) {
    if (s.size() != static_cast<std::size_t>(kChromosomeBits))
        throw std::invalid_argument("chromosome string must have 48 characters");
    Chromosome c;
    for (int i = 0; i < kChromosomeBits; ++i) {
        if (s[i] == '1')
            c.set(i, true);
        else if (s[i] != '0')
            throw std::invalid_argument("chromosome string must be binary");
    }
    return c;
}

DesignBounds DesignBounds::defaults() {
    return {{{{3.0, 10.0},
              {0.01, 0.02},
              {0.05, 0.15},
              {0.05, 0.15},
              {1.2, 2.0},
              {2.0, 5.0},
              {4.0, 10.0},
              {1400.0, 2000.0}}}};
}

EngineDesign decode(const Chromosome& c, const DesignBounds& bounds) {
    std::array<double, kGroupCount> v;
    for (int g = 0; g < kGroupCount; ++g) {
        const Interval& r = bounds.range[g];
        v[g] = r.lo + (c.group(g) * (r.hi - r.lo)) / 63.0;
    }
    return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
}

Chromosome encode(const EngineDesign& d, const DesignBounds& bounds) {
    const std::array<double, kGroupCount> v{
        d.bypass_ratio, d.bleed_fraction, d.cooling_hpt,  d.cooling_lpt,
        d.fan_pr,       d.lpc_pr,         d.hpc_pr,       d.burner_outlet_temp};
    Chromosome c;
    for (int g = 0; g < kGroupCount; ++g) {
        const Interval& r = bounds.range[g];
        long code = 0;
        if (r.hi > r.lo)
            code = std::lround((v[g] - r.lo) / (r.hi - r.lo) * 63.0);
        c.set_group(g, static_cast<unsigned>(std::clamp(code, 0L, 63L)));
    }
    return c;
}

void validate(const GAConfig& cfg) {
    const auto fail = [](const char* msg) { throw std::invalid_argument(msg); };
    if (cfg.population_size < 2) fail("population_size must be at least 2");
    if (cfg.generations < 1) fail("generations must be at least 1");
    if (!(cfg.mutation_prob >= 0.0 && cfg.mutation_prob <= 1.0))
        fail("mutation_prob must be in [0, 1]");
    if (!(cfg.crossover_prob >= 0.0 && cfg.crossover_prob <= 1.0))
        fail("crossover_prob must be in [0, 1]");
    if (cfg.elitism < 0 || cfg.elitism >= cfg.population_size)
        fail("elitism must be in [0, population_size)");
    if (!(cfg.weight_energy >= 0.0) || !(cfg.weight_exergy >= 0.0))
        fail("objective weights must be non-negative");
    if (cfg.weight_energy + cfg.weight_exergy <= 0.0)
        fail("objective weights must not both be zero");
    if (!(cfg.pi_max > 1.0)) fail("pi_max must exceed 1");
    if (cfg.workers < 1) fail("workers must be at least 1");
    for (const Interval& r : cfg.bounds.range)
        if (!(r.hi >= r.lo) || !std::isfinite(r.lo) || !std::isfinite(r.hi))
            fail("design bounds must be finite with hi >= lo");
}

FitnessResult fitness(const EngineDesign& design, const FlightCondition& fc,
                      const ComponentEfficiencies& eff, const FuelSpec& fuel,
                      const GAConfig& cfg) {
    FitnessResult r;
    try {
        const CycleResult cruise = run_cycle(design, fc, eff, fuel, cfg.pi_max);
        if (!cruise.feasible) {
            r.violation =
                cruise.violations.empty() ? "infeasible" : cruise.violations.front();
            return r;
        }
        const CycleResult to =
            check_takeoff(design, fc.mass_flow, eff, fuel, cfg.pi_max);
        if (!to.feasible) {
            r.violation = "takeoff:";
            r.violation +=
                to.violations.empty() ? "infeasible" : to.violations.front();
            return r;
        }
        const PerformanceReport perf = performance(cruise, fuel, cfg.energy_mode);
        const ExergyReport ex =
            exergy_analysis(cruise, fuel, cfg.exergy_scope, cfg.chem_mode);
        r.feasible = true;
        r.eta_I = perf.eta_I;
        r.eta_II = ex.eta_II;
        r.specific_thrust = perf.specific_thrust;
        r.tsfc = perf.tsfc;
        r.turbine_expansion = cruise.pi_hpt * cruise.pi_lpt;
        const double a = cfg.weight_energy * r.eta_I;
        const double b = cfg.weight_exergy * r.eta_II;
        r.score = std::sqrt(a * a + b * b);
        if (!std::isfinite(r.score)) {
            r.score = 0.0;
            r.feasible = false;
            r.numeric_failure = true;
            r.violation = "numeric:nonfinite_score";
        }
    } catch (const convergence_error& e) {
        r.numeric_failure = true;
        r.violation = std::string("numeric:") + e.what();
    } catch (const std::out_of_range& e) {
        r.numeric_failure = true;
        r.violation = std::string("numeric:") + e.what();
    }
    return r;
}

std::size_t roulette_select(const std::vector<double>& scores,
                            std::mt19937_64& rng) {
    if (scores.empty())
        throw std::invalid_argument("roulette_select needs a non-empty population");
    double total = 0.0;
    for (double s : scores) total += s;
    const double u = uniform01(rng);
    if (!(total > 0.0)) {
        // all-zero generation: keep the search alive with a uniform pick
        const auto i = static_cast<std::size_t>(u * scores.size());
        return std::min(i, scores.size() - 1);
    }
    double acc = 0.0;
    const double target = u * total;
    for (std::size_t i = 0; i + 1 < scores.size(); ++i) {
        acc += scores[i];
        if (target < acc) return i;
    }
    return scores.size() - 1;
}

std::pair<Chromosome, Chromosome> crossover(const Chromosome& a,
                                            const Chromosome& b,
                                            std::mt19937_64& rng, double p) {
    std::pair<Chromosome, Chromosome> children{a, b};
    if (uniform01(rng) < p) {
        int cut = 1 + static_cast<int>(uniform01(rng) * (kChromosomeBits - 1));
        cut = std::min(cut, kChromosomeBits - 1);
        const std::uint64_t tail =
            (std::uint64_t{1} << (kChromosomeBits - cut)) - 1;
        children.first.bits = (a.bits & ~tail & kChromosomeMask) | (b.bits & tail);
        children.second.bits = (b.bits & ~tail & kChromosomeMask) | (a.bits & tail);
    }
    return children;
}

Chromosome mutate(const Chromosome& c, std::mt19937_64& rng, double p_bit) {
    Chromosome m = c;
    // fixed draw count keeps the stream layout independent of outcomes
    for (int i = 0; i < kChromosomeBits; ++i)
        if (uniform01(rng) < p_bit) m.flip(i);
    return m;
}

GAResult run_ga(const GAConfig& cfg, const FlightCondition& fc,
                const ComponentEfficiencies& eff, const FuelSpec& fuel) {
    validate(cfg);
    std::mt19937_64 rng(cfg.rng_seed);
    const int n = cfg.population_size;

    std::vector<Chromosome> pop(n);
    for (auto& c : pop) c.bits = rng() & kChromosomeMask;

    GAResult out;
    double best_score = -1.0;
    std::vector<FitnessResult> fits(n);

    const auto evaluate = [&](const std::vector<Chromosome>& p) {
        std::vector<EngineDesign> designs(n);
        for (int i = 0; i < n; ++i) designs[i] = decode(p[i], cfg.bounds);
        const int w = std::min(std::max(1, cfg.workers), n);
        if (w == 1) {
            for (int i = 0; i < n; ++i)
                fits[i] = fitness(designs[i], fc, eff, fuel, cfg);
            return;
        }
        std::vector<std::future<void>> tasks;
        const int chunk = (n + w - 1) / w;
        for (int begin = 0; begin < n; begin += chunk) {
            const int end = std::min(n, begin + chunk);
            tasks.push_back(std::async(std::launch::async, [&, begin, end] {
                for (int i = begin; i < end; ++i)
                    fits[i] = fitness(designs[i], fc, eff, fuel, cfg);
            }));
        }
        for (auto& t : tasks) t.get();
    };

    for (int g = 0; g < cfg.generations; ++g) {
        evaluate(pop);

        int bi = 0;
        double mean = 0.0;
        for (int i = 0; i < n; ++i) {
            mean += fits[i].score;
            if (fits[i].score > fits[bi].score) bi = i;
        }
        mean /= n;

        const EngineDesign bd = decode(pop[bi], cfg.bounds);
        out.history.push_back({g, fits[bi].score, fits[bi].eta_I, fits[bi].eta_II,
                               fits[bi].specific_thrust, fits[bi].tsfc,
                               bd.bypass_ratio, bd.burner_outlet_temp,
                               bd.fan_pr * bd.lpc_pr * bd.hpc_pr,
                               fits[bi].turbine_expansion, mean, pop[bi]});
        if (fits[bi].score > best_score) {
            best_score = fits[bi].score;
            out.best = pop[bi];
            out.best_fitness = fits[bi];
        }
        if (g + 1 == cfg.generations) break;

        std::vector<Chromosome> next;
        next.reserve(n);
        if (cfg.elitism > 0) {
            std::vector<int> idx(n);
            std::iota(idx.begin(), idx.end(), 0);
            std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
                return fits[x].score > fits[y].score;
            });
            for (int k = 0; k < cfg.elitism; ++k) next.push_back(pop[idx[k]]);
        }
        std::vector<double> scores(n);
        for (int i = 0; i < n; ++i) scores[i] = fits[i].score;
        while (static_cast<int>(next.size()) < n) {
            const std::size_t p1 = roulette_select(scores, rng);
            const std::size_t p2 = roulette_select(scores, rng);
            auto [c1, c2] = crossover(pop[p1], pop[p2], rng, cfg.crossover_prob);
            next.push_back(mutate(c1, rng, cfg.mutation_prob));
            if (static_cast<int>(next.size()) < n)
                next.push_back(mutate(c2, rng, cfg.mutation_prob));
        }
        pop = std::move(next);
    }

    out.best_design = decode(out.best, cfg.bounds);
    try {
        out.best_cycle = run_cycle(out.best_design, fc, eff, fuel, cfg.pi_max);
    } catch (const std::exception&) {
        // numeric breakdown on an all-infeasible run; the default result
        // already reads infeasible
    }
    return out;
}

}  // namespace tfopt
