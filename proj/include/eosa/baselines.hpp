#pragma once

// Reference optimizers (PSO, DE, GA) sharing the same result contract as the
// core optimizer, for side-by-side comparisons.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "eosa/eosa.hpp"
#include "eosa/objectives.hpp"
#include "eosa/random.hpp"

namespace eosa {

struct BaselineConfig {
    std::string algorithm;  // "pso", "de", or "ga"
    int population_size = 100;
    int epochs = 500;
    std::vector<double> bounds_lower;
    std::vector<double> bounds_upper;
    std::uint64_t seed = 0;

    // pso
    double pso_inertia = 0.729;
    double pso_cognitive = 1.49445;
    double pso_social = 1.49445;
    // de (rand/1/bin)
    double de_scale = 0.5;
    double de_crossover = 0.9;
    // ga
    double ga_crossover = 0.9;
    double ga_mutation = -1.0;  // negative means 1/dim, resolved at run time
    int ga_tournament = 2;
};

inline void validate(const BaselineConfig& config) {
    if (config.algorithm != "pso" && config.algorithm != "de" && config.algorithm != "ga")
        throw std::invalid_argument("unknown baseline algorithm: " + config.algorithm);
    if (config.population_size < 1)
        throw std::invalid_argument("population_size must be positive");
    if (config.epochs < 0) throw std::invalid_argument("epochs must be non-negative");
    if (config.bounds_lower.empty() || config.bounds_lower.size() != config.bounds_upper.size())
        throw std::invalid_argument("bounds vectors must be non-empty and equal length");
    for (std::size_t d = 0; d < config.bounds_lower.size(); ++d) {
        if (!std::isfinite(config.bounds_lower[d]) || !std::isfinite(config.bounds_upper[d]))
            throw std::invalid_argument("bounds must be finite");
        if (config.bounds_lower[d] > config.bounds_upper[d])
            throw std::invalid_argument("inverted bounds at dimension " + std::to_string(d));
    }
    if (!std::isfinite(config.pso_inertia) || !std::isfinite(config.pso_cognitive) ||
        !std::isfinite(config.pso_social))
        throw std::invalid_argument("pso parameters must be finite");
    if (!(config.de_scale > 0.0) || !std::isfinite(config.de_scale))
        throw std::invalid_argument("de scale must be positive");
    if (config.de_crossover < 0.0 || config.de_crossover > 1.0)
        throw std::invalid_argument("de crossover must lie in [0, 1]");
    if (config.ga_crossover < 0.0 || config.ga_crossover > 1.0)
        throw std::invalid_argument("ga crossover probability must lie in [0, 1]");
    if (config.ga_mutation > 1.0)
        throw std::invalid_argument("ga mutation probability must lie in [0, 1]");
    if (config.algorithm == "de" && config.population_size < 4)
        throw std::invalid_argument("de needs a population of at least 4");
    if (config.algorithm == "ga") {
        if (config.population_size % 2 != 0)
            throw std::invalid_argument("ga needs an even population for crossover pairing");
        if (config.ga_tournament < 2 || config.ga_tournament > config.population_size)
            throw std::invalid_argument("ga tournament size must lie in [2, population]");
    }
}

namespace detail {

inline std::vector<std::vector<double>> uniform_positions(const BaselineConfig& config,
                                                          RandomStream& rng) {
    const std::size_t dim = config.bounds_lower.size();
    std::vector<std::vector<double>> positions(
        static_cast<std::size_t>(config.population_size), std::vector<double>(dim));
    for (auto& pos : positions)
        for (std::size_t d = 0; d < dim; ++d)
            pos[d] = config.bounds_lower[d] +
                     rng.uniform() * (config.bounds_upper[d] - config.bounds_lower[d]);
    return positions;
}

inline void clamp_position(std::vector<double>& pos, const BaselineConfig& config) {
    for (std::size_t d = 0; d < pos.size(); ++d)
        pos[d] = std::clamp(pos[d], config.bounds_lower[d], config.bounds_upper[d]);
}

struct BaselineRun {
    std::vector<std::vector<double>> positions;
    std::vector<double> fitness;
    std::vector<double> best_position;
    double best_fitness = 0.0;
    std::int64_t evaluations = 0;
};

inline void consider(BaselineRun& run, const std::vector<double>& pos, double value) {
    if (run.best_position.empty() || value < run.best_fitness) {
        run.best_position = pos;
        run.best_fitness = value;
    }
}

inline BaselineRun evaluated_start(const ObjectiveSpec& objective, const BaselineConfig& config,
                                   RandomStream& rng) {
    BaselineRun run;
    run.positions = uniform_positions(config, rng);
    run.fitness.resize(run.positions.size());
    for (std::size_t i = 0; i < run.positions.size(); ++i) {
        run.fitness[i] = checked_eval(objective, run.positions[i], rng, run.evaluations);
        consider(run, run.positions[i], run.fitness[i]);
    }
    return run;
}

inline void pso_epochs(BaselineRun& run, const ObjectiveSpec& objective,
                       const BaselineConfig& config, RandomStream& rng,
                       OptimizationResult& result) {
    const std::size_t n = run.positions.size();
    const std::size_t dim = config.bounds_lower.size();
    std::vector<std::vector<double>> velocity(n, std::vector<double>(dim, 0.0));
    auto pbest_pos = run.positions;
    auto pbest_fit = run.fitness;

    for (int epoch = 1; epoch <= config.epochs; ++epoch) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t d = 0; d < dim; ++d) {
                const double r1 = rng.uniform();
                const double r2 = rng.uniform();
                velocity[i][d] = config.pso_inertia * velocity[i][d] +
                                 config.pso_cognitive * r1 * (pbest_pos[i][d] - run.positions[i][d]) +
                                 config.pso_social * r2 * (run.best_position[d] - run.positions[i][d]);
                run.positions[i][d] += velocity[i][d];
            }
            clamp_position(run.positions[i], config);
            run.fitness[i] = checked_eval(objective, run.positions[i], rng, run.evaluations);
            if (run.fitness[i] < pbest_fit[i]) {
                pbest_fit[i] = run.fitness[i];
                pbest_pos[i] = run.positions[i];
                if (pbest_fit[i] < run.best_fitness) {
                    run.best_fitness = pbest_fit[i];
                    run.best_position = pbest_pos[i];
                }
            }
        }
        result.history.emplace_back(epoch, run.best_fitness);
    }
}

inline void de_epochs(BaselineRun& run, const ObjectiveSpec& objective,
                      const BaselineConfig& config, RandomStream& rng,
                      OptimizationResult& result) {
    const auto n = static_cast<std::int64_t>(run.positions.size());
    const std::size_t dim = config.bounds_lower.size();

    for (int epoch = 1; epoch <= config.epochs; ++epoch) {
        for (std::int64_t i = 0; i < n; ++i) {
            std::int64_t a, b, c;
            do a = rng.uniform_int(0, n - 1); while (a == i);
            do b = rng.uniform_int(0, n - 1); while (b == i || b == a);
            do c = rng.uniform_int(0, n - 1); while (c == i || c == a || c == b);
            const auto jrand = static_cast<std::size_t>(
                rng.uniform_int(0, static_cast<std::int64_t>(dim) - 1));

            const auto ui = static_cast<std::size_t>(i);
            std::vector<double> trial = run.positions[ui];
            for (std::size_t d = 0; d < dim; ++d) {
                const double u = rng.uniform();
                if (u < config.de_crossover || d == jrand) {
                    trial[d] = run.positions[static_cast<std::size_t>(a)][d] +
                               config.de_scale *
                                   (run.positions[static_cast<std::size_t>(b)][d] -
                                    run.positions[static_cast<std::size_t>(c)][d]);
                }
            }
            clamp_position(trial, config);
            const double value = checked_eval(objective, trial, rng, run.evaluations);
            if (value <= run.fitness[ui]) {
                run.positions[ui] = std::move(trial);
                run.fitness[ui] = value;
                if (value < run.best_fitness) {
                    run.best_fitness = value;
                    run.best_position = run.positions[ui];
                }
            }
        }
        result.history.emplace_back(epoch, run.best_fitness);
    }
}

inline std::size_t tournament_pick(const BaselineRun& run, int size, RandomStream& rng) {
    const auto n = static_cast<std::int64_t>(run.positions.size());
    auto winner = static_cast<std::size_t>(rng.uniform_int(0, n - 1));
    for (int round = 1; round < size; ++round) {
        const auto challenger = static_cast<std::size_t>(rng.uniform_int(0, n - 1));
        if (run.fitness[challenger] < run.fitness[winner]) winner = challenger;
    }
    return winner;
}

inline void ga_epochs(BaselineRun& run, const ObjectiveSpec& objective,
                      const BaselineConfig& config, RandomStream& rng,
                      OptimizationResult& result) {
    const std::size_t n = run.positions.size();
    const std::size_t dim = config.bounds_lower.size();
    const double mutation_p =
        config.ga_mutation >= 0.0 ? config.ga_mutation : 1.0 / static_cast<double>(dim);

    std::vector<std::vector<double>> next(n, std::vector<double>(dim));
    for (int epoch = 1; epoch <= config.epochs; ++epoch) {
        for (std::size_t pair = 0; pair < n / 2; ++pair) {
            const auto p1 = tournament_pick(run, config.ga_tournament, rng);
            const auto p2 = tournament_pick(run, config.ga_tournament, rng);
            auto& c1 = next[2 * pair];
            auto& c2 = next[2 * pair + 1];
            if (rng.uniform() < config.ga_crossover) {
                for (std::size_t d = 0; d < dim; ++d) {
                    const bool swap = rng.uniform() < 0.5;
                    c1[d] = swap ? run.positions[p2][d] : run.positions[p1][d];
                    c2[d] = swap ? run.positions[p1][d] : run.positions[p2][d];
                }
            } else {
                c1 = run.positions[p1];
                c2 = run.positions[p2];
            }
            for (auto* child : {&c1, &c2}) {
                for (std::size_t d = 0; d < dim; ++d) {
                    if (rng.uniform() >= mutation_p) continue;
                    const double sigma = 0.1 * (config.bounds_upper[d] - config.bounds_lower[d]);
                    (*child)[d] += sigma * rng.normal();
                }
                clamp_position(*child, config);
            }
        }
        run.positions = next;
        for (std::size_t i = 0; i < n; ++i) {
            run.fitness[i] = checked_eval(objective, run.positions[i], rng, run.evaluations);
            if (run.fitness[i] < run.best_fitness) {
                run.best_fitness = run.fitness[i];
                run.best_position = run.positions[i];
            }
        }
        result.history.emplace_back(epoch, run.best_fitness);
    }
}

} // namespace detail

inline OptimizationResult baseline_optimize(const ObjectiveSpec& objective,
                                            const BaselineConfig& config) {
    validate(config);
    if (static_cast<std::size_t>(objective.dimension) != config.bounds_lower.size())
        throw std::invalid_argument("objective dimension does not match bounds");

    const auto t0 = std::chrono::steady_clock::now();
    RandomStream rng(config.seed);
    auto run = detail::evaluated_start(objective, config, rng);

    OptimizationResult result;
    result.history.reserve(static_cast<std::size_t>(config.epochs));
    if (config.algorithm == "pso") {
        detail::pso_epochs(run, objective, config, rng, result);
    } else if (config.algorithm == "de") {
        detail::de_epochs(run, objective, config, rng, result);
    } else {
        detail::ga_epochs(run, objective, config, rng, result);
    }
    if (config.epochs == 0) result.history.emplace_back(0, run.best_fitness);

    result.gbest_position = run.best_position;
    result.gbest_fitness = run.best_fitness;
    result.evaluations = run.evaluations;
    result.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

} // namespace eosa
