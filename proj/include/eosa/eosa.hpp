#pragma once

// Core optimizer: a population of candidate solutions moves through
// susceptible/infected/... compartments; infected members search, and the
// compartment flows decide who keeps searching, who rests, and who is
// replaced by a fresh random candidate.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eosa/epidemic.hpp"
#include "eosa/objectives.hpp"
#include "eosa/random.hpp"

namespace eosa {

enum class Compartment { susceptible, infected, quarantined };

struct Individual {
    std::vector<double> position;
    double fitness = 0.0;
    bool evaluated = false;
    Compartment state = Compartment::susceptible;
};

enum class MovementMode {
    // step toward the best: pos + rho * (rate * u + (best - pos))
    differential,
    // literal additive reading: pos + rho * (rate * u + best)
    additive,
};

struct EosaConfig {
    int population_size = 100;
    int epochs = 500;
    std::vector<double> bounds_lower;
    std::vector<double> bounds_upper;
    double srate = 0.1;
    double lrate = 1.0;
    double rho = 0.5;
    double evdincub = 0.5;
    double neighborhood_threshold = 0.5;
    EpidemicRates rates;
    std::uint64_t seed = 0;
    bool reinject_index_case = true;
    MovementMode movement = MovementMode::differential;
};

struct OptimizationResult {
    std::vector<double> gbest_position;
    double gbest_fitness = 0.0;
    std::vector<std::pair<int, double>> history;  // (epoch, gbest_fitness)
    std::int64_t evaluations = 0;
    std::vector<CompartmentCensus> census_trace;  // index = epoch
    double wall_time = 0.0;
    int reinjections = 0;
};

inline void validate(const EosaConfig& config) {
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
    if (!(config.srate > 0.0) || config.srate > 1.0)
        throw std::invalid_argument("srate must lie in (0, 1]");
    if (config.lrate < config.srate) throw std::invalid_argument("lrate must be >= srate");
    if (!(config.rho > 0.0)) throw std::invalid_argument("rho must be positive");
    if (config.evdincub < 0.0 || config.evdincub > 1.0)
        throw std::invalid_argument("evdincub must lie in [0, 1]");
    if (!(config.neighborhood_threshold > 0.0) || !(config.neighborhood_threshold < 1.0))
        throw std::invalid_argument("neighborhood_threshold must lie in (0, 1)");
    validate(config.rates);
}

inline std::vector<Individual> initialize_susceptibles(const EosaConfig& config,
                                                       RandomStream& rng) {
    if (config.population_size < 1)
        throw std::invalid_argument("population_size must be positive");
    const std::size_t dim = config.bounds_lower.size();
    if (dim == 0 || dim != config.bounds_upper.size())
        throw std::invalid_argument("bounds vectors must be non-empty and equal length");
    for (std::size_t d = 0; d < dim; ++d)
        if (config.bounds_lower[d] > config.bounds_upper[d])
            throw std::invalid_argument("inverted bounds at dimension " + std::to_string(d));

    std::vector<Individual> population(static_cast<std::size_t>(config.population_size));
    for (auto& ind : population) {
        ind.position.resize(dim);
        for (std::size_t d = 0; d < dim; ++d)
            ind.position[d] =
                config.bounds_lower[d] +
                rng.uniform() * (config.bounds_upper[d] - config.bounds_lower[d]);
        ind.state = Compartment::susceptible;
    }
    return population;
}

inline Individual& generate_index_case(std::vector<Individual>& population, RandomStream& rng) {
    std::vector<std::size_t> susceptible;
    for (std::size_t i = 0; i < population.size(); ++i)
        if (population[i].state == Compartment::susceptible) susceptible.push_back(i);
    if (susceptible.empty()) throw std::runtime_error("population exhausted");
    const auto pick = susceptible[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(susceptible.size()) - 1))];
    population[pick].state = Compartment::infected;
    return population[pick];
}

inline std::vector<double> displace(const Individual& individual, const Individual& gbest,
                                    double rate, const EosaConfig& config, RandomStream& rng) {
    const std::size_t dim = individual.position.size();
    std::vector<double> next(dim);
    for (std::size_t d = 0; d < dim; ++d) {
        const double u = rng.uniform();
        const double pull = config.movement == MovementMode::differential
                                ? gbest.position[d] - individual.position[d]
                                : gbest.position[d];
        double v = individual.position[d] + config.rho * (rate * u + pull);
        v = std::clamp(v, config.bounds_lower[d], config.bounds_upper[d]);
        next[d] = v;
    }
    return next;
}

enum class Neighborhood { short_range, long_range };

inline Neighborhood classify_neighborhood(RandomStream& rng, double threshold = 0.5) {
    return rng.uniform() < threshold ? Neighborhood::short_range : Neighborhood::long_range;
}

inline Individual update_best(const Individual& cbest, const Individual& gbest) {
    if (!cbest.evaluated || !gbest.evaluated)
        throw std::invalid_argument("update_best requires evaluated individuals");
    return cbest.fitness < gbest.fitness ? cbest : gbest;
}

struct SearchState {
    std::vector<Individual> population;
    CompartmentCensus census;
    Individual gbest;
    std::int64_t evaluations = 0;
    int reinjections = 0;
};

namespace detail {

inline double checked_eval(const ObjectiveSpec& objective, std::span<const double> x,
                           RandomStream& rng, std::int64_t& evaluations) {
    const double v = evaluate(objective, x, &rng);
    ++evaluations;
    if (!std::isfinite(v)) throw std::domain_error("objective undefined at point");
    return v;
}

} // namespace detail

// One loop body: quarantine sample, infected movement and new infections,
// compartment transitions, and the best-so-far update.
inline void propagate_epoch(SearchState& state, const ObjectiveSpec& objective,
                            const EosaConfig& config, RandomStream& rng) {
    if (state.census.i_count == 0) return;

    auto& population = state.population;
    auto& census = state.census;

    // one transition plan per epoch, drawn against the epoch-start census
    const TransitionPlan plan = transition_counts(census, config.rates, rng);

    // quarantined members sit this epoch out
    std::int64_t to_quarantine = plan.to_quarantine;
    for (auto& ind : population) {
        if (to_quarantine == 0) break;
        if (ind.state != Compartment::infected) continue;
        ind.state = Compartment::quarantined;
        --to_quarantine;
    }
    census.q_count = plan.to_quarantine;
    census.i_count -= plan.to_quarantine;

    std::vector<std::size_t> movers;
    std::vector<std::size_t> susceptible;
    for (std::size_t i = 0; i < population.size(); ++i) {
        if (population[i].state == Compartment::infected) movers.push_back(i);
        if (population[i].state == Compartment::susceptible) susceptible.push_back(i);
    }

    for (const auto idx : movers) {
        auto& mover = population[idx];
        const Neighborhood reach = classify_neighborhood(rng, config.neighborhood_threshold);
        const double rate = reach == Neighborhood::short_range ? config.srate : config.lrate;
        mover.position = displace(mover, state.gbest, rate, config, rng);
        mover.fitness = detail::checked_eval(objective, mover.position, rng, state.evaluations);
        mover.evaluated = true;

        const double incubation = rng.uniform();
        if (incubation <= config.evdincub) continue;

        // new infections scale with the current force of infection
        const double force = compartment_derivatives(census, config.rates).di;
        const double bound =
            std::max(force, 0.0) * static_cast<double>(census.i_count) * rate;
        std::int64_t fresh = detail::bounded_count(bound, rng);
        fresh = std::min(fresh, census.s_count);
        for (std::int64_t n = 0; n < fresh; ++n) {
            const auto j = static_cast<std::size_t>(
                rng.uniform_int(0, static_cast<std::int64_t>(susceptible.size()) - 1));
            const auto slot = susceptible[j];
            susceptible[j] = susceptible.back();
            susceptible.pop_back();
            auto& infectee = population[slot];
            infectee.state = Compartment::infected;
            infectee.fitness =
                detail::checked_eval(objective, infectee.position, rng, state.evaluations);
            infectee.evaluated = true;
            --census.s_count;
            ++census.i_count;
        }
    }

    // transitions out of the infected pool, claimed in index order
    std::int64_t to_hospital = plan.to_hospital;
    std::int64_t to_recover = plan.to_recovered;
    std::int64_t to_die = plan.to_dead;
    for (auto& ind : population) {
        if (ind.state != Compartment::infected) continue;
        if (to_hospital > 0) {
            --to_hospital;
            ind.state = Compartment::susceptible;  // treated, and back in the pool
        } else if (to_recover > 0) {
            --to_recover;
            ind.state = Compartment::susceptible;
        } else if (to_die > 0) {
            --to_die;
            ind.state = Compartment::susceptible;  // replaced by a fresh candidate
            for (std::size_t d = 0; d < ind.position.size(); ++d)
                ind.position[d] =
                    config.bounds_lower[d] +
                    rng.uniform() * (config.bounds_upper[d] - config.bounds_lower[d]);
            ind.fitness = 0.0;
            ind.evaluated = false;
        } else {
            break;
        }
    }
    const std::int64_t removed = plan.to_hospital + plan.to_recovered + plan.to_dead;
    census.i_count -= removed;
    census.s_count += removed;
    census.h_count = plan.to_hospital;
    census.r_count = plan.to_recovered;
    census.v_count = plan.to_vaccinated;
    census.d_count = plan.to_dead;

    // quarantine lasts one epoch
    for (auto& ind : population) {
        if (ind.state == Compartment::quarantined) ind.state = Compartment::infected;
    }
    census.i_count += plan.to_quarantine;

    const Individual* cbest = nullptr;
    for (const auto& ind : population) {
        if (ind.state != Compartment::infected || !ind.evaluated) continue;
        if (cbest == nullptr || ind.fitness < cbest->fitness) cbest = &ind;
    }
    if (cbest != nullptr) state.gbest = update_best(*cbest, state.gbest);
}

inline OptimizationResult optimize(const ObjectiveSpec& objective, const EosaConfig& config) {
    validate(config);
    if (static_cast<std::size_t>(objective.dimension) != config.bounds_lower.size())
        throw std::invalid_argument("objective dimension does not match bounds");

    const auto t0 = std::chrono::steady_clock::now();
    RandomStream rng(config.seed);

    SearchState state;
    state.population = initialize_susceptibles(config, rng);
    Individual& icase = generate_index_case(state.population, rng);
    icase.fitness = detail::checked_eval(objective, icase.position, rng, state.evaluations);
    icase.evaluated = true;
    state.gbest = icase;
    state.census.s_count = config.population_size - 1;
    state.census.i_count = 1;

    OptimizationResult result;
    result.census_trace.push_back(state.census);
    result.history.reserve(static_cast<std::size_t>(config.epochs));

    for (int epoch = 1; epoch <= config.epochs; ++epoch) {
        if (state.census.i_count == 0) {
            if (!config.reinject_index_case) {
                for (int e = epoch; e <= config.epochs; ++e) {
                    result.history.emplace_back(e, state.gbest.fitness);
                    result.census_trace.push_back(state.census);
                }
                break;
            }
            // restart the search from the best-known position
            for (auto& ind : state.population) {
                if (ind.state != Compartment::susceptible) continue;
                ind.state = Compartment::infected;
                ind.position = state.gbest.position;
                ind.fitness =
                    detail::checked_eval(objective, ind.position, rng, state.evaluations);
                ind.evaluated = true;
                break;
            }
            --state.census.s_count;
            ++state.census.i_count;
            ++state.reinjections;
        }
        propagate_epoch(state, objective, config, rng);
        result.history.emplace_back(epoch, state.gbest.fitness);
        result.census_trace.push_back(state.census);
    }
    if (config.epochs == 0) result.history.emplace_back(0, state.gbest.fitness);

    result.gbest_position = state.gbest.position;
    result.gbest_fitness = state.gbest.fitness;
    result.evaluations = state.evaluations;
    result.reinjections = state.reinjections;
    result.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

} // namespace eosa
