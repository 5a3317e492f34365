#pragma once

// Multi-run experiment driver: schedules (algorithm, function, run) triples,
// derives one seed per run, and writes the archive (per-run convergence CSVs,
// census traces for the epidemic optimizer, a summary table, and a manifest).

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "eosa/baselines.hpp"
#include "eosa/eosa.hpp"
#include "eosa/objectives.hpp"
#include "eosa/random.hpp"

namespace eosa {

inline constexpr const char* kToolVersion = "0.1.0";

struct AlgorithmConfig {
    std::string name;        // "eosa", "pso", "de", or "ga"
    EosaConfig eosa;         // hyperparameters used when name == "eosa"
    BaselineConfig baseline; // hyperparameters used otherwise
};

struct ExperimentConfig {
    std::vector<AlgorithmConfig> algorithms;
    std::vector<std::string> functions;  // registry ids
    int runs = 20;
    int epochs = 500;
    int population_size = 100;
    std::uint64_t master_seed = 0;
    std::vector<int> checkpoints = {1, 50, 100, 200, 300, 400, 500};
    std::string output_dir;
    int jobs = 1;
};

struct RunRecord {
    std::string algorithm;
    std::string function;
    int run_index = 0;
    std::uint64_t seed = 0;
    OptimizationResult result;
};

struct ExperimentArchive {
    ExperimentConfig config;
    std::vector<RunRecord> runs;  // algorithm-major, then function, then run index
};

inline void write_archive(const ExperimentArchive& archive);

struct SummaryStats {
    double best = 0.0;
    double worst = 0.0;
    double mean = 0.0;
    double median = 0.0;
    double stdev = 0.0;
};

struct ConvergenceRow {
    std::string algorithm;
    std::string function;
    int checkpoint = 0;
    double median_gbest = 0.0;
};

struct TimingRow {
    std::string algorithm;
    double mean_time_s = 0.0;
};

namespace detail {

inline std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline double median_sorted_copy(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

inline void write_text_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    out << body;
    if (!out) throw std::runtime_error("failed to write " + path.string());
}

inline std::string run_csv_text(const std::vector<std::pair<int, double>>& history) {
    std::string text = "epoch,gbest_fitness\n";
    for (const auto& [epoch, value] : history)
        text += std::to_string(epoch) + "," + g17(value) + "\n";
    return text;
}

inline std::string census_csv_text(const std::vector<CompartmentCensus>& trace,
                                   int first_epoch) {
    std::string text = "epoch,S,I,H,R,V,D,Q\n";
    int epoch = first_epoch;
    for (const auto& row : trace) {
        text += std::to_string(epoch++) + "," + std::to_string(row.s_count) + "," +
                std::to_string(row.i_count) + "," + std::to_string(row.h_count) + "," +
                std::to_string(row.r_count) + "," + std::to_string(row.v_count) + "," +
                std::to_string(row.d_count) + "," + std::to_string(row.q_count) + "\n";
    }
    return text;
}

} // namespace detail

inline SummaryStats summarize(const std::vector<double>& final_values) {
    if (final_values.empty()) throw std::invalid_argument("summarize needs at least one value");
    SummaryStats stats;
    stats.best = *std::min_element(final_values.begin(), final_values.end());
    stats.worst = *std::max_element(final_values.begin(), final_values.end());
    double sum = 0.0;
    for (double v : final_values) sum += v;
    const auto n = static_cast<double>(final_values.size());
    stats.mean = sum / n;
    stats.median = detail::median_sorted_copy(final_values);
    if (final_values.size() > 1) {
        double ss = 0.0;
        for (double v : final_values) ss += (v - stats.mean) * (v - stats.mean);
        stats.stdev = std::sqrt(ss / (n - 1.0));
    }
    return stats;
}

inline void validate(const ExperimentConfig& config) {
    if (config.algorithms.empty()) throw std::invalid_argument("no algorithms configured");
    if (config.functions.empty()) throw std::invalid_argument("no functions configured");
    if (config.runs < 1) throw std::invalid_argument("runs must be at least 1");
    if (config.epochs < 1) throw std::invalid_argument("epochs must be at least 1");
    if (config.population_size < 1)
        throw std::invalid_argument("population_size must be at least 1");
    if (config.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
    for (std::size_t i = 1; i < config.checkpoints.size(); ++i)
        if (config.checkpoints[i] <= config.checkpoints[i - 1])
            throw std::invalid_argument("checkpoints must be strictly increasing");
    for (int cp : config.checkpoints)
        if (cp < 1 || cp > config.epochs)
            throw std::invalid_argument("checkpoint " + std::to_string(cp) +
                                        " outside [1, epochs]");
    for (const auto& algo : config.algorithms) {
        if (algo.name != "eosa" && algo.name != "pso" && algo.name != "de" && algo.name != "ga")
            throw std::invalid_argument("unknown algorithm: " + algo.name);
        for (const auto& other : config.algorithms)
            if (&other != &algo && other.name == algo.name)
                throw std::invalid_argument("duplicate algorithm: " + algo.name);
    }
}

namespace detail {

// fills the experiment-owned fields, keeping per-algorithm hyperparameters
inline OptimizationResult dispatch_run(const AlgorithmConfig& algo, const ObjectiveSpec& spec,
                                       const ExperimentConfig& config, std::uint64_t seed) {
    const auto dim = static_cast<std::size_t>(spec.dimension);
    if (algo.name == "eosa") {
        EosaConfig c = algo.eosa;
        c.population_size = config.population_size;
        c.epochs = config.epochs;
        c.bounds_lower.assign(dim, spec.lower);
        c.bounds_upper.assign(dim, spec.upper);
        c.seed = seed;
        return optimize(spec, c);
    }
    BaselineConfig c = algo.baseline;
    c.algorithm = algo.name;
    c.population_size = config.population_size;
    c.epochs = config.epochs;
    c.bounds_lower.assign(dim, spec.lower);
    c.bounds_upper.assign(dim, spec.upper);
    c.seed = seed;
    return baseline_optimize(spec, c);
}

inline std::string manifest_text(const ExperimentArchive& archive) {
    const auto& config = archive.config;
    std::ostringstream out;
    out << "eosa experiment manifest\n";
    out << "version: " << kToolVersion << "\n";
    out << "master_seed: " << config.master_seed << "\n";
    out << "runs: " << config.runs << "\n";
    out << "epochs: " << config.epochs << "\n";
    out << "population_size: " << config.population_size << "\n";
    out << "checkpoints:";
    for (int cp : config.checkpoints) out << " " << cp;
    out << "\nalgorithms:";
    for (const auto& algo : config.algorithms) out << " " << algo.name;
    out << "\nfunctions:";
    for (const auto& fn : config.functions) out << " " << fn;
    out << "\nrun_seeds:\n";
    for (const auto& rec : archive.runs)
        out << rec.algorithm << "," << rec.function << "," << rec.run_index << "," << rec.seed
            << "\n";
    return out.str();
}

inline std::string summary_csv_text(const ExperimentArchive& archive) {
    std::string text = "algorithm,function,best,worst,mean,median,stdev,mean_time_s\n";
    for (const auto& algo : archive.config.algorithms) {
        for (const auto& fn : archive.config.functions) {
            std::vector<double> finals;
            double time_sum = 0.0;
            for (const auto& rec : archive.runs) {
                if (rec.algorithm != algo.name || rec.function != fn) continue;
                finals.push_back(rec.result.gbest_fitness);
                time_sum += rec.result.wall_time;
            }
            const auto stats = summarize(finals);
            text += algo.name + "," + fn + "," + g17(stats.best) + "," + g17(stats.worst) + "," +
                    g17(stats.mean) + "," + g17(stats.median) + "," + g17(stats.stdev) + "," +
                    g17(time_sum / static_cast<double>(finals.size())) + "\n";
        }
    }
    return text;
}

} // namespace detail

inline ExperimentArchive run_experiment(const ExperimentConfig& config) {
    validate(config);

    // resolve everything and pre-check each pairing before any work starts
    std::vector<ObjectiveSpec> specs;
    specs.reserve(config.functions.size());
    for (const auto& id : config.functions) specs.push_back(make_objective(id));
    for (const auto& algo : config.algorithms) {
        for (const auto& spec : specs) {
            const auto dim = static_cast<std::size_t>(spec.dimension);
            if (algo.name == "eosa") {
                EosaConfig c = algo.eosa;
                c.population_size = config.population_size;
                c.epochs = config.epochs;
                c.bounds_lower.assign(dim, spec.lower);
                c.bounds_upper.assign(dim, spec.upper);
                validate(c);
            } else {
                BaselineConfig c = algo.baseline;
                c.algorithm = algo.name;
                c.population_size = config.population_size;
                c.epochs = config.epochs;
                c.bounds_lower.assign(dim, spec.lower);
                c.bounds_upper.assign(dim, spec.upper);
                validate(c);
            }
        }
    }

    ExperimentArchive archive;
    archive.config = config;
    const std::size_t total = config.algorithms.size() * config.functions.size() *
                              static_cast<std::size_t>(config.runs);
    archive.runs.resize(total);

    // embarrassingly parallel; records land in their slot so output order is
    // independent of scheduling
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(total);
    auto worker = [&] {
        for (;;) {
            const std::size_t task = next.fetch_add(1);
            if (task >= total) return;
            const std::size_t per_algo = specs.size() * static_cast<std::size_t>(config.runs);
            const auto& algo = config.algorithms[task / per_algo];
            const auto& spec = specs[(task % per_algo) / static_cast<std::size_t>(config.runs)];
            const auto run = static_cast<int>(task % static_cast<std::size_t>(config.runs));
            RunRecord& rec = archive.runs[task];
            rec.algorithm = algo.name;
            rec.function = spec.id;
            rec.run_index = run;
            rec.seed = derive_run_seed(config.master_seed, algo.name, spec.id,
                                       static_cast<std::uint64_t>(run));
            try {
                rec.result = detail::dispatch_run(algo, spec, config, rec.seed);
            } catch (...) {
                failures[task] = std::current_exception();
                return;
            }
        }
    };
    const auto pool_size = std::min<std::size_t>(static_cast<std::size_t>(config.jobs), total);
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < pool_size; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& failure : failures)
        if (failure) std::rethrow_exception(failure);

    if (!config.output_dir.empty()) write_archive(archive);
    return archive;
}

inline void write_archive(const ExperimentArchive& archive) {
    namespace fs = std::filesystem;
    const fs::path root = archive.config.output_dir;
    std::error_code ec;
    fs::create_directories(root / "runs", ec);
    if (ec) throw std::runtime_error("unwritable output directory: " + root.string());

    for (const auto& rec : archive.runs) {
        const std::string stem =
            rec.algorithm + "_" + rec.function + "_run" + std::to_string(rec.run_index);
        detail::write_text_file(root / "runs" / (stem + ".csv"),
                                detail::run_csv_text(rec.result.history));
        if (rec.algorithm == "eosa")
            detail::write_text_file(root / "runs" / (stem + "_census.csv"),
                                    detail::census_csv_text(rec.result.census_trace, 0));
    }
    detail::write_text_file(root / "summary.csv", detail::summary_csv_text(archive));
    detail::write_text_file(root / "manifest.txt", detail::manifest_text(archive));
}

inline std::vector<ConvergenceRow> convergence_table(const ExperimentArchive& archive,
                                                     const std::vector<int>& checkpoints) {
    for (int cp : checkpoints)
        if (cp < 1 || cp > archive.config.epochs)
            throw std::invalid_argument("checkpoint " + std::to_string(cp) +
                                        " outside [1, epochs]");

    std::vector<ConvergenceRow> table;
    for (const auto& algo : archive.config.algorithms) {
        for (const auto& fn : archive.config.functions) {
            for (int cp : checkpoints) {
                std::vector<double> at_checkpoint;
                for (const auto& rec : archive.runs) {
                    if (rec.algorithm != algo.name || rec.function != fn) continue;
                    const auto& point = rec.result.history.at(static_cast<std::size_t>(cp - 1));
                    if (point.first != cp)
                        throw std::logic_error("history epochs out of order");
                    at_checkpoint.push_back(point.second);
                }
                if (at_checkpoint.empty()) continue;
                table.push_back(
                    {algo.name, fn, cp, detail::median_sorted_copy(at_checkpoint)});
            }
        }
    }
    return table;
}

inline std::vector<TimingRow> timing_report(const ExperimentArchive& archive) {
    std::vector<TimingRow> rows;
    for (const auto& algo : archive.config.algorithms) {
        double sum = 0.0;
        int count = 0;
        for (const auto& rec : archive.runs) {
            if (rec.algorithm != algo.name) continue;
            sum += rec.result.wall_time;
            ++count;
        }
        if (count == 0) {
            std::cerr << "warning: no runs recorded for algorithm " << algo.name << "\n";
            continue;
        }
        rows.push_back({algo.name, sum / count});
    }
    return rows;
}

// Runs the population dynamics on a fixed trivial objective and returns one
// census row per epoch (epoch 1 first; the pre-epoch state is dropped).
inline std::vector<CompartmentCensus> simulate_propagation(const EpidemicRates& rates, int psize,
                                                           int epochs, std::uint64_t seed) {
    if (psize < 2) throw std::invalid_argument("simulation needs a population of at least 2");
    EosaConfig config;
    config.population_size = psize;
    config.epochs = epochs;
    config.bounds_lower.assign(2, -100.0);
    config.bounds_upper.assign(2, 100.0);
    config.rates = rates;
    config.seed = seed;
    auto spec = make_objective("F34", 2);
    auto trace = optimize(spec, config).census_trace;
    trace.erase(trace.begin());
    return trace;
}

} // namespace eosa
