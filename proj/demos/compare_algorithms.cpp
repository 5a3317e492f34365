// Side-by-side comparison on Rastrigin: the epidemic optimizer against PSO,
// DE, and GA over a handful of seeded runs each.

#include <cstdio>
#include <vector>

#include "eosa/harness.hpp"

int main() {
    eosa::ExperimentConfig config;
    for (const std::string name : {"eosa", "pso", "de", "ga"}) {
        eosa::AlgorithmConfig algo;
        algo.name = name;
        config.algorithms.push_back(std::move(algo));
    }
    config.functions = {"F27"};
    config.runs = 10;
    config.epochs = 300;
    config.population_size = 50;
    config.master_seed = 99;
    config.checkpoints = {1, 100, 300};
    config.jobs = 4;

    const auto archive = eosa::run_experiment(config);

    std::printf("%-6s %-12s %-12s %-12s %-12s\n", "algo", "best", "median", "worst", "stdev");
    for (const auto& algo : config.algorithms) {
        std::vector<double> finals;
        for (const auto& rec : archive.runs)
            if (rec.algorithm == algo.name) finals.push_back(rec.result.gbest_fitness);
        const auto stats = eosa::summarize(finals);
        std::printf("%-6s %-12.5g %-12.5g %-12.5g %-12.5g\n", algo.name.c_str(), stats.best,
                    stats.median, stats.worst, stats.stdev);
    }

    std::printf("\nmedian gbest at checkpoints:\n");
    for (const auto& row : eosa::convergence_table(archive, config.checkpoints))
        std::printf("%-6s epoch %-4d %.5g\n", row.algorithm.c_str(), row.checkpoint,
                    row.median_gbest);
    return 0;
}
