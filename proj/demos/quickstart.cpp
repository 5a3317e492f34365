// Minimal library usage: optimize the 30-dimensional sphere and print how the
// best fitness falls across epochs.

#include <cstdio>

#include "eosa/eosa.hpp"
#include "eosa/objectives.hpp"

int main() {
    const auto spec = eosa::make_objective("F34", 30);

    eosa::EosaConfig config;
    config.population_size = 100;
    config.epochs = 200;
    config.bounds_lower.assign(30, spec.lower);
    config.bounds_upper.assign(30, spec.upper);
    config.seed = 7;

    const auto result = eosa::optimize(spec, config);

    std::printf("%-8s %s\n", "epoch", "gbest");
    for (const auto& [epoch, value] : result.history) {
        if (epoch == 1 || epoch % 40 == 0)
            std::printf("%-8d %.6g\n", epoch, value);
    }
    std::printf("\nfinal gbest %.6g after %lld evaluations (%.3f s)\n", result.gbest_fitness,
                static_cast<long long>(result.evaluations), result.wall_time);
    return 0;
}
