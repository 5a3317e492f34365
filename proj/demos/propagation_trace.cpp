// Prints the compartment counts epoch by epoch, the same trace the simulate
// subcommand writes as CSV.

#include <cstdio>

#include "eosa/harness.hpp"

int main() {
    eosa::EpidemicRates rates;  // defaults
    const auto trace = eosa::simulate_propagation(rates, 200, 30, 3);

    std::printf("%-6s %6s %6s %6s %6s %6s %6s %6s\n", "epoch", "S", "I", "H", "R", "V", "D",
                "Q");
    int epoch = 1;
    for (const auto& row : trace) {
        std::printf("%-6d %6lld %6lld %6lld %6lld %6lld %6lld %6lld\n", epoch++,
                    static_cast<long long>(row.s_count), static_cast<long long>(row.i_count),
                    static_cast<long long>(row.h_count), static_cast<long long>(row.r_count),
                    static_cast<long long>(row.v_count), static_cast<long long>(row.d_count),
                    static_cast<long long>(row.q_count));
    }
    return 0;
}
