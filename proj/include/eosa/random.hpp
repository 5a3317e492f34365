#pragma once

// Deterministic random stream used everywhere in the library.
//
// std::uniform_real_distribution / uniform_int_distribution are not required
// to produce the same sequences across standard library implementations, so
// the draws are derived from the raw mt19937_64 output by hand. Everything
// downstream (optimizers, experiment harness) inherits reproducibility from
// this class: same seed, same sequence, on any platform.

#include <cstdint>
#include <cmath>
#include <random>
#include <string_view>

namespace eosa {

class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    // Raw 64-bit engine output.
    std::uint64_t next_raw() { return engine_(); }

    // Uniform double in [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform double in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + uniform() * (hi - lo);
    }

    // Uniform integer in [lo, hi], both ends inclusive, unbiased.
    // A zero-width interval consumes no randomness.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (hi <= lo) return lo;
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1u;
        // rejection sampling on the top of the range to avoid modulo bias
        const std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % span + 1u) % span;
        std::uint64_t v = engine_();
        while (v > limit) v = engine_();
        return lo + static_cast<std::int64_t>(v % span);
    }

    // Standard normal via Box-Muller; consumes exactly two uniforms per pair.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

namespace detail {

inline std::uint64_t fnv1a_bytes(std::uint64_t h, const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace detail

// Stable per-run seed: hash of (master seed, algorithm id, function id, run
// index). Frozen by unit test; changing it changes every archived result.
inline std::uint64_t derive_run_seed(std::uint64_t master_seed,
                                     std::string_view algorithm_id,
                                     std::string_view function_id,
                                     std::uint64_t run_index) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    h = detail::fnv1a_bytes(h, &master_seed, sizeof master_seed);
    h = detail::fnv1a_bytes(h, algorithm_id.data(), algorithm_id.size());
    h = detail::fnv1a_bytes(h, "|", 1);
    h = detail::fnv1a_bytes(h, function_id.data(), function_id.size());
    h = detail::fnv1a_bytes(h, "|", 1);
    h = detail::fnv1a_bytes(h, &run_index, sizeof run_index);
    return detail::splitmix64(h);
}

} // namespace eosa
