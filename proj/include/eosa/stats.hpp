#pragma once

// Friedman mean-rank test and Wilcoxon signed-rank post-hoc test, with
// asymptotic p-values only. Ties get average ranks in both tests.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace eosa {

struct RankMatrix {
    std::vector<std::vector<double>> values;  // n_problems rows, k_algorithms columns
    bool lower_is_better = true;
};

struct FriedmanResult {
    std::vector<double> mean_ranks;
    double chi_square = 0.0;
    int df = 0;
    double p_value = 1.0;
};

struct WilcoxonResult {
    double z = 0.0;
    double p_value = 1.0;
    double w_plus = 0.0;
    double w_minus = 0.0;
    int pairs = 0;  // non-zero differences used
};

namespace detail {

// regularized upper incomplete gamma Q(s, x); series below s+1, Lentz
// continued fraction above
inline double gamma_q(double s, double x) {
    if (x < 0.0 || s <= 0.0) throw std::invalid_argument("gamma_q domain");
    if (x == 0.0) return 1.0;
    const double log_prefix = -x + s * std::log(x) - std::lgamma(s);
    if (x < s + 1.0) {
        double a = s;
        double term = 1.0 / s;
        double sum = term;
        for (int i = 0; i < 500; ++i) {
            a += 1.0;
            term *= x / a;
            sum += term;
            if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
        }
        return 1.0 - sum * std::exp(log_prefix);
    }
    const double tiny = 1e-300;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(log_prefix);
}

inline double chi_square_upper_tail(double statistic, int df) {
    return gamma_q(static_cast<double>(df) / 2.0, statistic / 2.0);
}

// ranks 1..n ascending with average ranks on ties
inline std::vector<double> average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double shared = 0.5 * static_cast<double>(i + j) + 1.0;  // mean of ranks i+1..j+1
        for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = shared;
        i = j + 1;
    }
    return ranks;
}

} // namespace detail

inline void validate(const RankMatrix& matrix) {
    if (matrix.values.size() < 2)
        throw std::invalid_argument("rank matrix needs at least 2 problems");
    const std::size_t k = matrix.values.front().size();
    if (k < 2) throw std::invalid_argument("rank matrix needs at least 2 algorithms");
    for (const auto& row : matrix.values) {
        if (row.size() != k) throw std::invalid_argument("ragged rank matrix");
        for (double v : row)
            if (!std::isfinite(v)) throw std::invalid_argument("non-finite rank matrix entry");
    }
}

inline FriedmanResult friedman(const RankMatrix& matrix) {
    validate(matrix);
    const auto n = static_cast<double>(matrix.values.size());
    const std::size_t k = matrix.values.front().size();

    std::vector<double> rank_sums(k, 0.0);
    std::vector<double> row(k);
    for (const auto& entries : matrix.values) {
        for (std::size_t j = 0; j < k; ++j)
            row[j] = matrix.lower_is_better ? entries[j] : -entries[j];
        const auto ranks = detail::average_ranks(row);
        for (std::size_t j = 0; j < k; ++j) rank_sums[j] += ranks[j];
    }

    FriedmanResult result;
    result.mean_ranks.resize(k);
    double sum_squares = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        result.mean_ranks[j] = rank_sums[j] / n;
        sum_squares += rank_sums[j] * rank_sums[j];
    }
    const auto kd = static_cast<double>(k);
    result.chi_square = 12.0 / (n * kd * (kd + 1.0)) * sum_squares - 3.0 * n * (kd + 1.0);
    if (result.chi_square < 0.0) result.chi_square = 0.0;  // full-tie rounding guard
    result.df = static_cast<int>(k) - 1;
    result.p_value = detail::chi_square_upper_tail(result.chi_square, result.df);
    return result;
}

inline WilcoxonResult wilcoxon_signed_rank(std::span<const double> a,
                                           std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("wilcoxon sequences must have equal length");

    std::vector<double> diffs;
    diffs.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!std::isfinite(a[i]) || !std::isfinite(b[i]))
            throw std::invalid_argument("non-finite wilcoxon entry");
        const double d = a[i] - b[i];
        if (d != 0.0) diffs.push_back(d);
    }
    if (diffs.empty()) throw std::invalid_argument("degenerate pairs");
    if (diffs.size() < 5) throw std::invalid_argument("insufficient pairs");

    std::vector<double> magnitudes(diffs.size());
    for (std::size_t i = 0; i < diffs.size(); ++i) magnitudes[i] = std::fabs(diffs[i]);
    const auto ranks = detail::average_ranks(magnitudes);

    WilcoxonResult result;
    result.pairs = static_cast<int>(diffs.size());
    for (std::size_t i = 0; i < diffs.size(); ++i)
        (diffs[i] > 0.0 ? result.w_plus : result.w_minus) += ranks[i];

    const auto n = static_cast<double>(diffs.size());
    const double mean = n * (n + 1.0) / 4.0;

    // variance with the tied-group adjustment sum(t^3 - t)/48
    double tie_term = 0.0;
    std::vector<double> sorted = magnitudes;
    std::sort(sorted.begin(), sorted.end());
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
        const auto t = static_cast<double>(j - i + 1);
        tie_term += t * t * t - t;
        i = j + 1;
    }
    const double variance = (n * (n + 1.0) * (2.0 * n + 1.0) - 0.5 * tie_term) / 24.0;

    const double w = std::min(result.w_plus, result.w_minus);
    const double magnitude = variance > 0.0 ? (mean - w) / std::sqrt(variance) : 0.0;
    result.z = result.w_minus < result.w_plus   ? -magnitude
               : result.w_plus < result.w_minus ? magnitude
                                                : 0.0;
    result.p_value = std::erfc(std::fabs(result.z) / std::sqrt(2.0));
    return result;
}

} // namespace eosa
