#pragma once

// Benchmark-function registry: the classical suite F1..F47 plus the composed
// suite C1..C30 (shifted, shift-rotated, and concatenated-hybrid variants).
//
// Formulas follow the published table for this suite, including its quirks
// (several rows carry another function's formula; the formula under an id is
// what this registry implements). Where the printed typography contradicts
// the row's stated minimum (dropped absolute-value bars or exponents), the
// minimal repair that makes the stated minimum true is applied.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eosa/random.hpp"

namespace eosa {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

struct ModalityTags {
    bool unimodal = false;
    bool multimodal = false;
    bool separable = false;
    bool nonseparable = false;

    static ModalityTags from_letters(std::string_view letters) {
        ModalityTags t;
        for (char c : letters) {
            if (c == 'U') t.unimodal = true;
            if (c == 'M') t.multimodal = true;
            if (c == 'S') t.separable = true;
            if (c == 'N') t.nonseparable = true;
        }
        return t;
    }

    std::string to_string() const {
        std::string s;
        auto add = [&s](const char* w) {
            if (!s.empty()) s += '|';
            s += w;
        };
        if (unimodal) add("unimodal");
        if (multimodal) add("multimodal");
        if (separable) add("separable");
        if (nonseparable) add("non-separable");
        return s;
    }
};

// ---------------------------------------------------------------------------
// Shift / rotation transforms
// ---------------------------------------------------------------------------

struct TransformSpec {
    std::uint64_t seed = 0;
    std::vector<double> shift;                   // length dim
    std::vector<std::vector<double>> rotation;   // dim x dim; empty = identity

    bool has_rotation() const { return !rotation.empty(); }
};

// Shift drawn uniformly inside the inner 80% of [lower, upper]; rotation is a
// seeded standard-normal matrix orthonormalized by modified Gram-Schmidt with
// a re-orthogonalization pass.
inline TransformSpec generate_transform(std::uint64_t seed, int dim,
                                        double lower, double upper,
                                        bool with_rotation = true) {
    if (dim < 1) throw std::invalid_argument("transform dimension must be >= 1");
    RandomStream rng(seed);
    TransformSpec t;
    t.seed = seed;
    const double margin = 0.1 * (upper - lower);
    t.shift.resize(static_cast<std::size_t>(dim));
    for (auto& s : t.shift) s = rng.uniform(lower + margin, upper - margin);

    if (!with_rotation) return t;

    const auto n = static_cast<std::size_t>(dim);
    std::vector<std::vector<double>> m(n, std::vector<double>(n));
    for (auto& row : m)
        for (auto& v : row) v = rng.normal();

    // orthonormalize columns, twice for numerical hygiene
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < j; ++k) {
                double dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) dot += m[i][j] * m[i][k];
                for (std::size_t i = 0; i < n; ++i) m[i][j] -= dot * m[i][k];
            }
            double norm = 0.0;
            for (std::size_t i = 0; i < n; ++i) norm += m[i][j] * m[i][j];
            norm = std::sqrt(norm);
            if (norm < 1e-12) {
                // vanishing column (vanishingly unlikely); re-draw deterministically
                for (std::size_t i = 0; i < n; ++i) m[i][j] = rng.normal();
                --j;
                continue;
            }
            for (std::size_t i = 0; i < n; ++i) m[i][j] /= norm;
        }
    }
    t.rotation = std::move(m);
    return t;
}

inline std::string transform_to_string(const TransformSpec& t) {
    std::ostringstream os;
    os << "transform seed=" << t.seed << " dim=" << t.shift.size()
       << " rotation=" << (t.has_rotation() ? 1 : 0);
    return os.str();
}

// ---------------------------------------------------------------------------
// Objective specification
// ---------------------------------------------------------------------------

struct ObjectiveSpec {
    std::string id;
    std::string name;
    int dimension = 0;
    double lower = 0.0;
    double upper = 0.0;
    bool min_known = false;
    double known_minimum = 0.0;
    double min_tolerance = 1e-9;        // absolute tolerance at the optimum
    std::vector<double> optimum;        // empty when the location is unknown
    // half-power kink at the minimum (e.g. HGBat's sqrt|.|) amplifies coordinate
    // rounding, so transformed instances do not certify an optimum location
    bool fragile_optimum = false;
    ModalityTags tags;
    bool stochastic = false;
    std::optional<TransformSpec> transform;

    // Evaluates the untransformed base function; the stream is only consulted
    // by stochastic functions.
    std::function<double(std::span<const double>, RandomStream*)> base_eval;
};

namespace detail {

inline void apply_transform(const TransformSpec& t, std::span<const double> x,
                            std::vector<double>& out) {
    const std::size_t n = x.size();
    if (!t.has_rotation()) {
        out.resize(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = x[i] - t.shift[i];
        return;
    }
    std::vector<double> centered(n);
    for (std::size_t i = 0; i < n; ++i) centered[i] = x[i] - t.shift[i];
    out.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        const auto& row = t.rotation[i];
        for (std::size_t j = 0; j < n; ++j) acc += row[j] * centered[j];
        out[i] = acc;
    }
}

} // namespace detail

inline double evaluate(const ObjectiveSpec& spec, std::span<const double> x,
                       RandomStream* noise) {
    if (static_cast<int>(x.size()) != spec.dimension)
        throw std::invalid_argument("dimension mismatch for " + spec.id + ": expected " +
                                    std::to_string(spec.dimension) + ", got " +
                                    std::to_string(x.size()));
    if (spec.stochastic && noise == nullptr)
        throw std::invalid_argument(spec.id + " is stochastic and requires a random stream");
    if (!spec.transform) return spec.base_eval(x, noise);
    std::vector<double> y;
    detail::apply_transform(*spec.transform, x, y);
    return spec.base_eval(std::span<const double>(y), noise);
}

inline double evaluate(const ObjectiveSpec& spec, std::span<const double> x) {
    return evaluate(spec, x, nullptr);
}

inline double evaluate(const ObjectiveSpec& spec, std::span<const double> x, RandomStream& rng) {
    return evaluate(spec, x, &rng);
}

// ---------------------------------------------------------------------------
// Base formulas
// ---------------------------------------------------------------------------

namespace fn {

using Input = std::span<const double>;

inline double sphere(Input x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

inline double ackley(Input x) {
    const double n = static_cast<double>(x.size());
    double sq = 0.0, cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * kPi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + std::exp(1.0);
}

inline double alpine(Input x) {
    double s = 0.0;
    for (double v : x) s += std::abs(v * std::sin(v) + 0.1 * v);
    return s;
}

inline double brown(Input x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i] * x[i], b = x[i + 1] * x[i + 1];
        s += std::pow(a, b + 1.0) + std::pow(b, a + 1.0);
    }
    return s;
}

inline double bent_cigar(Input x) {
    if (x.empty()) return 0.0;
    double tail = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) tail += x[i] * x[i];
    return x[0] * x[0] + 1e6 * tail;
}

// the formula printed under "Dixon and Price": 1e6 * x1^2 * sum_{i>=2} xi^2
inline double cigar_product(Input x) {
    if (x.empty()) return 0.0;
    double tail = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) tail += x[i] * x[i];
    return 1e6 * x[0] * x[0] * tail;
}

// the formula printed under "Discus": (x1-1)^2 + sum i*(2xi^2 - x_{i-1})^2
inline double dixon_price(Input x) {
    if (x.empty()) return 0.0;
    double s = (x[0] - 1.0) * (x[0] - 1.0);
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double t = 2.0 * x[i] * x[i] - x[i - 1];
        s += static_cast<double>(i + 1) * t * t;
    }
    return s;
}

inline double helical_valley(Input x) {
    double theta;
    if (x[0] == 0.0 && x[1] == 0.0) {
        theta = 0.0;
    } else if (x[0] >= 0.0) {
        theta = std::atan(x[1] / x[0]) / (2.0 * kPi);
    } else {
        theta = (kPi - std::atan(x[1] / x[0])) / (2.0 * kPi);
    }
    const double a = x[2] - 10.0 * theta;
    const double b = std::sqrt(x[0] * x[0] + x[1] * x[1]) - 1.0;
    return 100.0 * (a * a + b * b) + x[2] * x[2];
}

inline double griewank(Input x) {
    double s = 0.0, p = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * x[i] / 1400.0;
        p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return 1.0 + s - p;
}

inline double penalty_u(double x, double a, double k, double m) {
    if (x > a) return k * std::pow(x - a, m);
    if (x < -a) return k * std::pow(-x - a, m);
    return 0.0;
}

inline double penalized1(Input x) {
    const std::size_t n = x.size();
    auto y = [&x](std::size_t i) { return 1.0 + 0.25 * (x[i] + 1.0); };
    double core = 10.0 * std::pow(std::sin(kPi * y(0)), 2.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double d = y(i) - 1.0;
        core += d * d * (1.0 + 10.0 * std::pow(std::sin(kPi * y(i + 1)), 2.0));
    }
    const double dn = y(n - 1) - 1.0;
    core += dn * dn;
    double pen = 0.0;
    for (double v : x) pen += penalty_u(v, 10.0, 100.0, 4.0);
    return kPi / static_cast<double>(n) * core + pen;
}

inline double penalized2(Input x) {
    const std::size_t n = x.size();
    double core = std::pow(std::sin(3.0 * kPi * x[0]), 2.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double d = x[i] - 1.0;
        core += d * d * (1.0 + std::pow(std::sin(3.0 * kPi * x[i + 1]), 2.0));
    }
    const double dn = x[n - 1] - 1.0;
    core += dn * dn * (1.0 + std::pow(std::sin(2.0 * kPi * x[n - 1]), 2.0));
    double pen = 0.0;
    for (double v : x) pen += penalty_u(v, 5.0, 100.0, 4.0);
    return 0.1 * core + pen;
}

inline double weighted_quartic(Input x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<double>(i + 1) * std::pow(x[i], 4.0);
    return s;
}

inline double hgbat(Input x) {
    const double n = static_cast<double>(x.size());
    double sq = 0.0, lin = 0.0;
    for (double v : x) {
        sq += v * v;
        lin += v;
    }
    return std::sqrt(std::abs(sq * sq - lin * lin)) + (0.5 * sq + lin) / n + 0.5;
}

inline double elliptic(Input x) {
    const std::size_t n = x.size();
    if (n == 1) return x[0] * x[0];
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double expo = static_cast<double>(i) / static_cast<double>(n - 1);
        s += std::pow(1e6, expo) * x[i] * x[i];
    }
    return s;
}

// cosine mixture in the orientation whose minimum is -0.1*n at the origin
inline double cosine_mixture(Input x) {
    double sq = 0.0, cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(5.0 * kPi * v);
    }
    return sq - 0.1 * cs;
}

// chained Schaffer-style terms (the formula printed under "Levy 3")
inline double schaffer_chain(Input x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i], b = x[i + 1];
        const double sn = std::sin(std::sqrt(100.0 * a * a + b * b));
        const double denom = 1.0 + 0.001 * (a * a - 2.0 * a * b + b * b);
        s += 0.5 + (sn * sn - 0.5) / denom;
    }
    return s;
}

inline double levy13(Input x) {
    const std::size_t n = x.size();
    double s = std::pow(std::sin(3.0 * kPi * x[0]), 2.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double d = x[i] - 1.0;
        s += d * d * std::pow(std::sin(3.0 * kPi * x[i + 1]), 2.0);
    }
    s += std::abs(x[n - 1] - 1.0) * (1.0 + std::pow(std::sin(3.0 * kPi * x[n - 1]), 2.0));
    return s;
}

inline double levy_montalvo(Input x) {
    const std::size_t n = x.size();
    double s = 0.1 * std::pow(std::sin(3.0 * kPi * x[0]), 2.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double d = x[i] - 1.0;
        s += d * d * (1.0 + std::pow(std::sin(3.0 * kPi * x[i + 1]), 2.0));
    }
    const double dn = x[n - 1] - 1.0;
    s += dn * dn * (1.0 + std::pow(std::sin(2.0 * kPi * x[n - 1]), 2.0));
    return s;
}

inline double quartic_noise(Input x, RandomStream& rng) {
    double s = 0.0;
    for (double v : x) s += std::pow(v, 4.0);
    return s + rng.uniform();
}

// product of cosine sums over x1 (the formula printed under "Pathological")
inline double shubert_product(Input x) {
    const double v = x[0];
    double a = 0.0, b = 0.0;
    for (int i = 1; i <= 5; ++i) {
        a += i * std::cos((i - 1.0) * v + i);
        b += i * std::cos((i + 1.0) * v + i);
    }
    return a * b;
}

inline double perm(Input x) {
    const std::size_t n = x.size();
    const double beta = 0.5;
    double total = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        double inner = 0.0;
        for (std::size_t i = 1; i <= n; ++i) {
            const double ik = std::pow(static_cast<double>(i), static_cast<double>(k));
            inner += (ik + beta) * (std::pow(x[i - 1] / static_cast<double>(i),
                                             static_cast<double>(k)) - 1.0);
        }
        total += inner * inner;
    }
    return total;
}

inline double powell_printed(Input x) {
    const double a = x[0] + 10.0 * x[1];
    const double b = x[2] + x[3];
    const double c = x[1] - 2.0 * x[2];
    const double d = x[0] - x[3];
    return a * a + 5.0 * b * b + std::pow(c, 4.0) + 10.0 * std::pow(d, 4.0);
}

inline double rastrigin(Input x) {
    double s = 0.0;
    for (double v : x) s += v * v - 10.0 * std::cos(2.0 * kPi * v) + 10.0;
    return s;
}

inline double schwefel12(Input x) {
    double s = 0.0, prefix = 0.0;
    for (double v : x) {
        prefix += v;
        s += prefix * prefix;
    }
    return s;
}

inline double rosenbrock(Input x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = x[i] - 1.0;
        s += 100.0 * a * a + b * b;
    }
    return s;
}

inline double schwefel226(Input x) {
    double s = 0.0;
    for (double v : x) s += -v * std::sin(std::sqrt(std::abs(v)));
    return s;
}

inline double schwefel222(Input x) {
    double s = 0.0, p = 1.0;
    for (double v : x) {
        s += std::abs(v);
        p *= std::abs(v);
    }
    return s + p;
}

inline double schwefel221(Input x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

inline double step(Input x) {
    double s = 0.0;
    for (double v : x) {
        const double t = std::floor(v + 0.5);
        s += t * t;
    }
    return s;
}

inline double sum_squares(Input x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<double>(i + 1) * x[i] * x[i];
    return s;
}

inline double sum_diff_power(Input x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += std::pow(std::abs(x[i]), static_cast<double>(i + 2));
    return s;
}

inline double zakharov(Input x) {
    double sq = 0.0, w = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sq += x[i] * x[i];
        w += 0.5 * static_cast<double>(i + 1) * x[i];
    }
    return sq + w * w + w * w * w * w;
}

// damped-cosine form (the formula printed under "Zakharov")
inline double wavy_cosine(Input x) {
    const double n = static_cast<double>(x.size());
    double s = 0.0;
    for (double v : x) s += 1.0 - std::cos(10.0 * v) * std::exp(-0.5 * v * v);
    return s / n;
}

inline double salomon(Input x) {
    double sq = 0.0;
    for (double v : x) sq += v * v;
    const double r = std::sqrt(sq);
    return 1.0 - std::cos(2.0 * kPi * r) + 0.1 * r;
}

inline double weierstrass(Input x) {
    constexpr int kmax = 20;
    double inner0 = 0.0;
    {
        double ak = 1.0, bk = 1.0;
        for (int k = 0; k <= kmax; ++k) {
            inner0 += ak * std::cos(2.0 * kPi * bk * 0.5);
            ak *= 0.5;
            bk *= 3.0;
        }
    }
    double s = 0.0;
    for (double v : x) {
        double ak = 1.0, bk = 1.0, inner = 0.0;
        for (int k = 0; k <= kmax; ++k) {
            inner += ak * std::cos(2.0 * kPi * bk * (v + 0.5));
            ak *= 0.5;
            bk *= 3.0;
        }
        s += inner;
    }
    return s - static_cast<double>(x.size()) * inner0;
}

} // namespace fn

// ---------------------------------------------------------------------------
// Composition helpers
// ---------------------------------------------------------------------------

// Contiguous-block hybrid: block k of the input feeds part k; the value is
// the sum of part values.
inline ObjectiveSpec hybrid_compose(std::vector<ObjectiveSpec> parts,
                                    std::vector<int> partition) {
    if (parts.size() < 2) throw std::invalid_argument("hybrid needs at least 2 parts");
    if (parts.size() != partition.size())
        throw std::invalid_argument("partition mismatch: one block size per part");
    int total = 0;
    for (std::size_t k = 0; k < partition.size(); ++k) {
        if (partition[k] < 1) throw std::invalid_argument("partition mismatch: empty block");
        if (parts[k].dimension != partition[k])
            throw std::invalid_argument("partition mismatch: part dimension differs from block");
        total += partition[k];
    }

    ObjectiveSpec spec;
    spec.dimension = total;
    spec.id = "hybrid";
    std::string name = "hybrid(";
    double lo = parts[0].lower, hi = parts[0].upper;
    bool min_known = true, location_known = true;
    double min_value = 0.0, min_tol = 1e-9;
    std::vector<double> optimum;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) name += '+';
        name += parts[k].id;
        lo = std::min(lo, parts[k].lower);
        hi = std::max(hi, parts[k].upper);
        spec.stochastic = spec.stochastic || parts[k].stochastic;
        spec.fragile_optimum = spec.fragile_optimum || parts[k].fragile_optimum;
        if (!parts[k].min_known) {
            min_known = false;
            continue;
        }
        // block minima add up even when a part's location is undocumented
        min_value += parts[k].known_minimum;
        min_tol += std::max(0.0, parts[k].min_tolerance - 1e-9);
        if (parts[k].optimum.empty()) {
            location_known = false;
        } else {
            optimum.insert(optimum.end(), parts[k].optimum.begin(), parts[k].optimum.end());
        }
    }
    name += ')';
    spec.name = name;
    spec.lower = lo;
    spec.upper = hi;
    spec.tags.multimodal = true;
    spec.tags.nonseparable = true;
    if (min_known) {
        spec.min_known = true;
        spec.known_minimum = min_value;
        spec.min_tolerance = min_tol;
        if (location_known) spec.optimum = std::move(optimum);
    }

    spec.base_eval = [parts = std::move(parts), partition = std::move(partition)](
                         std::span<const double> x, RandomStream* noise) {
        double total_value = 0.0;
        std::size_t offset = 0;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            const auto width = static_cast<std::size_t>(partition[k]);
            total_value += evaluate(parts[k], x.subspan(offset, width), noise);
            offset += width;
        }
        return total_value;
    };
    return spec;
}

// Weighted full-vector composition: every part sees the whole input.
inline ObjectiveSpec composition_compose(std::vector<ObjectiveSpec> parts,
                                         std::vector<double> weights) {
    if (parts.empty() || parts.size() != weights.size())
        throw std::invalid_argument("composition needs one weight per part");
    double wsum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("composition weights must be non-negative");
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > 1e-12)
        throw std::invalid_argument("composition weights must sum to 1");
    const int dim = parts[0].dimension;
    for (const auto& p : parts) {
        if (p.dimension != dim)
            throw std::invalid_argument("composition parts must share a dimension");
    }

    ObjectiveSpec spec;
    spec.dimension = dim;
    spec.id = "composition";
    std::string name = "composition(";
    double lo = parts[0].lower, hi = parts[0].upper;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) name += '+';
        name += parts[k].id;
        lo = std::min(lo, parts[k].lower);
        hi = std::max(hi, parts[k].upper);
        spec.stochastic = spec.stochastic || parts[k].stochastic;
        spec.fragile_optimum = spec.fragile_optimum || parts[k].fragile_optimum;
    }
    name += ')';
    spec.name = name;
    spec.lower = lo;
    spec.upper = hi;
    spec.tags.multimodal = true;
    spec.tags.nonseparable = true;

    spec.base_eval = [parts = std::move(parts), weights = std::move(weights)](
                         std::span<const double> x, RandomStream* noise) {
        double total_value = 0.0;
        for (std::size_t k = 0; k < parts.size(); ++k)
            total_value += weights[k] * evaluate(parts[k], x, noise);
        return total_value;
    };
    return spec;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

namespace detail {

enum class Optimum {
    none,
    origin,
    ones,
    minus_ones,
    indices,        // (1, 2, ..., n)
    dixon_point,    // x_i = 2^-((2^i - 2) / 2^i)
    schwefel_point  // x_i = 420.9687462275036
};

struct BaseEntry {
    const char* id;
    const char* name;
    double lower, upper;
    int default_dim;        // 0 = dimension must be given explicitly
    int fixed_dim;          // 0 = any dimension
    const char* type_letters;
    Optimum optimum;
    double min_const;       // known minimum = min_const + min_per_dim * dim
    double min_per_dim;
    bool min_known;
    bool stochastic;
    double (*eval)(std::span<const double>);
};

inline const std::vector<BaseEntry>& base_table() {
    static const std::vector<BaseEntry> table = {
        {"F1", "Ackley", -32, 32, 30, 0, "MN", Optimum::origin, 0, 0, true, false, fn::ackley},
        {"F2", "Alpine", -10, 10, 30, 0, "MN", Optimum::origin, 0, 0, true, false, fn::alpine},
        {"F3", "Brown", -1, 4, 30, 0, "UN", Optimum::origin, 0, 0, true, false, fn::brown},
        {"F4", "Bent Cigar", -100, 100, 30, 0, "MS", Optimum::origin, 0, 0, true, false, fn::bent_cigar},
        {"F7", "Dixon and Price (printed form)", -10, 10, 30, 0, "UN", Optimum::origin, 0, 0, true, false, fn::cigar_product},
        {"F8", "Discus (printed form)", -100, 100, 30, 0, "U", Optimum::dixon_point, 0, 0, true, false, fn::dixon_price},
        {"F9", "Fletcher-Powell", -100, 100, 3, 3, "MN", Optimum::none, 0.0001, 0, true, false, fn::helical_valley},
        {"F10", "Griewank", -600, 600, 30, 0, "MN", Optimum::origin, 0, 0, true, false, fn::griewank},
        {"F11", "Generalized Penalized 1", -50, 50, 30, 0, "M", Optimum::minus_ones, 0, 0, true, false, fn::penalized1},
        {"F12", "Generalized Penalized 2", -5.12, 5.12, 30, 0, "M", Optimum::ones, 0, 0, true, false, fn::penalized2},
        {"F13", "Holzman 2", -100, 100, 30, 0, "", Optimum::origin, 0, 0, true, false, fn::weighted_quartic},
        {"F14", "HGBat", -100, 100, 30, 0, "M", Optimum::minus_ones, 0, 0, true, false, fn::hgbat},
        {"F15", "High Conditioned Elliptic", -100, 100, 30, 0, "", Optimum::origin, 0, 0, true, false, fn::elliptic},
        {"F18", "Cosine Mixture", -1, 1, 30, 0, "MS", Optimum::origin, 0, -0.1, true, false, fn::cosine_mixture},
        {"F19", "Levy 3 (printed form)", -10, 10, 30, 0, "", Optimum::origin, 0, 0, true, false, fn::schaffer_chain},
        {"F20", "Levy", -10, 10, 2, 0, "MN", Optimum::ones, 0, 0, true, false, fn::levy13},
        {"F21", "Levy and Montalvo", -5, 5, 30, 0, "MS", Optimum::ones, 0, 0, true, false, fn::levy_montalvo},
        {"F22", "Noise", -1.28, 1.28, 30, 0, "", Optimum::none, 0, 0, false, true, nullptr},
        {"F23", "Pathological (printed form)", -100, 100, 30, 0, "MN", Optimum::none, 0, 0, false, false, fn::shubert_product},
        {"F24", "Perm", -20, 20, 30, 0, "MN", Optimum::indices, 0, 0, true, false, fn::perm},
        {"F25", "Powell (printed form)", -4, 5, 4, 4, "UN", Optimum::origin, 0, 0, true, false, fn::powell_printed},
        {"F26", "Quartic", -128, 128, 30, 0, "MS", Optimum::origin, 0, 0, true, false, fn::weighted_quartic},
        {"F27", "Rastrigin", -5.12, 5.12, 30, 0, "MN", Optimum::origin, 0, 0, true, false, fn::rastrigin},
        {"F28", "Rotated Hyper-Ellipsoid", -100, 100, 30, 0, "U", Optimum::origin, 0, 0, true, false, fn::schwefel12},
        {"F29", "Rosenbrock", -30, 30, 30, 0, "UN", Optimum::ones, 0, 0, true, false, fn::rosenbrock},
        {"F30", "Schwefel 2.26", -500, 500, 30, 0, "MS", Optimum::schwefel_point, 0, -418.983, true, false, fn::schwefel226},
        {"F31", "Schwefel 1.2", -100, 100, 30, 0, "UN", Optimum::origin, 0, 0, true, false, fn::schwefel12},
        {"F32", "Schwefel 2.22", -100, 100, 30, 0, "UN", Optimum::origin, 0, 0, true, false, fn::schwefel222},
        {"F33", "Schwefel 2.21", -100, 100, 30, 0, "US", Optimum::origin, 0, 0, true, false, fn::schwefel221},
        {"F34", "Sphere", -100, 100, 30, 0, "US", Optimum::origin, 0, 0, true, false, fn::sphere},
        {"F35", "Step", -100, 100, 30, 0, "US", Optimum::origin, 0, 0, true, false, fn::step},
        {"F36", "Sum Squares", -10, 10, 30, 0, "US", Optimum::origin, 0, 0, true, false, fn::sum_squares},
        {"F37", "Sum-Power (printed form)", -1, 1, 30, 0, "US", Optimum::origin, 0, 0, true, false, fn::sphere},
        {"F38", "Sum of Different Power", -100, 100, 30, 0, "US", Optimum::origin, 0, 0, true, false, fn::sum_diff_power},
        {"F44", "Wavy 1 (printed form)", -100, 100, 2, 0, "MS", Optimum::origin, 0, 0, true, false, fn::zakharov},
        {"F45", "Zakharov (printed form)", -5, 10, 10, 0, "UN", Optimum::origin, 0, 0, true, false, fn::wavy_cosine},
        {"F46", "Salomon", -100, 100, 30, 0, "MN", Optimum::origin, 0, 0, true, false, fn::salomon},
        {"F47", "Weierstrass", -0.5, 0.5, 50, 0, "MN", Optimum::origin, 0, 0, true, false, fn::weierstrass},
    };
    return table;
}

inline std::vector<double> optimum_point(Optimum kind, int dim) {
    std::vector<double> p(static_cast<std::size_t>(dim), 0.0);
    switch (kind) {
        case Optimum::origin:
            break;
        case Optimum::ones:
            std::fill(p.begin(), p.end(), 1.0);
            break;
        case Optimum::minus_ones:
            std::fill(p.begin(), p.end(), -1.0);
            break;
        case Optimum::indices:
            for (int i = 0; i < dim; ++i) p[static_cast<std::size_t>(i)] = i + 1.0;
            break;
        case Optimum::dixon_point:
            for (int i = 1; i <= dim; ++i) {
                const double e = (std::pow(2.0, i) - 2.0) / std::pow(2.0, i);
                p[static_cast<std::size_t>(i - 1)] = std::pow(2.0, -e);
            }
            break;
        case Optimum::schwefel_point:
            std::fill(p.begin(), p.end(), 420.9687462275036);
            break;
        case Optimum::none:
            p.clear();
            break;
    }
    return p;
}

inline std::uint64_t transform_seed(std::string_view id) {
    return derive_run_seed(0x0b9ec71f5a3d2204ull, "transform", id, 0);
}

// Construction recipes for the composed suite. kind: 'S' = shifted base,
// 'R' = shift-rotated base, 'H' = shifted contiguous hybrid of the listed
// parts. Part lists follow the published table, with the CEC base ids mapped
// onto this registry's formulas:
//   CEC01->F4  CEC02->F38 CEC03->F44 CEC04->F29 CEC05->F27 CEC06->F19
//   CEC07->F10 CEC08->F35 CEC09->F20 CEC10->F30 CEC11->F16 CEC12->F17
//   CEC13->F15 CEC14->F14
struct ComposedEntry {
    const char* id;
    char kind;
    const char* parts;  // comma-separated ids
};

inline const std::vector<ComposedEntry>& composed_table() {
    static const std::vector<ComposedEntry> table = {
        {"C1", 'S', "F4"},
        {"C2", 'S', "F38"},
        {"C3", 'S', "F44"},
        {"C4", 'S', "F29"},
        {"C5", 'S', "F27"},
        {"C6", 'S', "F19"},
        {"C7", 'S', "F10"},
        {"C8", 'S', "F35"},
        {"C9", 'R', "F35"},
        {"C10", 'S', "F20"},
        {"C11", 'R', "F20"},
        {"C12", 'R', "F30"},
        {"C13", 'R', "F16"},
        {"C14", 'R', "F17"},
        {"C15", 'R', "F15"},
        {"C16", 'R', "F14"},
        {"C17", 'H', "F20,F35,F4"},
        {"C18", 'H', "F38,F17,F35"},
        {"C19", 'H', "F10,F19,F29,F14"},
        {"C20", 'H', "F17,F44,F15,F35"},
        {"C21", 'H', "F14,F17,F29,F20,F4"},
        {"C22", 'H', "F30,F16,F15,F20,F27"},
        {"C23", 'H', "C4,C1,C2,C3,C1"},
        {"C24", 'H', "C10,C9,C14"},
        {"C25", 'H', "C11,C9,C1"},
        {"C26", 'H', "C11,C13,C1,C6,C7"},
        {"C27", 'H', "C14,C9,C11,C6,C1"},
        {"C28", 'H', "C15,C13,C13,C11,C16,C1"},
        {"C29", 'H', "C17,C18,C19"},
        {"C30", 'H', "C20,C21,C22"},
    };
    return table;
}

inline std::vector<std::string> split_ids(const char* csv) {
    std::vector<std::string> out;
    std::string cur;
    for (const char* p = csv;; ++p) {
        if (*p == ',' || *p == '\0') {
            out.push_back(cur);
            cur.clear();
            if (*p == '\0') break;
        } else {
            cur += *p;
        }
    }
    return out;
}

} // namespace detail

ObjectiveSpec make_objective(const std::string& id, int dim);

namespace detail {

inline ObjectiveSpec make_base(const BaseEntry& e, int dim) {
    if (e.fixed_dim != 0 && dim != e.fixed_dim)
        throw std::invalid_argument(std::string(e.id) + " has fixed dimension " +
                                    std::to_string(e.fixed_dim));
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    ObjectiveSpec spec;
    spec.id = e.id;
    spec.name = e.name;
    spec.dimension = dim;
    spec.lower = e.lower;
    spec.upper = e.upper;
    spec.tags = ModalityTags::from_letters(e.type_letters);
    spec.stochastic = e.stochastic;
    if (e.min_known) {
        spec.min_known = true;
        spec.known_minimum = e.min_const + e.min_per_dim * dim;
        spec.optimum = optimum_point(e.optimum, dim);
        // the tabulated per-dimension constant for Schwefel 2.26 is rounded
        if (std::string_view(e.id) == "F30") spec.min_tolerance = 0.01 * dim;
    }
    spec.fragile_optimum = (std::string_view(e.id) == "F14");
    if (e.stochastic) {
        spec.base_eval = [](std::span<const double> x, RandomStream* noise) {
            return fn::quartic_noise(x, *noise);
        };
    } else {
        spec.base_eval = [eval = e.eval](std::span<const double> x, RandomStream*) {
            return eval(x);
        };
    }
    return spec;
}

inline std::vector<int> equal_partition(int dim, std::size_t parts) {
    std::vector<int> blocks(parts, dim / static_cast<int>(parts));
    blocks.back() += dim - blocks.front() * static_cast<int>(parts);
    return blocks;
}

// Equal contiguous blocks, remainder to the last part. When the dimension is
// smaller than the part count the leading blocks are empty and those parts
// are dropped from the composite.
inline ObjectiveSpec make_plain_hybrid(const std::string& id, const std::string& name,
                                       const std::vector<std::string>& part_ids, int dim) {
    const auto blocks = equal_partition(dim, part_ids.size());
    std::vector<ObjectiveSpec> parts;
    std::vector<int> widths;
    for (std::size_t k = 0; k < part_ids.size(); ++k) {
        if (blocks[k] == 0) continue;
        parts.push_back(make_objective(part_ids[k], blocks[k]));
        widths.push_back(blocks[k]);
    }
    ObjectiveSpec spec;
    if (parts.size() >= 2) {
        spec = hybrid_compose(std::move(parts), std::move(widths));
    } else {
        spec = std::move(parts.front());
    }
    spec.id = id;
    spec.name = name;
    return spec;
}

} // namespace detail

// Builds a function spec at the requested dimension.
inline ObjectiveSpec make_objective(const std::string& id, int dim) {
    using namespace detail;
    for (const auto& e : base_table()) {
        if (id == e.id) return make_base(e, dim);
    }

    if (id == "F5" || id == "F6") {
        const bool is5 = (id == "F5");
        const std::vector<std::string> part_ids =
            is5 ? std::vector<std::string>{"F29", "F15", "F27"}
                : std::vector<std::string>{"F1", "F15", "F10", "F27"};
        std::vector<ObjectiveSpec> parts;
        for (const auto& pid : part_ids) parts.push_back(make_objective(pid, dim));
        std::vector<double> weights(parts.size(), 1.0 / static_cast<double>(parts.size()));
        auto spec = composition_compose(std::move(parts), std::move(weights));
        spec.id = id;
        spec.name = is5 ? "Composition 1" : "Composition 2";
        spec.lower = -100;
        spec.upper = 100;
        if (!is5) {
            // every component is non-negative with a common zero at the origin
            spec.min_known = true;
            spec.known_minimum = 0.0;
            spec.min_tolerance = 1e-9;
            spec.optimum.assign(static_cast<std::size_t>(dim), 0.0);
        }
        return spec;
    }

    if (id == "F16" || id == "F17") {
        const bool is16 = (id == "F16");
        const std::vector<std::string> part_ids =
            is16 ? std::vector<std::string>{"F45", "F29", "F27"}
                 : std::vector<std::string>{"F15", "F1", "F27", "F14", "F8"};
        auto spec = make_plain_hybrid(id, is16 ? "Hybrid 1" : "Hybrid 2", part_ids, dim);
        spec.lower = -100;
        spec.upper = 100;
        return spec;
    }

    // shift-rotated classical rows
    if (id == "F39" || id == "F40" || id == "F41" || id == "F42" || id == "F43") {
        const char* base_id = id == "F39"   ? "F4"
                              : id == "F40" ? "F38"
                              : id == "F41" ? "F45"
                              : id == "F42" ? "F29"
                                            : "F27";
        auto base = make_objective(base_id, dim);
        ObjectiveSpec spec = base;
        spec.id = id;
        spec.name = "shift-rotated " + base.name;
        spec.tags.separable = false;
        spec.tags.nonseparable = true;
        spec.transform = generate_transform(transform_seed(id), dim, base.lower, base.upper, true);
        if (base.min_known && !base.optimum.empty() && !base.fragile_optimum) {
            // optimum moves to shift + R^T * base optimum
            const auto& t = *spec.transform;
            spec.optimum.assign(static_cast<std::size_t>(dim), 0.0);
            for (int i = 0; i < dim; ++i) {
                double acc = 0.0;
                for (int j = 0; j < dim; ++j)
                    acc += t.rotation[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] *
                           base.optimum[static_cast<std::size_t>(j)];
                spec.optimum[static_cast<std::size_t>(i)] = t.shift[static_cast<std::size_t>(i)] + acc;
            }
        } else {
            spec.optimum.clear();
        }
        return spec;
    }

    for (const auto& c : composed_table()) {
        if (id != c.id) continue;
        const auto part_ids = split_ids(c.parts);
        if (c.kind == 'S' || c.kind == 'R') {
            auto base = make_objective(part_ids.front(), dim);
            ObjectiveSpec spec = base;
            spec.id = id;
            spec.name = (c.kind == 'S' ? "shifted " : "shift-rotated ") + base.name;
            if (c.kind == 'R') {
                spec.tags.separable = false;
                spec.tags.nonseparable = true;
            }
            spec.transform =
                generate_transform(transform_seed(id), dim, base.lower, base.upper, c.kind == 'R');
            if (base.min_known && !base.optimum.empty() && !base.fragile_optimum) {
                const auto& t = *spec.transform;
                spec.optimum.assign(static_cast<std::size_t>(dim), 0.0);
                for (int i = 0; i < dim; ++i) {
                    double acc = 0.0;
                    if (t.has_rotation()) {
                        for (int j = 0; j < dim; ++j)
                            acc += t.rotation[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] *
                                   base.optimum[static_cast<std::size_t>(j)];
                    } else {
                        acc = base.optimum[static_cast<std::size_t>(i)];
                    }
                    spec.optimum[static_cast<std::size_t>(i)] =
                        t.shift[static_cast<std::size_t>(i)] + acc;
                }
            } else {
                spec.optimum.clear();
            }
            return spec;
        }
        // shifted hybrid of the listed parts
        auto inner = make_plain_hybrid(id, "", part_ids, dim);
        ObjectiveSpec spec = std::move(inner);
        spec.id = id;
        std::string pretty = "shifted hybrid(";
        for (std::size_t k = 0; k < part_ids.size(); ++k) {
            if (k) pretty += '+';
            pretty += part_ids[k];
        }
        pretty += ')';
        spec.name = pretty;
        spec.transform = generate_transform(transform_seed(id), dim, spec.lower, spec.upper, false);
        if (spec.fragile_optimum) spec.optimum.clear();
        if (!spec.optimum.empty()) {
            for (int i = 0; i < dim; ++i)
                spec.optimum[static_cast<std::size_t>(i)] +=
                    spec.transform->shift[static_cast<std::size_t>(i)];
        }
        return spec;
    }

    throw std::invalid_argument("unknown function id: " + id);
}

inline int default_dimension(const std::string& id) {
    for (const auto& e : detail::base_table()) {
        if (id == e.id) return e.default_dim;
    }
    if (id == "F5") return 5;
    if (id == "F6") return 3;
    // hybrids and the composed suite default to the experiment dimension
    return 30;
}

inline ObjectiveSpec make_objective(const std::string& id) {
    return make_objective(id, default_dimension(id));
}

inline const std::vector<std::string>& registry_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (int i = 1; i <= 47; ++i) v.push_back("F" + std::to_string(i));
        for (int i = 1; i <= 30; ++i) v.push_back("C" + std::to_string(i));
        return v;
    }();
    return ids;
}

inline std::vector<ObjectiveSpec> registry_list() {
    std::vector<ObjectiveSpec> out;
    out.reserve(registry_ids().size());
    for (const auto& id : registry_ids()) out.push_back(make_objective(id));
    return out;
}

inline std::string registry_csv() {
    std::ostringstream os;
    os << "id,name,dim,lower,upper,known_min,tags\n";
    char buf[64];
    for (const auto& spec : registry_list()) {
        os << spec.id << ",\"" << spec.name << "\"," << spec.dimension << ',';
        std::snprintf(buf, sizeof buf, "%.17g", spec.lower);
        os << buf << ',';
        std::snprintf(buf, sizeof buf, "%.17g", spec.upper);
        os << buf << ',';
        if (spec.min_known) {
            std::snprintf(buf, sizeof buf, "%.17g", spec.known_minimum);
            os << buf;
        } else {
            os << "unknown";
        }
        os << ',' << spec.tags.to_string() << '\n';
    }
    return os.str();
}

} // namespace eosa
