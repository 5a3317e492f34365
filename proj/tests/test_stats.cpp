#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "eosa/stats.hpp"

using namespace eosa;

TEST_CASE("chi-square upper tail matches closed forms") {
    // df=2: Q = exp(-x/2); hits the series branch below x=6 and Lentz above
    for (double x : {0.5, 1.0, 3.0, 8.0, 20.0}) {
        CHECK(detail::chi_square_upper_tail(x, 2) == Catch::Approx(std::exp(-x / 2.0)).epsilon(1e-12));
    }
    // df=4: Q = exp(-x/2) * (1 + x/2)
    for (double x : {1.0, 5.0, 14.0}) {
        const double expected = std::exp(-x / 2.0) * (1.0 + x / 2.0);
        CHECK(detail::chi_square_upper_tail(x, 4) == Catch::Approx(expected).epsilon(1e-12));
    }
    // df=1: Q = erfc(sqrt(x/2))
    for (double x : {0.2, 2.0, 9.0}) {
        CHECK(detail::chi_square_upper_tail(x, 1) ==
              Catch::Approx(std::erfc(std::sqrt(x / 2.0))).epsilon(1e-12));
    }
}

TEST_CASE("friedman hand example with a fixed per-row order") {
    RankMatrix m;
    m.values = {{1.0, 2.0, 3.0}, {0.1, 0.5, 0.9}, {(-7.0), (-6.0), (-5.0)}, {10.0, 20.0, 30.0}};
    auto result = friedman(m);

    REQUIRE(result.mean_ranks.size() == 3);
    CHECK(result.mean_ranks[0] == 1.0);
    CHECK(result.mean_ranks[1] == 2.0);
    CHECK(result.mean_ranks[2] == 3.0);
    CHECK(result.chi_square == Catch::Approx(8.0).epsilon(1e-12));
    CHECK(result.df == 2);
    CHECK(result.p_value == Catch::Approx(std::exp(-4.0)).epsilon(1e-12));
}

TEST_CASE("friedman full ties give equal ranks and zero statistic") {
    RankMatrix m;
    m.values.assign(4, std::vector<double>(3, 7.0));
    auto result = friedman(m);

    for (double r : result.mean_ranks) CHECK(r == 2.0);  // (k+1)/2
    CHECK(result.chi_square == 0.0);
    CHECK(result.p_value == 1.0);
}

TEST_CASE("friedman rank properties") {
    RankMatrix m;
    m.values = {{3.0, 1.0, 4.0, 1.5}, {2.0, 2.0, 5.0, 0.5}, {9.0, 7.0, 8.0, 6.0},
                {0.0, -1.0, -2.0, 3.0}, {5.0, 5.0, 5.0, 5.0}};
    auto base = friedman(m);

    SECTION("mean ranks sum to k(k+1)/2") {
        double sum = 0.0;
        for (double r : base.mean_ranks) sum += r;
        CHECK(sum == Catch::Approx(4.0 * 5.0 / 2.0).epsilon(1e-12));
    }

    SECTION("permuting columns permutes ranks and keeps the statistic") {
        RankMatrix permuted;
        for (const auto& row : m.values)
            permuted.values.push_back({row[2], row[0], row[3], row[1]});
        auto p = friedman(permuted);
        CHECK(p.chi_square == Catch::Approx(base.chi_square).epsilon(1e-12));
        CHECK(p.mean_ranks[0] == base.mean_ranks[2]);
        CHECK(p.mean_ranks[1] == base.mean_ranks[0]);
        CHECK(p.mean_ranks[2] == base.mean_ranks[3]);
        CHECK(p.mean_ranks[3] == base.mean_ranks[1]);
    }

    SECTION("strictly increasing transforms of a row leave ranks alone") {
        RankMatrix stretched = m;
        for (double& v : stretched.values[1]) v = std::exp(v);
        for (double& v : stretched.values[3]) v = 2.0 * v + 100.0;
        auto s = friedman(stretched);
        CHECK(s.chi_square == base.chi_square);
        CHECK(s.mean_ranks == base.mean_ranks);
    }

    SECTION("higher-is-better flips the ordering") {
        RankMatrix flipped = m;
        flipped.lower_is_better = false;
        for (auto& row : flipped.values)
            for (double& v : row) v = -v;
        auto f = friedman(flipped);
        CHECK(f.chi_square == base.chi_square);
        CHECK(f.mean_ranks == base.mean_ranks);
    }
}

TEST_CASE("friedman validation rejects malformed matrices") {
    RankMatrix m;
    m.values = {{1.0, 2.0}};
    CHECK_THROWS_AS(friedman(m), std::invalid_argument);  // one problem

    m.values = {{1.0}, {2.0}};
    CHECK_THROWS_AS(friedman(m), std::invalid_argument);  // one algorithm

    m.values = {{1.0, 2.0}, {1.0, 2.0, 3.0}};
    CHECK_THROWS_AS(friedman(m), std::invalid_argument);  // ragged

    m.values = {{1.0, 2.0}, {std::nan(""), 2.0}};
    CHECK_THROWS_AS(friedman(m), std::invalid_argument);  // non-finite
}

TEST_CASE("wilcoxon hand value for ten one-sided pairs") {
    std::vector<double> a = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::vector<double> b(10, 0.0);
    auto result = wilcoxon_signed_rank(a, b);  // a - b all positive

    CHECK(result.w_minus == 0.0);
    CHECK(result.w_plus == 55.0);  // ranks 1..10 summed
    CHECK(result.z < 0.0);
    CHECK(std::fabs(result.z) == Catch::Approx(2.803).margin(0.001));
    CHECK(result.p_value == Catch::Approx(0.00506).margin(1e-4));
    CHECK(result.pairs == 10);
}

TEST_CASE("wilcoxon tied magnitudes shrink the variance") {
    std::vector<double> a(10, 1.0);
    std::vector<double> b(10, 0.0);
    auto result = wilcoxon_signed_rank(a, b);
    // one tie group of 10: variance (2310 - 990/2)/24 = 75.625, so z^2 = 27.5^2/75.625 = 10
    CHECK(result.z * result.z == Catch::Approx(10.0).epsilon(1e-12));
    CHECK(result.z < 0.0);
}

TEST_CASE("wilcoxon antisymmetry and shift invariance") {
    std::vector<double> a = {5, 1, 9, 4, 12, 3, 8};
    std::vector<double> b = {3, 2, 6, 7, 10, 1, 2};
    auto ab = wilcoxon_signed_rank(a, b);
    auto ba = wilcoxon_signed_rank(b, a);
    CHECK(ab.z == -ba.z);
    CHECK(ab.p_value == ba.p_value);
    CHECK(ab.w_plus == ba.w_minus);

    std::vector<double> a_shift = a, b_shift = b;
    for (double& v : a_shift) v += 1024.0;
    for (double& v : b_shift) v += 1024.0;
    auto shifted = wilcoxon_signed_rank(a_shift, b_shift);
    CHECK(shifted.z == ab.z);
    CHECK(shifted.p_value == ab.p_value);
}

TEST_CASE("wilcoxon balanced signs give z of zero") {
    std::vector<double> a = {1, -1, 2, -2, 3, -3};
    std::vector<double> b(6, 0.0);
    auto result = wilcoxon_signed_rank(a, b);
    CHECK(result.w_plus == result.w_minus);
    CHECK(result.z == 0.0);
    CHECK(result.p_value == 1.0);
}

TEST_CASE("wilcoxon degenerate and undersized inputs") {
    std::vector<double> a = {1, 2, 3, 4, 5, 6};
    CHECK_THROWS_WITH(wilcoxon_signed_rank(a, a), "degenerate pairs");

    std::vector<double> b = a;
    b[0] += 1.0;
    b[1] += 2.0;
    b[2] -= 1.0;
    b[3] += 0.5;  // only four non-zero differences
    CHECK_THROWS_WITH(wilcoxon_signed_rank(a, b), "insufficient pairs");

    std::vector<double> short_seq = {1, 2, 3};
    CHECK_THROWS_AS(wilcoxon_signed_rank(a, short_seq), std::invalid_argument);
}
