#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support/mwu_oracle.hpp"
#include "normprobe/errors.hpp"
#include "normprobe/seeds.hpp"
#include "normprobe/stats.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

using namespace normprobe;
using namespace normprobe::stats;

namespace {

std::vector<double> normal_draws(std::uint64_t seed, std::size_t n, double mu, double sd)
{
    auto rng = make_rng(seed);
    std::normal_distribution<double> d(mu, sd);
    std::vector<double> out(n);
    for (auto& x : out)
        x = d(rng);
    return out;
}

} // namespace

TEST_CASE("mwu: identical samples show no separation")
{
    const std::vector<double> a{3, 7, 1, 9, 4};
    const auto r = mann_whitney_u(a, a);
    CHECK(r.method == TestMethod::exact);
    CHECK(r.p_value >= 0.99);
    CHECK(r.statistic == doctest::Approx(12.5));
}

TEST_CASE("mwu: complete separation of three vs three")
{
    const std::vector<double> a{1, 2, 3}, b{4, 5, 6};
    const auto r = mann_whitney_u(a, b);
    CHECK(r.statistic == 0.0);
    // 2 of the 20 splits are as extreme
    CHECK(r.p_value == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("mwu: exact path matches brute-force enumeration, with ties")
{
    auto rng = make_rng(11);
    std::uniform_int_distribution<int> size(1, 6), val(0, 5);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<double> a(static_cast<std::size_t>(size(rng))), b(static_cast<std::size_t>(size(rng)));
        for (auto& x : a) x = val(rng);
        for (auto& x : b) x = val(rng);
        const auto r = mann_whitney_u(a, b);
        REQUIRE(r.method == TestMethod::exact);
        CHECK(r.p_value == doctest::Approx(oracle::mwu_two_sided_brute(a, b)).epsilon(1e-12));
        CHECK(mann_whitney_u1(a, b) == oracle::pairwise_u1(a, b));
    }
}

TEST_CASE("mwu: symmetry and U1 + U2 = n1 n2")
{
    const auto a = normal_draws(1, 13, 0, 1);
    const auto b = normal_draws(2, 9, 0.7, 1);
    const auto ab = mann_whitney_u(a, b);
    const auto ba = mann_whitney_u(b, a);
    CHECK(ab.p_value == doctest::Approx(ba.p_value).epsilon(1e-12));
    CHECK(ab.statistic == ba.statistic);
    CHECK(mann_whitney_u1(a, b) + mann_whitney_u1(b, a) == doctest::Approx(13.0 * 9.0));
}

TEST_CASE("mwu: method switches at n1*n2 = 400")
{
    const auto a = normal_draws(3, 20, 0, 1);
    const auto b = normal_draws(4, 20, 0, 1);
    const auto b21 = normal_draws(4, 21, 0, 1);
    CHECK(mann_whitney_u(a, b).method == TestMethod::exact);
    CHECK(mann_whitney_u(a, b21).method == TestMethod::normal_approx);
}

namespace {

// Largest |p_exact - p_approx| over random continuous fixtures whose exact p
// lies in [0.01, 0.99], sizes drawn from [lo, 20].
double worst_disagreement(std::size_t lo, int* compared)
{
    auto rng = make_rng(2024);
    std::uniform_int_distribution<std::size_t> size(lo, 20);
    std::normal_distribution<double> shift(0.0, 0.8);
    double worst = 0.0;
    *compared = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto n1 = size(rng);
        const auto n2 = size(rng);
        const auto a = normal_draws(rng(), n1, 0.0, 1.0);
        const auto b = normal_draws(rng(), n2, shift(rng), 1.0);
        const double pe = mann_whitney_u(a, b, TestMethod::exact).p_value;
        if (pe < 0.01 || pe > 0.99)
            continue;
        const double pa = mann_whitney_u(a, b, TestMethod::normal_approx).p_value;
        worst = std::max(worst, std::fabs(pe - pa));
        ++*compared;
    }
    return worst;
}

} // namespace

TEST_CASE("mwu: exact and normal approximation agree once both samples reach 10")
{
    int compared = 0;
    CHECK(worst_disagreement(10, &compared) < 0.01);
    CHECK(compared > 100);
}

TEST_CASE("mwu: exact and normal approximation stay within 0.02 from n = 5")
{
    int compared = 0;
    CHECK(worst_disagreement(5, &compared) < 0.02);
    CHECK(compared > 100);
}

// The 0.01 bound over 5..20 is not met by the continuity-corrected normal
// approximation itself (scipy's asymptotic method also reaches ~0.017 at
// n = 5..7). Kept so that a change in that fact is noticed.
TEST_CASE("mwu: 0.01 agreement from n = 5" * doctest::should_fail())
{
    int compared = 0;
    CHECK(worst_disagreement(5, &compared) < 0.01);
}

TEST_CASE("mwu: negative-valence style fixture is highly significant")
{
    // average answers cluster near the input mean; samples sit well below it
    const auto averages = normal_draws(5, 100, 44.99, 1.5);
    const auto samples = normal_draws(6, 100, 36.50, 6.0);
    CHECK(mann_whitney_u(averages, samples).p_value < 0.001);
}

TEST_CASE("mwu: half-sd location shift is detected at n = 100")
{
    for (std::uint64_t seed : {21u, 22u, 23u, 24u, 25u}) {
        const auto a = normal_draws(seed, 100, 45, 15);
        auto b = a;
        for (auto& x : b)
            x += 7.5;
        CHECK(mann_whitney_u(a, b).p_value < 0.05);
    }
}

TEST_CASE("mwu: empty input is a parameter error")
{
    const std::vector<double> a{1.0}, none;
    CHECK_THROWS_AS(mann_whitney_u(a, none), ParameterError);
}

TEST_CASE("binomial: reference tails")
{
    CHECK(binomial_one_sided(26, 35).p_value == doctest::Approx(0.0029944).epsilon(1e-4));
    CHECK(binomial_one_sided(0, 10).p_value == 1.0);
    CHECK(binomial_one_sided(10, 10).p_value == doctest::Approx(std::pow(0.5, 10)));
    // P(X >= 303 | 444) printed as 5.506e-15 in the model comparison table
    CHECK(binomial_one_sided(303, 444).p_value == doctest::Approx(5.497e-15).epsilon(1e-3));
    CHECK(binomial_one_sided(304, 444).p_value == doctest::Approx(2.528e-15).epsilon(1e-3));
}

TEST_CASE("binomial: small-case closed form")
{
    // P(X >= 2 | 4, 0.3) = 1 - 0.7^4 - 4 * 0.3 * 0.7^3
    const double expect = 1.0 - std::pow(0.7, 4) - 4 * 0.3 * std::pow(0.7, 3);
    CHECK(binomial_one_sided(2, 4, 0.3).p_value == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("binomial: strictly decreasing in k")
{
    // n small enough that 1 - P(X < 1) is still distinguishable from 1 in double
    double prev = 2.0;
    for (std::size_t k = 0; k <= 40; ++k) {
        const double p = binomial_one_sided(k, 40).p_value;
        CHECK(p < prev);
        prev = p;
    }
    CHECK(prev > 0.0);
}

TEST_CASE("binomial: domain errors")
{
    CHECK_THROWS_AS(binomial_one_sided(3, 10, 0.0), ParameterError);
    CHECK_THROWS_AS(binomial_one_sided(3, 10, 1.0), ParameterError);
    CHECK_THROWS_AS(binomial_one_sided(11, 10), ParameterError);
}

TEST_CASE("cronbach: identical columns give 1")
{
    Matrix m;
    for (double v : {1.0, 4.0, 2.5, 6.0, 3.0})
        m.push_back({v, v, v});
    REQUIRE(cronbach_alpha(m).has_value());
    CHECK(*cronbach_alpha(m) == doctest::Approx(1.0));
}

TEST_CASE("cronbach: independent noise is near zero")
{
    auto rng = make_rng(99);
    std::normal_distribution<double> d(0, 1);
    Matrix m(1000, std::vector<double>(3));
    for (auto& row : m)
        for (auto& x : row)
            x = d(rng);
    const auto a = cronbach_alpha(m);
    REQUIRE(a.has_value());
    CHECK(std::fabs(*a) < 0.15);
}

TEST_CASE("cronbach: hand-computed two-item case")
{
    // cols (1,2,3) and (1,3,2): var 1 each, totals (2,5,5) var 3
    const Matrix m{{1, 1}, {2, 3}, {3, 2}};
    CHECK(*cronbach_alpha(m) == doctest::Approx(2.0 * (1.0 - 2.0 / 3.0)));
}

TEST_CASE("cronbach: degenerate and malformed inputs")
{
    const Matrix flat{{2, 2}, {2, 2}, {2, 2}};
    CHECK_FALSE(cronbach_alpha(flat).has_value());
    CHECK_THROWS_AS(cronbach_alpha(Matrix{{1, 2}}), ParameterError);
    CHECK_THROWS_AS(cronbach_alpha(Matrix{{1}, {2}}), ParameterError);
    CHECK_THROWS_AS(cronbach_alpha(Matrix{{1, 2}, {3}}), ParameterError);
    CHECK_THROWS_AS(cronbach_alpha(Matrix{{1, NAN}, {3, 4}}), ParameterError);
}

TEST_CASE("pearson: linear maps and invariance")
{
    const std::vector<double> x{1, 2, 4, 7, 11};
    std::vector<double> y, neg, z;
    for (double v : x) {
        y.push_back(2 * v + 1);
        neg.push_back(-v);
    }
    CHECK(*pearson_r(x, y) == doctest::Approx(1.0));
    CHECK(*pearson_r(x, neg) == doctest::Approx(-1.0));

    const auto a = normal_draws(7, 50, 0, 1);
    const auto b = normal_draws(8, 50, 0, 1);
    std::vector<double> a2;
    for (double v : a)
        a2.push_back(3.5 * v - 12.0);
    CHECK(*pearson_r(a, b) == doctest::Approx(*pearson_r(a2, b)).epsilon(1e-12));
}

TEST_CASE("pearson: degenerate and malformed inputs")
{
    const std::vector<double> x{1, 2, 3}, flat{5, 5, 5}, two{1, 2};
    CHECK_FALSE(pearson_r(x, flat).has_value());
    CHECK_THROWS_AS(pearson_r(x, two), ParameterError);
    CHECK_THROWS_AS(pearson_r(two, two), ParameterError);
}

TEST_CASE("summary_stats")
{
    const std::vector<double> one{45};
    const auto s1 = summary_stats(one);
    CHECK(s1.mean == 45);
    CHECK_FALSE(s1.sd.has_value());
    CHECK(s1.n == 1);

    const std::vector<double> two{44, 46};
    const auto s2 = summary_stats(two);
    CHECK(s2.mean == 45);
    CHECK(*s2.sd == doctest::Approx(std::sqrt(2.0)));

    // data rescaled to mean 44.96, sd 1.60 reproduces those figures
    auto raw = normal_draws(31, 100, 0, 1);
    const auto r = summary_stats(raw);
    for (auto& v : raw)
        v = 44.96 + 1.60 * (v - r.mean) / *r.sd;
    const auto s = summary_stats(raw);
    CHECK(s.mean == doctest::Approx(44.96).epsilon(1e-12));
    CHECK(*s.sd == doctest::Approx(1.60).epsilon(1e-12));
    CHECK(s.n == 100);

    const std::vector<double> none;
    CHECK_THROWS_AS(summary_stats(none), ParameterError);
}
