#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "normprobe/corpus.hpp"
#include "normprobe/errors.hpp"
#include "normprobe/metrics.hpp"
#include "normprobe/seeds.hpp"

#include <cmath>
#include <random>
#include <sstream>

using namespace normprobe;
using namespace normprobe::metrics;

TEST_CASE("alpha on printed rows")
{
    auto a = compute_alpha(3.36, 3.25, 1.85);
    REQUIRE(a.has_value());
    CHECK(*a == doctest::Approx(0.11));
    auto b = compute_alpha(7.45, 4.55, 8.40);
    REQUIRE(b.has_value());
    CHECK(*b == doctest::Approx(-2.90));
    CHECK_FALSE(compute_alpha(5, 4, 5).has_value());
    CHECK_FALSE(compute_alpha_hat(5, 4, 5).has_value());
}

TEST_CASE("alpha_hat normalization")
{
    CHECK(*compute_alpha_hat(3.36, 3.25, 1.85) == doctest::Approx(0.11 / 1.51));
    CHECK(*compute_alpha_hat(10, 4, 4) == 1.0);
    CHECK(*compute_alpha_hat(4, 4, 10) == 0.0);
    CHECK(*compute_alpha_hat(2, 7.5, 7.5) == 1.0);
}

TEST_CASE("non-finite input")
{
    CHECK_THROWS_AS(compute_alpha(NAN, 1, 2), ParameterError);
    CHECK_THROWS_AS(compute_alpha_hat(1, INFINITY, 2), ParameterError);
}

TEST_CASE("algebraic properties")
{
    auto rng = make_rng(21);
    std::uniform_real_distribution<double> u(-50, 50);
    std::uniform_real_distribution<double> k(0.1, 20);
    for (int i = 0; i < 5000; ++i) {
        double A = u(rng), S = u(rng), I = u(rng), c = u(rng), s = k(rng);
        if (std::abs(A - I) < 1e-6) continue;
        auto a = *compute_alpha(A, S, I);
        CHECK(*compute_alpha(A, S, 2 * A - I) == doctest::Approx(-a));
        CHECK(*compute_alpha(A + c, S + c, I + c) == doctest::Approx(a).epsilon(1e-9).scale(100));
        CHECK(*compute_alpha(s * A, s * S, s * I) == doctest::Approx(s * a).scale(100));
        CHECK(*compute_alpha_hat(s * A, s * S, s * I) ==
              doctest::Approx(*compute_alpha_hat(A, S, I)).scale(10));
    }
}

TEST_CASE("row sides")
{
    CHECK(make_row("x", 3.36, 1.85, 3.25).side == Side::ideal);
    CHECK(make_row("x", 7.45, 8.40, 4.55).side == Side::non_ideal);
    CHECK(make_row("x", 3, 1, 3).side == Side::tie);
    auto d = make_row("x", 3, 3, 1);
    CHECK(d.side == Side::degenerate);
    CHECK_FALSE(d.alpha.has_value());
    CHECK_FALSE(d.alpha_hat.has_value());
    auto f = make_failed_row("x", "all repeats failed");
    CHECK(f.side == Side::failed);
    CHECK(std::isnan(f.A));
}

namespace {

std::vector<DeviationRow> gpt4_shaped()
{
    // 500 concepts: 10 failed, 46 with A == I, 304 ideal-side, 140 opposite
    std::vector<DeviationRow> rows;
    for (int i = 0; i < 10; ++i) rows.push_back(make_failed_row("f" + std::to_string(i), "parse"));
    for (int i = 0; i < 46; ++i) rows.push_back(make_row("d" + std::to_string(i), 5, 5, 4));
    for (int i = 0; i < 304; ++i) rows.push_back(make_row("i" + std::to_string(i), 5, 2, 4));
    for (int i = 0; i < 140; ++i) rows.push_back(make_row("n" + std::to_string(i), 5, 2, 6));
    return rows;
}

} // namespace

TEST_CASE("GPT-4 shaped tally")
{
    auto rows = gpt4_shaped();
    for (auto policy : {TiePolicy::count_as_non_ideal, TiePolicy::exclude}) {
        auto t = ideal_side_tally(rows, policy);
        CHECK(t.n_inputs == 500);
        CHECK(t.n_trials == 444);
        CHECK(t.n_ideal == 304);
        CHECK(t.n_excluded_failed == 10);
        CHECK(t.n_excluded_degenerate == 46);
        CHECK(t.n_ties == 0);
        CHECK(t.fraction() == doctest::Approx(0.6847).epsilon(1e-3));
        auto p = tally_test(t);
        REQUIRE(p.has_value());
        // one-sided tail at 304 of 444
        CHECK(p->p_value == doctest::Approx(2.528e-15).epsilon(1e-3));
    }
}

TEST_CASE("tally edge cases")
{
    std::vector<DeviationRow> degenerate{make_row("a", 1, 1, 2), make_row("b", 2, 2, 2)};
    auto t = ideal_side_tally(degenerate);
    CHECK(t.n_trials == 0);
    CHECK_FALSE(t.applicable());
    CHECK_FALSE(tally_test(t).has_value());

    std::vector<DeviationRow> one{make_row("a", 5, 1, 4)};
    auto u = ideal_side_tally(one);
    CHECK(u.n_ideal == 1);
    CHECK(u.n_trials == 1);
    CHECK(u.n_excluded_degenerate == 0);
    CHECK(u.n_excluded_failed == 0);
    CHECK(u.n_ties == 0);
}

TEST_CASE("tie policies and conservation")
{
    std::vector<DeviationRow> rows{make_row("a", 5, 1, 4), make_row("b", 5, 1, 5), make_row("c", 5, 1, 5),
                                   make_row("d", 5, 1, 6), make_row("e", 5, 5, 1),
                                   make_failed_row("f", "x")};
    auto counted = ideal_side_tally(rows, TiePolicy::count_as_non_ideal);
    CHECK(counted.n_ties == 2);
    CHECK(counted.n_trials == 4);
    CHECK(counted.n_ideal == 1);
    auto excluded = ideal_side_tally(rows, TiePolicy::exclude);
    CHECK(excluded.n_ties == 2);
    CHECK(excluded.n_trials == 2);
    for (const auto& t : {counted, excluded})
        CHECK(t.n_inputs ==
              t.n_trials + t.n_excluded_degenerate + t.n_excluded_failed + t.excluded_ties());
    CHECK(parse_tie_policy("exclude") == TiePolicy::exclude);
    CHECK(parse_tie_policy("count") == TiePolicy::count_as_non_ideal);
    CHECK_THROWS_AS(parse_tie_policy("coin"), ParameterError);
}

TEST_CASE("printed LLM table classification is reproduced")
{
    std::size_t checked = 0, degenerate = 0;
    for (const auto& r : corpus::llm_reference()) {
        auto row = make_row(r.concept_id, r.average, r.ideal, r.sample);
        if (row.side == Side::degenerate) {
            ++degenerate;
            CHECK_FALSE(r.ideal_side_marked);
            continue;
        }
        ++checked;
        INFO(r.concept_id);
        CHECK((row.side == Side::ideal) == r.ideal_side_marked);
    }
    CHECK(checked + degenerate == 36);
}

TEST_CASE("deviation csv")
{
    std::vector<DeviationRow> rows{make_row("tv", 3.36, 1.85, 3.25), make_row("deg", 2, 2, 1),
                                   make_failed_row("bad", "no number, twice")};
    std::ostringstream a, b;
    write_deviation_csv(a, rows);
    write_deviation_csv(b, rows);
    CHECK(a.str() == b.str());
    auto s = a.str();
    CHECK(s.rfind(std::string(deviation_csv_header) + "\n", 0) == 0);
    CHECK(s.find("tv,3.36,1.85,3.25,") != std::string::npos);
    CHECK(s.find(",ideal,") != std::string::npos);
    CHECK(s.find("\"no number, twice\"") != std::string::npos);
}
