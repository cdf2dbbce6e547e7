#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace normprobe::stats {

enum class TestMethod { exact, normal_approx };

std::string_view to_string(TestMethod m) noexcept;

struct StatResult {
    double statistic = 0.0;
    double p_value = 1.0;
    TestMethod method = TestMethod::exact;
    std::size_t n1 = 0;
    std::size_t n2 = 0;
};

/// Largest n1*n2 for which the Mann-Whitney p-value is computed exactly.
inline constexpr std::size_t mwu_exact_limit = 400;

/// Two-sided Mann-Whitney U test.
///
/// `statistic` is min(U1, U2). Ties get mid-ranks. When n1*n2 <= 400 the
/// p-value is the exact permutation probability P(|U - n1 n2/2| >= |u - n1 n2/2|)
/// taken over the tie-adjusted rank set; otherwise a normal approximation with
/// tie-corrected variance and a 0.5 continuity correction is used.
/// Throws ParameterError on an empty sample.
StatResult mann_whitney_u(std::span<const double> a, std::span<const double> b);

/// Same test with the p-value method forced regardless of sample sizes.
StatResult mann_whitney_u(std::span<const double> a, std::span<const double> b, TestMethod method);

/// U1 = number of pairs (a_i, b_j) with a_i > b_j, plus half the ties.
double mann_whitney_u1(std::span<const double> a, std::span<const double> b);

/// P(X >= k) for X ~ Binomial(n, p0), summed in log space.
/// Throws ParameterError if k > n or p0 is not in the open interval (0, 1).
StatResult binomial_one_sided(std::size_t k, std::size_t n, double p0 = 0.5);

/// Rows are observations, columns are items.
using Matrix = std::vector<std::vector<double>>;

/// Cronbach's alpha over the columns of `rows`.
/// Returns nullopt when the variance of row sums is zero (undefined alpha).
/// Throws ParameterError with fewer than 2 rows or columns, ragged rows or
/// non-finite cells.
std::optional<double> cronbach_alpha(const Matrix& rows);

/// Pearson product-moment correlation. Returns nullopt if either series has
/// zero variance. Throws ParameterError on unequal lengths or n < 3.
std::optional<double> pearson_r(std::span<const double> x, std::span<const double> y);

struct Summary {
    double mean = 0.0;
    std::optional<double> sd;  // sample sd (n-1); absent for n == 1
    std::size_t n = 0;
};

/// Throws ParameterError on an empty input.
Summary summary_stats(std::span<const double> xs);

double mean(std::span<const double> xs);

} // namespace normprobe::stats
