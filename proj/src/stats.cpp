#include "normprobe/stats.hpp"

#include "normprobe/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

namespace normprobe::stats {

std::string_view to_string(TestMethod m) noexcept
{
    return m == TestMethod::exact ? "exact" : "normal_approx";
}

namespace {

struct RankedPool {
    std::vector<std::int64_t> doubled_ranks;  // 2 * mid-rank, index-aligned with the pooled input
    std::vector<std::size_t> tie_sizes;
};

// Pooled values are a followed by b. Doubled mid-ranks are integers.
RankedPool rank_pool(std::span<const double> a, std::span<const double> b)
{
    const std::size_t n = a.size() + b.size();
    std::vector<double> pooled;
    pooled.reserve(n);
    pooled.insert(pooled.end(), a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) { return pooled[l] < pooled[r]; });

    RankedPool out;
    out.doubled_ranks.assign(n, 0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && pooled[order[j]] == pooled[order[i]])
            ++j;
        // positions i..j-1 hold ranks i+1..j; doubled mid-rank is (i+1) + j
        const auto doubled = static_cast<std::int64_t>(i + 1 + j);
        for (std::size_t t = i; t < j; ++t)
            out.doubled_ranks[order[t]] = doubled;
        out.tie_sizes.push_back(j - i);
        i = j;
    }
    return out;
}

// Exact two-sided p over all C(N, n_small) splits of the tie-adjusted ranks.
double exact_two_sided(const std::vector<std::int64_t>& doubled_ranks, std::size_t n_small,
                       std::int64_t observed_sum)
{
    const std::size_t total_n = doubled_ranks.size();
    const std::int64_t max_sum =
        std::accumulate(doubled_ranks.begin(), doubled_ranks.end(), std::int64_t{0});

    // ways[c][s]: subsets of size c whose doubled-rank sum is s
    std::vector<std::vector<std::uint64_t>> ways(
        n_small + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(max_sum) + 1, 0));
    ways[0][0] = 1;
    std::int64_t reach = 0;
    for (std::size_t item = 0; item < total_n; ++item) {
        const std::int64_t r = doubled_ranks[item];
        reach += r;
        const std::size_t top = std::min(n_small, item + 1);
        for (std::size_t c = top; c >= 1; --c) {
            auto& dst = ways[c];
            const auto& src = ways[c - 1];
            for (std::int64_t s = reach; s >= r; --s)
                dst[static_cast<std::size_t>(s)] += src[static_cast<std::size_t>(s - r)];
        }
    }

    // Expected doubled sum: n_small * (N + 1). Compare distances in integers.
    const std::int64_t expected = static_cast<std::int64_t>(n_small * (total_n + 1));
    const std::int64_t observed_dev = std::llabs(observed_sum - expected);
    long double extreme = 0.0L;
    long double total = 0.0L;
    for (std::int64_t s = 0; s <= max_sum; ++s) {
        const auto w = ways[n_small][static_cast<std::size_t>(s)];
        if (w == 0)
            continue;
        total += static_cast<long double>(w);
        if (std::llabs(s - expected) >= observed_dev)
            extreme += static_cast<long double>(w);
    }
    return static_cast<double>(extreme / total);
}

} // namespace

double mann_whitney_u1(std::span<const double> a, std::span<const double> b)
{
    if (a.empty() || b.empty())
        throw ParameterError("mann_whitney_u: both samples must be non-empty");
    const auto pool = rank_pool(a, b);
    std::int64_t doubled_sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        doubled_sum += pool.doubled_ranks[i];
    const double n1 = static_cast<double>(a.size());
    return static_cast<double>(doubled_sum) / 2.0 - n1 * (n1 + 1.0) / 2.0;
}

StatResult mann_whitney_u(std::span<const double> a, std::span<const double> b)
{
    const auto method = a.size() * b.size() <= mwu_exact_limit ? TestMethod::exact
                                                               : TestMethod::normal_approx;
    return mann_whitney_u(a, b, method);
}

StatResult mann_whitney_u(std::span<const double> a, std::span<const double> b, TestMethod method)
{
    if (a.empty() || b.empty())
        throw ParameterError("mann_whitney_u: both samples must be non-empty");

    const std::size_t n1 = a.size();
    const std::size_t n2 = b.size();
    const auto pool = rank_pool(a, b);

    std::int64_t doubled_sum_a = 0;
    for (std::size_t i = 0; i < n1; ++i)
        doubled_sum_a += pool.doubled_ranks[i];

    const double n1d = static_cast<double>(n1);
    const double n2d = static_cast<double>(n2);
    const double u1 = static_cast<double>(doubled_sum_a) / 2.0 - n1d * (n1d + 1.0) / 2.0;
    const double u2 = n1d * n2d - u1;

    StatResult out;
    out.statistic = std::min(u1, u2);
    out.n1 = n1;
    out.n2 = n2;

    out.method = method;
    if (method == TestMethod::exact) {
        // Run the subset DP over the smaller sample; the two-sided p is symmetric.
        if (n1 <= n2) {
            out.p_value = exact_two_sided(pool.doubled_ranks, n1, doubled_sum_a);
        } else {
            std::vector<std::int64_t> swapped(pool.doubled_ranks.begin() + static_cast<std::ptrdiff_t>(n1),
                                              pool.doubled_ranks.end());
            swapped.insert(swapped.end(), pool.doubled_ranks.begin(),
                           pool.doubled_ranks.begin() + static_cast<std::ptrdiff_t>(n1));
            std::int64_t doubled_sum_b = 0;
            for (std::size_t i = 0; i < n2; ++i)
                doubled_sum_b += swapped[i];
            out.p_value = exact_two_sided(swapped, n2, doubled_sum_b);
        }
    } else {
        const double total = n1d + n2d;
        double tie_term = 0.0;
        for (auto t : pool.tie_sizes) {
            const double td = static_cast<double>(t);
            tie_term += td * td * td - td;
        }
        const double var =
            n1d * n2d / 12.0 * ((total + 1.0) - tie_term / (total * (total - 1.0)));
        if (var <= 0.0) {
            out.p_value = 1.0;
        } else {
            const double z = std::max(0.0, std::fabs(u1 - n1d * n2d / 2.0) - 0.5) / std::sqrt(var);
            out.p_value = std::erfc(z / std::sqrt(2.0));
        }
    }
    out.p_value = std::clamp(out.p_value, 0.0, 1.0);
    return out;
}

StatResult binomial_one_sided(std::size_t k, std::size_t n, double p0)
{
    if (!(p0 > 0.0 && p0 < 1.0))
        throw ParameterError("binomial_one_sided: p0 must lie in (0, 1)");
    if (k > n)
        throw ParameterError("binomial_one_sided: k exceeds n");

    StatResult out;
    out.statistic = static_cast<double>(k);
    out.method = TestMethod::exact;
    out.n1 = n;
    out.n2 = 0;
    if (k == 0) {
        out.p_value = 1.0;
        return out;
    }

    const double nd = static_cast<double>(n);
    const double log_p = std::log(p0);
    const double log_q = std::log1p(-p0);
    const double log_n_fact = std::lgamma(nd + 1.0);

    std::vector<double> terms;
    terms.reserve(n - k + 1);
    double peak = -INFINITY;
    for (std::size_t i = k; i <= n; ++i) {
        const double id = static_cast<double>(i);
        const double t = log_n_fact - std::lgamma(id + 1.0) - std::lgamma(nd - id + 1.0) +
                         id * log_p + (nd - id) * log_q;
        terms.push_back(t);
        peak = std::max(peak, t);
    }
    double acc = 0.0;
    for (double t : terms)
        acc += std::exp(t - peak);
    out.p_value = std::clamp(std::exp(peak + std::log(acc)), 0.0, 1.0);
    return out;
}

namespace {

double sample_variance(std::span<const double> xs)
{
    const double m = mean(xs);
    double ss = 0.0;
    for (double x : xs)
        ss += (x - m) * (x - m);
    return ss / static_cast<double>(xs.size() - 1);
}

} // namespace

double mean(std::span<const double> xs)
{
    if (xs.empty())
        throw ParameterError("mean of an empty series");
    double s = 0.0;
    for (double x : xs)
        s += x;
    return s / static_cast<double>(xs.size());
}

std::optional<double> cronbach_alpha(const Matrix& rows)
{
    if (rows.size() < 2)
        throw ParameterError("cronbach_alpha: need at least 2 rows");
    const std::size_t k = rows.front().size();
    if (k < 2)
        throw ParameterError("cronbach_alpha: need at least 2 columns");

    std::vector<std::vector<double>> columns(k);
    std::vector<double> totals;
    totals.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != k)
            throw ParameterError("cronbach_alpha: ragged matrix");
        double t = 0.0;
        for (std::size_t c = 0; c < k; ++c) {
            if (!std::isfinite(row[c]))
                throw ParameterError("cronbach_alpha: non-finite cell");
            columns[c].push_back(row[c]);
            t += row[c];
        }
        totals.push_back(t);
    }

    const double total_var = sample_variance(totals);
    if (total_var <= 0.0)
        return std::nullopt;
    double item_var = 0.0;
    for (const auto& col : columns)
        item_var += sample_variance(col);
    const double kd = static_cast<double>(k);
    return kd / (kd - 1.0) * (1.0 - item_var / total_var);
}

std::optional<double> pearson_r(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size())
        throw ParameterError("pearson_r: series lengths differ");
    if (x.size() < 3)
        throw ParameterError("pearson_r: need at least 3 pairs");
    const double mx = mean(x);
    const double my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0)
        return std::nullopt;
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

Summary summary_stats(std::span<const double> xs)
{
    if (xs.empty())
        throw ParameterError("summary_stats: empty input");
    Summary s;
    s.n = xs.size();
    s.mean = mean(xs);
    if (xs.size() >= 2)
        s.sd = std::sqrt(sample_variance(xs));
    return s;
}

} // namespace normprobe::stats
