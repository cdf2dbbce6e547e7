#include "normprobe/synthgen.hpp"

#include "normprobe/errors.hpp"
#include "normprobe/seeds.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace normprobe::synth {

std::string_view grade_name(int index)
{
    if (index < 0 || index >= static_cast<int>(grade_names.size()))
        throw ParameterError("grade index out of range: " + std::to_string(index));
    return grade_names[static_cast<std::size_t>(index)];
}

std::optional<int> parse_grade(std::string_view text)
{
    std::string norm;
    for (std::size_t i = 0; i < text.size(); ++i) {
        // U+2212 MINUS SIGN
        if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
            norm.push_back('-');
            i += 2;
        } else if (text[i] != ' ') {
            norm.push_back(text[i]);
        }
    }
    for (std::size_t i = 0; i < grade_names.size(); ++i)
        if (grade_names[i] == norm)
            return static_cast<int>(i);
    return std::nullopt;
}

std::string_view to_string(SchemeKind k) noexcept
{
    switch (k) {
    case SchemeKind::positive: return "positive";
    case SchemeKind::negative: return "negative";
    case SchemeKind::neutral: return "neutral";
    case SchemeKind::tent: return "tent";
    case SchemeKind::random: return "random";
    case SchemeKind::none: return "none";
    }
    return "none";
}

SchemeKind parse_scheme_kind(std::string_view name)
{
    for (auto k : {SchemeKind::positive, SchemeKind::negative, SchemeKind::neutral, SchemeKind::tent,
                   SchemeKind::random, SchemeKind::none})
        if (to_string(k) == name)
            return k;
    throw ParameterError("unknown grade scheme '" + std::string(name) + "'");
}

namespace {

void check_params(double sigma, std::size_t n, Clamp clamp)
{
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw ParameterError("sigma must be positive");
    if (n == 0)
        throw ParameterError("sample count must be at least 1");
    if (clamp.lo > clamp.hi)
        throw ParameterError("clamp range is empty");
}

int round_clamp(double x, Clamp clamp)
{
    const double r = std::round(x);  // half away from zero
    return static_cast<int>(std::clamp(r, static_cast<double>(clamp.lo), static_cast<double>(clamp.hi)));
}

int floor_div(int a, int b)
{
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

constexpr int idx_A = 1, idx_Am = 2, idx_B = 4, idx_Bm = 5, idx_C = 7, idx_Cm = 8, idx_D = 10, idx_Dm = 11;

} // namespace

std::vector<ValueSample> sample_unimodal(double mu, double sigma, std::size_t n, std::uint64_t seed,
                                         Clamp clamp)
{
    check_params(sigma, n, clamp);
    auto rng = make_rng(seed);
    std::normal_distribution<double> dist(mu, sigma);
    std::vector<ValueSample> out(n);
    for (auto& s : out)
        s.value = round_clamp(dist(rng), clamp);
    return out;
}

std::vector<ValueSample> sample_bimodal(double m1, double m2, double sigma, std::size_t n,
                                        std::uint64_t seed, Clamp clamp)
{
    check_params(sigma, n, clamp);
    auto rng = make_rng(seed);
    std::normal_distribution<double> unit(0.0, 1.0);
    std::vector<ValueSample> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i].value = round_clamp((i % 2 == 0 ? m1 : m2) + sigma * unit(rng), clamp);
    return out;
}

std::optional<int> grade_index(int x, const GradeScheme& scheme)
{
    switch (scheme.kind) {
    case SchemeKind::positive:
        return std::clamp(floor_div(79 - x, 5), 0, 11);
    case SchemeKind::negative:
        return std::clamp(floor_div(x - 20, 5), 0, 11);
    case SchemeKind::neutral: {
        const int c = scheme.center;
        if (x >= c) {
            static constexpr int up[] = {idx_A, idx_B, idx_Bm, idx_C, idx_Cm, idx_D};
            const int k = floor_div(x - c, 5);
            return k < 6 ? up[k] : idx_Dm;
        }
        static constexpr int down[] = {idx_Am, idx_B, idx_Bm, idx_C, idx_Cm};
        const int k = floor_div(c - 1 - x, 5);
        return k < 5 ? down[k] : idx_Dm;
    }
    case SchemeKind::tent:
        if (scheme.width <= 0)
            throw ParameterError("tent width must be positive");
        return std::clamp(std::abs(x - scheme.center) / scheme.width, 0, 11);
    case SchemeKind::random:
        throw ParameterError("random grades depend on position; use assign_grades");
    case SchemeKind::none:
        return std::nullopt;
    }
    throw ParameterError("unknown grade scheme");
}

std::vector<ValueSample> assign_grades(std::span<const int> values, const GradeScheme& scheme)
{
    std::vector<ValueSample> out;
    out.reserve(values.size());
    if (scheme.kind == SchemeKind::random) {
        auto rng = make_rng(derive_seed(scheme.seed, "random-grades"));
        std::uniform_int_distribution<int> pick(0, 11);
        for (int v : values)
            out.push_back({v, pick(rng)});
        return out;
    }
    for (int v : values)
        out.push_back({v, grade_index(v, scheme)});
    return out;
}

std::string format_pairs(std::span<const ValueSample> samples)
{
    if (samples.empty())
        return {};
    const bool graded = samples.front().grade.has_value();
    std::string out;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].grade.has_value() != graded)
            throw FormattingError("format_pairs: graded and ungraded samples mixed");
        if (i)
            out += ", ";
        out += std::to_string(samples[i].value);
        if (graded) {
            out += ':';
            out += grade_name(*samples[i].grade);
        }
    }
    return out;
}

std::vector<int> values_of(std::span<const ValueSample> samples)
{
    std::vector<int> out;
    out.reserve(samples.size());
    for (const auto& s : samples)
        out.push_back(s.value);
    return out;
}

} // namespace normprobe::synth
