#include "normprobe/mock.hpp"

#include "normprobe/errors.hpp"
#include "normprobe/seeds.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace normprobe::gateway {

namespace {

double log_base(double x, const Distribution& d, double spread)
{
    const double s = d.sigma * spread;
    const double a = -(x - d.mu) * (x - d.mu) / (2 * s * s);
    if (!d.bimodal)
        return a;
    const double b = -(x - d.mu2) * (x - d.mu2) / (2 * s * s);
    const double m = std::max(a, b);
    return m + std::log(0.5 * std::exp(a - m) + 0.5 * std::exp(b - m));
}

std::vector<double> normalize_log(std::vector<double> logw)
{
    const double m = *std::max_element(logw.begin(), logw.end());
    double total = 0;
    for (auto& w : logw) {
        w = std::exp(w - m);
        total += w;
    }
    for (auto& w : logw)
        w /= total;
    return logw;
}

std::size_t draw(const std::vector<double>& p, Rng& rng)
{
    std::discrete_distribution<std::size_t> dist(p.begin(), p.end());
    return dist(rng);
}

double round2(double v)
{
    return std::round(v * 100.0) / 100.0;
}

[[noreturn]] void mismatch(const Probe& p, std::string_view context)
{
    throw ContractError(fmt::format("probe '{}': kind '{}' cannot be answered from a {} context",
                                    p.key, to_string(p.kind), context));
}

} // namespace

double value_of(int x, const NovelContext& ctx)
{
    using synth::SchemeKind;
    if (ctx.scheme.kind == SchemeKind::none)
        return 0.0;
    std::optional<int> grade;
    if (ctx.scheme.kind == SchemeKind::random) {
        int best = std::numeric_limits<int>::max();
        for (const auto& s : ctx.listed) {
            if (!s.grade)
                continue;
            const int d = std::abs(s.value - x);
            if (d < best) {
                best = d;
                grade = s.grade;
            }
        }
        if (!grade)
            return 0.0;
    } else {
        grade = synth::grade_index(x, ctx.scheme);
    }
    return (11.0 - *grade) / 11.0;
}

std::vector<double> sample_distribution(const NovelContext& ctx, double lambda, double spread)
{
    if (ctx.clamp.lo > ctx.clamp.hi)
        throw ParameterError("empty clamp range");
    if (!(spread > 0) || !(ctx.dist.sigma > 0))
        throw ParameterError("mock spread and sigma must be positive");
    std::vector<double> logw;
    logw.reserve(static_cast<std::size_t>(ctx.clamp.hi - ctx.clamp.lo + 1));
    for (int x = ctx.clamp.lo; x <= ctx.clamp.hi; ++x)
        logw.push_back(log_base(x, ctx.dist, spread) + lambda * value_of(x, ctx));
    return normalize_log(std::move(logw));
}

double expected_sample(const NovelContext& ctx, double lambda, double spread)
{
    const auto p = sample_distribution(ctx, lambda, spread);
    double m = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        m += p[i] * (ctx.clamp.lo + static_cast<int>(i));
    return m;
}

double calibrate_lambda(const NovelContext& ctx, double target_shift, double spread)
{
    const double base = expected_sample(ctx, 0.0, spread);
    const double sign = target_shift < 0 ? -1.0 : 1.0;
    auto shift = [&](double lambda) { return sign * (expected_sample(ctx, lambda, spread) - base); };
    const double target = std::abs(target_shift);
    if (target == 0)
        return 0.0;
    double hi = 1.0;
    while (shift(hi) < target) {
        hi *= 2;
        if (hi > 1000)
            throw ParameterError(fmt::format("shift {} is out of reach of the mock", target_shift));
    }
    double lo = 0.0;
    for (int i = 0; i < 100 && hi - lo > 1e-10; ++i) {
        const double mid = 0.5 * (lo + hi);
        (shift(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

NovelContext reference_context(synth::GradeScheme scheme)
{
    NovelContext ctx;
    ctx.scheme = scheme;
    return ctx;
}

MockResponder::MockResponder(MockModel model, std::string model_id)
    : model_(std::move(model)), model_id_(std::move(model_id))
{
    lambda_pos_ = model_.lambda_positive
                      ? *model_.lambda_positive
                      : calibrate_lambda(reference_context(synth::GradeScheme::positive()),
                                         model_.target_positive_shift, model_.spread);
    lambda_neg_ = model_.lambda_negative
                      ? *model_.lambda_negative
                      : calibrate_lambda(reference_context(synth::GradeScheme::negative()),
                                         model_.target_negative_shift, model_.spread);
    if (lambda_pos_ < 0 || lambda_neg_ < 0)
        throw ParameterError("mock lambda must be >= 0");
}

double MockResponder::lambda_for(synth::SchemeKind kind) const noexcept
{
    switch (kind) {
    case synth::SchemeKind::none: return 0.0;
    case synth::SchemeKind::negative: return lambda_neg_;
    default: return lambda_pos_;
    }
}

std::string MockResponder::respond(const Probe& probe) const
{
    auto rng = make_rng(probe.seed);
    if (const auto* fixed = std::get_if<FixedContext>(&probe.context))
        return fixed->text;

    if (const auto* novel = std::get_if<NovelContext>(&probe.context)) {
        switch (probe.kind) {
        case ProbeKind::sample: {
            const auto p = sample_distribution(*novel, lambda_for(novel->scheme.kind), model_.spread);
            return std::to_string(novel->clamp.lo + static_cast<int>(draw(p, rng)));
        }
        case ProbeKind::average: {
            if (novel->listed.empty())
                throw ContractError(fmt::format("probe '{}': average of an empty list", probe.key));
            double sum = 0;
            for (const auto& s : novel->listed)
                sum += s.value;
            double v = sum / static_cast<double>(novel->listed.size());
            if (model_.sigma_a > 0)
                v += std::normal_distribution<double>(0.0, model_.sigma_a)(rng);
            return std::to_string(std::llround(v));
        }
        default: mismatch(probe, "novel-concept");
        }
    }

    if (const auto* c = std::get_if<ConceptContext>(&probe.context)) {
        switch (probe.kind) {
        case ProbeKind::average: return extract::format_value(c->average);
        case ProbeKind::ideal: return extract::format_value(c->ideal);
        case ProbeKind::sample: {
            const double s = model_.concept_spread * std::max(std::abs(c->average), 1.0);
            const double reach = std::abs(c->average - c->ideal) + s;
            double lo = c->average - 4 * s;
            double hi = c->average + 4 * s;
            lo = std::max(lo, 0.0);
            if (c->kind == extract::ValueKind::percentage)
                hi = std::min(hi, 100.0);
            if (hi <= lo)
                return extract::format_value(round2(c->average));
            constexpr int steps = 400;
            std::vector<double> grid, logw;
            for (int i = 0; i <= steps; ++i) {
                const double x = lo + (hi - lo) * i / steps;
                const double v = std::max(0.0, 1.0 - std::abs(x - c->ideal) / reach);
                grid.push_back(x);
                logw.push_back(-(x - c->average) * (x - c->average) / (2 * s * s) +
                               model_.concept_lambda * v);
            }
            const auto p = normalize_log(std::move(logw));
            return extract::format_value(round2(grid[draw(p, rng)]));
        }
        default: mismatch(probe, "existing-concept");
        }
    }
    mismatch(probe, "empty");
}

Completion MockResponder::complete(const Probe& probe)
{
    return {respond(probe), 0.0, 1, model_id_};
}

} // namespace normprobe::gateway
