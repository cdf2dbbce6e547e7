#include "normprobe/metrics.hpp"

#include "normprobe/errors.hpp"
#include "normprobe/extract.hpp"

#include <cmath>
#include <limits>

namespace normprobe::metrics {

std::string_view to_string(Side s) noexcept
{
    switch (s) {
    case Side::ideal: return "ideal";
    case Side::non_ideal: return "non_ideal";
    case Side::tie: return "tie";
    case Side::degenerate: return "degenerate";
    case Side::failed: return "failed";
    }
    return "failed";
}

namespace {

void check_finite(double A, double S, double I)
{
    if (!std::isfinite(A) || !std::isfinite(S) || !std::isfinite(I))
        throw ParameterError("deviation metrics need finite A, S and I");
}

} // namespace

std::optional<double> compute_alpha(double A, double S, double I)
{
    check_finite(A, S, I);
    const double gap = A - I;
    if (std::fabs(gap) <= degenerate_eps)
        return std::nullopt;
    return (A - S) * (gap > 0 ? 1.0 : -1.0);
}

std::optional<double> compute_alpha_hat(double A, double S, double I)
{
    const auto a = compute_alpha(A, S, I);
    if (!a)
        return std::nullopt;
    return *a / std::fabs(A - I);
}

DeviationRow make_row(std::string concept_id, double A, double I, double S)
{
    DeviationRow row;
    row.concept_id = std::move(concept_id);
    row.A = A;
    row.I = I;
    row.S = S;
    row.alpha = compute_alpha(A, S, I);
    row.alpha_hat = compute_alpha_hat(A, S, I);
    if (!row.alpha)
        row.side = Side::degenerate;
    else if (*row.alpha > 0.0)
        row.side = Side::ideal;
    else if (*row.alpha < 0.0)
        row.side = Side::non_ideal;
    else
        row.side = Side::tie;
    return row;
}

DeviationRow make_failed_row(std::string concept_id, std::string note)
{
    DeviationRow row;
    row.concept_id = std::move(concept_id);
    row.A = row.I = row.S = std::numeric_limits<double>::quiet_NaN();
    row.side = Side::failed;
    row.note = std::move(note);
    return row;
}

std::string_view to_string(TiePolicy p) noexcept
{
    return p == TiePolicy::exclude ? "exclude" : "count_as_non_ideal";
}

TiePolicy parse_tie_policy(std::string_view name)
{
    if (name == "exclude")
        return TiePolicy::exclude;
    if (name == "count_as_non_ideal" || name == "count")
        return TiePolicy::count_as_non_ideal;
    throw ParameterError("unknown tie policy '" + std::string(name) + "'");
}

double Tally::fraction() const noexcept
{
    return n_trials ? static_cast<double>(n_ideal) / static_cast<double>(n_trials) : 0.0;
}

Tally ideal_side_tally(std::span<const DeviationRow> rows, TiePolicy policy)
{
    Tally t;
    t.policy = policy;
    t.n_inputs = rows.size();
    for (const auto& r : rows) {
        switch (r.side) {
        case Side::ideal: ++t.n_ideal; break;
        case Side::non_ideal: ++t.n_non_ideal; break;
        case Side::tie:
            ++t.n_ties;
            if (policy == TiePolicy::count_as_non_ideal)
                ++t.n_non_ideal;
            break;
        case Side::degenerate: ++t.n_excluded_degenerate; break;
        case Side::failed: ++t.n_excluded_failed; break;
        }
    }
    t.n_trials = t.n_ideal + t.n_non_ideal;
    return t;
}

std::optional<stats::StatResult> tally_test(const Tally& t)
{
    if (!t.applicable())
        return std::nullopt;
    return stats::binomial_one_sided(t.n_ideal, t.n_trials, 0.5);
}

namespace {

std::string csv_field(std::string_view s)
{
    if (s.find_first_of(",\"\n") == std::string_view::npos)
        return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string num(double v)
{
    return std::isfinite(v) ? extract::format_value(v) : std::string();
}

std::string opt(const std::optional<double>& v)
{
    return v ? extract::format_value(*v) : std::string();
}

} // namespace

void write_deviation_csv(std::ostream& out, std::span<const DeviationRow> rows)
{
    out << deviation_csv_header << '\n';
    for (const auto& r : rows) {
        out << csv_field(r.concept_id) << ',' << num(r.A) << ',' << num(r.I) << ',' << num(r.S) << ','
            << opt(r.alpha) << ',' << opt(r.alpha_hat) << ',' << to_string(r.side) << ','
            << csv_field(r.note) << '\n';
    }
}

} // namespace normprobe::metrics
