#pragma once

#include "normprobe/stats.hpp"

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace normprobe::metrics {

/// |A - I| at or below this is treated as A == I.
inline constexpr double degenerate_eps = 1e-9;

enum class Side { ideal, non_ideal, tie, degenerate, failed };

std::string_view to_string(Side s) noexcept;

/// alpha = (A - S) * sign(A - I). nullopt when |A - I| <= eps.
/// Throws ParameterError on non-finite input.
std::optional<double> compute_alpha(double A, double S, double I);

/// alpha / |A - I|: 0 at the average, 1 at the ideal.
std::optional<double> compute_alpha_hat(double A, double S, double I);

struct DeviationRow {
    std::string concept_id;
    double A = 0.0;
    double I = 0.0;
    double S = 0.0;
    std::optional<double> alpha;
    std::optional<double> alpha_hat;
    Side side = Side::failed;
    std::string note;
};

DeviationRow make_row(std::string concept_id, double A, double I, double S);

/// Row for a concept whose answers could not be parsed. A/I/S are NaN.
DeviationRow make_failed_row(std::string concept_id, std::string note);

enum class TiePolicy {
    count_as_non_ideal,  // S == A is a trial that did not land on the ideal side
    exclude,             // S == A is dropped from the trials
};

std::string_view to_string(TiePolicy p) noexcept;
/// Throws ParameterError on an unknown name.
TiePolicy parse_tie_policy(std::string_view name);

struct Tally {
    std::size_t n_inputs = 0;
    std::size_t n_ideal = 0;
    std::size_t n_non_ideal = 0;  // includes ties under count_as_non_ideal
    std::size_t n_trials = 0;
    std::size_t n_excluded_degenerate = 0;
    std::size_t n_excluded_failed = 0;
    std::size_t n_ties = 0;
    TiePolicy policy = TiePolicy::count_as_non_ideal;

    bool applicable() const noexcept { return n_trials > 0; }
    std::size_t excluded_ties() const noexcept { return policy == TiePolicy::exclude ? n_ties : 0; }
    double fraction() const noexcept;
};

Tally ideal_side_tally(std::span<const DeviationRow> rows,
                       TiePolicy policy = TiePolicy::count_as_non_ideal);

/// One-sided binomial test of n_ideal out of n_trials against 0.5.
/// nullopt when the tally has no trials.
std::optional<stats::StatResult> tally_test(const Tally& t);

inline constexpr std::string_view deviation_csv_header =
    "concept_id,average,ideal,sample,alpha,alpha_hat,side,note";

void write_deviation_csv(std::ostream& out, std::span<const DeviationRow> rows);

} // namespace normprobe::metrics
