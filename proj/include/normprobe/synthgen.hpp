#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace normprobe::synth {

inline constexpr std::array<std::string_view, 12> grade_names{
    "A+", "A", "A-", "B+", "B", "B-", "C+", "C", "C-", "D+", "D", "D-"};

/// Name of a grade index 0..11. Throws ParameterError otherwise.
std::string_view grade_name(int index);

/// Inverse of grade_name. Accepts "-" or the unicode minus sign as the minus.
std::optional<int> parse_grade(std::string_view text);

enum class SchemeKind { positive, negative, neutral, tent, random, none };

std::string_view to_string(SchemeKind k) noexcept;
/// Throws ParameterError on an unknown name.
SchemeKind parse_scheme_kind(std::string_view name);

struct GradeScheme {
    SchemeKind kind = SchemeKind::none;
    int center = 45;           // neutral and tent
    int width = 5;             // tent step
    std::uint64_t seed = 0;    // random

    static GradeScheme positive() { return {SchemeKind::positive}; }
    static GradeScheme negative() { return {SchemeKind::negative}; }
    static GradeScheme neutral(int c = 45) { return {SchemeKind::neutral, c}; }
    static GradeScheme tent(int c, int w) { return {SchemeKind::tent, c, w}; }
    static GradeScheme random(std::uint64_t s) { return {SchemeKind::random, 45, 5, s}; }
    static GradeScheme none() { return {SchemeKind::none}; }
};

struct Clamp {
    int lo = 0;
    int hi = 100;
};

struct ValueSample {
    int value = 0;
    std::optional<int> grade;

    bool operator==(const ValueSample&) const = default;
};

/// n Gaussian draws rounded half away from zero, then clamped.
/// Throws ParameterError if sigma <= 0, n == 0 or lo > hi.
std::vector<ValueSample> sample_unimodal(double mu, double sigma, std::size_t n, std::uint64_t seed,
                                         Clamp clamp = {});

/// Exact 50/50 mixture: even indices come from m1, odd from m2.
std::vector<ValueSample> sample_bimodal(double m1, double m2, double sigma, std::size_t n,
                                        std::uint64_t seed, Clamp clamp = {});

/// Grade index for a deterministic scheme. nullopt for `none`.
/// `random` needs the position of the value and is only reachable via assign_grades.
std::optional<int> grade_index(int x, const GradeScheme& scheme);

std::vector<ValueSample> assign_grades(std::span<const int> values, const GradeScheme& scheme);

/// "43:C, 35:C-" or, for ungraded samples, "43, 35".
/// Throws FormattingError on a mix of graded and ungraded samples.
std::string format_pairs(std::span<const ValueSample> samples);

std::vector<int> values_of(std::span<const ValueSample> samples);

} // namespace normprobe::synth
