#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace normprobe::extract {

enum class ParseStatus { ok, ambiguous_first_taken, failed };

std::string_view to_string(ParseStatus s) noexcept;
std::optional<ParseStatus> parse_status(std::string_view name) noexcept;

struct ParseOutcome {
    ParseStatus status = ParseStatus::failed;
    std::optional<double> value;
    std::string note;

    bool usable() const noexcept { return status != ParseStatus::failed; }
    bool operator==(const ParseOutcome&) const = default;
};

enum class ValueKind { count, percentage, dollars, minutes, hours, weeks };

std::string_view to_string(ValueKind k) noexcept;
/// Throws SchemaError on an unknown name.
ValueKind parse_value_kind(std::string_view name);

/// First decimal literal in `text`. Thousands separators, currency signs and
/// "%" are ignored; "X-Y" (also en dash or "to") gives the midpoint with status
/// ambiguous_first_taken. Negative values fail; percentages must lie in [0, 100].
ParseOutcome extract_number(std::string_view text, ValueKind kind = ValueKind::count);

/// First number in `text`, accepted only if it lies in [0, scale_max].
ParseOutcome extract_rating(std::string_view text, double scale_max = 7.0);

/// Shortest decimal text that reads back as `v`.
std::string format_value(double v);

} // namespace normprobe::extract
