#include "normprobe/extract.hpp"

#include "normprobe/errors.hpp"

#include <fmt/format.h>

#include <cctype>
#include <charconv>
#include <cmath>

namespace normprobe::extract {

std::string_view to_string(ParseStatus s) noexcept
{
    switch (s) {
    case ParseStatus::ok: return "ok";
    case ParseStatus::ambiguous_first_taken: return "ambiguous_first_taken";
    case ParseStatus::failed: return "failed";
    }
    return "failed";
}

std::optional<ParseStatus> parse_status(std::string_view name) noexcept
{
    for (auto s : {ParseStatus::ok, ParseStatus::ambiguous_first_taken, ParseStatus::failed})
        if (to_string(s) == name)
            return s;
    return std::nullopt;
}

std::string_view to_string(ValueKind k) noexcept
{
    switch (k) {
    case ValueKind::count: return "count";
    case ValueKind::percentage: return "percentage";
    case ValueKind::dollars: return "dollars";
    case ValueKind::minutes: return "minutes";
    case ValueKind::hours: return "hours";
    case ValueKind::weeks: return "weeks";
    }
    return "count";
}

ValueKind parse_value_kind(std::string_view name)
{
    for (auto k : {ValueKind::count, ValueKind::percentage, ValueKind::dollars, ValueKind::minutes,
                   ValueKind::hours, ValueKind::weeks})
        if (to_string(k) == name)
            return k;
    throw SchemaError("unknown value_kind '" + std::string(name) + "'");
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

struct Literal {
    double value = 0.0;
    std::size_t begin = 0;
    std::size_t end = 0;
    bool negative = false;
};

// Reads a number starting at text[pos], which must be a digit or a '.' followed by one.
Literal read_literal(std::string_view text, std::size_t pos)
{
    Literal lit;
    lit.begin = pos;
    std::string digits;
    std::size_t i = pos;
    while (i < text.size()) {
        if (is_digit(text[i])) {
            digits.push_back(text[i++]);
        } else if (text[i] == ',' && !digits.empty() && digits.find('.') == std::string::npos &&
                   i + 3 < text.size() && is_digit(text[i + 1]) && is_digit(text[i + 2]) && is_digit(text[i + 3]) &&
                   (i + 4 >= text.size() || !is_digit(text[i + 4]))) {
            ++i;  // thousands separator
        } else {
            break;
        }
    }
    if (i + 1 < text.size() && text[i] == '.' && is_digit(text[i + 1])) {
        digits.push_back(text[i++]);
        while (i < text.size() && is_digit(text[i]))
            digits.push_back(text[i++]);
    }
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        std::size_t j = i + 1;
        std::string exp = "e";
        if (j < text.size() && (text[j] == '+' || text[j] == '-'))
            exp.push_back(text[j++]);
        if (j < text.size() && is_digit(text[j])) {
            while (j < text.size() && is_digit(text[j]))
                exp.push_back(text[j++]);
            digits += exp;
            i = j;
        }
    }
    if (!digits.empty() && digits.front() == '.')
        digits.insert(digits.begin(), '0');
    lit.end = i;
    const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), lit.value);
    if (res.ec != std::errc())
        lit.value = NAN;
    return lit;
}

bool starts_number(std::string_view text, std::size_t i)
{
    if (is_digit(text[i]))
        return true;
    return text[i] == '.' && i + 1 < text.size() && is_digit(text[i + 1]) &&
           (i == 0 || !is_digit(text[i - 1]));
}

std::optional<Literal> first_literal(std::string_view text, std::size_t from = 0)
{
    for (std::size_t i = from; i < text.size(); ++i) {
        if (!starts_number(text, i))
            continue;
        Literal lit = read_literal(text, i);
        std::size_t k = i;
        while (k > 0 && (text[k - 1] == '$' || text[k - 1] == ' '))
            --k;
        if (k > 0 && text[k - 1] == '-' && (k < 2 || !is_digit(text[k - 2])))
            lit.negative = true;
        // U+2212 MINUS SIGN
        if (k >= 3 && text.substr(k - 3, 3) == "\xE2\x88\x92")
            lit.negative = true;
        return lit;
    }
    return std::nullopt;
}

// Position just past a range separator at text[pos], or npos.
std::size_t range_separator(std::string_view text, std::size_t pos)
{
    std::size_t i = pos;
    while (i < text.size() && text[i] == ' ')
        ++i;
    std::size_t after = std::string_view::npos;
    if (i < text.size() && text[i] == '-')
        after = i + 1;
    else if (text.substr(i, 3) == "\xE2\x80\x93")  // en dash
        after = i + 3;
    else if (text.substr(i, 3) == "to ")
        after = i + 2;
    if (after == std::string_view::npos)
        return after;
    while (after < text.size() && (text[after] == ' ' || text[after] == '$'))
        ++after;
    if (after < text.size() && starts_number(text, after))
        return after;
    return std::string_view::npos;
}

ParseOutcome failed(std::string note)
{
    return {ParseStatus::failed, std::nullopt, std::move(note)};
}

ParseOutcome scan(std::string_view text)
{
    const auto lit = first_literal(text);
    if (!lit)
        return failed("no number found");
    if (!std::isfinite(lit->value))
        return failed("number out of range");
    if (lit->negative)
        return failed("negative value rejected");

    const std::size_t next = range_separator(text, lit->end);
    if (next != std::string_view::npos) {
        const Literal hi = read_literal(text, next);
        if (std::isfinite(hi.value)) {
            return {ParseStatus::ambiguous_first_taken, (lit->value + hi.value) / 2.0,
                    "range " + format_value(lit->value) + "-" + format_value(hi.value) +
                        " reduced to midpoint"};
        }
    }
    return {ParseStatus::ok, lit->value, {}};
}

} // namespace

ParseOutcome extract_number(std::string_view text, ValueKind kind)
{
    auto out = scan(text);
    if (out.usable() && kind == ValueKind::percentage && (*out.value < 0.0 || *out.value > 100.0))
        return failed("percentage outside [0, 100]");
    return out;
}

ParseOutcome extract_rating(std::string_view text, double scale_max)
{
    auto out = scan(text);
    if (out.usable() && (*out.value < 0.0 || *out.value > scale_max))
        return failed("rating outside [0, " + format_value(scale_max) + "]");
    return out;
}

std::string format_value(double v)
{
    return fmt::format("{}", v);
}

} // namespace normprobe::extract
