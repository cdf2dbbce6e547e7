#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace normprobe::fixtures {

enum class Format { jsonl, text };

struct Fixture {
    std::string name;
    Format format = Format::text;
    std::string description;
    std::string content;
};

/// Every bundled fixture, in a stable order.
const std::vector<Fixture>& all();

/// Throws Error listing the known names when `name` is not bundled.
const Fixture& get(std::string_view name);

inline Fixture make(std::string_view name, Format format, std::string_view description,
                    std::span<const std::string_view> parts)
{
    Fixture f{std::string(name), format, std::string(description), {}};
    for (auto p : parts) f.content += p;
    return f;
}

} // namespace normprobe::fixtures
