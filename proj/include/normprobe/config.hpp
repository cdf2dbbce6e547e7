#pragma once

#include "normprobe/gateway.hpp"
#include "normprobe/metrics.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace normprobe {

enum class Aggregate { mean, median };

std::string_view to_string(Aggregate a) noexcept;

struct HarnessConfig {
    gateway::ModelConfig model;
    std::string runs_root = "runs";
    std::string reports_root = "reports";
    std::string corpus = "builtin";
    std::string exemplars = "builtin";
    std::string symptoms = "builtin";
    int repeats = 10;       // existing concepts and prototypes
    int case_repeats = 1;   // case study
    std::uint64_t seed = 7;
    metrics::TiePolicy tie_policy = metrics::TiePolicy::count_as_non_ideal;
    Aggregate aggregate = Aggregate::mean;

    // run control; not part of a run's identity and not written to manifests
    std::optional<std::size_t> stop_after;
    std::string run_id;
};

/// Every setting key accepted in config files and via `--set`.
const std::vector<std::string>& config_keys();

/// Applies one setting. Throws ConfigError on an unknown key, a bad value, or
/// anything that looks like a credential.
void apply_setting(HarnessConfig& config, std::string_view key, std::string_view value);

/// "key = value" lines; '#' starts a comment. Throws ConfigError / IoError.
std::map<std::string, std::string> parse_config_text(std::string_view text, std::string_view origin);

using EnvLookup = std::function<std::optional<std::string>(std::string_view)>;

/// Defaults, then the file (if any), then `flags`, in that order. Validates
/// the result; live mode needs an endpoint and the API key in `env`.
HarnessConfig load_config(const std::optional<std::string>& path,
                          const std::vector<std::pair<std::string, std::string>>& flags,
                          const EnvLookup& env);

/// Throws ConfigError for contradictory or out-of-range settings.
void validate(const HarnessConfig& config, const EnvLookup& env);

EnvLookup process_env();

/// Resolved settings as written to run manifests. Never holds credentials.
nlohmann::ordered_json config_to_json(const HarnessConfig& config);
HarnessConfig config_from_json(const nlohmann::ordered_json& j);

} // namespace normprobe
