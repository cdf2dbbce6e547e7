#include "normprobe/config.hpp"

#include "normprobe/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace normprobe {

namespace {

using json = nlohmann::ordered_json;

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::string lower(std::string_view s)
{
    std::string out(s);
    for (auto& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

bool looks_secret(std::string_view key)
{
    static const std::vector<std::string> words{"key",         "apikey", "api_key", "token",
                                                "secret",      "password", "credential",
                                                "credentials", "auth",   "authorization", "bearer"};
    const auto k = lower(key);
    std::size_t start = 0;
    while (start <= k.size()) {
        auto end = k.find_first_of("._-", start);
        if (end == std::string::npos)
            end = k.size();
        if (std::find(words.begin(), words.end(), k.substr(start, end - start)) != words.end())
            return true;
        start = end + 1;
    }
    return std::find(words.begin(), words.end(), k) != words.end();
}

double to_double(std::string_view key, std::string_view v)
{
    const std::string s(v);
    char* end = nullptr;
    const double d = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(d))
        throw ConfigError(fmt::format("{}: '{}' is not a number", key, v));
    return d;
}

template <class T>
T to_integer(std::string_view key, std::string_view v)
{
    T out{};
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size())
        throw ConfigError(fmt::format("{}: '{}' is not a whole number", key, v));
    return out;
}

} // namespace

std::string_view to_string(Aggregate a) noexcept
{
    return a == Aggregate::median ? "median" : "mean";
}

const std::vector<std::string>& config_keys()
{
    static const std::vector<std::string> keys{
        "mode",          "endpoint",         "model",        "temperature",
        "max_tokens",    "max_attempts",     "backoff_base", "backoff_max",
        "timeout",       "max_concurrency",  "runs_root",    "reports_root",
        "corpus",        "exemplars",        "symptoms",     "repeats",
        "case_repeats",  "seed",             "tie_policy",   "aggregate",
        "mock.spread",   "mock.lambda_positive", "mock.lambda_negative",
        "mock.target_positive_shift", "mock.target_negative_shift", "mock.sigma_a",
        "mock.concept_lambda", "mock.concept_spread"};
    return keys;
}

void apply_setting(HarnessConfig& c, std::string_view key, std::string_view value)
{
    if (looks_secret(key))
        throw ConfigError(fmt::format("'{}': credentials are read only from the {} environment variable",
                                      key, gateway::api_key_env));
    auto& m = c.model;
    const std::string v = trim(value);
    if (key == "mode") m.mode = gateway::parse_mode(v);
    else if (key == "endpoint") m.endpoint = v;
    else if (key == "model") m.model = v;
    else if (key == "temperature") m.temperature = to_double(key, v);
    else if (key == "max_tokens") m.max_tokens = to_integer<int>(key, v);
    else if (key == "max_attempts") m.retry.max_attempts = to_integer<int>(key, v);
    else if (key == "backoff_base") m.retry.backoff_base_s = to_double(key, v);
    else if (key == "backoff_max") m.retry.backoff_max_s = to_double(key, v);
    else if (key == "timeout") m.timeout_s = to_double(key, v);
    else if (key == "max_concurrency") m.max_concurrency = to_integer<std::size_t>(key, v);
    else if (key == "runs_root") c.runs_root = v;
    else if (key == "reports_root") c.reports_root = v;
    else if (key == "corpus") c.corpus = v;
    else if (key == "exemplars") c.exemplars = v;
    else if (key == "symptoms") c.symptoms = v;
    else if (key == "repeats") c.repeats = to_integer<int>(key, v);
    else if (key == "case_repeats") c.case_repeats = to_integer<int>(key, v);
    else if (key == "seed") c.seed = to_integer<std::uint64_t>(key, v);
    else if (key == "tie_policy") {
        try {
            c.tie_policy = metrics::parse_tie_policy(v);
        } catch (const ParameterError& e) {
            throw ConfigError(e.what());
        }
    } else if (key == "aggregate") {
        if (v == "mean") c.aggregate = Aggregate::mean;
        else if (v == "median") c.aggregate = Aggregate::median;
        else throw ConfigError(fmt::format("aggregate must be mean or median, not '{}'", v));
    }
    else if (key == "mock.spread") m.mock.spread = to_double(key, v);
    else if (key == "mock.lambda_positive") {
        if (v == "auto") m.mock.lambda_positive.reset();
        else m.mock.lambda_positive = to_double(key, v);
    } else if (key == "mock.lambda_negative") {
        if (v == "auto") m.mock.lambda_negative.reset();
        else m.mock.lambda_negative = to_double(key, v);
    }
    else if (key == "mock.target_positive_shift") m.mock.target_positive_shift = to_double(key, v);
    else if (key == "mock.target_negative_shift") m.mock.target_negative_shift = to_double(key, v);
    else if (key == "mock.sigma_a") m.mock.sigma_a = to_double(key, v);
    else if (key == "mock.concept_lambda") m.mock.concept_lambda = to_double(key, v);
    else if (key == "mock.concept_spread") m.mock.concept_spread = to_double(key, v);
    else throw ConfigError(fmt::format("unknown setting '{}'", key));
}

std::map<std::string, std::string> parse_config_text(std::string_view text, std::string_view origin)
{
    std::map<std::string, std::string> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const auto t = trim(line);
        if (t.empty())
            continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError(fmt::format("{}:{}: expected key = value", origin, number));
        auto key = trim(std::string_view(t).substr(0, eq));
        if (key.empty())
            throw ConfigError(fmt::format("{}:{}: empty key", origin, number));
        if (looks_secret(key))
            throw ConfigError(fmt::format("{}:{}: '{}' - credentials are read only from the {} environment variable",
                                          origin, number, key, gateway::api_key_env));
        out[key] = trim(std::string_view(t).substr(eq + 1));
    }
    return out;
}

void validate(const HarnessConfig& c, const EnvLookup& env)
{
    const auto& m = c.model;
    if (m.temperature < 0)
        throw ConfigError("temperature must be >= 0");
    if (m.max_tokens < 1)
        throw ConfigError("max_tokens must be >= 1");
    if (m.retry.max_attempts < 1)
        throw ConfigError("max_attempts must be >= 1");
    if (m.retry.backoff_base_s < 0 || m.retry.backoff_max_s < 0)
        throw ConfigError("backoff must be >= 0");
    if (m.timeout_s <= 0)
        throw ConfigError("timeout must be > 0");
    if (m.max_concurrency < 1)
        throw ConfigError("max_concurrency must be >= 1");
    if (c.repeats < 1 || c.case_repeats < 1)
        throw ConfigError("repeats must be >= 1");
    if (!(m.mock.spread > 0) || m.mock.sigma_a < 0 || !(m.mock.concept_spread > 0) ||
        m.mock.concept_lambda < 0)
        throw ConfigError("mock parameters out of range");
    if ((m.mock.lambda_positive && *m.mock.lambda_positive < 0) ||
        (m.mock.lambda_negative && *m.mock.lambda_negative < 0))
        throw ConfigError("mock lambda must be >= 0");
    if (m.mode == gateway::Mode::live) {
        if (m.endpoint.empty())
            throw ConfigError("live mode needs an endpoint");
        if (!env(gateway::api_key_env))
            throw ConfigError(fmt::format("live mode needs the {} environment variable", gateway::api_key_env));
    }
}

EnvLookup process_env()
{
    return [](std::string_view name) -> std::optional<std::string> {
        const char* v = std::getenv(std::string(name).c_str());
        if (!v || !*v)
            return std::nullopt;
        return std::string(v);
    };
}

HarnessConfig load_config(const std::optional<std::string>& path,
                          const std::vector<std::pair<std::string, std::string>>& flags,
                          const EnvLookup& env)
{
    HarnessConfig c;
    if (path) {
        std::ifstream in(*path, std::ios::binary);
        if (!in)
            throw IoError(fmt::format("cannot read config file '{}'", *path));
        std::ostringstream ss;
        ss << in.rdbuf();
        for (const auto& [k, v] : parse_config_text(ss.str(), *path))
            apply_setting(c, k, v);
    }
    for (const auto& [k, v] : flags)
        apply_setting(c, k, v);
    validate(c, env);
    return c;
}

json config_to_json(const HarnessConfig& c)
{
    const auto& m = c.model;
    json j;
    j["mode"] = std::string(gateway::to_string(m.mode));
    j["endpoint"] = m.endpoint;
    j["model"] = m.model;
    j["temperature"] = m.temperature;
    j["max_tokens"] = m.max_tokens;
    j["max_attempts"] = m.retry.max_attempts;
    j["backoff_base"] = m.retry.backoff_base_s;
    j["backoff_max"] = m.retry.backoff_max_s;
    j["timeout"] = m.timeout_s;
    j["max_concurrency"] = m.max_concurrency;
    j["runs_root"] = c.runs_root;
    j["reports_root"] = c.reports_root;
    j["corpus"] = c.corpus;
    j["exemplars"] = c.exemplars;
    j["symptoms"] = c.symptoms;
    j["repeats"] = c.repeats;
    j["case_repeats"] = c.case_repeats;
    j["seed"] = c.seed;
    j["tie_policy"] = std::string(metrics::to_string(c.tie_policy));
    j["aggregate"] = std::string(to_string(c.aggregate));
    j["mock.spread"] = m.mock.spread;
    j["mock.lambda_positive"] = m.mock.lambda_positive ? json(*m.mock.lambda_positive) : json("auto");
    j["mock.lambda_negative"] = m.mock.lambda_negative ? json(*m.mock.lambda_negative) : json("auto");
    j["mock.target_positive_shift"] = m.mock.target_positive_shift;
    j["mock.target_negative_shift"] = m.mock.target_negative_shift;
    j["mock.sigma_a"] = m.mock.sigma_a;
    j["mock.concept_lambda"] = m.mock.concept_lambda;
    j["mock.concept_spread"] = m.mock.concept_spread;
    return j;
}

HarnessConfig config_from_json(const json& j)
{
    if (!j.is_object())
        throw ConfigError("manifest config is not an object");
    HarnessConfig c;
    for (const auto& [k, v] : j.items())
        apply_setting(c, k, v.is_string() ? v.get<std::string>() : v.dump());
    return c;
}

} // namespace normprobe
