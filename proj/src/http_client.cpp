#include "normprobe/http_client.hpp"

#include "normprobe/errors.hpp"

#include <fmt/format.h>
#include <httplib.h>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

namespace normprobe::gateway {

namespace {

using json = nlohmann::ordered_json;

bool retryable_status(int status)
{
    return status == 429 || status >= 500;
}

void set_timeout(httplib::Client& cli, double seconds)
{
    const auto whole = static_cast<time_t>(seconds);
    const auto usec = static_cast<time_t>((seconds - static_cast<double>(whole)) * 1e6);
    cli.set_connection_timeout(whole, usec);
    cli.set_read_timeout(whole, usec);
    cli.set_write_timeout(whole, usec);
}

} // namespace

std::string wire_body(const ModelConfig& config, std::string_view prompt)
{
    json body;
    body["model"] = config.model;
    body["temperature"] = config.temperature;
    body["max_tokens"] = config.max_tokens;
    body["messages"] = json::array({json{{"role", "user"}, {"content", std::string(prompt)}}});
    return body.dump();
}

std::string response_content(std::string_view body)
{
    const auto j = json::parse(body, nullptr, false);
    if (j.is_discarded())
        throw TransportError("response is not JSON");
    try {
        const auto& content = j.at("choices").at(0).at("message").at("content");
        if (!content.is_string())
            throw TransportError("choices[0].message.content is not a string");
        return content.get<std::string>();
    } catch (const json::exception&) {
        throw TransportError("response has no choices[0].message.content");
    }
}

Endpoint parse_endpoint(std::string_view url)
{
    const auto sep = url.find("://");
    if (sep == std::string_view::npos)
        throw ConfigError(fmt::format("endpoint '{}' has no scheme", url));
    const auto scheme = url.substr(0, sep);
    if (scheme != "http" && scheme != "https")
        throw ConfigError(fmt::format("endpoint '{}': scheme must be http or https", url));
    const auto slash = url.find('/', sep + 3);
    if (slash == sep + 3)
        throw ConfigError(fmt::format("endpoint '{}' has no host", url));
    Endpoint e;
    e.scheme_host_port = std::string(url.substr(0, slash));
    e.path = slash == std::string_view::npos ? "/" : std::string(url.substr(slash));
    return e;
}

HttpResponder::HttpResponder(ModelConfig config, std::string api_key)
    : config_(std::move(config)), endpoint_(parse_endpoint(config_.endpoint)), api_key_(std::move(api_key))
{
    if (api_key_.empty())
        throw ConfigError(fmt::format("live mode needs {}", api_key_env));
    if (config_.retry.max_attempts < 1)
        throw ConfigError("retry max_attempts must be >= 1");
}

Completion HttpResponder::complete(const Probe& probe)
{
    const auto body = wire_body(config_, probe.prompt);
    const httplib::Headers headers{{"Authorization", "Bearer " + api_key_}};
    const auto start = std::chrono::steady_clock::now();
    std::string last_error;

    for (int attempt = 1; attempt <= config_.retry.max_attempts; ++attempt) {
        if (attempt > 1) {
            const double wait = std::min(config_.retry.backoff_base_s * std::pow(2.0, attempt - 2),
                                         config_.retry.backoff_max_s);
            std::this_thread::sleep_for(std::chrono::duration<double>(wait));
        }
        httplib::Client cli(endpoint_.scheme_host_port);
        set_timeout(cli, config_.timeout_s);
        auto res = cli.Post(endpoint_.path, headers, body, "application/json");
        if (!res) {
            last_error = httplib::to_string(res.error());
            continue;
        }
        if (res->status == 401 || res->status == 403)
            throw CredentialError(fmt::format("endpoint rejected the credential (HTTP {})", res->status));
        if (retryable_status(res->status)) {
            last_error = fmt::format("HTTP {}", res->status);
            continue;
        }
        if (res->status < 200 || res->status >= 300)
            throw TransportError(fmt::format("probe '{}': HTTP {} {}", probe.key, res->status, res->body));
        const std::chrono::duration<double> latency = std::chrono::steady_clock::now() - start;
        return {response_content(res->body), latency.count(), attempt, config_.model};
    }
    throw TransportError(fmt::format("probe '{}': giving up after {} attempts ({})", probe.key,
                                     config_.retry.max_attempts, last_error));
}

} // namespace normprobe::gateway
