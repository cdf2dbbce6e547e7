#pragma once

#include "normprobe/gateway.hpp"

#include <string>

namespace normprobe::gateway {

/// Request body sent for a prompt, keys in wire order.
std::string wire_body(const ModelConfig& config, std::string_view prompt);

/// choices[0].message.content of a response body. Throws TransportError.
std::string response_content(std::string_view body);

struct Endpoint {
    std::string scheme_host_port;  // "https://api.example.com:443"
    std::string path;              // "/v1/chat/completions"
};

/// Throws ConfigError for anything that is not http(s)://host[:port]/path.
Endpoint parse_endpoint(std::string_view url);

/// Chat-completion client. 401/403 raise CredentialError at once; other 4xx
/// raise TransportError at once; 429, 5xx, timeouts and connection errors are
/// retried with exponential backoff up to retry.max_attempts.
class HttpResponder final : public Responder {
public:
    HttpResponder(ModelConfig config, std::string api_key);

    Completion complete(const Probe& probe) override;

private:
    ModelConfig config_;
    Endpoint endpoint_;
    std::string api_key_;
};

} // namespace normprobe::gateway
