#pragma once

#include "normprobe/extract.hpp"
#include "normprobe/synthgen.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace normprobe::gateway {

inline constexpr std::string_view api_key_env = "NORMPROBE_API_KEY";

enum class ProbeKind { sample, average, ideal, rating };

std::string_view to_string(ProbeKind k) noexcept;
ProbeKind parse_probe_kind(std::string_view name);

/// Generator of the listed input values of a novel-concept prompt.
struct Distribution {
    bool bimodal = false;
    double mu = 45.0;
    double mu2 = 65.0;  // second mode, bimodal only
    double sigma = 15.0;
};

/// Everything the mock needs to answer a novel-concept prompt.
struct NovelContext {
    Distribution dist;
    synth::GradeScheme scheme;
    synth::Clamp clamp;
    std::vector<synth::ValueSample> listed;
};

/// Existing concept with the answers the mock treats as its beliefs.
struct ConceptContext {
    double average = 0.0;
    double ideal = 0.0;
    extract::ValueKind kind = extract::ValueKind::count;
};

/// The mock answers with this text verbatim.
struct FixedContext {
    std::string text;
};

using ProbeContext = std::variant<std::monostate, NovelContext, ConceptContext, FixedContext>;

struct Probe {
    std::string key;
    ProbeKind kind = ProbeKind::sample;
    std::string prompt;
    ProbeContext context;
    std::uint64_t seed = 0;
};

struct RetryPolicy {
    int max_attempts = 4;
    double backoff_base_s = 0.5;
    double backoff_max_s = 8.0;
};

/// Parameters of the offline responder.
struct MockModel {
    // sd of the mock's own sample distribution, as a fraction of the input sigma
    double spread = 0.316;
    // value weights; unset means calibrated against the target shifts below
    std::optional<double> lambda_positive;
    std::optional<double> lambda_negative;
    double target_positive_shift = 1.78;
    double target_negative_shift = -8.49;
    // noise of average-type answers
    double sigma_a = 1.5;
    // existing concepts: value weight and base sd relative to max(|average|, 1)
    double concept_lambda = 3.0;
    double concept_spread = 0.25;
};

enum class Mode { mock, live };

std::string_view to_string(Mode m) noexcept;
Mode parse_mode(std::string_view name);

struct ModelConfig {
    Mode mode = Mode::mock;
    std::string endpoint;
    std::string model = "mock-softmax";
    double temperature = 0.8;
    int max_tokens = 16;
    RetryPolicy retry;
    double timeout_s = 60.0;
    std::size_t max_concurrency = 4;
    MockModel mock;
};

struct Completion {
    std::string text;
    double latency_s = 0.0;
    int attempts = 1;
    std::string model;
};

class Responder {
public:
    virtual ~Responder() = default;
    /// Thread safe.
    virtual Completion complete(const Probe& probe) = 0;
};

/// Mock responder, or live client using `api_key`. Live mode without a key,
/// or without an endpoint, throws ConfigError.
std::unique_ptr<Responder> make_responder(const ModelConfig& config,
                                          std::optional<std::string> api_key);

/// Key from the environment, if set and non-empty.
std::optional<std::string> api_key_from_env();

/// Runs probes on up to max_concurrency threads and hands results to the
/// caller in submission order, on the calling thread. If `on_result` returns
/// false no further probes are started and the remaining in-flight results are
/// dropped. The first probe error is rethrown after every earlier result has
/// been delivered.
class Dispatcher {
public:
    Dispatcher(Responder& responder, std::size_t max_concurrency);

    using Sink = std::function<bool(std::size_t index, Completion&& completion)>;
    void run(const std::vector<Probe>& probes, const Sink& on_result);

private:
    Responder& responder_;
    std::size_t max_concurrency_;
};

} // namespace normprobe::gateway
