#include "normprobe/gateway.hpp"

#include "normprobe/errors.hpp"
#include "normprobe/http_client.hpp"
#include "normprobe/mock.hpp"

#include <fmt/format.h>

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace normprobe::gateway {

std::string_view to_string(ProbeKind k) noexcept
{
    switch (k) {
    case ProbeKind::sample: return "sample";
    case ProbeKind::average: return "average";
    case ProbeKind::ideal: return "ideal";
    case ProbeKind::rating: return "rating";
    }
    return "sample";
}

ProbeKind parse_probe_kind(std::string_view name)
{
    for (auto k : {ProbeKind::sample, ProbeKind::average, ProbeKind::ideal, ProbeKind::rating})
        if (to_string(k) == name)
            return k;
    throw ParameterError(fmt::format("unknown probe kind '{}'", name));
}

std::string_view to_string(Mode m) noexcept
{
    return m == Mode::live ? "live" : "mock";
}

Mode parse_mode(std::string_view name)
{
    if (name == "mock")
        return Mode::mock;
    if (name == "live")
        return Mode::live;
    throw ConfigError(fmt::format("mode must be 'mock' or 'live', not '{}'", name));
}

std::optional<std::string> api_key_from_env()
{
    const char* v = std::getenv(std::string(api_key_env).c_str());
    if (!v || !*v)
        return std::nullopt;
    return std::string(v);
}

std::unique_ptr<Responder> make_responder(const ModelConfig& config, std::optional<std::string> api_key)
{
    if (config.mode == Mode::mock)
        return std::make_unique<MockResponder>(config.mock, config.model);
    if (config.endpoint.empty())
        throw ConfigError("live mode needs an endpoint");
    if (!api_key)
        throw ConfigError(fmt::format("live mode needs the {} environment variable", api_key_env));
    return std::make_unique<HttpResponder>(config, *api_key);
}

Dispatcher::Dispatcher(Responder& responder, std::size_t max_concurrency)
    : responder_(responder), max_concurrency_(std::max<std::size_t>(1, max_concurrency))
{
}

void Dispatcher::run(const std::vector<Probe>& probes, const Sink& on_result)
{
    const std::size_t n = probes.size();
    if (n == 0)
        return;

    struct Slot {
        std::optional<Completion> done;
        std::exception_ptr error;
    };
    std::vector<Slot> slots(n);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::size_t delivered = 0;

    auto worker = [&] {
        while (!stop.load()) {
            // bound the window so a slow head cannot let workers run far ahead
            std::size_t i;
            {
                std::unique_lock lock(mu);
                cv.wait(lock, [&] { return stop.load() || next.load() < delivered + 4 * max_concurrency_; });
                if (stop.load())
                    return;
                i = next.fetch_add(1);
            }
            if (i >= n)
                return;
            Slot s;
            try {
                s.done = responder_.complete(probes[i]);
            } catch (...) {
                s.error = std::current_exception();
            }
            {
                std::lock_guard lock(mu);
                slots[i] = std::move(s);
            }
            cv.notify_all();
        }
    };

    const std::size_t threads = std::min(max_concurrency_, n);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back(worker);

    std::exception_ptr failure;
    while (delivered < n) {
        Slot s;
        {
            std::unique_lock lock(mu);
            cv.wait(lock, [&] { return slots[delivered].done || slots[delivered].error; });
            s = std::move(slots[delivered]);
        }
        if (s.error) {
            failure = s.error;
            break;
        }
        bool keep_going = false;
        try {
            keep_going = on_result(delivered, std::move(*s.done));
        } catch (...) {
            failure = std::current_exception();
        }
        {
            std::lock_guard lock(mu);
            ++delivered;
        }
        cv.notify_all();
        if (failure || !keep_going)
            break;
    }
    stop.store(true);
    cv.notify_all();
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace normprobe::gateway
