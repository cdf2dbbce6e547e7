#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "normprobe/errors.hpp"
#include "normprobe/gateway.hpp"
#include "normprobe/http_client.hpp"
#include "normprobe/mock.hpp"
#include "normprobe/seeds.hpp"

#include <httplib.h>

#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <thread>

using namespace normprobe;
using namespace normprobe::gateway;

namespace {

Probe novel_probe(ProbeKind kind, synth::GradeScheme scheme, std::uint64_t seed,
                  std::vector<synth::ValueSample> listed = {})
{
    Probe p;
    p.key = "k" + std::to_string(seed);
    p.kind = kind;
    p.prompt = "pick a sample number of glubbing hours";
    p.context = NovelContext{Distribution{}, scheme, synth::Clamp{}, std::move(listed)};
    p.seed = seed;
    return p;
}

double mean_samples(MockResponder& m, synth::GradeScheme scheme, int n, std::uint64_t base_seed)
{
    double sum = 0;
    for (int i = 0; i < n; ++i)
        sum += std::stod(m.respond(novel_probe(ProbeKind::sample, scheme, derive_seed(base_seed, std::to_string(i)))));
    return sum / n;
}

} // namespace

TEST_CASE("lambda zero leaves the base distribution")
{
    MockModel mm;
    mm.lambda_positive = 0.0;
    mm.lambda_negative = 0.0;
    MockResponder m(mm);
    auto ctx = reference_context(synth::GradeScheme::positive());
    auto with = sample_distribution(ctx, 0.0, mm.spread);
    ctx.scheme = synth::GradeScheme::none();
    auto without = sample_distribution(ctx, 5.0, mm.spread);
    for (std::size_t i = 0; i < with.size(); ++i) CHECK(with[i] == doctest::Approx(without[i]));

    double m1000 = mean_samples(m, synth::GradeScheme::positive(), 1000, 3);
    double se = 15 * mm.spread / std::sqrt(1000.0);
    CHECK(std::abs(m1000 - 45) < 3 * se);
}

TEST_CASE("calibrated lambda hits the target shifts")
{
    MockModel mm;
    MockResponder m(mm);
    CHECK(m.lambda_positive() > 0);
    CHECK(m.lambda_negative() > m.lambda_positive());
    CHECK(expected_sample(reference_context(synth::GradeScheme::positive()), m.lambda_positive(), mm.spread) ==
          doctest::Approx(45 + 1.78).epsilon(1e-6));
    CHECK(expected_sample(reference_context(synth::GradeScheme::negative()), m.lambda_negative(), mm.spread) ==
          doctest::Approx(45 - 8.49).epsilon(1e-6));
    CHECK_THROWS_AS(calibrate_lambda(reference_context(synth::GradeScheme::positive()), 80, mm.spread),
                    ParameterError);
}

TEST_CASE("expected sample is monotone in lambda")
{
    auto pos = reference_context(synth::GradeScheme::positive());
    auto neg = reference_context(synth::GradeScheme::negative());
    double prev_p = -1e9, prev_n = 1e9;
    for (double l = 0; l <= 40; l += 0.5) {
        double ep = expected_sample(pos, l, 0.316);
        double en = expected_sample(neg, l, 0.316);
        CHECK(ep >= prev_p - 1e-12);
        CHECK(en <= prev_n + 1e-12);
        prev_p = ep;
        prev_n = en;
    }
}

TEST_CASE("Monte-Carlo direction under fixed seeds")
{
    MockResponder m(MockModel{});
    double lo = mean_samples(m, synth::GradeScheme::positive(), 400, 1);
    MockModel strong;
    strong.lambda_positive = 12.0;
    MockResponder s(strong);
    double hi = mean_samples(s, synth::GradeScheme::positive(), 400, 1);
    CHECK(hi > lo);
    CHECK(mean_samples(m, synth::GradeScheme::negative(), 400, 1) < 45 - 5);
}

TEST_CASE("positive shift beats the average answer over 100 pairs")
{
    MockResponder m(MockModel{});
    double s_sum = 0, a_sum = 0;
    for (int rep = 0; rep < 100; ++rep) {
        auto seed = derive_seed(9, std::to_string(rep));
        auto listed = synth::assign_grades(
            synth::values_of(synth::sample_unimodal(45, 15, 100, seed)), synth::GradeScheme::positive());
        s_sum += std::stod(m.respond(novel_probe(ProbeKind::sample, synth::GradeScheme::positive(), seed + 1, listed)));
        a_sum += std::stod(m.respond(novel_probe(ProbeKind::average, synth::GradeScheme::positive(), seed + 2, listed)));
    }
    CHECK(s_sum / 100 > a_sum / 100);
}

TEST_CASE("average answers")
{
    MockModel mm;
    mm.sigma_a = 0;
    MockResponder m(mm);
    std::vector<synth::ValueSample> listed{{44, {}}, {46, {}}};
    CHECK(m.respond(novel_probe(ProbeKind::average, synth::GradeScheme::none(), 1, listed)) == "45");
    CHECK_THROWS_AS(m.respond(novel_probe(ProbeKind::average, synth::GradeScheme::none(), 1)), ContractError);
}

TEST_CASE("determinism and contracts")
{
    MockResponder m(MockModel{});
    auto p = novel_probe(ProbeKind::sample, synth::GradeScheme::positive(), 77);
    CHECK(m.respond(p) == m.respond(p));
    CHECK_THROWS_AS(m.respond(novel_probe(ProbeKind::ideal, synth::GradeScheme::positive(), 1)), ContractError);
    CHECK_THROWS_AS(m.respond(novel_probe(ProbeKind::rating, synth::GradeScheme::positive(), 1)), ContractError);
    Probe empty;
    CHECK_THROWS_AS(m.respond(empty), ContractError);
    Probe fixed;
    fixed.kind = ProbeKind::rating;
    fixed.context = FixedContext{"4.50"};
    CHECK(m.respond(fixed) == "4.50");
    auto r = m.complete(fixed);
    CHECK(r.attempts == 1);
    CHECK(r.model == "mock-softmax");
}

TEST_CASE("existing-concept mock")
{
    MockResponder m(MockModel{});
    Probe p;
    p.key = "tv";
    p.context = ConceptContext{3.5, 2.0, extract::ValueKind::hours};
    p.kind = ProbeKind::average;
    CHECK(m.respond(p) == "3.5");
    p.kind = ProbeKind::ideal;
    CHECK(m.respond(p) == "2");
    p.kind = ProbeKind::rating;
    CHECK_THROWS_AS(m.respond(p), ContractError);
    p.kind = ProbeKind::sample;
    double sum = 0;
    for (std::uint64_t i = 0; i < 500; ++i) {
        p.seed = i;
        double v = std::stod(m.respond(p));
        CHECK(v >= 0);
        sum += v;
    }
    CHECK(sum / 500 < 3.5);

    p.context = ConceptContext{98, 100, extract::ValueKind::percentage};
    for (std::uint64_t i = 0; i < 200; ++i) {
        p.seed = i;
        CHECK(std::stod(m.respond(p)) <= 100);
    }
}

TEST_CASE("random scheme takes the grade of the nearest listed value")
{
    NovelContext ctx;
    ctx.scheme = synth::GradeScheme::random(1);
    ctx.listed = {{10, 0}, {90, 11}};
    CHECK(value_of(12, ctx) == 1.0);
    CHECK(value_of(80, ctx) == 0.0);
    ctx.scheme = synth::GradeScheme::none();
    CHECK(value_of(12, ctx) == 0.0);
}

TEST_CASE("wire shape")
{
    ModelConfig c;
    c.model = "gpt-4";
    c.temperature = 0.8;
    c.max_tokens = 16;
    CHECK(wire_body(c, "Say \"7\"") ==
          R"({"model":"gpt-4","temperature":0.8,"max_tokens":16,"messages":[{"role":"user","content":"Say \"7\""}]})");
    CHECK(response_content(R"({"choices":[{"message":{"role":"assistant","content":"47"}}]})") == "47");
    CHECK_THROWS_AS(response_content("{}"), TransportError);
    CHECK_THROWS_AS(response_content("nope"), TransportError);
}

TEST_CASE("endpoint parsing")
{
    auto e = parse_endpoint("https://api.example.com/v1/chat/completions");
    CHECK(e.scheme_host_port == "https://api.example.com");
    CHECK(e.path == "/v1/chat/completions");
    CHECK(parse_endpoint("http://127.0.0.1:8080").path == "/");
    CHECK_THROWS_AS(parse_endpoint("ftp://x/y"), ConfigError);
    CHECK_THROWS_AS(parse_endpoint("localhost/y"), ConfigError);
}

TEST_CASE("live mode needs key and endpoint")
{
    ModelConfig c;
    c.mode = Mode::live;
    c.endpoint = "http://127.0.0.1:1/v1";
    CHECK_THROWS_AS(make_responder(c, std::nullopt), ConfigError);
    c.endpoint.clear();
    CHECK_THROWS_AS(make_responder(c, std::string("k")), ConfigError);
}

namespace {

struct Server {
    httplib::Server srv;
    int port = 0;
    std::thread thread;
    std::mutex mu;
    std::vector<std::string> bodies;
    std::vector<std::string> auth;

    Server()
    {
        port = srv.bind_to_any_port("127.0.0.1");
        thread = std::thread([this] { srv.listen_after_bind(); });
        srv.wait_until_ready();
    }
    ~Server()
    {
        srv.stop();
        thread.join();
    }
    void record(const httplib::Request& req)
    {
        std::lock_guard lock(mu);
        bodies.push_back(req.body);
        auth.push_back(req.get_header_value("Authorization"));
    }
    std::size_t hits()
    {
        std::lock_guard lock(mu);
        return bodies.size();
    }
    ModelConfig config()
    {
        ModelConfig c;
        c.mode = Mode::live;
        c.endpoint = "http://127.0.0.1:" + std::to_string(port) + "/v1/chat/completions";
        c.model = "test-model";
        c.retry.max_attempts = 3;
        c.retry.backoff_base_s = 0.01;
        c.timeout_s = 0.3;
        return c;
    }
};

const char* ok_body = R"({"choices":[{"message":{"role":"assistant","content":"47"}}]})";

Probe live_probe(std::string prompt)
{
    Probe p;
    p.key = "k";
    p.prompt = std::move(prompt);
    return p;
}

} // namespace

TEST_CASE("live: request on the wire")
{
    Server s;
    s.srv.Post("/v1/chat/completions", [&](const httplib::Request& req, httplib::Response& res) {
        s.record(req);
        res.set_content(ok_body, "application/json");
    });
    auto cfg = s.config();
    HttpResponder r(cfg, "secret-key");
    auto c = r.complete(live_probe("pick a number"));
    CHECK(c.text == "47");
    CHECK(c.attempts == 1);
    REQUIRE(s.hits() == 1);
    CHECK(s.bodies[0] == wire_body(cfg, "pick a number"));
    CHECK(s.auth[0] == "Bearer secret-key");
}

TEST_CASE("live: bad credential is one attempt")
{
    Server s;
    s.srv.Post("/v1/chat/completions", [&](const httplib::Request& req, httplib::Response& res) {
        s.record(req);
        res.status = 401;
    });
    HttpResponder r(s.config(), "bad");
    CHECK_THROWS_AS(r.complete(live_probe("x")), CredentialError);
    CHECK(s.hits() == 1);
}

TEST_CASE("live: 400 is not retried, 500 is")
{
    Server s;
    s.srv.Post("/v1/chat/completions", [&](const httplib::Request& req, httplib::Response& res) {
        s.record(req);
        res.status = req.body.find("bad") != std::string::npos ? 400 : 503;
    });
    HttpResponder r(s.config(), "k");
    CHECK_THROWS_AS(r.complete(live_probe("bad")), TransportError);
    CHECK(s.hits() == 1);
    CHECK_THROWS_AS(r.complete(live_probe("flaky")), TransportError);
    CHECK(s.hits() == 4);
}

TEST_CASE("live: timeout then success is two attempts")
{
    Server s;
    std::atomic<int> calls{0};
    s.srv.Post("/v1/chat/completions", [&](const httplib::Request& req, httplib::Response& res) {
        s.record(req);
        if (calls.fetch_add(1) == 0) std::this_thread::sleep_for(std::chrono::milliseconds(900));
        res.set_content(ok_body, "application/json");
    });
    HttpResponder r(s.config(), "k");
    auto c = r.complete(live_probe("x"));
    CHECK(c.text == "47");
    CHECK(c.attempts == 2);
}

TEST_CASE("live: 429 then success")
{
    Server s;
    std::atomic<int> calls{0};
    s.srv.Post("/v1/chat/completions", [&](const httplib::Request& req, httplib::Response& res) {
        s.record(req);
        if (calls.fetch_add(1) < 2) {
            res.status = 429;
            return;
        }
        res.set_content(ok_body, "application/json");
    });
    HttpResponder r(s.config(), "k");
    CHECK(r.complete(live_probe("x")).attempts == 3);
}

namespace {

class SlowEcho final : public Responder {
public:
    std::atomic<int> in_flight{0};
    std::atomic<int> peak{0};
    std::size_t fail_at = static_cast<std::size_t>(-1);

    Completion complete(const Probe& p) override
    {
        int now = ++in_flight;
        int prev = peak.load();
        while (now > prev && !peak.compare_exchange_weak(prev, now)) {}
        auto idx = std::stoul(p.key);
        std::this_thread::sleep_for(std::chrono::microseconds((idx * 7919) % 3000));
        --in_flight;
        if (idx == fail_at) throw TransportError("boom");
        return {p.key, 0, 1, "echo"};
    }
};

std::vector<Probe> numbered(std::size_t n)
{
    std::vector<Probe> ps(n);
    for (std::size_t i = 0; i < n; ++i) ps[i].key = std::to_string(i);
    return ps;
}

} // namespace

TEST_CASE("dispatcher keeps submission order under concurrency")
{
    SlowEcho echo;
    Dispatcher d(echo, 4);
    std::vector<std::string> got;
    d.run(numbered(200), [&](std::size_t i, Completion&& c) {
        CHECK(c.text == std::to_string(i));
        got.push_back(c.text);
        return true;
    });
    CHECK(got.size() == 200);
    CHECK(echo.peak.load() <= 4);
    CHECK(echo.peak.load() >= 2);
}

TEST_CASE("dispatcher stops on request and on error")
{
    SlowEcho echo;
    Dispatcher d(echo, 3);
    std::size_t seen = 0;
    d.run(numbered(100), [&](std::size_t, Completion&&) { return ++seen < 10; });
    CHECK(seen == 10);

    echo.fail_at = 37;
    std::size_t delivered = 0;
    CHECK_THROWS_AS(d.run(numbered(100), [&](std::size_t i, Completion&&) {
        CHECK(i == delivered);
        ++delivered;
        return true;
    }),
                    TransportError);
    CHECK(delivered == 37);
}

TEST_CASE("mode names")
{
    CHECK(parse_mode("live") == Mode::live);
    CHECK(parse_mode("mock") == Mode::mock);
    CHECK_THROWS_AS(parse_mode("replay"), ConfigError);
    CHECK(parse_probe_kind("rating") == ProbeKind::rating);
}
