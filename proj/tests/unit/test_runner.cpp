#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "normprobe/errors.hpp"
#include "normprobe/fixtures.hpp"
#include "normprobe/mock.hpp"
#include "normprobe/report.hpp"
#include "normprobe/runner.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <regex>
#include <sstream>

using namespace normprobe;
using namespace normprobe::runner;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir()
    {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("normprobe_runner_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

HarnessConfig config_in(const TempDir& d)
{
    HarnessConfig c;
    c.runs_root = (d.path / "runs").string();
    return c;
}

gateway::MockResponder mock_for(const HarnessConfig& c) { return gateway::MockResponder(c.model.mock); }

std::vector<std::string> sorted_lines(const fs::path& run)
{
    std::ifstream in(run / records_file, std::ios::binary);
    std::vector<std::string> lines;
    for (std::string l; std::getline(in, l);)
        lines.push_back(l);
    std::sort(lines.begin(), lines.end());
    return lines;
}

std::string read_all(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<synth::ValueSample> printed_listing(const std::string& fixture)
{
    const auto& text = fixtures::get(fixture).content;
    std::regex re(R"((\d+):([A-D][+-]?))");
    std::vector<synth::ValueSample> out;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), re); it != std::sregex_iterator(); ++it)
        out.push_back({std::stoi((*it)[1]), synth::parse_grade((*it)[2].str())});
    return out;
}

std::string squeeze(std::string s)
{
    for (std::size_t p; (p = s.find("  ")) != std::string::npos;)
        s.erase(p, 1);
    while (!s.empty() && (s.back() == '\n' || s.back() == ' '))
        s.pop_back();
    while (!s.empty() && s.front() == ' ')
        s.erase(0, 1);
    return s;
}

NovelPlan one_cell_plan(std::size_t m)
{
    NovelPlan p;
    p.cells = {default_novel_cells().front()};
    p.m = m;
    return p;
}

// Fails with a transport error on one key, answers everything else like the mock.
class FlakyResponder final : public gateway::Responder {
public:
    FlakyResponder(gateway::MockModel m, std::string bad) : mock_(m), bad_(std::move(bad)) {}
    gateway::Completion complete(const gateway::Probe& p) override
    {
        if (p.key == bad_)
            throw TransportError("connection reset");
        return mock_.complete(p);
    }

private:
    gateway::MockResponder mock_;
    std::string bad_;
};

} // namespace

TEST_CASE("sample prompt reproduces the printed negative prompt exactly")
{
    NovelCell cell = default_novel_cells()[1];
    REQUIRE(cell.scheme.kind == synth::SchemeKind::negative);
    const auto listed = printed_listing("appendix-m-negative");
    REQUIRE(listed.size() == 100);
    CHECK(novel_sample_prompt(cell, listed) == fixtures::get("appendix-m-negative").content);
}

TEST_CASE("sample prompt matches the other printed prompts up to spacing")
{
    NovelCell cell;
    for (const auto& name : {"appendix-m-positive", "appendix-m-neutral"}) {
        const auto listed = printed_listing(name);
        CHECK(squeeze(novel_sample_prompt(cell, listed)) == squeeze(fixtures::get(name).content));
    }
}

TEST_CASE("ungraded prompts list bare values")
{
    NovelCell cell;
    cell.scheme = synth::GradeScheme::none();
    std::vector<synth::ValueSample> listed{{43, std::nullopt}, {35, std::nullopt}};
    const auto p = novel_sample_prompt(cell, listed);
    CHECK(p.find("Here are the glubbing hours of people: 43, 35, pick a sample number") != std::string::npos);
    CHECK(p.find("grade") == std::string::npos);
    CHECK(novel_average_prompt(cell, listed).find("what is the average number of glubbing hours?") !=
          std::string::npos);
}

TEST_CASE("variant instructions and renamed concepts")
{
    const auto cells = variant_cells();
    CHECK(cells.size() == 52);
    std::set<std::string> ids;
    for (const auto& c : cells)
        ids.insert(c.id);
    CHECK(ids.size() == cells.size());

    const auto it = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.id == "blorfing.positive"; });
    REQUIRE(it != cells.end());
    std::vector<synth::ValueSample> listed{{40, 4}};
    const auto p = novel_sample_prompt(*it, listed);
    CHECK(p.rfind("Suppose there is a hobby called blorfing. Here are the blorfing hours", 0) == 0);
    CHECK(p.find("glubbing") == std::string::npos);

    const auto ph = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.id == "phrasing-06.negative"; });
    REQUIRE(ph != cells.end());
    CHECK(novel_sample_prompt(*ph, listed).find("Make sure the sample follows the distribution. The value should be") !=
          std::string::npos);
}

TEST_CASE("sweep grid layout")
{
    const auto cells = sweep_cells();
    CHECK(cells.size() == 72);
    CHECK(cells.front().clamp.lo == 0);
    CHECK(cells.front().clamp.hi == 100);
    CHECK(cells.front().scheme.kind == synth::SchemeKind::tent);
    CHECK(cells.front().scheme.center == 15);
    CHECK(cells.back().scheme.center == 885);
    for (const auto& c : cells)
        CHECK_FALSE(c.ask_average);
}

TEST_CASE("existing prompts read as questions")
{
    const auto concepts = corpus::load_concepts(corpus::builtin);
    const auto tv = std::find_if(concepts.begin(), concepts.end(), [](const auto& c) { return c.id == "tv_hours_per_day"; });
    REQUIRE(tv != concepts.end());
    CHECK(existing_prompt(*tv, gateway::ProbeKind::ideal).rfind(
              "What is the ideal number of hours of TV for a person to watch in a day?", 0) == 0);
}

TEST_CASE("M = 1 gives exactly two records")
{
    TempDir d;
    auto c = config_in(d);
    auto mock = mock_for(c);
    const auto out = execute(plan_novel(one_cell_plan(1), c), c, mock);
    CHECK(out.planned == 2);
    CHECK(out.written == 2);
    CHECK(out.complete());
    const auto recs = read_records(out.dir);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].key == "uni-positive/r0000/sample");
    CHECK(recs[1].key == "uni-positive/r0000/average");
    CHECK(recs[0].meta["inputs"].size() == 100);
    CHECK(recs[0].parse.usable());
}

TEST_CASE("single sweep cell gives 100 sample records")
{
    TempDir d;
    auto c = config_in(d);
    auto mock = mock_for(c);
    NovelPlan p;
    p.cells = {sweep_cells()[3]};
    p.store_inputs = false;
    const auto out = execute(plan_novel(p, c, Experiment::mu_sweep), c, mock);
    const auto recs = read_records(out.dir);
    CHECK(recs.size() == 100);
    for (const auto& r : recs) {
        CHECK(r.kind == "sample");
        CHECK(r.meta.contains("input_mean"));
    }
}

TEST_CASE("repeats = 1 with one concept gives three records")
{
    TempDir d;
    auto c = config_in(d);
    const auto file = d.path / "one.jsonl";
    std::ofstream(file) << corpus::serialize_concepts({corpus::load_concepts(corpus::builtin).front()});
    c.corpus = file.string();
    c.repeats = 1;
    auto mock = mock_for(c);
    const auto out = execute(plan_existing(c), c, mock);
    const auto recs = read_records(out.dir);
    REQUIRE(recs.size() == 3);
    std::set<std::string> kinds;
    for (const auto& r : recs)
        kinds.insert(r.kind);
    CHECK(kinds == std::set<std::string>{"average", "ideal", "sample"});
}

TEST_CASE("replay runs have the planned arity")
{
    TempDir d;
    auto c = config_in(d);
    c.repeats = 2;
    auto mock = mock_for(c);
    CHECK(execute(plan_prototypes(c), c, mock).written == 48 * 5 * 2);
    CHECK(execute(plan_case_study(c), c, mock).written == 34 * 3);
}

TEST_CASE("interrupted and resumed run equals an uninterrupted one")
{
    TempDir a, b;
    auto ca = config_in(a);
    auto cb = config_in(b);
    auto mock = mock_for(ca);
    NovelPlan p;
    p.cells = default_novel_cells();
    p.m = 20;

    const auto full = execute(plan_novel(p, ca), ca, mock);
    REQUIRE(full.complete());

    cb.stop_after = full.planned / 2;
    const auto half = execute(plan_novel(p, cb), cb, mock);
    CHECK(half.run_id == full.run_id);
    CHECK(half.written == full.planned / 2);
    CHECK_FALSE(half.complete());

    cb.stop_after.reset();
    cb.run_id = half.run_id;
    const auto rest = resume(cb, mock);
    CHECK(rest.already_done == full.planned / 2);
    CHECK(rest.complete());
    CHECK(sorted_lines(full.dir) == sorted_lines(rest.dir));
}

TEST_CASE("rerunning a complete run writes nothing")
{
    TempDir d;
    auto c = config_in(d);
    auto mock = mock_for(c);
    const auto plan = plan_novel(one_cell_plan(3), c);
    execute(plan, c, mock);
    const auto again = execute(plan, c, mock);
    CHECK(again.written == 0);
    CHECK(again.already_done == 6);
}

TEST_CASE("concurrency does not change the records")
{
    TempDir a, b;
    auto ca = config_in(a);
    auto cb = config_in(b);
    ca.model.max_concurrency = 1;
    cb.model.max_concurrency = 8;
    auto mock = mock_for(ca);
    const auto ra = execute(plan_novel(one_cell_plan(30), ca), ca, mock);
    const auto rb = execute(plan_novel(one_cell_plan(30), cb), cb, mock);
    CHECK(ra.run_id == rb.run_id);
    CHECK(read_all(ra.dir / records_file) == read_all(rb.dir / records_file));
}

TEST_CASE("transport failure keeps earlier records and the run resumes")
{
    TempDir a, b;
    auto ca = config_in(a);
    auto cb = config_in(b);
    ca.model.max_concurrency = 1;
    cb.model.max_concurrency = 1;
    auto mock = mock_for(ca);
    const auto plan = plan_novel(one_cell_plan(10), ca);
    const auto full = execute(plan, ca, mock);

    FlakyResponder flaky(ca.model.mock, "uni-positive/r0004/sample");
    CHECK_THROWS_AS(execute(plan, cb, flaky), TransportError);
    const auto dir = run_dir(cb, derive_run_id(plan, cb));
    CHECK(read_records(dir).size() == 8);

    cb.run_id = derive_run_id(plan, cb);
    const auto rest = resume(cb, mock);
    CHECK(rest.complete());
    CHECK(sorted_lines(full.dir) == sorted_lines(dir));
}

TEST_CASE("torn final line is dropped on resume")
{
    TempDir d;
    auto c = config_in(d);
    auto mock = mock_for(c);
    const auto plan = plan_novel(one_cell_plan(4), c);
    c.stop_after = 3;
    const auto first = execute(plan, c, mock);
    std::ofstream(first.dir / records_file, std::ios::app | std::ios::binary) << "{\"run_id\":\"nov";
    CHECK(read_records(first.dir).size() == 3);
    c.stop_after.reset();
    const auto rest = execute(plan, c, mock);
    CHECK(rest.already_done == 3);
    CHECK(read_records(first.dir).size() == 8);
}

TEST_CASE("a different plan under an existing run id is refused")
{
    TempDir d;
    auto c = config_in(d);
    c.run_id = "fixed";
    auto mock = mock_for(c);
    execute(plan_novel(one_cell_plan(2), c), c, mock);
    CHECK_THROWS_AS(execute(plan_novel(one_cell_plan(3), c), c, mock), ConfigError);
    c.seed = 99;
    CHECK_THROWS_AS(execute(plan_novel(one_cell_plan(2), c), c, mock), ConfigError);
}

TEST_CASE("resume of an unknown run")
{
    TempDir d;
    auto c = config_in(d);
    c.run_id = "novel-000000000000";
    auto mock = mock_for(c);
    CHECK_THROWS_AS(resume(c, mock), RunNotFound);
}

TEST_CASE("manifest holds plan and config but no credentials")
{
    TempDir d;
    auto c = config_in(d);
    auto mock = mock_for(c);
    const auto out = execute(plan_novel(one_cell_plan(1), c), c, mock);
    const auto m = read_manifest(out.dir);
    CHECK(m["run_id"] == out.run_id);
    CHECK(m["experiment"] == "novel");
    CHECK(m["plan"]["cells"].size() == 1);
    for (const auto& [k, v] : m["config"].items()) {
        CHECK(std::find(config_keys().begin(), config_keys().end(), k) != config_keys().end());
        CHECK(k.find("key") == std::string::npos);
    }
    const auto back = config_from_json(m["config"]);
    CHECK(back.seed == c.seed);
    CHECK(back.model.temperature == c.model.temperature);
}

TEST_CASE("per-key seeds do not depend on the plan around them")
{
    HarnessConfig c;
    const auto small = plan_novel(one_cell_plan(2), c);
    NovelPlan big;
    big.cells = default_novel_cells();
    big.m = 2;
    const auto large = plan_novel(big, c);
    for (const auto& p : small.probes) {
        auto it = std::find_if(large.probes.begin(), large.probes.end(),
                               [&](const auto& q) { return q.probe.key == p.probe.key; });
        REQUIRE(it != large.probes.end());
        CHECK(it->probe.seed == p.probe.seed);
        CHECK(it->probe.prompt == p.probe.prompt);
    }
}

TEST_CASE("reuse_inputs draws one input list per cell")
{
    HarnessConfig c;
    auto p = one_cell_plan(3);
    p.reuse_inputs = true;
    const auto plan = plan_novel(p, c);
    CHECK(plan.probes[0].meta["inputs"] == plan.probes[2].meta["inputs"]);
    const auto fresh = plan_novel(one_cell_plan(3), c);
    CHECK(fresh.probes[0].meta["inputs"] != fresh.probes[2].meta["inputs"]);
}

TEST_CASE("plan json round-trips")
{
    NovelPlan p;
    p.cells = variant_cells();
    p.m = 7;
    const auto j = novel_plan_to_json(p);
    CHECK(novel_plan_to_json(novel_plan_from_json(j)) == j);
}

TEST_CASE("mock variant bank shifts every cell in the scheme's direction")
{
    TempDir d;
    auto c = config_in(d);
    auto mock = mock_for(c);
    NovelPlan p;
    p.cells = variant_cells();
    p.m = 100;
    p.store_inputs = false;
    const auto out = execute(plan_novel(p, c, Experiment::variant_bank), c, mock);
    const auto run = report::load_run(c.runs_root, out.run_id);
    for (const auto& s : report::analyze_novel(run)) {
        REQUIRE(s.mean_S);
        REQUIRE(s.mean_A);
        if (s.tags["valence"] == "positive")
            CHECK_MESSAGE(*s.mean_S > *s.mean_A, s.cell);
        else
            CHECK_MESSAGE(*s.mean_S < *s.mean_A, s.cell);
    }
}
