#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "normprobe/corpus.hpp"
#include "normprobe/errors.hpp"
#include "normprobe/fixtures.hpp"

#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <set>

using namespace normprobe;
using namespace normprobe::corpus;
namespace fs = std::filesystem;

namespace {

struct TempFile {
    fs::path path;
    explicit TempFile(const std::string& content)
    {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("normprobe_corpus_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::ofstream(path, std::ios::binary) << content;
    }
    ~TempFile() { fs::remove(path); }
};

std::string error_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("builtin concepts")
{
    auto cs = load_concepts(builtin);
    CHECK(cs.size() == 40);
    std::set<std::string> ids;
    for (const auto& c : cs) ids.insert(c.id);
    CHECK(ids.size() == cs.size());
    auto tv = std::find_if(cs.begin(), cs.end(), [](auto& c) { return c.id == "tv_hours_per_day"; });
    REQUIRE(tv != cs.end());
    CHECK(tv->prompt_sample == "NUMBER OF HOURS OF TV FOR A PERSON TO WATCH IN A DAY");
    CHECK(tv->prompt_average == "AVERAGE NUMBER OF HOURS OF TV A PERSON WATCHES IN A DAY");
    CHECK(tv->prompt_ideal == "IDEAL NUMBER OF HOURS OF TV FOR A PERSON TO WATCH IN A DAY");
    CHECK(tv->value_kind == extract::ValueKind::hours);
    CHECK(load_concepts(builtin) == cs);
    for (const auto& c : cs) {
        CHECK(c.mock_average.has_value());
        CHECK(c.mock_ideal.has_value());
    }
}

TEST_CASE("builtin round-trips byte for byte")
{
    CHECK(serialize_concepts(load_concepts(builtin)) == fixtures::get("concepts").content);
    CHECK(serialize_exemplars(load_exemplars(builtin)) == fixtures::get("exemplars").content);
    CHECK(serialize_symptom_batches(load_symptom_batches(builtin)) ==
          fixtures::get("symptom-batches").content);
}

TEST_CASE("builtin exemplars")
{
    auto ex = load_exemplars(builtin);
    CHECK(ex.size() == 48);
    CHECK(ex[0].category_id == 1);
    CHECK(ex[0].exemplar_id == 1);
    CHECK(ex[0].passage.rfind("A 30-year-old woman who basically knows", 0) == 0);
    CHECK(ex[0].category == "High-school teacher");
}

TEST_CASE("builtin symptom batches")
{
    auto b = load_symptom_batches(builtin);
    CHECK(b.size() == 34);
    CHECK(b[0].symptoms ==
          std::vector<std::string>{"Increased thirst", "Frequent urination", "Fatigue", "Blurred vision"});
    std::size_t repeated = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (b[i].symptoms == b[j].symptoms) ++repeated;
    CHECK(repeated == 1);
}

TEST_CASE("reference tables")
{
    CHECK(human_reference().size() == 39);
    CHECK(human_reference()[0].human_average == 3.38);
    CHECK(llm_reference().size() == 36);
    CHECK(prototype_ratings().size() == 48);
    CHECK(case_study_results().size() == 34);
}

TEST_CASE("empty and malformed files")
{
    TempFile empty("");
    CHECK_THROWS_AS(load_concepts(empty.path.string()), SchemaError);
    TempFile junk("{\"id\": \"a\"}\nnot json\n");
    CHECK(error_of([&] { load_concepts(junk.path.string()); }).find(":2: not a JSON object") !=
          std::string::npos);
    TempFile partial("{\"id\": \"a\"}\n");
    auto msg = error_of([&] { load_concepts(partial.path.string()); });
    CHECK(msg.find(":1:") != std::string::npos);
    CHECK(msg.find("missing field") != std::string::npos);
    CHECK_THROWS_AS(load_concepts("/nonexistent/normprobe/corpus.jsonl"), IoError);
}

TEST_CASE("concept schema checks")
{
    const std::string good =
        R"({"id":"a","domain":"technology","prompt_average":"AVG {unit}","prompt_ideal":"IDEAL","prompt_sample":"SAMPLE","unit":"u","value_kind":"count"})";
    CHECK(parse_concepts(good + "\n", "t").size() == 1);
    CHECK_THROWS_AS(parse_concepts(good + "\n" + good + "\n", "t"), SchemaError);
    auto same = R"({"id":"a","domain":"technology","prompt_average":"X","prompt_ideal":"X","prompt_sample":"S","unit":"u","value_kind":"count"})";
    CHECK_THROWS_AS(parse_concepts(same, "t"), SchemaError);
    auto domain = R"({"id":"a","domain":"sports","prompt_average":"A","prompt_ideal":"I","prompt_sample":"S","unit":"u","value_kind":"count"})";
    CHECK_THROWS_AS(parse_concepts(domain, "t"), SchemaError);
    auto unbound = R"({"id":"a","domain":"technology","prompt_average":"A {who}","prompt_ideal":"I","prompt_sample":"S","unit":"u","value_kind":"count"})";
    CHECK(error_of([&] { parse_concepts(unbound, "t"); }).find("who") != std::string::npos);
    auto kind = R"({"id":"a","domain":"technology","prompt_average":"A","prompt_ideal":"I","prompt_sample":"S","unit":"u","value_kind":"parsecs"})";
    CHECK_THROWS_AS(parse_concepts(kind, "t"), SchemaError);
    auto extra = R"({"id":"a","domain":"technology","prompt_average":"A","prompt_ideal":"I","prompt_sample":"S","unit":"u","value_kind":"count","api_key":"x"})";
    CHECK_THROWS_AS(parse_concepts(extra, "t"), SchemaError);
}

TEST_CASE("synthetic 500-row corpus round-trips")
{
    std::vector<ConceptSpec> specs;
    for (int i = 0; i < 500; ++i) {
        ConceptSpec c;
        c.id = "concept_" + std::to_string(i);
        c.domain = std::string(domain_tags[static_cast<std::size_t>(i) % domain_tags.size()]);
        c.prompt_average = "AVERAGE NUMBER OF THING " + std::to_string(i);
        c.prompt_ideal = "IDEAL NUMBER OF THING " + std::to_string(i);
        c.prompt_sample = "NUMBER OF THING " + std::to_string(i);
        c.unit = "things";
        c.value_kind = i % 7 == 0 ? extract::ValueKind::percentage : extract::ValueKind::count;
        if (i % 2) c.mock_average = i * 0.5;
        if (i % 3) c.mock_ideal = i * 0.25;
        specs.push_back(c);
    }
    auto text = serialize_concepts(specs);
    TempFile f(text);
    auto loaded = load_concepts(f.path.string());
    CHECK(loaded.size() == 500);
    CHECK(loaded == specs);
    CHECK(serialize_concepts(loaded) == text);
}

TEST_CASE("exemplar completeness and duplicates")
{
    auto ex = load_exemplars(builtin);
    std::vector<ExemplarSpec> no8;
    for (const auto& e : ex)
        if (e.category_id != 8) no8.push_back(e);
    auto msg = error_of([&] { parse_exemplars(serialize_exemplars(no8), "t"); });
    CHECK(msg.find("missing exemplars") != std::string::npos);
    CHECK(msg.find("(8, 1)") != std::string::npos);
    CHECK(msg.find("(8, 6)") != std::string::npos);
    auto dup = ex;
    dup.push_back(ex[3]);
    CHECK(error_of([&] { parse_exemplars(serialize_exemplars(dup), "t"); }).find("duplicate") !=
          std::string::npos);
}

TEST_CASE("symptom arity")
{
    CHECK_THROWS_AS(parse_symptom_batches(R"({"batch_id":1,"symptoms":["a","b","c"]})", "t"), SchemaError);
    CHECK(parse_symptom_batches(R"({"batch_id":1,"symptoms":["a","b","c","d"]})", "t").size() == 1);
}

TEST_CASE("render_prompt")
{
    CHECK(render_prompt("pick a sample number of {concept} hours", {{"concept", "glubbing"}}) ==
          "pick a sample number of glubbing hours");
    CHECK(render_prompt("no placeholders {} { x } {1}", {}) == "no placeholders {} { x } {1}");
    try {
        render_prompt("pick {concept}", {});
        FAIL("expected RenderError");
    } catch (const RenderError& e) {
        CHECK(e.placeholder() == "concept");
    }
}

TEST_CASE("fixture registry")
{
    CHECK(fixtures::get("appendix-m-positive").content.rfind("Suppose there is a hobby called glubbing.", 0) == 0);
    CHECK(error_of([] { fixtures::get("nope"); }).find("appendix-m-negative") != std::string::npos);
    std::set<std::string> names;
    for (const auto& f : fixtures::all()) names.insert(f.name);
    CHECK(names.size() == fixtures::all().size());
}
