#include "normprobe/corpus.hpp"

#include "normprobe/errors.hpp"
#include "normprobe/fixtures.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace normprobe::fixtures {

const Fixture& get(std::string_view name)
{
    for (const auto& f : all())
        if (f.name == name) return f;
    std::string known;
    for (const auto& f : all()) known += (known.empty() ? "" : ", ") + f.name;
    throw Error(fmt::format("unknown fixture '{}'; known: {}", name, known));
}

} // namespace normprobe::fixtures

namespace normprobe::corpus {

namespace {

using json = nlohmann::ordered_json;

struct Line {
    std::size_t number;
    json value;
};

std::vector<Line> parse_jsonl(std::string_view text, std::string_view origin)
{
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++number;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
        json v = json::parse(line, nullptr, false);
        if (v.is_discarded() || !v.is_object())
            throw SchemaError(fmt::format("{}:{}: not a JSON object", origin, number));
        out.push_back({number, std::move(v)});
    }
    if (out.empty()) throw SchemaError(fmt::format("{}: no records", origin));
    return out;
}

std::string read_file(std::string_view path)
{
    std::ifstream in{std::string(path), std::ios::binary};
    if (!in) throw IoError(fmt::format("cannot read '{}'", path));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Row {
public:
    Row(const Line& l, std::string_view origin) : line_(l), origin_(origin) {}

    [[noreturn]] void fail(std::string_view what) const
    {
        throw SchemaError(fmt::format("{}:{}: {}", origin_, line_.number, what));
    }

    void allow(std::initializer_list<std::string_view> keys) const
    {
        for (const auto& [k, _] : line_.value.items())
            if (std::find(keys.begin(), keys.end(), k) == keys.end())
                fail(fmt::format("unknown field '{}'", k));
    }

    const json& field(std::string_view key) const
    {
        auto it = line_.value.find(std::string(key));
        if (it == line_.value.end()) fail(fmt::format("missing field '{}'", key));
        return *it;
    }

    bool has(std::string_view key) const { return line_.value.contains(std::string(key)); }

    std::string str(std::string_view key) const
    {
        const auto& v = field(key);
        if (!v.is_string()) fail(fmt::format("field '{}' must be a string", key));
        return v.get<std::string>();
    }

    double num(std::string_view key) const
    {
        const auto& v = field(key);
        if (!v.is_number()) fail(fmt::format("field '{}' must be a number", key));
        return v.get<double>();
    }

    int integer(std::string_view key) const
    {
        const auto& v = field(key);
        if (!v.is_number_integer()) fail(fmt::format("field '{}' must be an integer", key));
        return v.get<int>();
    }

    bool boolean(std::string_view key) const
    {
        const auto& v = field(key);
        if (!v.is_boolean()) fail(fmt::format("field '{}' must be a boolean", key));
        return v.get<bool>();
    }

private:
    const Line& line_;
    std::string_view origin_;
};

std::string text_of(std::string_view source, std::string_view fixture_name)
{
    if (source == builtin) return fixtures::get(fixture_name).content;
    return read_file(source);
}

std::string origin_of(std::string_view source, std::string_view fixture_name)
{
    return source == builtin ? fmt::format("builtin:{}", fixture_name) : std::string(source);
}

bool is_identifier_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_identifier_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string join_lines(const std::vector<json>& rows)
{
    std::string out;
    for (const auto& r : rows) {
        out += r.dump(-1, ' ', false, json::error_handler_t::strict);
        out += '\n';
    }
    return out;
}

} // namespace

std::string render_prompt(std::string_view tmpl, const Bindings& bindings)
{
    std::string out;
    out.reserve(tmpl.size());
    std::size_t i = 0;
    while (i < tmpl.size()) {
        char c = tmpl[i];
        if (c == '{' && i + 1 < tmpl.size() && is_identifier_start(tmpl[i + 1])) {
            std::size_t j = i + 1;
            while (j < tmpl.size() && is_identifier_char(tmpl[j])) ++j;
            if (j < tmpl.size() && tmpl[j] == '}') {
                auto name = tmpl.substr(i + 1, j - i - 1);
                auto it = bindings.find(name);
                if (it == bindings.end()) throw RenderError(std::string(name));
                out += it->second;
                i = j + 1;
                continue;
            }
        }
        out += c;
        ++i;
    }
    return out;
}

std::vector<ConceptSpec> parse_concepts(std::string_view text, std::string_view origin)
{
    std::vector<ConceptSpec> out;
    std::set<std::string> ids;
    for (const auto& line : parse_jsonl(text, origin)) {
        Row r(line, origin);
        r.allow({"id", "domain", "prompt_average", "prompt_ideal", "prompt_sample", "unit",
                 "value_kind", "mock_average", "mock_ideal"});
        ConceptSpec c;
        c.id = r.str("id");
        if (c.id.empty()) r.fail("empty id");
        c.domain = r.str("domain");
        if (std::find(domain_tags.begin(), domain_tags.end(), c.domain) == domain_tags.end())
            r.fail(fmt::format("unknown domain '{}'", c.domain));
        c.prompt_average = r.str("prompt_average");
        c.prompt_ideal = r.str("prompt_ideal");
        c.prompt_sample = r.str("prompt_sample");
        c.unit = r.str("unit");
        try {
            c.value_kind = extract::parse_value_kind(r.str("value_kind"));
        } catch (const SchemaError& e) {
            r.fail(e.what());
        }
        if (r.has("mock_average")) c.mock_average = r.num("mock_average");
        if (r.has("mock_ideal")) c.mock_ideal = r.num("mock_ideal");

        if (c.prompt_average == c.prompt_ideal || c.prompt_average == c.prompt_sample ||
            c.prompt_ideal == c.prompt_sample)
            r.fail(fmt::format("concept '{}': the three prompt templates must differ", c.id));
        Bindings b{{"id", c.id}, {"unit", c.unit}, {"domain", c.domain}};
        for (const auto* t : {&c.prompt_average, &c.prompt_ideal, &c.prompt_sample}) {
            std::string rendered;
            try {
                rendered = render_prompt(*t, b);
            } catch (const RenderError& e) {
                r.fail(fmt::format("concept '{}': {}", c.id, e.what()));
            }
            if (rendered.find_first_not_of(" \t\n") == std::string::npos)
                r.fail(fmt::format("concept '{}': empty prompt", c.id));
        }
        if (!ids.insert(c.id).second) r.fail(fmt::format("duplicate id '{}'", c.id));
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<ExemplarSpec> parse_exemplars(std::string_view text, std::string_view origin)
{
    std::vector<ExemplarSpec> out;
    std::set<std::pair<int, int>> keys;
    for (const auto& line : parse_jsonl(text, origin)) {
        Row r(line, origin);
        r.allow({"category_id", "exemplar_id", "category", "passage"});
        ExemplarSpec e;
        e.category_id = r.integer("category_id");
        e.exemplar_id = r.integer("exemplar_id");
        if (e.category_id < 1 || e.category_id > 8) r.fail("category_id must be in 1..8");
        if (e.exemplar_id < 1 || e.exemplar_id > 6) r.fail("exemplar_id must be in 1..6");
        if (r.has("category")) e.category = r.str("category");
        e.passage = r.str("passage");
        if (e.passage.empty()) r.fail("empty passage");
        if (!keys.insert({e.category_id, e.exemplar_id}).second)
            r.fail(fmt::format("duplicate exemplar ({}, {})", e.category_id, e.exemplar_id));
        out.push_back(std::move(e));
    }
    std::vector<std::string> missing;
    for (int c = 1; c <= 8; ++c)
        for (int x = 1; x <= 6; ++x)
            if (!keys.count({c, x})) missing.push_back(fmt::format("({}, {})", c, x));
    if (!missing.empty()) {
        std::string list;
        for (const auto& m : missing) list += (list.empty() ? "" : " ") + m;
        throw SchemaError(fmt::format("{}: missing exemplars {}", origin, list));
    }
    return out;
}

std::vector<SymptomBatch> parse_symptom_batches(std::string_view text, std::string_view origin)
{
    std::vector<SymptomBatch> out;
    std::set<int> ids;
    for (const auto& line : parse_jsonl(text, origin)) {
        Row r(line, origin);
        r.allow({"batch_id", "symptoms"});
        SymptomBatch b;
        b.batch_id = r.integer("batch_id");
        const auto& s = r.field("symptoms");
        if (!s.is_array()) r.fail("field 'symptoms' must be an array");
        for (const auto& item : s) {
            if (!item.is_string()) r.fail("symptoms must be strings");
            b.symptoms.push_back(item.get<std::string>());
        }
        if (b.symptoms.size() != 4)
            r.fail(fmt::format("batch {} has {} symptoms, expected 4", b.batch_id, b.symptoms.size()));
        if (!ids.insert(b.batch_id).second) r.fail(fmt::format("duplicate batch_id {}", b.batch_id));
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<ConceptSpec> load_concepts(std::string_view source)
{
    return parse_concepts(text_of(source, "concepts"), origin_of(source, "concepts"));
}

std::vector<ExemplarSpec> load_exemplars(std::string_view source)
{
    return parse_exemplars(text_of(source, "exemplars"), origin_of(source, "exemplars"));
}

std::vector<SymptomBatch> load_symptom_batches(std::string_view source)
{
    return parse_symptom_batches(text_of(source, "symptom-batches"),
                                 origin_of(source, "symptom-batches"));
}

std::vector<HumanReferenceRow> human_reference()
{
    std::vector<HumanReferenceRow> out;
    const std::string origin = "builtin:human-existing";
    for (const auto& line : parse_jsonl(fixtures::get("human-existing").content, origin)) {
        Row r(line, origin);
        out.push_back({r.str("concept_id"), r.str("label"), r.num("human_average"),
                       r.num("human_ideal"), r.num("human_sample"), "human-existing"});
    }
    return out;
}

std::vector<LlmReferenceRow> llm_reference()
{
    std::vector<LlmReferenceRow> out;
    const std::string origin = "builtin:llm-existing";
    for (const auto& line : parse_jsonl(fixtures::get("llm-existing").content, origin)) {
        Row r(line, origin);
        out.push_back({r.str("concept_id"), r.str("label"), r.num("average"), r.num("ideal"),
                       r.num("sample"), r.boolean("ideal_side_marked"), "llm-existing"});
    }
    return out;
}

std::vector<PrototypeRatingRow> prototype_ratings()
{
    std::vector<PrototypeRatingRow> out;
    const std::string origin = "builtin:prototype-ratings";
    for (const auto& line : parse_jsonl(fixtures::get("prototype-ratings").content, origin)) {
        Row r(line, origin);
        out.push_back({r.integer("category_id"), r.integer("exemplar_id"), r.num("average"),
                       r.num("ideal"), r.num("good_example"), r.num("paradigm_example"),
                       r.num("prototypical_example"), r.num("composite")});
    }
    return out;
}

std::vector<CaseStudyRow> case_study_results()
{
    std::vector<CaseStudyRow> out;
    const std::string origin = "builtin:case-study-results";
    for (const auto& line : parse_jsonl(fixtures::get("case-study-results").content, origin)) {
        Row r(line, origin);
        out.push_back({r.integer("batch_id"), r.num("average"), r.num("ideal"), r.num("sample")});
    }
    return out;
}

std::string serialize_concepts(const std::vector<ConceptSpec>& specs)
{
    std::vector<json> rows;
    for (const auto& c : specs) {
        json j;
        j["id"] = c.id;
        j["domain"] = c.domain;
        j["prompt_average"] = c.prompt_average;
        j["prompt_ideal"] = c.prompt_ideal;
        j["prompt_sample"] = c.prompt_sample;
        j["unit"] = c.unit;
        j["value_kind"] = std::string(extract::to_string(c.value_kind));
        if (c.mock_average) j["mock_average"] = *c.mock_average;
        if (c.mock_ideal) j["mock_ideal"] = *c.mock_ideal;
        rows.push_back(std::move(j));
    }
    return join_lines(rows);
}

std::string serialize_exemplars(const std::vector<ExemplarSpec>& specs)
{
    std::vector<json> rows;
    for (const auto& e : specs) {
        json j;
        j["category_id"] = e.category_id;
        j["exemplar_id"] = e.exemplar_id;
        j["passage"] = e.passage;
        if (!e.category.empty()) j["category"] = e.category;
        rows.push_back(std::move(j));
    }
    return join_lines(rows);
}

std::string serialize_symptom_batches(const std::vector<SymptomBatch>& batches)
{
    std::vector<json> rows;
    for (const auto& b : batches) {
        json j;
        j["batch_id"] = b.batch_id;
        j["symptoms"] = b.symptoms;
        rows.push_back(std::move(j));
    }
    return join_lines(rows);
}

} // namespace normprobe::corpus
