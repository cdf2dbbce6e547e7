#include "normprobe/runner.hpp"

#include "normprobe/errors.hpp"
#include "normprobe/fixtures.hpp"
#include "normprobe/seeds.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <ctime>
#include <map>
#include <set>
#include <sstream>

namespace normprobe::runner {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using gateway::ProbeKind;

namespace {

std::string fill(std::string_view tmpl, const NovelCell& cell)
{
    corpus::Bindings b{{"concept", cell.concept_name},
                       {"lo", std::to_string(cell.clamp.lo)},
                       {"hi", std::to_string(cell.clamp.hi)}};
    return corpus::render_prompt(tmpl, b);
}

std::string listing(const NovelCell& cell, std::span<const synth::ValueSample> listed)
{
    const bool graded = !listed.empty() && listed.front().grade.has_value();
    std::string out = fill(cell.lead.empty() ? default_lead : std::string_view(cell.lead), cell);
    out += fill(graded ? " Here are the {concept} hours of people and a grade associated, A+ being the highest "
                         "grade and D- being the lowest grade: "
                       : " Here are the {concept} hours of people: ",
                cell);
    out += synth::format_pairs(listed);
    out += ", ";
    return out;
}

std::string with_stop(std::string s)
{
    while (!s.empty() && s.back() == ' ')
        s.pop_back();
    if (!s.empty() && s.back() != '.' && s.back() != '?' && s.back() != '!')
        s += '.';
    return s;
}

std::string timestamp_now()
{
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

constexpr std::string_view epoch = "1970-01-01T00:00:00Z";

std::string rep_tag(std::size_t r, std::size_t m)
{
    const int width = std::max<int>(4, static_cast<int>(std::to_string(m == 0 ? 0 : m - 1).size()));
    return fmt::format("r{:0{}}", r, width);
}

json dist_json(const gateway::Distribution& d)
{
    json j;
    j["bimodal"] = d.bimodal;
    j["mu"] = d.mu;
    j["mu2"] = d.mu2;
    j["sigma"] = d.sigma;
    return j;
}

json scheme_json(const synth::GradeScheme& s)
{
    json j;
    j["kind"] = std::string(synth::to_string(s.kind));
    j["center"] = s.center;
    j["width"] = s.width;
    j["seed"] = s.seed;
    return j;
}

NovelCell make_cell(std::string id, synth::GradeScheme scheme, json tags)
{
    NovelCell c;
    c.id = std::move(id);
    c.scheme = scheme;
    c.tags = std::move(tags);
    return c;
}

synth::GradeScheme scheme_for(std::string_view valence)
{
    return valence == "positive" ? synth::GradeScheme::positive() : synth::GradeScheme::negative();
}

std::string sentence_phrase(std::string_view upper)
{
    static const std::set<std::string, std::less<>> keep{"TV"};
    std::string out;
    std::size_t i = 0;
    while (i < upper.size()) {
        std::size_t j = i;
        while (j < upper.size() && std::isalnum(static_cast<unsigned char>(upper[j])))
            ++j;
        if (j == i) {
            out += upper[i++];
            continue;
        }
        const auto word = upper.substr(i, j - i);
        if (keep.count(word)) {
            out += word;
        } else {
            for (char ch : word)
                out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        }
        i = j;
    }
    return out;
}

std::string source_sha(std::string_view serialized) { return sha256_hex(serialized); }

void check_source(const json& params, std::string_view serialized)
{
    if (params.contains("sha256") && params["sha256"].get<std::string>() != source_sha(serialized))
        throw ConfigError(fmt::format("input '{}' changed since the run started",
                                      params.value("source", std::string("?"))));
}

PlannedProbe make_probe(std::string key, ProbeKind kind, std::string prompt, gateway::ProbeContext ctx,
                        const HarnessConfig& config, extract::ValueKind vk, json meta)
{
    PlannedProbe p;
    p.probe.seed = derive_seed(config.seed, key);
    p.probe.key = std::move(key);
    p.probe.kind = kind;
    p.probe.prompt = std::move(prompt);
    p.probe.context = std::move(ctx);
    p.value_kind = vk;
    p.meta = std::move(meta);
    return p;
}

std::vector<std::string> corpus_lines(std::string_view text)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);)
        if (!line.empty())
            out.push_back(line);
    return out;
}

bool mock_mode(const HarnessConfig& c) { return c.model.mode == gateway::Mode::mock; }

} // namespace

std::string novel_sample_prompt(const NovelCell& cell, std::span<const synth::ValueSample> listed)
{
    std::string instr = cell.instruction.empty() ? std::string(default_instruction) : with_stop(cell.instruction);
    return listing(cell, listed) + fill(instr, cell) + " " + fill(answer_format, cell);
}

std::string novel_average_prompt(const NovelCell& cell, std::span<const synth::ValueSample> listed)
{
    return listing(cell, listed) +
           fill("what is the average number of {concept} hours? Print only the number and not the complete sentence.",
                cell);
}

std::vector<NovelCell> default_novel_cells()
{
    std::vector<NovelCell> out;
    for (const bool bimodal : {false, true}) {
        for (const std::string_view valence : {"positive", "negative", "control"}) {
            auto scheme = valence == "control" ? synth::GradeScheme::none() : scheme_for(valence);
            json tags;
            tags["modality"] = bimodal ? "bimodal" : "unimodal";
            tags["valence"] = std::string(valence);
            auto c = make_cell(fmt::format("{}-{}", bimodal ? "bi" : "uni", valence), scheme, tags);
            if (bimodal)
                c.dist = {true, 35.0, 65.0, 5.0};
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<NovelCell> sweep_cells()
{
    std::vector<NovelCell> out;
    for (int mu = 45; mu <= 845; mu += 100) {
        for (int off = -30; off <= 40; off += 10) {
            json tags;
            tags["c_mu"] = mu;
            tags["peak_offset"] = off;
            auto c = make_cell(fmt::format("mu{:03}-peak{:+03}", mu, off), synth::GradeScheme::tent(mu + off, 5), tags);
            c.dist.mu = mu;
            c.clamp = {mu - 45, mu + 55};
            c.ask_average = false;
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<NovelCell> variant_cells()
{
    std::vector<NovelCell> out;
    auto text_with_concept = [](std::string t) {
        for (std::size_t p; (p = t.find("glubbing")) != std::string::npos;)
            t.replace(p, 8, "{concept}");
        return t;
    };
    for (const auto& line : corpus_lines(fixtures::get("sample-prompt-variants").content)) {
        const auto j = json::parse(line);
        const auto id = j["id"].get<std::string>();
        for (const std::string_view valence : {"positive", "negative"}) {
            if (j.contains("debias") && j["debias"].get<std::string>() != valence)
                continue;
            json tags;
            tags["group"] = "sample-prompt";
            tags["variant"] = id;
            tags["valence"] = std::string(valence);
            auto c = make_cell(fmt::format("{}.{}", id, valence), scheme_for(valence), tags);
            c.instruction = text_with_concept(j["text"].get<std::string>());
            out.push_back(std::move(c));
        }
    }
    for (const auto& line : corpus_lines(fixtures::get("description-variants").content)) {
        const auto j = json::parse(line);
        const auto id = j["id"].get<std::string>();
        for (const std::string_view valence : {"positive", "negative"}) {
            json tags;
            tags["group"] = "description";
            tags["variant"] = id;
            tags["valence"] = std::string(valence);
            auto c = make_cell(fmt::format("{}.{}", id, valence), scheme_for(valence), tags);
            const auto text = text_with_concept(j[std::string(valence)]["text"].get<std::string>());
            c.lead = valence == "positive" ? with_stop(text) : std::string(default_lead) + " " + with_stop(text);
            out.push_back(std::move(c));
        }
    }
    for (const auto& line : corpus_lines(fixtures::get("concept-renames").content)) {
        const auto name = json::parse(line)["name"].get<std::string>();
        std::string lowered;
        for (char ch : name)
            lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        for (const std::string_view valence : {"positive", "negative"}) {
            json tags;
            tags["group"] = "rename";
            tags["variant"] = name;
            tags["valence"] = std::string(valence);
            auto c = make_cell(fmt::format("{}.{}", lowered, valence), scheme_for(valence), tags);
            c.concept_name = lowered;
            out.push_back(std::move(c));
        }
    }
    return out;
}


json novel_plan_to_json(const NovelPlan& plan)
{
    json cells = json::array();
    for (const auto& c : plan.cells) {
        json j;
        j["id"] = c.id;
        j["dist"] = dist_json(c.dist);
        j["scheme"] = scheme_json(c.scheme);
        j["clamp"] = json::array({c.clamp.lo, c.clamp.hi});
        j["concept"] = c.concept_name;
        j["lead"] = c.lead;
        j["instruction"] = c.instruction;
        j["ask_average"] = c.ask_average;
        j["tags"] = c.tags;
        cells.push_back(std::move(j));
    }
    json j;
    j["n"] = plan.n;
    j["m"] = plan.m;
    j["reuse_inputs"] = plan.reuse_inputs;
    j["store_inputs"] = plan.store_inputs;
    j["cells"] = std::move(cells);
    return j;
}

NovelPlan novel_plan_from_json(const json& j)
{
    try {
        NovelPlan p;
        p.n = j.at("n").get<std::size_t>();
        p.m = j.at("m").get<std::size_t>();
        p.reuse_inputs = j.at("reuse_inputs").get<bool>();
        p.store_inputs = j.at("store_inputs").get<bool>();
        for (const auto& cj : j.at("cells")) {
            NovelCell c;
            c.id = cj.at("id").get<std::string>();
            const auto& d = cj.at("dist");
            c.dist = {d.at("bimodal").get<bool>(), d.at("mu").get<double>(), d.at("mu2").get<double>(),
                      d.at("sigma").get<double>()};
            const auto& s = cj.at("scheme");
            c.scheme.kind = synth::parse_scheme_kind(s.at("kind").get<std::string>());
            c.scheme.center = s.at("center").get<int>();
            c.scheme.width = s.at("width").get<int>();
            c.scheme.seed = s.at("seed").get<std::uint64_t>();
            c.clamp = {cj.at("clamp").at(0).get<int>(), cj.at("clamp").at(1).get<int>()};
            c.concept_name = cj.at("concept").get<std::string>();
            c.lead = cj.at("lead").get<std::string>();
            c.instruction = cj.at("instruction").get<std::string>();
            c.ask_average = cj.at("ask_average").get<bool>();
            c.tags = cj.at("tags");
            p.cells.push_back(std::move(c));
        }
        return p;
    } catch (const json::exception& e) {
        throw SchemaError(fmt::format("bad novel plan: {}", e.what()));
    }
}

std::string existing_prompt(const corpus::ConceptSpec& c, ProbeKind kind)
{
    const auto& tmpl = kind == ProbeKind::average ? c.prompt_average
                       : kind == ProbeKind::ideal ? c.prompt_ideal
                                                  : c.prompt_sample;
    const corpus::Bindings b{{"id", c.id}, {"unit", c.unit}, {"domain", c.domain}};
    const auto phrase = sentence_phrase(corpus::render_prompt(tmpl, b));
    return fmt::format("What is the {}? Give the answer in {}. Print only the number and not the complete sentence.",
                       phrase, c.unit);
}

std::string rating_prompt(const corpus::ExemplarSpec& e, std::string_view dimension)
{
    std::string_view ask;
    if (dimension == "average")
        ask = "how average is this {category}? 0 means not at all average and 7 means completely average.";
    else if (dimension == "ideal")
        ask = "how ideal is this {category}? 0 means not at all ideal and 7 means completely ideal.";
    else if (dimension == "good_example")
        ask = "how good an example of a {category} is this? 0 means not at all a good example and 7 means "
              "completely a good example.";
    else if (dimension == "paradigm_example")
        ask = "how paradigmatic an example of a {category} is this? 0 means not at all a paradigmatic example and "
              "7 means completely a paradigmatic example.";
    else if (dimension == "prototypical_example")
        ask = "how prototypical an example of a {category} is this? 0 means not at all a prototypical example and "
              "7 means completely a prototypical example.";
    else
        throw ParameterError(fmt::format("unknown rating dimension '{}'", dimension));
    std::string category;
    for (char ch : e.category)
        category += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    const corpus::Bindings b{{"category", category}};
    return fmt::format("Consider the following {}: \"{}\". On a scale from 0 to 7, {} Print only the number and not "
                       "the complete sentence.",
                       category, e.passage, corpus::render_prompt(ask, b));
}

std::string case_study_prompt(const corpus::SymptomBatch& b, ProbeKind kind)
{
    std::string list;
    for (std::size_t i = 0; i < b.symptoms.size(); ++i) {
        if (i)
            list += ", ";
        list += b.symptoms[i];
    }
    std::string_view ask;
    switch (kind) {
    case ProbeKind::sample: ask = "How many weeks should this patient take to recover before being discharged?"; break;
    case ProbeKind::average: ask = "What is the average recovery time in weeks for a patient with these symptoms?"; break;
    case ProbeKind::ideal: ask = "What is the ideal recovery time in weeks for a patient with these symptoms?"; break;
    default: throw ParameterError("case-study probes are sample, average or ideal");
    }
    return fmt::format("You are a doctor. A patient has the following symptoms: {}. {} Print only the number of "
                       "weeks and not the complete sentence.",
                       list, ask);
}

RunPlan plan_novel(const NovelPlan& plan, const HarnessConfig& config, Experiment experiment)
{
    if (plan.cells.empty() || plan.n == 0 || plan.m == 0)
        throw ParameterError("novel plan needs cells, n >= 1 and m >= 1");
    std::set<std::string> ids;
    for (const auto& c : plan.cells)
        if (!ids.insert(c.id).second)
            throw ParameterError(fmt::format("duplicate cell id '{}'", c.id));

    RunPlan out;
    out.experiment = experiment;
    out.params = novel_plan_to_json(plan);
    for (const auto& cell : plan.cells) {
        for (std::size_t r = 0; r < plan.m; ++r) {
            const auto prefix = fmt::format("{}/{}", cell.id, rep_tag(r, plan.m));
            const auto in_seed =
                derive_seed(config.seed, plan.reuse_inputs ? cell.id + "/inputs" : prefix + "/inputs");
            const auto drawn =
                cell.dist.bimodal
                    ? synth::sample_bimodal(cell.dist.mu, cell.dist.mu2, cell.dist.sigma, plan.n, in_seed, cell.clamp)
                    : synth::sample_unimodal(cell.dist.mu, cell.dist.sigma, plan.n, in_seed, cell.clamp);
            const auto values = synth::values_of(drawn);
            const auto listed = synth::assign_grades(values, cell.scheme);

            gateway::NovelContext ctx{cell.dist, cell.scheme, cell.clamp, listed};
            json meta;
            meta["cell"] = cell.id;
            meta["rep"] = r;
            if (plan.store_inputs) {
                meta["inputs"] = values;
            } else {
                double sum = 0;
                for (int v : values)
                    sum += v;
                meta["input_mean"] = sum / static_cast<double>(values.size());
            }
            out.probes.push_back(make_probe(prefix + "/sample", ProbeKind::sample, novel_sample_prompt(cell, listed),
                                            ctx, config, extract::ValueKind::hours, meta));
            if (cell.ask_average) {
                json ameta;
                ameta["cell"] = cell.id;
                ameta["rep"] = r;
                out.probes.push_back(make_probe(prefix + "/average", ProbeKind::average,
                                                novel_average_prompt(cell, listed), std::move(ctx), config,
                                                extract::ValueKind::hours, ameta));
            }
        }
    }
    return out;
}

RunPlan plan_existing(const HarnessConfig& config)
{
    const auto concepts = corpus::load_concepts(config.corpus);
    RunPlan out;
    out.experiment = Experiment::existing;
    out.params["source"] = config.corpus;
    out.params["sha256"] = source_sha(corpus::serialize_concepts(concepts));
    const auto reps = static_cast<std::size_t>(config.repeats);
    for (const auto& c : concepts) {
        gateway::ProbeContext ctx;
        if (mock_mode(config)) {
            if (!c.mock_average || !c.mock_ideal)
                throw ConfigError(fmt::format("concept '{}' has no mock_average/mock_ideal; mock mode needs both", c.id));
            ctx = gateway::ConceptContext{*c.mock_average, *c.mock_ideal, c.value_kind};
        }
        for (std::size_t r = 0; r < reps; ++r) {
            for (const auto kind : {ProbeKind::average, ProbeKind::ideal, ProbeKind::sample}) {
                json meta;
                meta["concept"] = c.id;
                meta["rep"] = r;
                out.probes.push_back(make_probe(
                    fmt::format("{}/{}/{}", c.id, rep_tag(r, reps), gateway::to_string(kind)), kind,
                    existing_prompt(c, kind), ctx, config, c.value_kind, meta));
            }
        }
    }
    return out;
}

RunPlan plan_prototypes(const HarnessConfig& config)
{
    const auto exemplars = corpus::load_exemplars(config.exemplars);
    std::map<std::pair<int, int>, corpus::PrototypeRatingRow> replay;
    for (const auto& r : corpus::prototype_ratings())
        replay[{r.category_id, r.exemplar_id}] = r;

    RunPlan out;
    out.experiment = Experiment::prototype;
    out.params["source"] = config.exemplars;
    out.params["sha256"] = source_sha(corpus::serialize_exemplars(exemplars));
    const auto reps = static_cast<std::size_t>(config.repeats);
    for (const auto& e : exemplars) {
        const corpus::PrototypeRatingRow* row = nullptr;
        if (mock_mode(config)) {
            auto it = replay.find({e.category_id, e.exemplar_id});
            if (it == replay.end())
                throw ConfigError(fmt::format("no replay ratings for exemplar ({}, {}) in mock mode", e.category_id,
                                              e.exemplar_id));
            row = &it->second;
        }
        for (std::size_t r = 0; r < reps; ++r) {
            for (const auto dim : rating_dimensions) {
                gateway::ProbeContext ctx;
                if (row) {
                    const double v = dim == "average"        ? row->average
                                     : dim == "ideal"        ? row->ideal
                                     : dim == "good_example" ? row->good_example
                                     : dim == "paradigm_example" ? row->paradigm_example
                                                                 : row->prototypical_example;
                    ctx = gateway::FixedContext{extract::format_value(v)};
                }
                json meta;
                meta["category_id"] = e.category_id;
                meta["exemplar_id"] = e.exemplar_id;
                meta["category"] = e.category;
                meta["dimension"] = std::string(dim);
                meta["rep"] = r;
                auto p = make_probe(fmt::format("c{}e{}/{}/{}", e.category_id, e.exemplar_id, rep_tag(r, reps), dim),
                                    ProbeKind::rating, rating_prompt(e, dim), std::move(ctx), config,
                                    extract::ValueKind::count, meta);
                p.rating = true;
                out.probes.push_back(std::move(p));
            }
        }
    }
    return out;
}

RunPlan plan_case_study(const HarnessConfig& config)
{
    const auto batches = corpus::load_symptom_batches(config.symptoms);
    std::map<int, corpus::CaseStudyRow> replay;
    for (const auto& r : corpus::case_study_results())
        replay[r.batch_id] = r;

    RunPlan out;
    out.experiment = Experiment::case_study;
    out.params["source"] = config.symptoms;
    out.params["sha256"] = source_sha(corpus::serialize_symptom_batches(batches));
    const auto reps = static_cast<std::size_t>(config.case_repeats);
    for (const auto& b : batches) {
        const corpus::CaseStudyRow* row = nullptr;
        if (mock_mode(config)) {
            auto it = replay.find(b.batch_id);
            if (it == replay.end())
                throw ConfigError(fmt::format("no replay answers for symptom batch {} in mock mode", b.batch_id));
            row = &it->second;
        }
        for (std::size_t r = 0; r < reps; ++r) {
            for (const auto kind : {ProbeKind::sample, ProbeKind::average, ProbeKind::ideal}) {
                gateway::ProbeContext ctx;
                if (row) {
                    const double v = kind == ProbeKind::sample    ? row->sample
                                     : kind == ProbeKind::average ? row->average
                                                                  : row->ideal;
                    ctx = gateway::FixedContext{extract::format_value(v)};
                }
                json meta;
                meta["batch_id"] = b.batch_id;
                meta["rep"] = r;
                out.probes.push_back(make_probe(
                    fmt::format("b{:02}/{}/{}", b.batch_id, rep_tag(r, reps), gateway::to_string(kind)), kind,
                    case_study_prompt(b, kind), std::move(ctx), config, extract::ValueKind::weeks, meta));
            }
        }
    }
    return out;
}

RunPlan build_plan(Experiment experiment, const json& params, const HarnessConfig& config)
{
    switch (experiment) {
    case Experiment::novel:
    case Experiment::mu_sweep:
    case Experiment::variant_bank:
        return plan_novel(novel_plan_from_json(params), config, experiment);
    case Experiment::existing: {
        auto c = config;
        c.corpus = params.at("source").get<std::string>();
        auto plan = plan_existing(c);
        check_source(params, corpus::serialize_concepts(corpus::load_concepts(c.corpus)));
        return plan;
    }
    case Experiment::prototype: {
        auto c = config;
        c.exemplars = params.at("source").get<std::string>();
        auto plan = plan_prototypes(c);
        check_source(params, corpus::serialize_exemplars(corpus::load_exemplars(c.exemplars)));
        return plan;
    }
    case Experiment::case_study: {
        auto c = config;
        c.symptoms = params.at("source").get<std::string>();
        auto plan = plan_case_study(c);
        check_source(params, corpus::serialize_symptom_batches(corpus::load_symptom_batches(c.symptoms)));
        return plan;
    }
    }
    throw ParameterError("unknown experiment");
}

namespace {

// settings that change what a run produces
json identity_config(const HarnessConfig& config)
{
    auto j = config_to_json(config);
    for (const char* k : {"runs_root", "reports_root", "max_concurrency", "max_attempts", "backoff_base",
                          "backoff_max", "timeout", "corpus", "exemplars", "symptoms"})
        j.erase(k);
    return j;
}

json manifest_for(const std::string& run_id, const RunPlan& plan, const HarnessConfig& config)
{
    json m;
    m["run_id"] = run_id;
    m["experiment"] = std::string(to_string(plan.experiment));
    m["seed"] = config.seed;
    m["created"] = mock_mode(config) ? std::string(epoch) : timestamp_now();
    m["probes"] = plan.probes.size();
    m["plan"] = plan.params;
    m["config"] = config_to_json(config);
    return m;
}

RunRecord to_record(const std::string& run_id, Experiment experiment, const PlannedProbe& p,
                    gateway::Completion&& c, const HarnessConfig& config)
{
    RunRecord r;
    r.run_id = run_id;
    r.experiment = experiment;
    r.key = p.probe.key;
    r.kind = std::string(gateway::to_string(p.probe.kind));
    r.prompt_sha256 = sha256_hex(p.probe.prompt);
    r.parse = p.rating ? extract::extract_rating(c.text, 7.0) : extract::extract_number(c.text, p.value_kind);
    r.raw_response = std::move(c.text);
    r.model = c.model.empty() ? config.model.model : c.model;
    r.temperature = config.model.temperature;
    r.seed = p.probe.seed;
    r.timestamp = mock_mode(config) ? std::string(epoch) : timestamp_now();
    r.meta = p.meta;
    return r;
}

} // namespace

std::string derive_run_id(const RunPlan& plan, const HarnessConfig& config)
{
    json id;
    id["experiment"] = std::string(to_string(plan.experiment));
    id["plan"] = plan.params;
    id["config"] = identity_config(config);
    return fmt::format("{}-{}", to_string(plan.experiment), sha256_hex(id.dump()).substr(0, 12));
}

fs::path run_dir(const HarnessConfig& config, std::string_view run_id)
{
    if (run_id.empty() || run_id.find('/') != std::string_view::npos || run_id == "." || run_id == "..")
        throw ConfigError(fmt::format("bad run id '{}'", run_id));
    return fs::path(config.runs_root) / std::string(run_id);
}

RunOutcome execute(const RunPlan& plan, const HarnessConfig& config, gateway::Responder& responder)
{
    RunOutcome out;
    out.run_id = config.run_id.empty() ? derive_run_id(plan, config) : config.run_id;
    out.dir = run_dir(config, out.run_id);
    out.planned = plan.probes.size();

    std::error_code ec;
    fs::create_directories(out.dir, ec);
    if (ec)
        throw IoError(fmt::format("cannot create '{}': {}", out.dir.string(), ec.message()));

    const auto manifest = manifest_for(out.run_id, plan, config);
    if (fs::exists(out.dir / manifest_file)) {
        const auto old = read_manifest(out.dir);
        if (old.value("experiment", "") != manifest["experiment"] || old.value("plan", json()) != manifest["plan"] ||
            identity_config(config_from_json(old.value("config", json::object()))) != identity_config(config))
            throw ConfigError(fmt::format("run '{}' already exists with a different plan or settings", out.run_id));
    } else {
        write_manifest(out.dir, manifest);
    }

    repair_tail(out.dir);
    std::set<std::string> planned_keys;
    for (const auto& p : plan.probes)
        if (!planned_keys.insert(p.probe.key).second)
            throw ParameterError(fmt::format("duplicate probe key '{}'", p.probe.key));
    std::set<std::string> done;
    for (const auto& r : read_records(out.dir)) {
        if (!planned_keys.count(r.key))
            throw SchemaError(fmt::format("run '{}' holds record '{}' that is not in its plan", out.run_id, r.key));
        if (!done.insert(r.key).second)
            throw SchemaError(fmt::format("run '{}' holds record '{}' twice", out.run_id, r.key));
    }
    out.already_done = done.size();

    std::vector<const PlannedProbe*> todo;
    std::vector<gateway::Probe> probes;
    for (const auto& p : plan.probes) {
        if (done.count(p.probe.key))
            continue;
        if (config.stop_after && todo.size() >= *config.stop_after)
            break;
        todo.push_back(&p);
        probes.push_back(p.probe);
    }
    if (todo.empty())
        return out;

    RecordWriter writer(out.dir);
    gateway::Dispatcher dispatcher(responder, config.model.max_concurrency);
    dispatcher.run(probes, [&](std::size_t i, gateway::Completion&& c) {
        writer.append(to_record(out.run_id, plan.experiment, *todo[i], std::move(c), config));
        ++out.written;
        return true;
    });
    return out;
}

HarnessConfig manifest_config(const HarnessConfig& base, std::string_view run_id)
{
    const auto dir = run_dir(base, run_id);
    if (!fs::exists(dir / manifest_file))
        throw RunNotFound(std::string(run_id));
    const auto m = read_manifest(dir);
    auto c = config_from_json(m.value("config", json::object()));
    c.runs_root = base.runs_root;
    c.reports_root = base.reports_root;
    c.model.max_concurrency = base.model.max_concurrency;
    c.stop_after = base.stop_after;
    c.run_id = std::string(run_id);
    return c;
}

RunOutcome resume(const HarnessConfig& config, gateway::Responder& responder)
{
    const auto dir = run_dir(config, config.run_id);
    if (!fs::exists(dir / manifest_file))
        throw RunNotFound(config.run_id);
    const auto m = read_manifest(dir);
    const auto experiment = parse_experiment(m.value("experiment", ""));
    const auto plan = build_plan(experiment, m.value("plan", json::object()), config);
    return execute(plan, config, responder);
}

} // namespace normprobe::runner
