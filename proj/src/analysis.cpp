#include "normprobe/errors.hpp"
#include "normprobe/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>

namespace normprobe::report {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using runner::RunRecord;

namespace {

std::optional<double> value(const RunRecord& r)
{
    return r.parse.usable() ? r.parse.value : std::nullopt;
}

std::optional<stats::StatResult> mwu_if(const std::vector<double>& a, const std::vector<double>& b)
{
    if (a.empty() || b.empty())
        return std::nullopt;
    return stats::mann_whitney_u(a, b);
}

double round9(double x) { return std::round(x * 1e9) / 1e9; }

// Per-id buckets of parsed values by probe kind, keeping first-seen id order.
struct Buckets {
    std::vector<std::string> order;
    std::map<std::string, std::map<std::string, std::vector<double>>> values;
    std::map<std::string, std::size_t> failed;

    void add(const std::string& id, const std::string& kind, std::optional<double> v)
    {
        if (!values.count(id))
            order.push_back(id);
        auto& slot = values[id][kind];
        if (v)
            slot.push_back(*v);
        else
            ++failed[id];
    }
};

metrics::DeviationRow row_from(const std::string& id, std::map<std::string, std::vector<double>>& kinds,
                               Aggregate how)
{
    std::vector<std::string> missing;
    for (const char* k : {"average", "ideal", "sample"})
        if (kinds[k].empty())
            missing.push_back(k);
    if (!missing.empty()) {
        std::string note = "no usable";
        for (std::size_t i = 0; i < missing.size(); ++i)
            note += (i ? ", " : " ") + missing[i];
        return metrics::make_failed_row(id, note + " answer");
    }
    return metrics::make_row(id, aggregate(kinds["average"], how), aggregate(kinds["ideal"], how),
                             aggregate(kinds["sample"], how));
}

} // namespace

LoadedRun load_run(const fs::path& runs_root, std::string_view run_id)
{
    const auto dir = runs_root / std::string(run_id);
    if (run_id.empty() || !fs::exists(dir / runner::manifest_file))
        throw RunNotFound(std::string(run_id));
    LoadedRun run;
    run.run_id = std::string(run_id);
    run.manifest = runner::read_manifest(dir);
    run.experiment = runner::parse_experiment(run.manifest.value("experiment", ""));
    run.planned = run.manifest.value("probes", std::size_t{0});
    run.records = runner::read_records(dir);
    if (run.records.empty())
        throw RunNotFound(std::string(run_id));
    std::stable_sort(run.records.begin(), run.records.end(),
                     [](const RunRecord& a, const RunRecord& b) { return a.key < b.key; });
    return run;
}

double aggregate(std::span<const double> xs, Aggregate how)
{
    if (xs.empty())
        throw ParameterError("aggregate of no values");
    if (how == Aggregate::mean)
        return round9(stats::mean(xs));
    std::vector<double> v(xs.begin(), xs.end());
    std::sort(v.begin(), v.end());
    const auto n = v.size();
    return round9(n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2);
}

std::vector<NovelCellSummary> analyze_novel(const LoadedRun& run)
{
    const auto plan = run.manifest.at("plan");
    std::vector<NovelCellSummary> out;
    std::map<std::string, std::size_t> index;
    for (const auto& c : plan.at("cells")) {
        NovelCellSummary s;
        s.cell = c.at("id").get<std::string>();
        s.tags = c.at("tags");
        index[s.cell] = out.size();
        out.push_back(std::move(s));
    }
    std::map<std::string, std::vector<double>> input_means;
    for (const auto& r : run.records) {
        const auto cell = r.meta.value("cell", std::string());
        auto it = index.find(cell);
        if (it == index.end())
            continue;
        auto& s = out[it->second];
        const auto v = value(r);
        if (!v) {
            ++s.n_failed;
        } else if (r.kind == "sample") {
            s.samples.push_back(*v);
        } else if (r.kind == "average") {
            s.averages.push_back(*v);
        }
        if (r.kind == "sample") {
            if (r.meta.contains("inputs")) {
                double sum = 0;
                std::size_t n = 0;
                for (const auto& x : r.meta["inputs"]) {
                    s.inputs.push_back(x.get<double>());
                    sum += x.get<double>();
                    ++n;
                }
                if (n)
                    input_means[cell].push_back(sum / static_cast<double>(n));
            } else if (r.meta.contains("input_mean")) {
                input_means[cell].push_back(r.meta["input_mean"].get<double>());
            }
        }
    }
    for (auto& s : out) {
        if (!s.samples.empty())
            s.mean_S = stats::mean(s.samples);
        if (!s.averages.empty())
            s.mean_A = stats::mean(s.averages);
        if (auto it = input_means.find(s.cell); it != input_means.end() && !it->second.empty())
            s.input_mean = stats::mean(it->second);
        s.mwu_s_vs_a = mwu_if(s.samples, s.averages);
        s.mwu_s_vs_input = mwu_if(s.samples, s.inputs);
    }
    return out;
}

DeviationSummary summarize_rows(std::vector<metrics::DeviationRow> rows, metrics::TiePolicy policy)
{
    DeviationSummary s;
    s.rows = std::move(rows);
    s.tally = metrics::ideal_side_tally(s.rows, policy);
    s.test = metrics::tally_test(s.tally);
    for (const auto& r : s.rows)
        if (r.side != metrics::Side::failed && r.I < r.A)
            ++s.ideal_below_average;
    return s;
}

DeviationSummary analyze_existing(const LoadedRun& run, metrics::TiePolicy policy, Aggregate how)
{
    Buckets b;
    for (const auto& r : run.records)
        b.add(r.meta.value("concept", std::string()), r.kind, value(r));
    std::vector<metrics::DeviationRow> rows;
    for (const auto& id : b.order)
        rows.push_back(row_from(id, b.values[id], how));
    return summarize_rows(std::move(rows), policy);
}

DeviationSummary summarize_case_study(std::span<const corpus::CaseStudyRow> rows, metrics::TiePolicy policy)
{
    std::vector<metrics::DeviationRow> out;
    for (const auto& r : rows)
        out.push_back(metrics::make_row(fmt::format("b{:02}", r.batch_id), r.average, r.ideal, r.sample));
    return summarize_rows(std::move(out), policy);
}

DeviationSummary analyze_case_study(const LoadedRun& run, metrics::TiePolicy policy, Aggregate how)
{
    Buckets b;
    for (const auto& r : run.records)
        b.add(fmt::format("b{:02}", r.meta.value("batch_id", 0)), r.kind, value(r));
    std::vector<metrics::DeviationRow> rows;
    for (const auto& id : b.order)
        rows.push_back(row_from(id, b.values[id], how));
    return summarize_rows(std::move(rows), policy);
}

std::vector<metrics::DeviationRow> llm_reference_rows()
{
    std::vector<metrics::DeviationRow> out;
    for (const auto& r : corpus::llm_reference())
        out.push_back(metrics::make_row(r.concept_id, r.average, r.ideal, r.sample));
    return out;
}

std::string exemplar_id(int category_id, int exemplar_id) { return fmt::format("c{}e{}", category_id, exemplar_id); }

PrototypeSummary summarize_prototypes(std::span<const corpus::PrototypeRatingRow> rows,
                                      std::span<const corpus::ExemplarSpec> exemplars, metrics::TiePolicy policy)
{
    std::map<std::pair<int, int>, std::string> names;
    for (const auto& e : exemplars)
        names[{e.category_id, e.exemplar_id}] = e.category;

    PrototypeSummary s;
    std::vector<metrics::DeviationRow> dev;
    stats::Matrix items;
    std::map<int, std::vector<const corpus::PrototypeRatingRow*>> by_category;
    for (const auto& r : rows) {
        PrototypeSummary::Exemplar e;
        e.category_id = r.category_id;
        e.exemplar_id = r.exemplar_id;
        e.category = names.count({r.category_id, r.exemplar_id}) ? names[{r.category_id, r.exemplar_id}] : "";
        e.ratings = r;
        e.ratings.composite = round9((r.good_example + r.paradigm_example + r.prototypical_example) / 3.0);
        s.exemplars.push_back(e);
        dev.push_back(metrics::make_row(exemplar_id(r.category_id, r.exemplar_id), r.average, r.ideal,
                                        e.ratings.composite));
        items.push_back({r.good_example, r.paradigm_example, r.prototypical_example});
    }
    for (const auto& e : s.exemplars)
        by_category[e.category_id].push_back(&e.ratings);
    for (const auto& [cid, members] : by_category) {
        PrototypeSummary::Category c;
        c.category_id = cid;
        for (const auto& e : s.exemplars)
            if (e.category_id == cid && !e.category.empty()) {
                c.category = e.category;
                break;
            }
        for (const auto* m : members) {
            c.average += m->average;
            c.ideal += m->ideal;
            c.composite += m->composite;
        }
        const double n = static_cast<double>(members.size());
        c.average /= n;
        c.ideal /= n;
        c.composite /= n;
        s.categories.push_back(c);
    }
    s.deviation = summarize_rows(std::move(dev), policy);
    if (items.size() >= 2)
        s.cronbach = stats::cronbach_alpha(items);
    return s;
}

PrototypeSummary analyze_prototypes(const LoadedRun& run, metrics::TiePolicy policy, Aggregate how)
{
    struct Acc {
        std::map<std::string, std::vector<double>> dims;
        std::string category;
        bool failed = false;
    };
    std::map<std::pair<int, int>, Acc> acc;
    for (const auto& r : run.records) {
        auto& a = acc[{r.meta.value("category_id", 0), r.meta.value("exemplar_id", 0)}];
        a.category = r.meta.value("category", std::string());
        if (auto v = value(r))
            a.dims[r.meta.value("dimension", std::string())].push_back(*v);
    }
    std::vector<corpus::PrototypeRatingRow> rows;
    std::vector<corpus::ExemplarSpec> specs;
    std::vector<std::string> incomplete;
    for (auto& [id, a] : acc) {
        corpus::PrototypeRatingRow row;
        row.category_id = id.first;
        row.exemplar_id = id.second;
        bool ok = true;
        for (const char* d : {"average", "ideal", "good_example", "paradigm_example", "prototypical_example"})
            ok = ok && !a.dims[d].empty();
        if (!ok) {
            incomplete.push_back(exemplar_id(id.first, id.second));
            continue;
        }
        row.average = aggregate(a.dims["average"], how);
        row.ideal = aggregate(a.dims["ideal"], how);
        row.good_example = aggregate(a.dims["good_example"], how);
        row.paradigm_example = aggregate(a.dims["paradigm_example"], how);
        row.prototypical_example = aggregate(a.dims["prototypical_example"], how);
        rows.push_back(row);
        specs.push_back({id.first, id.second, a.category, ""});
    }
    auto s = summarize_prototypes(rows, specs, policy);
    for (const auto& id : incomplete)
        s.deviation.rows.push_back(metrics::make_failed_row(id, "a rating dimension had no usable answer"));
    s.deviation = summarize_rows(std::move(s.deviation.rows), policy);
    return s;
}

HumanComparison compare_human(std::span<const metrics::DeviationRow> llm,
                              std::span<const corpus::HumanReferenceRow> human)
{
    HumanComparison out;
    std::map<std::string, const corpus::HumanReferenceRow*> by_id;
    for (const auto& h : human) {
        by_id[h.concept_id] = &h;
        if (h.human_ideal == 0.0)
            ++out.human_zero_ideal;
    }
    std::set<std::string> seen;
    std::vector<double> xs, ys;
    for (const auto& r : llm) {
        seen.insert(r.concept_id);
        if (r.side != metrics::Side::failed && r.I == 0.0)
            ++out.llm_zero_ideal;
        auto it = by_id.find(r.concept_id);
        if (it == by_id.end()) {
            out.unmatched.push_back(r.concept_id);
            continue;
        }
        const auto& h = *it->second;
        const auto ha = metrics::compute_alpha_hat(h.human_average, h.human_sample, h.human_ideal);
        if (!ha || !r.alpha_hat) {
            out.undefined.push_back(r.concept_id);
            continue;
        }
        out.pairs.push_back({r.concept_id, h.label, *ha, *r.alpha_hat});
        xs.push_back(*ha);
        ys.push_back(*r.alpha_hat);
    }
    for (const auto& h : human)
        if (!seen.count(h.concept_id))
            out.unmatched.push_back(h.concept_id);
    if (xs.size() >= 3)
        out.pearson = stats::pearson_r(xs, ys);
    return out;
}

std::vector<corpus::HumanReferenceRow> load_human_table(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError(fmt::format("cannot read human table '{}'", path.string()));
    std::vector<corpus::HumanReferenceRow> out;
    int number = 0;
    for (std::string line; std::getline(in, line);) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        const auto j = json::parse(line, nullptr, false);
        try {
            if (j.is_discarded() || !j.is_object())
                throw SchemaError("not a JSON object");
            corpus::HumanReferenceRow r;
            r.concept_id = j.at("concept_id").get<std::string>();
            r.label = j.value("label", r.concept_id);
            r.human_average = j.at("human_average").get<double>();
            r.human_ideal = j.at("human_ideal").get<double>();
            r.human_sample = j.at("human_sample").get<double>();
            r.origin = path.string();
            out.push_back(std::move(r));
        } catch (const std::exception& e) {
            throw SchemaError(fmt::format("{}:{}: {}", path.string(), number, e.what()));
        }
    }
    if (out.empty())
        throw SchemaError(fmt::format("{}: no records", path.string()));
    return out;
}

} // namespace normprobe::report
