#include "normprobe/errors.hpp"
#include "normprobe/report.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <map>

namespace normprobe::report {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr std::string_view gap = "n/a";

std::string num(std::optional<double> v, int digits = 2)
{
    if (!v || !std::isfinite(*v))
        return std::string(gap);
    return fmt::format("{:.{}f}", *v, digits);
}

std::string pval(std::optional<double> p)
{
    if (!p)
        return std::string(gap);
    return fmt::format("{:.3e}", *p);
}

std::string tag(const json& tags, const char* name)
{
    if (!tags.contains(name))
        return "";
    const auto& v = tags[name];
    return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string g(double x) { return fmt::format("{:.6g}", x); }

Table deviation_table(const DeviationSummary& s, const std::string& prefix_fmt)
{
    Table t;
    t.name = "deviation";
    t.title = "Per-item deviation";
    t.header = {"id", "average", "ideal", "sample", "alpha", "alpha_hat", "side", "note"};
    for (const auto& r : s.rows) {
        const bool failed = r.side == metrics::Side::failed;
        t.rows.push_back({r.concept_id, failed ? std::string(gap) : g(r.A), failed ? std::string(gap) : g(r.I),
                          failed ? std::string(gap) : g(r.S), r.alpha ? g(*r.alpha) : std::string(gap),
                          r.alpha_hat ? g(*r.alpha_hat) : std::string(gap), std::string(metrics::to_string(r.side)),
                          r.note});
        t.provenance.push_back(fmt::format(fmt::runtime(prefix_fmt), r.concept_id));
    }
    return t;
}

Table tally_table(const DeviationSummary& s, const std::string& label, const std::string& provenance)
{
    const auto& t = s.tally;
    Table out;
    out.name = "summary";
    out.title = "Ideal-side tally";
    out.header = {"label", "items", "trials", "ideal_side", "fraction", "p_one_sided", "degenerate", "failed",
                  "ties", "tie_policy", "ideal_below_average"};
    out.rows.push_back({label, std::to_string(t.n_inputs), std::to_string(t.n_trials), std::to_string(t.n_ideal),
                        t.applicable() ? fmt::format("{:.3f}", t.fraction()) : std::string(gap),
                        s.test ? pval(s.test->p_value) : std::string("not applicable"),
                        std::to_string(t.n_excluded_degenerate), std::to_string(t.n_excluded_failed),
                        std::to_string(t.n_ties), std::string(metrics::to_string(t.policy)),
                        std::to_string(s.ideal_below_average)});
    out.provenance.push_back(provenance);
    return out;
}

std::string model_of(const LoadedRun& run)
{
    return run.records.empty() ? std::string() : run.records.front().model;
}

void completeness_note(ReportBundle& b, const LoadedRun& run)
{
    if (!run.complete())
        b.notes.push_back(fmt::format("Run is incomplete: {} of {} records. Resume it before citing these numbers.",
                                      run.records.size(), run.planned));
}

void tie_note(ReportBundle& b, metrics::TiePolicy policy, std::size_t ties)
{
    b.notes.push_back(fmt::format("Ties (S == A with A != I): {} found; policy {}.", ties, metrics::to_string(policy)));
}

} // namespace

ReportBundle summarize_novel(const LoadedRun& run)
{
    const auto cells = analyze_novel(run);
    ReportBundle b;
    b.run_id = run.run_id;
    completeness_note(b, run);

    if (run.experiment == runner::Experiment::mu_sweep) {
        Table t;
        t.name = "sweep";
        t.title = "Mean sample by C_mu and tent peak";
        t.header = {"cell", "c_mu", "peak_offset", "n", "mean_input", "mean_S", "deviation"};
        std::map<std::string, Series> series;
        for (const auto& c : cells) {
            std::optional<double> dev;
            if (c.mean_S && c.input_mean)
                dev = *c.mean_S - *c.input_mean;
            t.rows.push_back({c.cell, tag(c.tags, "c_mu"), tag(c.tags, "peak_offset"), std::to_string(c.samples.size()),
                              num(c.input_mean), num(c.mean_S), num(dev)});
            t.provenance.push_back(c.cell + "/*/sample");
            auto& s = series[tag(c.tags, "peak_offset")];
            s.label = "peak_offset=" + tag(c.tags, "peak_offset");
            if (dev) {
                s.x.push_back(c.tags.value("c_mu", 0.0));
                s.y.push_back(*dev);
                s.point_labels.push_back(c.cell);
            }
        }
        b.tables.push_back(std::move(t));
        PlotData p{"sweep_deviation", "c_mu", "mean_S_minus_mean_input", {}};
        std::vector<std::pair<int, Series>> ordered;
        for (auto& [k, s] : series)
            ordered.emplace_back(std::stoi(k), std::move(s));
        std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [k, s] : ordered)
            p.series.push_back(std::move(s));
        b.plots.push_back(std::move(p));
        return b;
    }

    Table t;
    const bool bank = run.experiment == runner::Experiment::variant_bank;
    t.name = bank ? "variants" : "novel";
    t.title = bank ? "Prompt variants: mean sample and mean reported average" : "Novel concept: means and tests";
    t.header = bank ? std::vector<std::string>{"cell", "group", "variant", "valence"}
                    : std::vector<std::string>{"cell", "modality", "valence"};
    for (const char* h : {"n_S", "n_A", "failed", "mean_A", "mean_S", "S_minus_A", "p_S_vs_A", "p_S_vs_input"})
        t.header.push_back(h);
    Series a_series{"mean_A", {}, {}, {}};
    Series s_series{"mean_S", {}, {}, {}};
    double x = 0;
    for (const auto& c : cells) {
        std::vector<std::string> row{c.cell};
        if (bank) {
            row.push_back(tag(c.tags, "group"));
            row.push_back(tag(c.tags, "variant"));
        } else {
            row.push_back(tag(c.tags, "modality"));
        }
        row.push_back(tag(c.tags, "valence"));
        std::optional<double> delta;
        if (c.mean_S && c.mean_A)
            delta = *c.mean_S - *c.mean_A;
        row.push_back(std::to_string(c.samples.size()));
        row.push_back(std::to_string(c.averages.size()));
        row.push_back(std::to_string(c.n_failed));
        row.push_back(num(c.mean_A));
        row.push_back(num(c.mean_S));
        row.push_back(num(delta));
        row.push_back(c.mwu_s_vs_a ? pval(c.mwu_s_vs_a->p_value) : std::string(gap));
        row.push_back(c.mwu_s_vs_input ? pval(c.mwu_s_vs_input->p_value) : std::string(gap));
        t.rows.push_back(std::move(row));
        t.provenance.push_back(c.cell + "/*");
        if (c.mean_A) {
            a_series.x.push_back(x);
            a_series.y.push_back(*c.mean_A);
            a_series.point_labels.push_back(c.cell);
        }
        if (c.mean_S) {
            s_series.x.push_back(x);
            s_series.y.push_back(*c.mean_S);
            s_series.point_labels.push_back(c.cell);
        }
        x += 1;
        if (c.samples.empty())
            b.notes.push_back(fmt::format("Cell {} has no usable samples.", c.cell));
    }
    b.tables.push_back(std::move(t));
    b.plots.push_back({bank ? "variant_means" : "novel_means", "cell_index", "value", {a_series, s_series}});
    return b;
}

ReportBundle summarize_existing(const LoadedRun& run, metrics::TiePolicy policy, Aggregate how)
{
    const auto s = analyze_existing(run, policy, how);
    ReportBundle b;
    b.run_id = run.run_id;
    completeness_note(b, run);
    b.tables.push_back(tally_table(s, model_of(run), "*"));
    b.tables.push_back(deviation_table(s, "{}/*"));
    tie_note(b, policy, s.tally.n_ties);
    b.notes.push_back(fmt::format("Per-concept values are the {} of parsed repeats.", to_string(how)));
    return b;
}

ReportBundle summarize_case_study(const LoadedRun& run, metrics::TiePolicy policy, Aggregate how)
{
    const auto s = analyze_case_study(run, policy, how);
    ReportBundle b;
    b.run_id = run.run_id;
    completeness_note(b, run);
    b.tables.push_back(tally_table(s, model_of(run), "*"));
    b.tables.push_back(deviation_table(s, "{}/*"));
    tie_note(b, policy, s.tally.n_ties);
    b.notes.push_back(fmt::format("Ideal below average in {} of {} batches.", s.ideal_below_average, s.rows.size()));
    return b;
}

ReportBundle summarize_prototypes(const LoadedRun& run, metrics::TiePolicy policy, Aggregate how)
{
    const auto s = analyze_prototypes(run, policy, how);
    ReportBundle b;
    b.run_id = run.run_id;
    completeness_note(b, run);
    b.tables.push_back(tally_table(s.deviation, model_of(run), "*"));

    Table cat;
    cat.name = "categories";
    cat.title = "Scores averaged across exemplars";
    cat.header = {"category_id", "category", "average", "ideal", "composite"};
    for (const auto& c : s.categories) {
        cat.rows.push_back({std::to_string(c.category_id), c.category, num(c.average), num(c.ideal), num(c.composite)});
        cat.provenance.push_back(fmt::format("c{}e*/*", c.category_id));
    }
    b.tables.push_back(std::move(cat));

    Table ex;
    ex.name = "exemplars";
    ex.title = "Exemplar ratings";
    ex.header = {"category_id", "exemplar_id", "average", "ideal", "good_example", "paradigm_example",
                 "prototypical_example", "composite"};
    for (const auto& e : s.exemplars) {
        const auto& r = e.ratings;
        ex.rows.push_back({std::to_string(e.category_id), std::to_string(e.exemplar_id), num(r.average), num(r.ideal),
                           num(r.good_example), num(r.paradigm_example), num(r.prototypical_example),
                           num(r.composite)});
        ex.provenance.push_back(exemplar_id(e.category_id, e.exemplar_id) + "/*");
    }
    b.tables.push_back(std::move(ex));
    b.tables.push_back(deviation_table(s.deviation, "{}/*"));
    b.notes.push_back(fmt::format("Cronbach's alpha over the three example ratings: {}.",
                                  s.cronbach ? fmt::format("{:.3f}", *s.cronbach) : std::string("undefined")));
    tie_note(b, policy, s.deviation.tally.n_ties);
    return b;
}

ReportBundle human_bundle(const std::string& run_id, const HumanComparison& cmp)
{
    ReportBundle b;
    b.run_id = run_id;
    Table t;
    t.name = "human_comparison";
    t.title = "Normalized deviation, human vs model";
    t.header = {"concept_id", "label", "human_alpha_hat", "llm_alpha_hat"};
    Series s{"alpha_hat", {}, {}, {}};
    for (const auto& p : cmp.pairs) {
        t.rows.push_back({p.concept_id, p.label, g(p.human_alpha_hat), g(p.llm_alpha_hat)});
        t.provenance.push_back(p.concept_id + "/*");
        s.x.push_back(p.human_alpha_hat);
        s.y.push_back(p.llm_alpha_hat);
        s.point_labels.push_back(p.concept_id);
    }
    b.tables.push_back(std::move(t));
    Table sum;
    sum.name = "human_summary";
    sum.title = "Human comparison summary";
    sum.header = {"pairs", "pearson_r", "llm_zero_ideal", "human_zero_ideal", "unmatched", "undefined"};
    sum.rows.push_back({std::to_string(cmp.pairs.size()), cmp.pearson ? fmt::format("{:.3f}", *cmp.pearson) : "n/a",
                        std::to_string(cmp.llm_zero_ideal), std::to_string(cmp.human_zero_ideal),
                        std::to_string(cmp.unmatched.size()), std::to_string(cmp.undefined.size())});
    sum.provenance.push_back("*");
    b.tables.push_back(std::move(sum));
    b.plots.push_back({"alpha_hat_scatter", "human_alpha_hat", "llm_alpha_hat", {s}});
    if (!cmp.unmatched.empty()) {
        std::string ids;
        for (const auto& id : cmp.unmatched)
            ids += (ids.empty() ? "" : ", ") + id;
        b.notes.push_back("Unmatched ids (excluded): " + ids + ".");
    }
    if (!cmp.undefined.empty()) {
        std::string ids;
        for (const auto& id : cmp.undefined)
            ids += (ids.empty() ? "" : ", ") + id;
        b.notes.push_back("Alpha-hat undefined on one side (excluded): " + ids + ".");
    }
    return b;
}

ReportBundle summarize(const LoadedRun& run, metrics::TiePolicy policy, Aggregate how)
{
    switch (run.experiment) {
    case runner::Experiment::novel:
    case runner::Experiment::mu_sweep:
    case runner::Experiment::variant_bank: return summarize_novel(run);
    case runner::Experiment::existing: return summarize_existing(run, policy, how);
    case runner::Experiment::prototype: return summarize_prototypes(run, policy, how);
    case runner::Experiment::case_study: return summarize_case_study(run, policy, how);
    }
    throw ParameterError("unknown experiment");
}

std::string to_markdown(const ReportBundle& bundle)
{
    std::string out = fmt::format("# Report {}\n", bundle.run_id);
    for (const auto& t : bundle.tables) {
        out += fmt::format("\n## {}\n\n|", t.title);
        for (const auto& h : t.header)
            out += " " + h + " |";
        out += "\n|";
        for (std::size_t i = 0; i < t.header.size(); ++i)
            out += " --- |";
        out += "\n";
        for (const auto& r : t.rows) {
            out += "|";
            for (const auto& c : r)
                out += " " + c + " |";
            out += "\n";
        }
    }
    if (!bundle.notes.empty()) {
        out += "\n## Notes\n\n";
        for (const auto& n : bundle.notes)
            out += "- " + n + "\n";
    }
    return out;
}

std::string to_csv(const Table& table)
{
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); ++i)
        out += (i ? "," : "") + csv_field(table.header[i]);
    out += ",provenance\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        for (std::size_t i = 0; i < table.rows[r].size(); ++i)
            out += (i ? "," : "") + csv_field(table.rows[r][i]);
        out += "," + csv_field(r < table.provenance.size() ? table.provenance[r] : std::string()) + "\n";
    }
    return out;
}

std::string to_csv(const PlotData& plot)
{
    std::string out = fmt::format("series,{},{},label\n", csv_field(plot.x_label), csv_field(plot.y_label));
    for (const auto& s : plot.series)
        for (std::size_t i = 0; i < s.x.size(); ++i)
            out += fmt::format("{},{},{},{}\n", csv_field(s.label), g(s.x[i]), g(s.y[i]),
                               csv_field(i < s.point_labels.size() ? s.point_labels[i] : std::string()));
    return out;
}

namespace {

void write_file(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out)
        throw IoError(fmt::format("cannot write '{}'", path.string()));
}

} // namespace

void emit(const ReportBundle& bundle, const fs::path& dir)
{
    std::error_code ec;
    fs::create_directories(dir / "plotdata", ec);
    if (ec)
        throw IoError(fmt::format("cannot create '{}': {}", dir.string(), ec.message()));
    write_file(dir / "tables.md", to_markdown(bundle));
    for (const auto& t : bundle.tables)
        write_file(dir / (t.name + ".csv"), to_csv(t));
    for (const auto& p : bundle.plots)
        write_file(dir / "plotdata" / (p.name + ".csv"), to_csv(p));
}

} // namespace normprobe::report
