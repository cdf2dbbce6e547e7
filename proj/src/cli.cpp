#include "normprobe/cli.hpp"

#include "normprobe/errors.hpp"
#include "normprobe/fixtures.hpp"
#include "normprobe/mock.hpp"
#include "normprobe/report.hpp"
#include "normprobe/runner.hpp"
#include "normprobe/seeds.hpp"
#include "normprobe/stats.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <functional>

namespace normprobe::cli {

namespace {

struct Options {
    std::optional<std::string> config_path;
    std::vector<std::string> sets;
    std::vector<std::pair<std::string, std::string>> named;  // flag-derived settings, in flag order
    std::optional<std::size_t> stop_after;
    std::string run_id;

    // novel
    std::size_t n = 100;
    std::size_t m = 100;
    bool reuse_inputs = false;
    std::vector<std::string> cells;

    // report
    bool vs_human = false;
    std::string human_table;

    std::string target;  // run id or fixture name
};

void add_setting_flag(CLI::App* app, Options& o, const std::string& flag, const std::string& key,
                      const std::string& help)
{
    app->add_option_function<std::string>(
        flag, [&o, key](const std::string& v) { o.named.emplace_back(key, v); }, help);
}

void add_common(CLI::App* app, Options& o)
{
    app->add_option("--config", o.config_path, "Settings file with key = value lines");
    app->add_option("--set", o.sets, "Override one setting, key=value (repeatable)");
    add_setting_flag(app, o, "--mode", "mode", "mock or live");
    add_setting_flag(app, o, "--model", "model", "Model id sent to the endpoint");
    add_setting_flag(app, o, "--endpoint", "endpoint", "Chat-completions URL (live mode)");
    add_setting_flag(app, o, "--temperature", "temperature", "Sampling temperature");
    add_setting_flag(app, o, "--max-concurrency", "max_concurrency", "Parallel requests");
    add_setting_flag(app, o, "--seed", "seed", "Run seed");
    add_setting_flag(app, o, "--repeats", "repeats", "Repeats per item (existing, prototypes)");
    add_setting_flag(app, o, "--runs-root", "runs_root", "Directory holding run directories");
    add_setting_flag(app, o, "--tie-policy", "tie_policy", "count_as_non_ideal or exclude");
    app->add_option("--stop-after", o.stop_after, "Stop after writing this many records (run stays resumable)");
    app->add_option("--run-id", o.run_id, "Use this run id instead of the derived one");
}

std::vector<std::pair<std::string, std::string>> all_flags(const Options& o)
{
    std::vector<std::pair<std::string, std::string>> flags;
    for (const auto& s : o.sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ConfigError(fmt::format("--set expects key=value, got '{}'", s));
        flags.emplace_back(s.substr(0, eq), s.substr(eq + 1));
    }
    flags.insert(flags.end(), o.named.begin(), o.named.end());
    return flags;
}

HarnessConfig resolve(const Options& o, const EnvLookup& env)
{
    auto c = load_config(o.config_path, all_flags(o), env);
    c.stop_after = o.stop_after;
    c.run_id = o.run_id;
    return c;
}

std::unique_ptr<gateway::Responder> responder_for(const HarnessConfig& c, const EnvLookup& env)
{
    return gateway::make_responder(c.model, c.model.mode == gateway::Mode::live ? env(gateway::api_key_env)
                                                                               : std::nullopt);
}

int finish(const runner::RunOutcome& r, std::ostream& out)
{
    out << fmt::format("run {}\n", r.run_id);
    out << fmt::format("dir {}\n", r.dir.string());
    out << fmt::format("records {}/{} ({} new)\n", r.already_done + r.written, r.planned, r.written);
    if (!r.complete()) {
        out << fmt::format("incomplete; continue with: normprobe resume {}\n", r.run_id);
        return exit_incomplete;
    }
    return exit_ok;
}

int execute_plan(const std::function<runner::RunPlan(const HarnessConfig&)>& make, const Options& o,
                 std::ostream& out, std::ostream& err, const EnvLookup& env)
{
    const auto config = resolve(o, env);
    const auto plan = make(config);
    auto responder = responder_for(config, env);
    const auto run_id = config.run_id.empty() ? runner::derive_run_id(plan, config) : config.run_id;
    try {
        return finish(runner::execute(plan, config, *responder), out);
    } catch (const TransportError& e) {
        err << fmt::format("error: {}\nrecords so far are kept; continue with: normprobe resume {}\n", e.what(), run_id);
        return exit_incomplete;
    } catch (const CredentialError& e) {
        err << fmt::format("error: {}\nrecords so far are kept; continue with: normprobe resume {}\n", e.what(), run_id);
        return exit_incomplete;
    }
}

std::vector<runner::NovelCell> pick_cells(const std::vector<std::string>& wanted)
{
    auto cells = runner::default_novel_cells();
    if (wanted.empty())
        return cells;
    std::vector<runner::NovelCell> out;
    for (const auto& w : wanted) {
        auto it = std::find_if(cells.begin(), cells.end(), [&](const auto& c) { return c.id == w; });
        if (it == cells.end()) {
            std::string known;
            for (const auto& c : cells)
                known += (known.empty() ? "" : ", ") + c.id;
            throw ConfigError(fmt::format("unknown cell '{}' (known: {})", w, known));
        }
        out.push_back(*it);
    }
    return out;
}

std::size_t edit_distance(const std::string& a, const std::string& b)
{
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j)
        prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j)
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

void suggest(const CLI::App& app, const std::vector<std::string>& args, std::ostream& err)
{
    const CLI::App* at = &app;
    for (const auto& a : args) {
        if (!a.empty() && a[0] == '-')
            continue;
        const CLI::App* next = nullptr;
        for (const auto* sub : at->get_subcommands({}))
            if (sub->get_name() == a)
                next = sub;
        if (next) {
            at = next;
            continue;
        }
        std::string best;
        std::size_t best_d = 3;
        for (const auto* sub : at->get_subcommands({})) {
            const auto d = edit_distance(a, sub->get_name());
            if (d < best_d) {
                best_d = d;
                best = sub->get_name();
            }
        }
        if (!best.empty())
            err << fmt::format("did you mean '{}'?\n", best);
        return;
    }
}

// Small self-check of the statistics against values known in closed form.
int selftest(std::ostream& out)
{
    struct Check {
        std::string name;
        bool ok;
        std::string detail;
    };
    std::vector<Check> checks;
    {
        const std::vector<double> a{1, 2, 3}, b{4, 5, 6};
        const auto r = stats::mann_whitney_u(a, b);
        checks.push_back({"mwu exact, complete separation n=3,3", std::abs(r.p_value - 0.1) < 1e-12,
                          fmt::format("p={:.6g}, expected 0.1", r.p_value)});
    }
    {
        const std::vector<double> a{1, 2}, b{1, 2};
        const auto r = stats::mann_whitney_u(a, b);
        checks.push_back({"mwu identical samples", std::abs(r.p_value - 1.0) < 1e-12,
                          fmt::format("p={:.6g}, expected 1", r.p_value)});
    }
    {
        const auto r = stats::binomial_one_sided(10, 10, 0.5);
        checks.push_back({"binomial all successes n=10", std::abs(r.p_value - 1.0 / 1024) < 1e-15,
                          fmt::format("p={:.6g}, expected 1/1024", r.p_value)});
    }
    {
        const auto r = stats::binomial_one_sided(0, 25, 0.5);
        checks.push_back({"binomial k=0", r.p_value == 1.0, fmt::format("p={:.6g}, expected 1", r.p_value)});
    }
    {
        const stats::Matrix m{{1, 1, 1}, {2, 2, 2}, {4, 4, 4}, {3, 3, 3}};
        const auto a = stats::cronbach_alpha(m);
        checks.push_back({"cronbach identical columns", a && std::abs(*a - 1.0) < 1e-12,
                          fmt::format("alpha={}", a ? fmt::format("{:.6g}", *a) : "undefined")});
    }
    {
        const std::vector<double> x{1, 2, 3, 4}, y{2, 4, 6, 8};
        const auto r = stats::pearson_r(x, y);
        checks.push_back({"pearson exact line", r && std::abs(*r - 1.0) < 1e-12,
                          fmt::format("r={}", r ? fmt::format("{:.6g}", *r) : "undefined")});
    }
    bool all = true;
    for (const auto& c : checks) {
        out << fmt::format("{} {} ({})\n", c.ok ? "PASS" : "FAIL", c.name, c.detail);
        all = all && c.ok;
    }
    return all ? exit_ok : exit_usage;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env)
{
    CLI::App app{"Probe descriptive and prescriptive components in model sampling.", "normprobe"};
    app.require_subcommand(1);
    app.fallthrough(false);
    Options o;

    auto* run = app.add_subcommand("run", "Start (or continue) an experiment run");
    run->require_subcommand(1);
    auto* novel = run->add_subcommand("novel", "Novel concept with graded input values");
    auto* existing = run->add_subcommand("existing", "Average, ideal and sample of existing concepts");
    auto* prototypes = run->add_subcommand("prototypes", "Exemplar ratings and prototypicality");
    auto* casestudy = run->add_subcommand("casestudy", "Recovery-time case study");
    auto* sweep = run->add_subcommand("sweep", "C_mu by tent-peak grid (sample prompts only)");
    auto* variants = run->add_subcommand("variants", "Prompt-variant bank");
    for (auto* s : {novel, existing, prototypes, casestudy, sweep, variants})
        add_common(s, o);
    novel->add_option("--n", o.n, "Listed input values per prompt")->check(CLI::PositiveNumber);
    novel->add_option("--m", o.m, "Repetitions per cell")->check(CLI::PositiveNumber);
    novel->add_flag("--reuse-inputs", o.reuse_inputs, "Draw the input values once per cell");
    novel->add_option("--cells", o.cells, "Subset of cells (uni-positive, bi-control, ...)")->delimiter(',');
    sweep->add_option("--m", o.m, "Repetitions per cell")->check(CLI::PositiveNumber);
    variants->add_option("--m", o.m, "Repetitions per cell")->check(CLI::PositiveNumber);

    auto* resume = app.add_subcommand("resume", "Finish an interrupted run");
    resume->add_option("run_id", o.target, "Run id")->required();
    add_setting_flag(resume, o, "--runs-root", "runs_root", "Directory holding run directories");
    add_setting_flag(resume, o, "--max-concurrency", "max_concurrency", "Parallel requests");
    resume->add_option("--stop-after", o.stop_after, "Stop after writing this many records");

    auto* report = app.add_subcommand("report", "Write tables and plot data for a run");
    report->add_option("run_id", o.target, "Run id")->required();
    add_setting_flag(report, o, "--runs-root", "runs_root", "Directory holding run directories");
    add_setting_flag(report, o, "--reports-root", "reports_root", "Directory for report output");
    add_setting_flag(report, o, "--tie-policy", "tie_policy", "count_as_non_ideal or exclude");
    add_setting_flag(report, o, "--aggregate", "aggregate", "mean or median of repeats");
    report->add_flag("--vs-human", o.vs_human, "Also compare normalized deviations with human answers");
    report->add_option("--human-table", o.human_table, "JSONL human rows (default: bundled existing-concept table)");

    auto* fixtures = app.add_subcommand("fixtures", "Bundled reference data");
    fixtures->require_subcommand(1);
    auto* flist = fixtures->add_subcommand("list", "List fixture names");
    auto* fdump = fixtures->add_subcommand("dump", "Print a fixture verbatim");
    fdump->add_option("name", o.target, "Fixture name")->required();

    auto* statscmd = app.add_subcommand("stats", "Statistics utilities");
    statscmd->require_subcommand(1);
    auto* self = statscmd->add_subcommand("selftest", "Check the tests against closed-form values");

    auto* synthcmd = app.add_subcommand("synth", "Input generation utilities");
    synthcmd->require_subcommand(1);
    auto* preview = synthcmd->add_subcommand("preview", "Print one novel-concept sample prompt");
    std::string scheme = "positive";
    std::uint64_t seed = 7;
    std::size_t n = 100;
    double mu = 45, sigma = 15;
    int lo = 0, hi = 100;
    preview->add_option("--scheme", scheme, "positive, negative, neutral, tent, random or none");
    preview->add_option("--seed", seed, "Seed");
    preview->add_option("--n", n, "Number of values")->check(CLI::PositiveNumber);
    preview->add_option("--mu", mu, "Mean");
    preview->add_option("--sigma", sigma, "Standard deviation");
    preview->add_option("--lo", lo, "Lower clamp");
    preview->add_option("--hi", hi, "Upper clamp");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        suggest(app, args, err);
        err << "run 'normprobe --help' for usage\n";
        return exit_usage;
    }

    try {
        if (*novel) {
            return execute_plan(
                [&](const HarnessConfig& c) {
                    runner::NovelPlan p;
                    p.cells = pick_cells(o.cells);
                    p.n = o.n;
                    p.m = o.m;
                    p.reuse_inputs = o.reuse_inputs;
                    return runner::plan_novel(p, c);
                },
                o, out, err, env);
        }
        if (*existing)
            return execute_plan(runner::plan_existing, o, out, err, env);
        if (*prototypes)
            return execute_plan(runner::plan_prototypes, o, out, err, env);
        if (*casestudy)
            return execute_plan(runner::plan_case_study, o, out, err, env);
        if (*sweep || *variants) {
            const bool is_sweep = static_cast<bool>(*sweep);
            return execute_plan(
                [&](const HarnessConfig& c) {
                    runner::NovelPlan p;
                    p.cells = is_sweep ? runner::sweep_cells() : runner::variant_cells();
                    p.m = o.m;
                    p.store_inputs = !is_sweep;
                    return runner::plan_novel(p, c, is_sweep ? runner::Experiment::mu_sweep
                                                             : runner::Experiment::variant_bank);
                },
                o, out, err, env);
        }
        if (*resume) {
            HarnessConfig base;
            for (const auto& [k, v] : all_flags(o))
                apply_setting(base, k, v);
            base.stop_after = o.stop_after;
            auto config = runner::manifest_config(base, o.target);
            validate(config, env);
            auto responder = responder_for(config, env);
            try {
                return finish(runner::resume(config, *responder), out);
            } catch (const TransportError& e) {
                err << fmt::format("error: {}\nrecords so far are kept\n", e.what());
                return exit_incomplete;
            } catch (const CredentialError& e) {
                err << fmt::format("error: {}\nrecords so far are kept\n", e.what());
                return exit_incomplete;
            }
        }
        if (*report) {
            HarnessConfig c;
            for (const auto& [k, v] : all_flags(o))
                apply_setting(c, k, v);
            const auto run = report::load_run(c.runs_root, o.target);
            auto bundle = report::summarize(run, c.tie_policy, c.aggregate);
            if (o.vs_human) {
                std::vector<metrics::DeviationRow> rows;
                if (run.experiment == runner::Experiment::existing)
                    rows = report::analyze_existing(run, c.tie_policy, c.aggregate).rows;
                else if (run.experiment == runner::Experiment::prototype)
                    rows = report::analyze_prototypes(run, c.tie_policy, c.aggregate).deviation.rows;
                else
                    throw ConfigError("--vs-human needs an existing-concept or prototype run");
                std::vector<corpus::HumanReferenceRow> human;
                if (!o.human_table.empty())
                    human = report::load_human_table(o.human_table);
                else if (run.experiment == runner::Experiment::existing)
                    human = corpus::human_reference();
                else
                    throw ConfigError("no bundled human prototype ratings; pass --human-table");
                auto hb = report::human_bundle(run.run_id, report::compare_human(rows, human));
                for (auto& t : hb.tables)
                    bundle.tables.push_back(std::move(t));
                for (auto& p : hb.plots)
                    bundle.plots.push_back(std::move(p));
                for (auto& n : hb.notes)
                    bundle.notes.push_back(std::move(n));
            }
            const auto dir = std::filesystem::path(c.reports_root) / run.run_id;
            report::emit(bundle, dir);
            out << report::to_markdown(bundle);
            out << fmt::format("\nwritten to {}\n", dir.string());
            return exit_ok;
        }
        if (*flist) {
            for (const auto& f : fixtures::all())
                out << fmt::format("{}\t{}\t{}\n", f.name, f.format == fixtures::Format::jsonl ? "jsonl" : "text",
                                   f.description);
            return exit_ok;
        }
        if (*fdump) {
            out << fixtures::get(o.target).content;
            return exit_ok;
        }
        if (*self)
            return selftest(out);
        if (*preview) {
            runner::NovelCell cell;
            cell.id = "preview";
            cell.dist.mu = mu;
            cell.dist.sigma = sigma;
            cell.clamp = {lo, hi};
            const auto kind = synth::parse_scheme_kind(scheme);
            cell.scheme.kind = kind;
            cell.scheme.center = static_cast<int>(std::lround(mu));
            cell.scheme.seed = seed;
            const auto values = synth::values_of(synth::sample_unimodal(mu, sigma, n, seed, cell.clamp));
            out << runner::novel_sample_prompt(cell, synth::assign_grades(values, cell.scheme)) << "\n";
            return exit_ok;
        }
    } catch (const RunNotFound& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    err << "error: nothing to do\n";
    return exit_usage;
}

} // namespace normprobe::cli
