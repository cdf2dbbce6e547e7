// One line per acceptance criterion. Exit status is nonzero if any line fails.

#include "../support/mwu_oracle.hpp"
#include "normprobe/corpus.hpp"
#include "normprobe/fixtures.hpp"
#include "normprobe/metrics.hpp"
#include "normprobe/mock.hpp"
#include "normprobe/report.hpp"
#include "normprobe/runner.hpp"
#include "normprobe/seeds.hpp"
#include "normprobe/stats.hpp"
#include "normprobe/synthgen.hpp"

#include <fmt/format.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <regex>

using namespace normprobe;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double budget_s;  // 0 = no runtime bound
    std::function<Outcome()> check;
};

fs::path scratch(const std::string& tag)
{
    auto p = fs::temp_directory_path() / fmt::format("normprobe_accept_{}_{}", ::getpid(), tag);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string pf(bool b) { return b ? "ok" : "off"; }

// ---- 1
Outcome grade_fidelity()
{
    const std::regex re(R"((\d+):([A-D][+-]?))");
    struct Case {
        const char* fixture;
        synth::GradeScheme scheme;
    };
    const Case cases[] = {{"appendix-m-positive", synth::GradeScheme::positive()},
                          {"appendix-m-negative", synth::GradeScheme::negative()},
                          {"appendix-m-neutral", synth::GradeScheme::neutral(45)}};
    std::size_t pairs = 0, bad = 0;
    for (const auto& c : cases) {
        const auto& text = fixtures::get(c.fixture).content;
        for (auto it = std::sregex_iterator(text.begin(), text.end(), re); it != std::sregex_iterator(); ++it) {
            ++pairs;
            const auto g = synth::grade_index(std::stoi((*it)[1]), c.scheme);
            if (!g || synth::grade_names[static_cast<std::size_t>(*g)] != (*it)[2].str())
                ++bad;
        }
    }
    return {bad == 0 && pairs == 300, fmt::format("{} pairs, {} mismatches", pairs, bad)};
}

// ---- 2
Outcome binomial_reproduction()
{
    const double p1 = stats::binomial_one_sided(304, 444).p_value;
    const double p2 = stats::binomial_one_sided(26, 35).p_value;
    const bool a = p1 >= 2.7e-15 && p1 <= 1.1e-14;
    const bool b = std::abs(p2 - 0.003) <= 0.001;
    return {a && b, fmt::format("p(304;444)={:.4e} in [2.7e-15,1.1e-14]: {}; p(26;35)={:.5f} vs 0.003+-0.001: {}", p1,
                                pf(a), p2, pf(b))};
}

// ---- 3
Outcome mwu_oracle()
{
    auto rng = make_rng(20240611);
    std::uniform_int_distribution<int> val(0, 6);
    std::size_t cases = 0, bad = 0;
    double worst = 0.0;
    for (std::size_t n1 = 1; n1 <= 6; ++n1)
        for (std::size_t n2 = 1; n2 <= 6; ++n2)
            for (int f = 0; f < 200; ++f) {
                std::vector<double> a(n1), b(n2);
                for (auto& x : a)
                    x = val(rng);
                for (auto& x : b)
                    x = val(rng);
                const auto r = stats::mann_whitney_u(a, b);
                const double diff = std::abs(r.p_value - oracle::mwu_two_sided_brute(a, b));
                worst = std::max(worst, diff);
                ++cases;
                if (r.method != stats::TestMethod::exact || diff > 1e-12)
                    ++bad;
            }
    return {bad == 0, fmt::format("{} fixtures over 36 size pairs, {} off, max |dp|={:.2e}", cases, bad, worst)};
}

// ---- 4
Outcome alpha_replay()
{
    std::size_t rows = 0, degenerate = 0, bad = 0;
    for (const auto& r : corpus::llm_reference()) {
        ++rows;
        const auto row = metrics::make_row(r.concept_id, r.average, r.ideal, r.sample);
        if (row.side == metrics::Side::degenerate) {
            ++degenerate;
            bad += r.ideal_side_marked;
            continue;
        }
        bad += (row.side == metrics::Side::ideal) != r.ideal_side_marked;
    }
    return {bad == 0 && rows > 0,
            fmt::format("{} rows, {} degenerate excluded, {} classification mismatches", rows, degenerate, bad)};
}

// ---- 5
Outcome prototype_replay()
{
    const auto rows = corpus::prototype_ratings();
    const auto s = report::summarize_prototypes(rows, corpus::load_exemplars(corpus::builtin),
                                                metrics::TiePolicy::count_as_non_ideal);
    double worst = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        worst = std::max(worst, std::abs(s.exemplars[i].ratings.composite - rows[i].composite));
    const double first = s.exemplars.empty() ? NAN : s.exemplars[0].ratings.composite;
    const auto& t = s.deviation.tally;
    const double p = s.deviation.test ? s.deviation.test->p_value : NAN;
    const bool ok = worst <= 0.01 && std::abs(first - 3.83) <= 0.01 && t.n_ideal == 39 && t.n_trials == 46 && p < 0.001;
    return {ok, fmt::format("max composite diff {:.4f}, (1,1)={:.3f}, tally {}/{} (ties {}), p={:.3e}", worst, first,
                            t.n_ideal, t.n_trials, t.n_ties, p)};
}

// ---- 6
Outcome case_study_replay()
{
    const auto s = report::summarize_case_study(corpus::case_study_results(), metrics::TiePolicy::count_as_non_ideal);
    const auto& t = s.tally;
    const double p = s.test ? s.test->p_value : NAN;
    const bool tally = t.n_ideal == 26 && t.n_trials == 35;
    const bool pv = std::abs(p - 0.003) <= 0.001;
    const bool ia = s.ideal_below_average == 30;
    return {tally && pv && ia, fmt::format("{} rows; tally {}/{} (ties {}) vs 26/35: {}; p={:.5f}: {}; I<A in {}: {}",
                                           s.rows.size(), t.n_ideal, t.n_trials, t.n_ties, pf(tally), p, pf(pv),
                                           s.ideal_below_average, pf(ia))};
}

// ---- 7
Outcome mock_direction()
{
    const auto root = scratch("mock");
    HarnessConfig c;
    c.runs_root = root.string();
    gateway::MockResponder mock(c.model.mock);
    runner::NovelPlan p;
    for (const auto& cell : runner::default_novel_cells())
        if (cell.id.rfind("uni-", 0) == 0)
            p.cells.push_back(cell);
    p.m = 100;
    const auto out = runner::execute(runner::plan_novel(p, c), c, mock);
    const auto cells = report::analyze_novel(report::load_run(c.runs_root, out.run_id));
    fs::remove_all(root);

    auto find = [&](const std::string& id) -> const report::NovelCellSummary& {
        return *std::find_if(cells.begin(), cells.end(), [&](const auto& s) { return s.cell == id; });
    };
    const auto& pos = find("uni-positive");
    const auto& neg = find("uni-negative");
    const auto& ctl = find("uni-control");
    const double dp = *pos.mean_S - *pos.mean_A;
    const double dn = *neg.mean_S - *neg.mean_A;
    const double dc = *ctl.mean_S - *ctl.mean_A;
    const double pc = ctl.mwu_s_vs_input->p_value;
    const bool a = dp >= 1.0 && dp <= 2.6;
    const bool b = dn >= -10.5 && dn <= -4.5;
    const bool k = std::abs(dc) < 1.0 && pc > 0.05;
    return {a && b && k,
            fmt::format("positive S-A={:+.2f}: {}; negative S-A={:+.2f}: {}; control S-A={:+.2f}, MWU(S, inputs) p={:.3f}: {}",
                        dp, pf(a), dn, pf(b), dc, pc, pf(k))};
}

// ---- 8
Outcome human_comparison()
{
    const auto human = corpus::human_reference();

    std::vector<metrics::DeviationRow> proto_llm;
    for (const auto& r : corpus::prototype_ratings())
        proto_llm.push_back(metrics::make_row(report::exemplar_id(r.category_id, r.exemplar_id), r.average, r.ideal,
                                              r.composite));
    const auto proto = report::compare_human(proto_llm, human);
    const bool a = proto.pearson && std::abs(*proto.pearson - 0.33) <= 0.05;

    const auto existing = report::compare_human(report::llm_reference_rows(), human);
    const bool b = existing.pearson && *existing.pearson >= -0.15 && *existing.pearson <= 0.15;
    const bool k = existing.llm_zero_ideal == 19 && existing.human_zero_ideal == 1;

    auto r_text = [](const std::optional<double>& r) { return r ? fmt::format("{:.3f}", *r) : std::string("undefined"); };
    return {a && b && k,
            fmt::format("prototype r={} over {} joined exemplars (no bundled human prototype ratings): {}; existing r={} "
                        "over {} concepts: {}; zero-ideal census LLM {} vs human {}: {}",
                        r_text(proto.pearson), proto.pairs.size(), pf(a), r_text(existing.pearson),
                        existing.pairs.size(), pf(b), existing.llm_zero_ideal, existing.human_zero_ideal, pf(k))};
}

// ---- 9
std::vector<std::string> sorted_records(const fs::path& dir)
{
    std::ifstream in(dir / runner::records_file, std::ios::binary);
    std::vector<std::string> lines;
    for (std::string l; std::getline(in, l);)
        lines.push_back(l);
    std::sort(lines.begin(), lines.end());
    return lines;
}

Outcome resumability()
{
    const auto ra = scratch("full");
    const auto rb = scratch("split");
    HarnessConfig ca, cb;
    ca.runs_root = ra.string();
    cb.runs_root = rb.string();
    gateway::MockResponder mock(ca.model.mock);
    runner::NovelPlan p;
    p.cells = runner::default_novel_cells();
    p.m = 100;

    const auto full = runner::execute(runner::plan_novel(p, ca), ca, mock);
    cb.stop_after = full.planned / 2;
    const auto half = runner::execute(runner::plan_novel(p, cb), cb, mock);
    cb.stop_after.reset();
    cb.run_id = half.run_id;
    const auto rest = runner::resume(cb, mock);
    const bool same = full.complete() && rest.complete() && sorted_records(full.dir) == sorted_records(rest.dir);
    const auto detail = fmt::format("{} records; interrupted after {}, resumed {}; identical after sort: {}",
                                    full.planned, half.written, rest.written, same ? "yes" : "no");
    fs::remove_all(ra);
    fs::remove_all(rb);
    return {same && half.written == full.planned / 2, detail};
}

// ---- 10
Outcome cronbach()
{
    auto rng = make_rng(1000);
    std::normal_distribution<double> z(0.0, 1.0);
    stats::Matrix same, noise;
    for (int i = 0; i < 1000; ++i) {
        const double x = z(rng);
        same.push_back({x, x, x});
        noise.push_back({z(rng), z(rng), z(rng)});
    }
    stats::Matrix printed;
    for (const auto& r : corpus::prototype_ratings())
        printed.push_back({r.good_example, r.paradigm_example, r.prototypical_example});
    const auto a1 = stats::cronbach_alpha(same);
    const auto a2 = stats::cronbach_alpha(noise);
    const auto a3 = stats::cronbach_alpha(printed);
    const bool b1 = a1 && std::abs(*a1 - 1.0) < 1e-12;
    const bool b2 = a2 && std::abs(*a2) < 0.15;
    const bool b3 = a3 && *a3 > 0.9;
    auto v = [](const std::optional<double>& a) { return a ? fmt::format("{:.4f}", *a) : std::string("undefined"); };
    return {b1 && b2 && b3, fmt::format("identical={}: {}; noise={}: {}; printed ratings={}: {}", v(a1), pf(b1), v(a2),
                                        pf(b2), v(a3), pf(b3))};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "grade-formula fidelity", 1.0, grade_fidelity},
        {2, "binomial reproduction", 1.0, binomial_reproduction},
        {3, "MWU oracle equivalence", 30.0, mwu_oracle},
        {4, "alpha replay of the LLM table", 0.0, alpha_replay},
        {5, "prototype replay", 0.0, prototype_replay},
        {6, "case-study replay", 0.0, case_study_replay},
        {7, "mock end-to-end direction", 120.0, mock_direction},
        {8, "human-comparison numbers", 0.0, human_comparison},
        {9, "resumability", 0.0, resumability},
        {10, "Cronbach sanity", 0.0, cronbach},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, fmt::format("threw: {}", e.what())};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = o.pass;
        std::string timing = fmt::format("{:.2f}s", secs);
        if (c.budget_s > 0) {
            timing += fmt::format(" of {:.0f}s", c.budget_s);
            pass = pass && secs < c.budget_s;
        }
        failed += !pass;
        std::cout << fmt::format("{} [{:2}] {}: {} ({})\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail, timing);
    }
    std::cout << fmt::format("{}/{} criteria pass\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
