#pragma once

#include "normprobe/config.hpp"
#include "normprobe/corpus.hpp"
#include "normprobe/metrics.hpp"
#include "normprobe/records.hpp"
#include "normprobe/stats.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace normprobe::report {

struct LoadedRun {
    std::string run_id;
    runner::Experiment experiment = runner::Experiment::novel;
    nlohmann::ordered_json manifest;
    std::vector<runner::RunRecord> records;
    std::size_t planned = 0;

    bool complete() const noexcept { return records.size() == planned; }
};

/// Throws RunNotFound when the run has no manifest or no records.
LoadedRun load_run(const std::filesystem::path& runs_root, std::string_view run_id);

// ---- novel-concept family (novel, mu sweep, variant bank)

struct NovelCellSummary {
    std::string cell;
    nlohmann::ordered_json tags;
    std::vector<double> samples;
    std::vector<double> averages;
    std::vector<double> inputs;        // pooled over repetitions, when stored
    std::optional<double> input_mean;  // mean over repetitions
    std::size_t n_failed = 0;
    std::optional<double> mean_S;
    std::optional<double> mean_A;
    std::optional<stats::StatResult> mwu_s_vs_a;
    std::optional<stats::StatResult> mwu_s_vs_input;
};

/// One summary per planned cell, in plan order. Cells without records are
/// kept with empty series.
std::vector<NovelCellSummary> analyze_novel(const LoadedRun& run);

// ---- deviation experiments

struct DeviationSummary {
    std::vector<metrics::DeviationRow> rows;
    metrics::Tally tally;
    std::optional<stats::StatResult> test;
    std::size_t ideal_below_average = 0;  // usable rows with I < A
};

DeviationSummary summarize_rows(std::vector<metrics::DeviationRow> rows, metrics::TiePolicy policy);

/// Mean or median, rounded to 1e-9 so repeated short decimals compare exactly.
double aggregate(std::span<const double> xs, Aggregate how);

DeviationSummary analyze_existing(const LoadedRun& run, metrics::TiePolicy policy, Aggregate how);

DeviationSummary summarize_case_study(std::span<const corpus::CaseStudyRow> rows, metrics::TiePolicy policy);
DeviationSummary analyze_case_study(const LoadedRun& run, metrics::TiePolicy policy, Aggregate how);

/// Deviation rows of the printed LLM answers for the existing concepts.
std::vector<metrics::DeviationRow> llm_reference_rows();

struct PrototypeSummary {
    struct Exemplar {
        int category_id = 0;
        int exemplar_id = 0;
        std::string category;
        corpus::PrototypeRatingRow ratings;  // composite recomputed from the three example columns
        bool complete = true;                // every dimension had a usable answer
    };
    struct Category {
        int category_id = 0;
        std::string category;
        double average = 0.0;
        double ideal = 0.0;
        double composite = 0.0;
    };
    std::vector<Exemplar> exemplars;
    std::vector<Category> categories;
    DeviationSummary deviation;  // A = average, I = ideal, S = composite
    std::optional<double> cronbach;
};

std::string exemplar_id(int category_id, int exemplar_id);

PrototypeSummary summarize_prototypes(std::span<const corpus::PrototypeRatingRow> rows,
                                      std::span<const corpus::ExemplarSpec> exemplars,
                                      metrics::TiePolicy policy);
PrototypeSummary analyze_prototypes(const LoadedRun& run, metrics::TiePolicy policy, Aggregate how);

// ---- human comparison

struct HumanPair {
    std::string concept_id;
    std::string label;
    double human_alpha_hat = 0.0;
    double llm_alpha_hat = 0.0;
};

struct HumanComparison {
    std::vector<HumanPair> pairs;
    std::optional<double> pearson;
    std::vector<std::string> unmatched;   // ids present on one side only
    std::vector<std::string> undefined;   // joined, but alpha-hat undefined on a side
    std::size_t llm_zero_ideal = 0;
    std::size_t human_zero_ideal = 0;
};

HumanComparison compare_human(std::span<const metrics::DeviationRow> llm,
                              std::span<const corpus::HumanReferenceRow> human);

/// JSONL rows {concept_id, label, human_average, human_ideal, human_sample}.
std::vector<corpus::HumanReferenceRow> load_human_table(const std::filesystem::path& path);

// ---- bundles and emission

struct Table {
    std::string name;   // file stem
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> provenance;  // record keys behind each row
};

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<std::string> point_labels;
};

struct PlotData {
    std::string name;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
};

struct ReportBundle {
    std::string run_id;
    std::vector<Table> tables;
    std::vector<PlotData> plots;
    std::vector<std::string> notes;
};

ReportBundle summarize_novel(const LoadedRun& run);
ReportBundle summarize_existing(const LoadedRun& run, metrics::TiePolicy policy, Aggregate how);
ReportBundle summarize_prototypes(const LoadedRun& run, metrics::TiePolicy policy, Aggregate how);
ReportBundle summarize_case_study(const LoadedRun& run, metrics::TiePolicy policy, Aggregate how);
ReportBundle human_bundle(const std::string& run_id, const HumanComparison& cmp);

/// Bundle for whatever experiment the run holds.
ReportBundle summarize(const LoadedRun& run, metrics::TiePolicy policy, Aggregate how);

std::string to_markdown(const ReportBundle& bundle);
std::string to_csv(const Table& table);
std::string to_csv(const PlotData& plot);

/// Writes tables.md, <table>.csv and plotdata/<plot>.csv under dir.
/// Throws IoError.
void emit(const ReportBundle& bundle, const std::filesystem::path& dir);

} // namespace normprobe::report
