#pragma once

#include "normprobe/config.hpp"
#include "normprobe/corpus.hpp"
#include "normprobe/gateway.hpp"
#include "normprobe/records.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace normprobe::runner {

/// One novel-concept condition: an input distribution, a grading scheme and
/// the prompt wording.
struct NovelCell {
    std::string id;
    gateway::Distribution dist;
    synth::GradeScheme scheme;
    synth::Clamp clamp;
    std::string concept_name = "glubbing";
    std::string lead;         // empty: "Suppose there is a hobby called {concept}."
    std::string instruction;  // empty: the plain "pick a sample number" request
    bool ask_average = true;
    nlohmann::ordered_json tags = nlohmann::ordered_json::object();  // labels for reports
};

struct NovelPlan {
    std::vector<NovelCell> cells;
    std::size_t n = 100;  // listed input values per prompt
    std::size_t m = 100;  // repetitions per cell
    bool reuse_inputs = false;
    bool store_inputs = true;  // full input list in meta; otherwise only its mean
};

inline constexpr std::string_view default_lead = "Suppose there is a hobby called {concept}.";
inline constexpr std::string_view default_instruction =
    "pick a sample number to represent {concept} hours.";
inline constexpr std::string_view answer_format =
    "The value should be an integer value between {lo} and {hi}. Print only the number and not the complete sentence.";

std::string novel_sample_prompt(const NovelCell& cell, std::span<const synth::ValueSample> listed);
std::string novel_average_prompt(const NovelCell& cell, std::span<const synth::ValueSample> listed);

/// Unimodal and bimodal inputs crossed with positive, negative and ungraded prompts.
std::vector<NovelCell> default_novel_cells();
/// C_mu 45..845 step 100, tent peaks at C_mu-30..C_mu+40 step 10.
std::vector<NovelCell> sweep_cells();
/// Sample-prompt phrasings, debias prompts, descriptions and renamed concepts.
std::vector<NovelCell> variant_cells();

nlohmann::ordered_json novel_plan_to_json(const NovelPlan& plan);
NovelPlan novel_plan_from_json(const nlohmann::ordered_json& j);

/// Existing-concept questions.
std::string existing_prompt(const corpus::ConceptSpec& c, gateway::ProbeKind kind);
/// Rating of one exemplar on one dimension.
std::string rating_prompt(const corpus::ExemplarSpec& e, std::string_view dimension);
std::string case_study_prompt(const corpus::SymptomBatch& b, gateway::ProbeKind kind);

inline constexpr std::array<std::string_view, 5> rating_dimensions{
    "average", "ideal", "good_example", "paradigm_example", "prototypical_example"};

struct PlannedProbe {
    gateway::Probe probe;
    extract::ValueKind value_kind = extract::ValueKind::count;
    bool rating = false;  // 0..7 scale
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
};

struct RunPlan {
    Experiment experiment = Experiment::novel;
    nlohmann::ordered_json params;  // enough to rebuild the plan on resume
    std::vector<PlannedProbe> probes;
};

/// Rebuilds the probe list of an experiment from its params.
RunPlan build_plan(Experiment experiment, const nlohmann::ordered_json& params, const HarnessConfig& config);

RunPlan plan_novel(const NovelPlan& plan, const HarnessConfig& config, Experiment experiment = Experiment::novel);
RunPlan plan_existing(const HarnessConfig& config);
RunPlan plan_prototypes(const HarnessConfig& config);
RunPlan plan_case_study(const HarnessConfig& config);

/// experiment-<12 hex> from the plan and the identity-relevant settings.
std::string derive_run_id(const RunPlan& plan, const HarnessConfig& config);

struct RunOutcome {
    std::string run_id;
    std::filesystem::path dir;
    std::size_t planned = 0;
    std::size_t already_done = 0;
    std::size_t written = 0;
    bool complete() const noexcept { return already_done + written == planned; }
};

/// Runs every probe of `plan` not yet recorded under runs_root/<run_id>.
/// An existing run directory is resumed when its manifest matches; a
/// mismatch throws ConfigError. config.stop_after caps the records written.
/// Transport and credential errors propagate after every earlier record has
/// been persisted.
RunOutcome execute(const RunPlan& plan, const HarnessConfig& config, gateway::Responder& responder);

std::filesystem::path run_dir(const HarnessConfig& config, std::string_view run_id);

/// Settings stored in a run's manifest, with run control taken from `base`.
/// Throws RunNotFound.
HarnessConfig manifest_config(const HarnessConfig& base, std::string_view run_id);

/// Finishes the run named config.run_id. Throws RunNotFound.
RunOutcome resume(const HarnessConfig& config, gateway::Responder& responder);

} // namespace normprobe::runner
