#pragma once

#include "normprobe/extract.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace normprobe::corpus {

/// Source of a corpus: the literal "builtin" or a file path.
inline constexpr std::string_view builtin = "builtin";

inline constexpr std::array<std::string_view, 10> domain_tags{
    "education",      "urban_social",    "health_fitness",        "social_media_internet",
    "habits_lifestyle", "wealth_economic", "environment",          "politics_international",
    "technology",     "travel_tourism"};

struct ConceptSpec {
    std::string id;
    std::string domain;
    std::string prompt_average;
    std::string prompt_ideal;
    std::string prompt_sample;
    std::string unit;
    extract::ValueKind value_kind = extract::ValueKind::count;
    // answers the mock gives for the average and ideal prompts
    std::optional<double> mock_average;
    std::optional<double> mock_ideal;

    bool operator==(const ConceptSpec&) const = default;
};

struct ExemplarSpec {
    int category_id = 0;
    int exemplar_id = 0;
    std::string category;
    std::string passage;

    bool operator==(const ExemplarSpec&) const = default;
};

struct SymptomBatch {
    int batch_id = 0;
    std::vector<std::string> symptoms;

    bool operator==(const SymptomBatch&) const = default;
};

struct HumanReferenceRow {
    std::string concept_id;
    std::string label;
    double human_average = 0.0;
    double human_ideal = 0.0;
    double human_sample = 0.0;
    std::string origin;
};

/// LLM answers as printed, with the ideal-side marking of each row.
struct LlmReferenceRow {
    std::string concept_id;
    std::string label;
    double average = 0.0;
    double ideal = 0.0;
    double sample = 0.0;
    bool ideal_side_marked = false;
    std::string origin;
};

struct PrototypeRatingRow {
    int category_id = 0;
    int exemplar_id = 0;
    double average = 0.0;
    double ideal = 0.0;
    double good_example = 0.0;
    double paradigm_example = 0.0;
    double prototypical_example = 0.0;
    double composite = 0.0;  // as printed, rounded to 2 decimals
};

struct CaseStudyRow {
    int batch_id = 0;
    double average = 0.0;
    double ideal = 0.0;
    double sample = 0.0;
};

std::vector<ConceptSpec> load_concepts(std::string_view source);
std::vector<ExemplarSpec> load_exemplars(std::string_view source);
std::vector<SymptomBatch> load_symptom_batches(std::string_view source);

std::vector<HumanReferenceRow> human_reference();
std::vector<LlmReferenceRow> llm_reference();
std::vector<PrototypeRatingRow> prototype_ratings();
std::vector<CaseStudyRow> case_study_results();

/// Parse JSONL text directly. `origin` names the source in errors.
std::vector<ConceptSpec> parse_concepts(std::string_view text, std::string_view origin);
std::vector<ExemplarSpec> parse_exemplars(std::string_view text, std::string_view origin);
std::vector<SymptomBatch> parse_symptom_batches(std::string_view text, std::string_view origin);

/// Byte-stable JSONL. serialize(parse(x)) == x for files in this layout.
std::string serialize_concepts(const std::vector<ConceptSpec>& specs);
std::string serialize_exemplars(const std::vector<ExemplarSpec>& specs);
std::string serialize_symptom_batches(const std::vector<SymptomBatch>& batches);

using Bindings = std::map<std::string, std::string, std::less<>>;

/// Replaces every {name} with its binding. Braces that do not enclose an
/// identifier are copied through. Throws RenderError on an unbound name.
std::string render_prompt(std::string_view tmpl, const Bindings& bindings);

} // namespace normprobe::corpus
