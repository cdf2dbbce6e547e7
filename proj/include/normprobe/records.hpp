#pragma once

#include "normprobe/extract.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace normprobe::runner {

enum class Experiment { novel, existing, prototype, case_study, mu_sweep, variant_bank };

std::string_view to_string(Experiment e) noexcept;
/// Throws ParameterError on an unknown name.
Experiment parse_experiment(std::string_view name);

struct RunRecord {
    std::string run_id;
    Experiment experiment = Experiment::novel;
    std::string key;
    std::string kind;  // sample, average, ideal, rating
    std::string prompt_sha256;
    std::string raw_response;
    extract::ParseOutcome parse;
    std::string model;
    double temperature = 0.0;
    std::uint64_t seed = 0;
    std::string timestamp;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
};

/// One JSON line, fixed key order, no trailing newline.
std::string to_line(const RunRecord& r);
/// Throws SchemaError.
RunRecord from_line(std::string_view line);

inline constexpr std::string_view records_file = "records.jsonl";
inline constexpr std::string_view manifest_file = "manifest.json";

/// Every record of a run directory, in file order. A torn final line (from
/// an interrupted write) is ignored; any other bad line throws SchemaError.
std::vector<RunRecord> read_records(const std::filesystem::path& run_dir);

/// Append-only writer. One writer per run at a time.
class RecordWriter {
public:
    explicit RecordWriter(const std::filesystem::path& run_dir);
    void append(const RunRecord& r);

private:
    std::ofstream out_;
    std::filesystem::path path_;
};

/// Drops a torn final line so appends start on a fresh line.
void repair_tail(const std::filesystem::path& run_dir);

nlohmann::ordered_json read_manifest(const std::filesystem::path& run_dir);
void write_manifest(const std::filesystem::path& run_dir, const nlohmann::ordered_json& manifest);

} // namespace normprobe::runner
