#include "normprobe/records.hpp"

#include "normprobe/errors.hpp"

#include <fmt/format.h>

#include <sstream>

namespace normprobe::runner {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::string_view to_string(Experiment e) noexcept
{
    switch (e) {
    case Experiment::novel: return "novel";
    case Experiment::existing: return "existing";
    case Experiment::prototype: return "prototype";
    case Experiment::case_study: return "case_study";
    case Experiment::mu_sweep: return "mu_sweep";
    case Experiment::variant_bank: return "variant_bank";
    }
    return "novel";
}

Experiment parse_experiment(std::string_view name)
{
    for (auto e : {Experiment::novel, Experiment::existing, Experiment::prototype, Experiment::case_study,
                   Experiment::mu_sweep, Experiment::variant_bank})
        if (to_string(e) == name)
            return e;
    throw ParameterError(fmt::format("unknown experiment '{}'", name));
}

std::string to_line(const RunRecord& r)
{
    json parse;
    parse["status"] = std::string(extract::to_string(r.parse.status));
    parse["value"] = r.parse.value ? json(*r.parse.value) : json(nullptr);
    parse["note"] = r.parse.note;
    json j;
    j["run_id"] = r.run_id;
    j["experiment"] = std::string(to_string(r.experiment));
    j["key"] = r.key;
    j["kind"] = r.kind;
    j["prompt_sha256"] = r.prompt_sha256;
    j["raw_response"] = r.raw_response;
    j["parse"] = std::move(parse);
    j["model"] = r.model;
    j["temperature"] = r.temperature;
    j["seed"] = r.seed;
    j["timestamp"] = r.timestamp;
    j["meta"] = r.meta;
    return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

RunRecord from_line(std::string_view line)
{
    const auto j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw SchemaError("record is not a JSON object");
    try {
        RunRecord r;
        r.run_id = j.at("run_id").get<std::string>();
        r.experiment = parse_experiment(j.at("experiment").get<std::string>());
        r.key = j.at("key").get<std::string>();
        r.kind = j.at("kind").get<std::string>();
        r.prompt_sha256 = j.at("prompt_sha256").get<std::string>();
        r.raw_response = j.at("raw_response").get<std::string>();
        const auto& p = j.at("parse");
        auto status = extract::parse_status(p.at("status").get<std::string>());
        if (!status)
            throw SchemaError("unknown parse status");
        r.parse.status = *status;
        if (!p.at("value").is_null())
            r.parse.value = p.at("value").get<double>();
        r.parse.note = p.at("note").get<std::string>();
        if (r.parse.usable() != r.parse.value.has_value())
            throw SchemaError("parse status and value disagree");
        r.model = j.at("model").get<std::string>();
        r.temperature = j.at("temperature").get<double>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.timestamp = j.at("timestamp").get<std::string>();
        r.meta = j.at("meta");
        return r;
    } catch (const json::exception& e) {
        throw SchemaError(fmt::format("bad record: {}", e.what()));
    } catch (const ParameterError& e) {
        throw SchemaError(e.what());
    }
}

std::vector<RunRecord> read_records(const fs::path& run_dir)
{
    std::vector<RunRecord> out;
    const auto path = run_dir / records_file;
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return out;
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::size_t pos = 0;
    std::size_t number = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        const bool torn = end == std::string::npos;
        if (torn)
            end = text.size();
        const std::string_view line(text.data() + pos, end - pos);
        pos = end + 1;
        ++number;
        if (line.empty())
            continue;
        try {
            out.push_back(from_line(line));
        } catch (const SchemaError& e) {
            if (torn)
                break;
            throw SchemaError(fmt::format("{}:{}: {}", path.string(), number, e.what()));
        }
    }
    return out;
}

void repair_tail(const fs::path& run_dir)
{
    const auto path = run_dir / records_file;
    if (!fs::exists(path))
        return;
    std::ifstream in(path, std::ios::binary);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    if (text.empty() || text.back() == '\n')
        return;
    const auto last = text.rfind('\n');
    fs::resize_file(path, last == std::string::npos ? 0 : last + 1);
}

RecordWriter::RecordWriter(const fs::path& run_dir) : path_(run_dir / records_file)
{
    out_.open(path_, std::ios::binary | std::ios::app);
    if (!out_)
        throw IoError(fmt::format("cannot append to '{}'", path_.string()));
}

void RecordWriter::append(const RunRecord& r)
{
    out_ << to_line(r) << '\n';
    out_.flush();
    if (!out_)
        throw IoError(fmt::format("write to '{}' failed", path_.string()));
}

json read_manifest(const fs::path& run_dir)
{
    const auto path = run_dir / manifest_file;
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError(fmt::format("cannot read '{}'", path.string()));
    const auto j = json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw SchemaError(fmt::format("'{}' is not a JSON object", path.string()));
    return j;
}

void write_manifest(const fs::path& run_dir, const json& manifest)
{
    const auto path = run_dir / manifest_file;
    const auto tmp = run_dir / (std::string(manifest_file) + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << manifest.dump(2) << '\n';
        if (!out)
            throw IoError(fmt::format("cannot write '{}'", tmp.string()));
    }
    fs::rename(tmp, path);
}

} // namespace normprobe::runner
