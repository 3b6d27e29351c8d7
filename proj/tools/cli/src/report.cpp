#include "moems/cli/report.hpp"

#include "moems/csv.hpp"

namespace moems::cli {

using nlohmann::ordered_json;

std::optional<Format> parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  return std::nullopt;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void flatten(const ordered_json& j, const std::string& prefix, std::string& out) {
  if (j.is_object() || j.is_array()) {
    if (j.empty()) {
      out += csv_field(prefix) + ",\n";
      return;
    }
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      const std::string key = j.is_object() ? it.key() : std::to_string(i);
      flatten(*it, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  std::string value;
  if (j.is_null())
    value = "";
  else if (j.is_string())
    value = j.get<std::string>();
  else if (j.is_boolean())
    value = j.get<bool>() ? "true" : "false";
  else if (j.is_number_float())
    value = format_number(j.get<double>());
  else
    value = j.dump();
  out += csv_field(prefix) + ',' + csv_field(value) + '\n';
}

}  // namespace

std::string summary_csv(const ordered_json& summary) {
  std::string out = "key,value\n";
  flatten(summary, "", out);
  return out;
}

std::string summary_text(const ordered_json& summary) { return summary.dump(2) + "\n"; }

void write_text(const std::filesystem::path& path, std::string_view content) {
  try {
    write_file_atomic(path, content);
  } catch (const std::exception& e) {
    throw IoError(e.what());
  }
}

std::vector<std::filesystem::path> write_report(const Report& report,
                                                const std::filesystem::path& dir, Format format) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  const auto summary_path = dir / (format == Format::json ? "summary.json" : "summary.csv");
  write_text(summary_path,
             format == Format::json ? summary_text(report.summary) : summary_csv(report.summary));
  written.push_back(summary_path);
  for (const auto& [name, content] : report.files) {
    write_text(dir / name, content);
    written.push_back(dir / name);
  }
  return written;
}

}  // namespace moems::cli
