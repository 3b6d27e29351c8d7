#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "moems/cli/runner.hpp"

namespace moems::cli {

enum class Format { json, csv };

std::optional<Format> parse_format(std::string_view name);

// Flattened `key,value` table of a summary; nested keys are dotted and array
// entries indexed.
std::string summary_csv(const nlohmann::ordered_json& summary);

// Stable, newline-terminated JSON text.
std::string summary_text(const nlohmann::ordered_json& summary);

// Writes summary.json or summary.csv plus every trace file into `dir`, each
// through a temporary file and rename. Returns the written paths in order.
std::vector<std::filesystem::path> write_report(const Report& report,
                                                const std::filesystem::path& dir, Format format);

void write_text(const std::filesystem::path& path, std::string_view content);

}  // namespace moems::cli
