#pragma once

#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

namespace moems::cli {

struct ShippedPreset {
  std::string_view name;
  std::string_view yaml;
};

std::span<const ShippedPreset> shipped_presets();
const ShippedPreset* find_preset(std::string_view name);

// Writes <name>.yaml for every shipped preset into `dir`.
std::vector<std::filesystem::path> seed_presets(const std::filesystem::path& dir);

}  // namespace moems::cli
