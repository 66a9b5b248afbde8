#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "socktonics/dispersion.hpp"
#include "socktonics/engine.hpp"
#include "socktonics/io.hpp"
#include "socktonics/rates.hpp"

namespace socktonics {

struct LoadSpec {
  int pairs = 10;
  std::vector<std::pair<std::string, double>> mix = {{"cotton", 1.0}};  // material name, weight
};

struct RunConfig {
  std::vector<MaterialParams> materials;  // presets, then inline definitions
  LoadSpec load;
  WashProgram program;
  CouplingConstants couplings;
  std::uint64_t seed = 1;
  int replicas = 1;
  std::filesystem::path output_dir = "socktonics_out";

  /// Config materials first, then built-in presets. Throws ConfigError.
  MaterialParams material(std::string_view name) const;
  std::vector<MixEntry> mix() const;
};

inline constexpr const char* kOutputDirEnv = "SOCKTONICS_OUTPUT_DIR";

/// Parses a config document. Unknown keys are rejected; absent keys keep
/// their defaults. Throws ConfigError.
RunConfig parse_config(const Json& doc);
RunConfig load_config(const std::filesystem::path& path);

/// Applies SOCKTONICS_OUTPUT_DIR when set.
void apply_environment(RunConfig& config);

Json to_json(const MaterialParams& m);

}  // namespace socktonics
