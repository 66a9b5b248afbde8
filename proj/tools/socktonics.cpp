#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "socktonics/commands.hpp"
#include "socktonics/config.hpp"
#include "socktonics/errors.hpp"

namespace {

using socktonics::RunConfig;

std::optional<RunConfig> config_from(const std::string& path) {
  try {
    if (path.empty()) {
      RunConfig c;
      socktonics::apply_environment(c);
      return c;
    }
    return socktonics::load_config(path);
  } catch (const socktonics::Error& e) {
    std::cerr << "config: " << e.what() << '\n';
    return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kinetic Monte Carlo of sock quasiparticles in a washing drum"};
  app.require_subcommand(1);

  std::string config_path;
  std::string material;
  int points = 101;
  auto* dispersion = app.add_subcommand("dispersion", "Tabulate a material's dispersion curve");
  dispersion->add_option("--material", material, "Material or preset name")->required();
  dispersion->add_option("--points", points, "Number of samples on [0, p_max]");
  dispersion->add_option("--config", config_path, "Config JSON (optional for presets)");

  auto* simulate = app.add_subcommand("simulate", "Run wash-cycle replicas");
  simulate->add_option("--config", config_path, "Config JSON")->required();

  std::string axis;
  double from = 0.0, to = 0.0;
  int steps = 0;
  auto* sweep = app.add_subcommand("sweep", "Sweep drum frequency or temperature");
  sweep->add_option("--axis", axis, "omega or temperature")->required();
  sweep->add_option("--from", from, "First grid value")->required();
  sweep->add_option("--to", to, "Last grid value")->required();
  sweep->add_option("--steps", steps, "Number of grid points (>= 2)")->required();
  sweep->add_option("--config", config_path, "Config JSON")->required();

  std::string events, summary, report;
  auto* census = app.add_subcommand("census", "Re-verify a simulated event log");
  census->add_option("--events", events, "Events JSONL")->required();
  census->add_option("--summary", summary, "Replica summary JSON")->required();
  census->add_option("--report", report, "Report path (default: census_report.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? socktonics::kExitOk : socktonics::kExitUsage;
  }

  if (dispersion->parsed()) {
    auto config = config_from(config_path);
    if (!config) return socktonics::kExitUsage;
    return socktonics::cmd_dispersion(*config, material, points, std::cerr);
  }
  if (simulate->parsed()) {
    auto config = config_from(config_path);
    if (!config) return socktonics::kExitUsage;
    return socktonics::cmd_simulate(*config, std::cerr);
  }
  if (sweep->parsed()) {
    auto config = config_from(config_path);
    if (!config) return socktonics::kExitUsage;
    return socktonics::cmd_sweep(*config, axis, from, to, steps, std::cerr);
  }
  if (report.empty()) {
    std::filesystem::path dir = ".";
    if (const char* env = std::getenv(socktonics::kOutputDirEnv); env && *env) dir = env;
    report = (dir / "census_report.json").string();
  }
  return socktonics::cmd_census(events, summary, report, std::cerr);
}
