#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "socktonics/census.hpp"
#include "socktonics/config.hpp"
#include "socktonics/engine.hpp"

namespace socktonics {

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitUsage = 2 };

/// One simulated wash cycle with its bookkeeping.
struct ReplicaResult {
  std::uint64_t seed = 0;
  CensusReport initial;
  CensusReport final_census;
  EventCounts counts;
  std::int64_t lint_mass = 0;
  std::int64_t created = 0;    // socks born (Beliaev daughters and Casimir pairs)
  std::int64_t destroyed = 0;  // socks removed (Beliaev parents and LK victims)
  ChannelRates integrated;
  bool ledger_verified = false;
  AmbiguityVerdict ambiguity;
  LaundryState state;
};

ReplicaResult run_replica(const RunConfig& config, std::uint64_t seed);

/// Runs config.replicas cycles with seeds seed, seed + 1, ...
std::vector<ReplicaResult> run_replicas(const RunConfig& config);

Json replica_summary(const ReplicaResult& r);

enum class SweepAxis { Omega, Temperature };

struct SweepRow {
  double axis_value = 0.0;
  double mean_unpaired = 0.0;
  double mean_created = 0.0;
  double mean_destroyed = 0.0;
  double mean_lint = 0.0;
  // Standard errors of the means over replicas.
  double se_unpaired = 0.0;
  double se_created = 0.0;
  double se_destroyed = 0.0;
  double se_lint = 0.0;
};

/// Evenly spaced grid from..to inclusive. Throws ConfigError on a bad range.
std::vector<double> sweep_grid(double from, double to, int steps);

std::vector<SweepRow> run_sweep(const RunConfig& config, SweepAxis axis, double from, double to,
                                int steps);

void write_dispersion_table(std::ostream& out, const MaterialParams& material, int n_points);
void write_sweep_table(std::ostream& out, const std::vector<SweepRow>& rows);

// Command entry points. Each writes its files under config.output_dir (census:
// the given report path) and returns an ExitCode; diagnostics go to `err`.
int cmd_dispersion(const RunConfig& config, const std::string& material_name, int n_points,
                   std::ostream& err);
int cmd_simulate(const RunConfig& config, std::ostream& err);
int cmd_sweep(const RunConfig& config, const std::string& axis, double from, double to, int steps,
              std::ostream& err);
int cmd_census(const std::filesystem::path& events_path,
               const std::filesystem::path& summary_path,
               const std::filesystem::path& report_path, std::ostream& err);

std::filesystem::path dispersion_path(const RunConfig& config, const std::string& material);
std::filesystem::path events_path(const RunConfig& config, int replica);
std::filesystem::path replica_summary_path(const RunConfig& config, int replica);
std::filesystem::path summary_path(const RunConfig& config);
std::filesystem::path sweep_path(const RunConfig& config, const std::string& axis);

}  // namespace socktonics
