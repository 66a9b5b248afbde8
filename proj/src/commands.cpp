#include "socktonics/commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "socktonics/errors.hpp"

namespace socktonics {

namespace {

namespace fs = std::filesystem;

struct MeanAccumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::size_t n = 0;

  void add(double x) {
    sum += x;
    sum_sq += x * x;
    ++n;
  }
  double mean() const { return n ? sum / static_cast<double>(n) : 0.0; }
  double standard_error() const {
    if (n < 2) return 0.0;
    const double m = mean();
    const double var = (sum_sq - static_cast<double>(n) * m * m) / static_cast<double>(n - 1);
    return std::sqrt(std::max(var, 0.0) / static_cast<double>(n));
  }
};

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory '" + dir.string() + "'");
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  return out;
}

std::string replica_stem(int replica) {
  std::ostringstream s;
  s << "replica_";
  s.width(4);
  s.fill('0');
  s << replica;
  return s.str();
}

}  // namespace

fs::path dispersion_path(const RunConfig& c, const std::string& material) {
  return c.output_dir / ("dispersion_" + material + ".csv");
}
fs::path events_path(const RunConfig& c, int replica) {
  return c.output_dir / (replica_stem(replica) + ".events.jsonl");
}
fs::path replica_summary_path(const RunConfig& c, int replica) {
  return c.output_dir / (replica_stem(replica) + ".summary.json");
}
fs::path summary_path(const RunConfig& c) { return c.output_dir / "summary.json"; }
fs::path sweep_path(const RunConfig& c, const std::string& axis) {
  return c.output_dir / ("sweep_" + axis + ".csv");
}

ReplicaResult run_replica(const RunConfig& config, std::uint64_t seed) {
  ReplicaResult r;
  r.seed = seed;
  LaundryState start =
      init_load(config.load.pairs, config.mix(), config.program, config.couplings, seed);
  r.initial = take_census(start);
  r.state = run_cycle(std::move(start));
  r.final_census = take_census(r.state);
  r.counts = count_events(r.state.event_log);
  r.lint_mass = r.state.lint_mass;
  for (const auto& e : r.state.event_log) {
    r.created += static_cast<std::int64_t>(e.created_ids.size());
    r.destroyed += static_cast<std::int64_t>(e.parent_ids.size());
  }
  r.integrated = r.state.integrated;
  r.ledger_verified = verify_ledger(r.initial, r.final_census, r.state.event_log);
  r.ambiguity = ambiguity_likelihood(r.integrated.beliaev, r.integrated.landau_khalatnikov,
                                     r.integrated.casimir);
  return r;
}

std::vector<ReplicaResult> run_replicas(const RunConfig& config) {
  std::vector<ReplicaResult> out;
  out.reserve(static_cast<std::size_t>(config.replicas));
  for (int i = 0; i < config.replicas; ++i) {
    out.push_back(run_replica(config, config.seed + static_cast<std::uint64_t>(i)));
  }
  return out;
}

Json replica_summary(const ReplicaResult& r) {
  return Json{{"seed", r.seed},
              {"initial_census", to_json(r.initial)},
              {"final_census", to_json(r.final_census)},
              {"event_counts", to_json(r.counts)},
              {"lint_mass", r.lint_mass},
              {"created", r.created},
              {"destroyed", r.destroyed},
              {"integrated_intensity", to_json(r.integrated)},
              {"ledger_verified", r.ledger_verified},
              {"ambiguity", to_json(r.ambiguity)},
              {"final_time", r.state.time}};
}

std::vector<double> sweep_grid(double from, double to, int steps) {
  if (!(from < to) || steps < 2 || !std::isfinite(from) || !std::isfinite(to)) {
    throw ConfigError("sweep needs from < to and steps >= 2");
  }
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    grid[static_cast<std::size_t>(i)] =
        i == steps - 1 ? to : from + (to - from) * static_cast<double>(i) / (steps - 1);
  }
  return grid;
}

std::vector<SweepRow> run_sweep(const RunConfig& config, SweepAxis axis, double from, double to,
                                int steps) {
  std::vector<SweepRow> rows;
  for (double value : sweep_grid(from, to, steps)) {
    RunConfig point = config;
    if (axis == SweepAxis::Omega) {
      point.program.omega = value;
    } else {
      point.program.temperature = value;
    }
    validate(point.program);
    MeanAccumulator unpaired, created, destroyed, lint;
    for (const auto& r : run_replicas(point)) {
      unpaired.add(static_cast<double>(r.final_census.unpaired));
      created.add(static_cast<double>(r.created));
      destroyed.add(static_cast<double>(r.destroyed));
      lint.add(static_cast<double>(r.lint_mass));
    }
    rows.push_back({value, unpaired.mean(), created.mean(), destroyed.mean(), lint.mean(),
                    unpaired.standard_error(), created.standard_error(),
                    destroyed.standard_error(), lint.standard_error()});
  }
  return rows;
}

void write_dispersion_table(std::ostream& out, const MaterialParams& material, int n_points) {
  if (n_points < 1) throw ConfigError("dispersion table needs at least one point");
  out << "p,energy,group_velocity,curvature,region\n";
  for (int i = 0; i < n_points; ++i) {
    const double p = n_points == 1   ? 0.0
                     : i == n_points - 1 ? material.max_momentum
                                         : material.max_momentum * i / (n_points - 1);
    const DispersionSample s = evaluate(material, p);
    out << format_number(s.momentum) << ',' << format_number(s.energy) << ','
        << format_number(s.group_velocity) << ',' << format_number(s.curvature) << ','
        << to_string(classify_curvature(material, p)) << '\n';
  }
  if (const auto sockton = find_sockton_minimum(material)) {
    out << "# sockton p0=" << format_number(sockton->momentum)
        << " gap=" << format_number(sockton->gap)
        << " effective_mass=" << format_number(sockton->effective_mass) << '\n';
  }
}

void write_sweep_table(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "axis_value,mean_unpaired,mean_created,mean_destroyed,mean_lint\n";
  for (const auto& r : rows) {
    out << format_number(r.axis_value) << ',' << format_number(r.mean_unpaired) << ','
        << format_number(r.mean_created) << ',' << format_number(r.mean_destroyed) << ','
        << format_number(r.mean_lint) << '\n';
  }
}

int cmd_dispersion(const RunConfig& config, const std::string& material_name, int n_points,
                   std::ostream& err) {
  try {
    const MaterialParams material = config.material(material_name);
    if (n_points < 1) throw ConfigError("--points must be >= 1");
    ensure_dir(config.output_dir);
    auto out = open_output(dispersion_path(config, material_name));
    write_dispersion_table(out, material, n_points);
    return kExitOk;
  } catch (const Error& e) {
    err << "dispersion: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_simulate(const RunConfig& config, std::ostream& err) {
  std::vector<ReplicaResult> results;
  try {
    ensure_dir(config.output_dir);
    results = run_replicas(config);
  } catch (const Error& e) {
    err << "simulate: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "simulate: " << e.what() << '\n';
    return kExitViolation;
  }

  bool all_verified = true;
  Json replicas = Json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    const int index = static_cast<int>(i);
    {
      auto out = open_output(events_path(config, index));
      write_event_log(out, r.state.event_log);
    }
    Json summary = replica_summary(r);
    summary["events_file"] = events_path(config, index).filename().string();
    {
      auto out = open_output(replica_summary_path(config, index));
      out << summary.dump(2) << '\n';
    }
    replicas.push_back(summary);
    all_verified = all_verified && r.ledger_verified;
    if (!r.ledger_verified) err << "simulate: ledger check failed for seed " << r.seed << '\n';
  }
  Json top{{"replicas", replicas}, {"all_ledgers_verified", all_verified}};
  {
    auto out = open_output(summary_path(config));
    out << top.dump(2) << '\n';
  }
  return all_verified ? kExitOk : kExitViolation;
}

int cmd_sweep(const RunConfig& config, const std::string& axis_name, double from, double to,
              int steps, std::ostream& err) {
  try {
    SweepAxis axis;
    if (axis_name == "omega") {
      axis = SweepAxis::Omega;
    } else if (axis_name == "temperature") {
      axis = SweepAxis::Temperature;
    } else {
      throw ConfigError("--axis must be omega or temperature");
    }
    const auto rows = run_sweep(config, axis, from, to, steps);
    ensure_dir(config.output_dir);
    auto out = open_output(sweep_path(config, axis_name));
    write_sweep_table(out, rows);
    return kExitOk;
  } catch (const Error& e) {
    err << "sweep: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "sweep: " << e.what() << '\n';
    return kExitViolation;
  }
}

int cmd_census(const fs::path& events_file, const fs::path& summary_file,
               const fs::path& report_file, std::ostream& err) {
  std::vector<EventRecord> log;
  CensusReport initial, final_census;
  try {
    std::ifstream events(events_file);
    if (!events) throw ConfigError("cannot open events file '" + events_file.string() + "'");
    log = read_event_log(events);

    std::ifstream summary_in(summary_file);
    if (!summary_in) throw ConfigError("cannot open summary '" + summary_file.string() + "'");
    Json summary;
    try {
      summary = Json::parse(summary_in);
    } catch (const Json::exception& e) {
      throw ConfigError(std::string("summary is not valid JSON: ") + e.what());
    }
    if (summary.contains("replicas")) {
      if (!summary["replicas"].is_array() || summary["replicas"].size() != 1) {
        throw ConfigError("summary lists several replicas; pass a per-replica summary file");
      }
      summary = summary["replicas"][0];
    }
    if (!summary.is_object() || !summary.contains("initial_census") ||
        !summary.contains("final_census")) {
      throw ConfigError("summary needs initial_census and final_census");
    }
    initial = census_from_json(summary["initial_census"]);
    final_census = census_from_json(summary["final_census"]);
  } catch (const Error& e) {
    err << "census: " << e.what() << '\n';
    return kExitUsage;
  }

  const LedgerAudit audit = audit_ledger(initial, final_census, log);
  Json report{{"consistent", audit.consistent},
              {"event_counts", to_json(audit.counts)},
              {"initial_total", initial.total},
              {"final_total", final_census.total},
              {"expected_total", audit.expected_total},
              {"expected_parity", std::string(to_string(audit.expected_parity))},
              {"final_parity", std::string(to_string(final_census.parity))},
              {"final_unpaired", final_census.unpaired},
              {"problem", audit.problem}};
  try {
    if (report_file.has_parent_path()) ensure_dir(report_file.parent_path());
    auto out = open_output(report_file);
    out << report.dump(2) << '\n';
  } catch (const Error& e) {
    err << "census: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!audit.consistent) err << "census: " << audit.problem << '\n';
  return audit.consistent ? kExitOk : kExitViolation;
}

}  // namespace socktonics
