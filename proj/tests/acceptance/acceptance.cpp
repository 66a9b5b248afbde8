// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "socktonics/census.hpp"
#include "socktonics/commands.hpp"
#include "socktonics/config.hpp"
#include "socktonics/dispersion.hpp"
#include "socktonics/engine.hpp"
#include "socktonics/kinematics.hpp"
#include "socktonics/rates.hpp"
#include "support/oracles.hpp"

using namespace socktonics;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double time_limit_s;  // 0 = none
  std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// ---------------------------------------------------------------------------

Outcome gapless_phonons() {
  double worst = 0.0;
  for (const auto& name : preset_names()) {
    const MaterialParams m = preset(name);
    if (energy(m, 0.0) != 0.0) return {false, name + ": eps(0) != 0"};
    const double slope = energy(m, 1e-6) / 1e-6;
    const double rel = std::abs(slope - m.sound_speed) / m.sound_speed;
    worst = std::max(worst, rel);
    if (rel >= 1e-4) return {false, fmt("%s: slope error %.3g", name.c_str(), rel)};
  }
  return {true, fmt("%zu presets, worst relative slope error %.2e", preset_names().size(), worst)};
}

Outcome sockton_consistency() {
  const MaterialParams cotton = preset("cotton");
  const auto s = find_sockton_minimum(cotton);
  if (!s) return {false, "cotton has no sockton"};
  const double maxon = *find_maxon(cotton);
  const double golden = oracle::golden_section_minimize(
      [&](double p) { return energy(cotton, p); }, maxon, cotton.max_momentum, 1e-12);
  const double dp = std::abs(golden - s->momentum);
  const double v = std::abs(evaluate(cotton, s->momentum).group_velocity);
  return {dp < 1e-8 && v <= 1e-9, fmt("p0=%.10f |dp0|=%.2e |v_g(p0)|=%.2e", s->momentum, dp, v)};
}

Outcome oracle_equivalence() {
  constexpr int kOracleCells = 400;
  const std::vector<Curve> curves = {Curve::of(preset("polyester")), oracle::concave_curve(),
                                     oracle::convex_curve(), Curve::of(preset("cotton"))};
  std::mt19937_64 rng(20261014);
  int agreed = 0, disagreed = 0, skipped = 0, feasible = 0;
  std::string disagreements;
  while (agreed + disagreed < 50) {
    const Curve& c = curves[rng() % curves.size()];
    const double h = c.max_momentum / kOracleCells;
    const double p = c.max_momentum * (1.0 - uniform01(rng));
    const FeasibilityReport r = feasibility(c, p);
    // Boundary samples: the verdict flips within one oracle cell, or every
    // split hugs the collinear edge closer than the oracle can resolve.
    bool boundary = p - h <= 0.0 || p + h > c.max_momentum;
    if (!boundary) {
      boundary = feasibility(c, p - h).feasible != r.feasible ||
                 feasibility(c, p + h).feasible != r.feasible;
    }
    if (!boundary && r.feasible) {
      double slack = 0.0;
      for (const auto& d : r.solutions) {
        slack = std::max(slack, std::min(d.p1 + d.p2 - p, p - std::abs(d.p1 - d.p2)));
      }
      boundary = slack < std::sqrt(2.0) * h;
    }
    if (boundary) {
      ++skipped;
      continue;
    }
    const bool expected = oracle::feasibility_oracle(c, p, kOracleCells);
    if (expected == r.feasible) {
      ++agreed;
      feasible += r.feasible;
    } else {
      ++disagreed;
      disagreements += fmt(" %s@%.6f", c.label.c_str(), p);
    }
  }
  if (disagreed > 0) return {false, fmt("%d/50 disagree:", disagreed) + disagreements};
  return {true, fmt("50/50 agree (%d feasible), %d boundary samples skipped", feasible, skipped)};
}

Outcome conservation() {
  struct Parent {
    Curve curve;
    FeasibilityReport report;
  };
  std::vector<Parent> parents;
  std::mt19937_64 rng(7);
  for (const Curve& c : {oracle::convex_curve(), Curve::of(preset("cotton")),
                         Curve::of(preset("wool"))}) {
    for (int k = 1; k <= 40; ++k) {
      const double p = c.max_momentum * k / 40.0;
      FeasibilityReport r = feasibility(c, p);
      if (r.feasible) parents.push_back({c, std::move(r)});
    }
  }
  if (parents.empty()) return {false, "no feasible parents"};
  double worst_energy = 0.0, worst_triangle = 0.0;
  int bad = 0;
  constexpr int kEvents = 10000;
  for (int i = 0; i < kEvents; ++i) {
    const Parent& par = parents[rng() % parents.size()];
    const double p = par.report.parent_momentum;
    const DecaySolution d = sample_daughters(par.curve, par.report, rng);
    const double e = par.curve.energy(p);
    const double mismatch =
        std::abs(par.curve.energy(d.p1) + par.curve.energy(d.p2) - e) / std::max(e, 1.0);
    const double triangle = std::max({std::abs(d.p1 - d.p2) - p, p - (d.p1 + d.p2), 0.0});
    worst_energy = std::max(worst_energy, mismatch);
    worst_triangle = std::max(worst_triangle, triangle);
    if (mismatch > 1e-9 || triangle > 0.0) ++bad;
  }
  return {bad == 0, fmt("%d events from %zu parents, %d violations, worst energy %.2e",
                        kEvents, parents.size(), bad, worst_energy)};
}

Outcome concave_forbidden() {
  const Curve c = oracle::concave_curve();
  // Subadditivity of the test curve itself on a fine grid.
  for (int i = 1; i <= 200; ++i) {
    for (int j = 1; i + j <= 200; ++j) {
      const double a = 0.01 * i, b = 0.01 * j;
      if (c.energy(a) + c.energy(b) < c.energy(a + b)) {
        return {false, fmt("curve not subadditive at %.2f, %.2f", a, b)};
      }
    }
  }
  for (int k = 1; k <= 20; ++k) {
    const double p = c.max_momentum * k / 20.0;
    if (feasibility(c, p).feasible) return {false, fmt("feasible at p=%.3f", p)};
  }
  return {true, "20/20 momenta infeasible"};
}

Outcome synthetic_immunity() {
  std::mt19937_64 rng(99);
  auto uniform = [&](double a, double b) { return a + (b - a) * uniform01(rng); };
  const std::vector<MixEntry> mix = {{preset("polyester"), 1.0}};
  for (int run = 0; run < 100; ++run) {
    WashProgram prog;
    prog.omega = uniform(0.01, 0.5);
    prog.radius = uniform(0.2, 2.0);
    prog.temperature = uniform(0.0, 5.0);
    prog.quench = uniform(0.0, 3.0);
    prog.duration = uniform(1.0, 50.0);
    CouplingConstants g;
    g.beliaev = uniform(0.0, 5.0);
    g.landau_khalatnikov = uniform(0.0, 5.0);
    g.casimir = uniform(0.0, 5.0);
    g.casimir_width = uniform(0.001, 0.5);
    const LaundryState start = init_load(1 + run % 12, mix, prog, g, rng());
    const LaundryState end = run_cycle(start);
    if (!end.event_log.empty()) return {false, fmt("run %d: %zu events", run, end.event_log.size())};
    for (std::size_t i = 0; i < start.socks.size(); ++i) {
      if (end.socks[i].length != start.socks[i].length) {
        return {false, fmt("run %d: sock %zu length changed", run, i)};
      }
    }
  }
  return {true, "100 programs: 0 events, lengths unchanged"};
}

RunConfig cotton_config() {
  RunConfig c = parse_config(Json::parse(R"({
    "load": {"pairs": 10, "mix": [{"material": "cotton", "weight": 1}]},
    "program": {"omega": 0.1, "radius": 1.0, "temperature": 0.5, "quench": 0.0, "duration": 10.0},
    "couplings": {"g_beliaev": 0.2, "g_lk": 0.1, "g_casimir": 0.5, "gamma_casimir": 0.01},
    "seed": 1000
  })"));
  return c;
}

Outcome temperature_law() {
  const std::vector<double> temps = {0.2, 0.5, 1.0, 2.0};
  RunConfig c = cotton_config();
  c.replicas = 200;
  std::vector<double> mean, se;
  for (double t : temps) {
    c.program.temperature = t;
    const auto reps = run_replicas(c);
    double s = 0.0, s2 = 0.0;
    for (const auto& r : reps) {
      s += static_cast<double>(r.lint_mass);
      s2 += static_cast<double>(r.lint_mass * r.lint_mass);
    }
    const double n = static_cast<double>(reps.size());
    const double m = s / n;
    mean.push_back(m);
    se.push_back(std::sqrt(std::max(s2 / n - m * m, 0.0) / (n - 1.0)));
  }
  bool ok = true;
  for (std::size_t k = 0; k + 1 < temps.size(); ++k) {
    const double sigma = std::hypot(se[k], se[k + 1]);
    ok = ok && mean[k + 1] >= mean[k] - 3.0 * sigma;
  }
  std::string d = "mean lint";
  for (std::size_t k = 0; k < temps.size(); ++k) {
    d += fmt(" T=%.1f:%.2f(%.2f)", temps[k], mean[k], se[k]);
  }
  return {ok, d};
}

Outcome casimir_resonance() {
  const MaterialParams cotton = preset("cotton");
  const double gap = find_sockton_minimum(cotton)->gap;
  const double omega_star = resonant_frequency(cotton);
  RunConfig c = cotton_config();
  c.couplings.beliaev = 0.01;
  c.couplings.landau_khalatnikov = 0.05;
  c.couplings.casimir = 2.0;
  c.couplings.casimir_width = 0.05 * gap;
  c.replicas = 100;
  const double from = 0.2 * omega_star, to = 3.0 * omega_star;
  constexpr int kSteps = 25;
  const auto rows = run_sweep(c, SweepAxis::Omega, from, to, kSteps);
  const auto best = std::max_element(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.mean_created < b.mean_created;
  });
  const double cell = (to - from) / (kSteps - 1);
  const double miss = std::abs(best->axis_value - omega_star);
  return {miss <= cell, fmt("argmax Omega=%.5f (mean_created %.2f), Omega*=%.5f, cell %.5f",
                            best->axis_value, best->mean_created, omega_star, cell)};
}

Outcome ledger_fuzz() {
  std::mt19937_64 rng(4242);
  auto uniform = [&](double a, double b) { return a + (b - a) * uniform01(rng); };
  const std::vector<std::string> names = preset_names();
  int failures = 0;
  std::int64_t events = 0;
  for (int run = 0; run < 1000; ++run) {
    RunConfig c;
    MaterialParams custom;
    custom.name = "custom";
    custom.kind = DispersionKind::Dispersive;
    custom.center_momentum = uniform(0.8, 1.5);
    custom.width_momentum = uniform(0.05, 0.9 * custom.center_momentum / std::sqrt(3.0));
    custom.shrink_coupling = uniform(0.0, 2.0);
    c.materials = {custom};
    for (const auto& n : names) c.materials.push_back(preset(n));
    c.load.pairs = 1 + static_cast<int>(rng() % 8);
    c.load.mix.clear();
    const int kinds = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < kinds; ++k) {
      c.load.mix.push_back({c.materials[rng() % c.materials.size()].name, uniform(0.1, 2.0)});
    }
    c.program.omega = uniform(0.01, 0.2);
    c.program.radius = uniform(0.5, 1.5);
    c.program.temperature = uniform(0.0, 3.0);
    c.program.quench = uniform(0.0, 1.0);
    c.program.duration = uniform(0.5, 6.0);
    c.couplings.beliaev = uniform(0.0, 1.0);
    c.couplings.landau_khalatnikov = uniform(0.0, 1.0);
    c.couplings.casimir = uniform(0.0, 2.0);
    c.couplings.casimir_width = uniform(0.005, 0.1);
    const ReplicaResult r = run_replica(c, rng());
    events += static_cast<std::int64_t>(r.state.event_log.size());
    if (!r.ledger_verified || !verify_ledger(r.initial, r.final_census, r.state.event_log)) {
      ++failures;
    }
  }
  return {failures == 0, fmt("1000 configs, %lld events, %d ledger failures",
                             static_cast<long long>(events), failures)};
}

Outcome ambiguity_symmetry() {
  std::string d;
  bool ok = true;
  double worst_odds = 0.0;
  for (double lam : {0.1, 1.0, 5.0}) {
    const AmbiguityVerdict v = ambiguity_likelihood(lam, lam, 0.0);
    worst_odds = std::max(worst_odds, std::abs(v.odds_ratio - 1.0));
    ok = ok && std::abs(v.odds_ratio - 1.0) <= 1e-12 && v.verdict == Verdict::Ambiguous;
  }
  d += fmt("|odds-1| <= %.1e;", worst_odds);
  struct Case {
    double b, l, c;
  };
  unsigned seed = 1;
  for (const Case k : {Case{0.1, 0.1, 0.0}, Case{1.0, 1.0, 0.0}, Case{5.0, 5.0, 0.0},
                       Case{1.5, 2.0, 0.4}}) {
    const AmbiguityVerdict v = ambiguity_likelihood(k.b, k.l, k.c);
    const oracle::NetChange mc = oracle::sample_net_change(k.b, k.l, k.c, 1000000, seed++);
    const double zp = std::abs(v.p_net_plus - mc.p_plus) / mc.se_plus;
    const double zm = std::abs(v.p_net_minus - mc.p_minus) / mc.se_minus;
    ok = ok && zp <= 3.0 && zm <= 3.0;
    d += fmt(" (%.1f,%.1f,%.1f) z=%.2f/%.2f", k.b, k.l, k.c, zp, zm);
  }
  return {ok, d};
}

Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / "socktonics_acceptance_determinism";
  fs::remove_all(root);
  RunConfig a = load_config(SOCKTONICS_EXAMPLE_CONFIG);
  RunConfig b = a;
  a.output_dir = root / "a";
  b.output_dir = root / "b";
  std::ostringstream err;
  if (cmd_simulate(a, err) != kExitOk || cmd_simulate(b, err) != kExitOk) {
    return {false, "simulate failed: " + err.str()};
  }
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  };
  int files = 0;
  for (const auto& entry : fs::directory_iterator(a.output_dir)) {
    const fs::path twin = b.output_dir / entry.path().filename();
    if (!fs::exists(twin) || slurp(entry.path()) != slurp(twin)) {
      return {false, "differs: " + entry.path().filename().string()};
    }
    ++files;
  }
  const std::size_t other = std::distance(fs::directory_iterator(b.output_dir), {});
  if (other != static_cast<std::size_t>(files)) return {false, "file sets differ"};
  return {files > 0, fmt("%d files byte-identical", files)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "gaplessness and phonon slope", 1.0, gapless_phonons},
      {"AC2", "sockton consistency", 0.0, sockton_consistency},
      {"AC3", "kinematic oracle equivalence", 30.0, oracle_equivalence},
      {"AC4", "conservation in sampled decays", 0.0, conservation},
      {"AC5", "concave spectrum forbids decay", 0.0, concave_forbidden},
      {"AC6", "synthetic immunity", 0.0, synthetic_immunity},
      {"AC7", "temperature law", 120.0, temperature_law},
      {"AC8", "casimir resonance", 120.0, casimir_resonance},
      {"AC9", "ledger identity and parity", 0.0, ledger_fuzz},
      {"AC10", "ambiguity symmetry", 0.0, ambiguity_symmetry},
      {"AC11", "determinism", 0.0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit_s > 0.0 && secs >= c.time_limit_s) {
      o.pass = false;
      o.detail += fmt(" [over time limit %.0f s]", c.time_limit_s);
    }
    failed += !o.pass;
    std::printf("%-4s %s  %-34s %7.2fs  %s\n", c.id.c_str(), o.pass ? "PASS" : "FAIL",
                c.title.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
