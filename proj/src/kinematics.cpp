#include "socktonics/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "socktonics/errors.hpp"

namespace socktonics {

namespace {

// Energies tabulated on the bracketing grid x_k = p_max k / cells, k = 0..cells.
class PartnerTable {
 public:
  PartnerTable(const Curve& curve, std::size_t cells) : curve_(curve), x_(cells + 1), e_(cells + 1) {
    for (std::size_t k = 0; k <= cells; ++k) {
      x_[k] = curve.max_momentum * static_cast<double>(k) / static_cast<double>(cells);
      e_[k] = k == 0 ? 0.0 : curve.energy(x_[k]);
    }
  }

  // Appends the roots of eps(x) = target to `out` in ascending order.
  void roots(double target, std::vector<double>& out) const {
    double f_prev = e_[0] - target;
    for (std::size_t k = 1; k < x_.size(); ++k) {
      const double f = e_[k] - target;
      if (f == 0.0) {
        out.push_back(x_[k]);
      } else if ((f_prev < 0.0 && f > 0.0) || (f_prev > 0.0 && f < 0.0)) {
        out.push_back(bisect(x_[k - 1], x_[k], f_prev < 0.0, target));
      }
      f_prev = f;
    }
  }

 private:
  double bisect(double lo, double hi, bool rising, double target) const {
    for (int it = 0; it < 200 && hi - lo > kPartnerTolerance; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double f = curve_.energy(mid) - target;
      if (f == 0.0) return mid;
      if ((f < 0.0) == rising) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }

  const Curve& curve_;
  std::vector<double> x_;
  std::vector<double> e_;
};

void check_parent(const Curve& curve, double p) {
  if (!(p > 0.0) || p > curve.max_momentum) {
    throw DomainError("parent momentum " + std::to_string(p) + " outside (0, " +
                      std::to_string(curve.max_momentum) + "]");
  }
}

}  // namespace

Curve Curve::of(const MaterialParams& material) {
  Curve c;
  c.energy = [material](double p) { return socktonics::energy(material, p); };
  c.group_velocity = [material](double p) { return evaluate(material, p).group_velocity; };
  c.max_momentum = material.max_momentum;
  c.label = material.name;
  return c;
}

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

bool admits_opening_angle(double p, double p1, double p2) {
  const double band = kCollinearBand * p;
  return p1 > 0.0 && p2 > 0.0 && (p1 + p2 - p) > band && (p - std::abs(p1 - p2)) > band;
}

double opening_cosine(double p, double p1, double p2) {
  return std::clamp((p * p - p1 * p1 - p2 * p2) / (2.0 * p1 * p2), -1.0, 1.0);
}

std::vector<double> solve_partner(const Curve& curve, double p, double p1) {
  check_parent(curve, p);
  if (!(p1 > 0.0) || p1 > curve.max_momentum) {
    throw DomainError("daughter momentum " + std::to_string(p1) + " outside (0, p_max]");
  }
  const double target = curve.energy(p) - curve.energy(p1);
  if (!(target > 0.0)) {
    throw DomainError("no energy budget: eps(p1) >= eps(p)");
  }
  std::vector<double> out;
  PartnerTable(curve, kPartnerGridCells).roots(target, out);
  return out;
}

std::vector<double> solve_partner(const MaterialParams& material, double p, double p1) {
  return solve_partner(Curve::of(material), p, p1);
}

FeasibilityReport feasibility(const Curve& curve, double p, std::size_t grid_n) {
  check_parent(curve, p);
  if (grid_n == 0) throw DomainError("feasibility grid needs at least one cell");

  FeasibilityReport report;
  report.parent_momentum = p;
  report.cell_width = curve.max_momentum / static_cast<double>(grid_n);
  report.cell_offsets.push_back(0);

  const PartnerTable table(curve, kPartnerGridCells);
  const double parent_energy = curve.energy(p);
  std::vector<double> roots;
  for (std::size_t i = 0; i < grid_n; ++i) {
    const double p1 = (static_cast<double>(i) + 0.5) * report.cell_width;
    const double target = parent_energy - curve.energy(p1);
    if (!(target > 0.0)) continue;
    roots.clear();
    table.roots(target, roots);
    const std::size_t before = report.solutions.size();
    for (double p2 : roots) {
      if (admits_opening_angle(p, p1, p2)) {
        report.solutions.push_back({p1, p2, opening_cosine(p, p1, p2)});
      }
    }
    if (report.solutions.size() > before) {
      report.feasible_cells.push_back(i);
      report.cell_offsets.push_back(report.solutions.size());
    }
  }
  report.phase_space = static_cast<double>(report.feasible_cells.size()) * report.cell_width;
  report.feasible = report.phase_space > 0.0;
  return report;
}

FeasibilityReport feasibility(const MaterialParams& material, double p, std::size_t grid_n) {
  return feasibility(Curve::of(material), p, grid_n);
}

DecaySolution sample_daughters(const Curve& curve, const FeasibilityReport& report, Rng& rng) {
  if (!report.feasible || report.feasible_cells.empty()) {
    throw InfeasibleError("no Beliaev split available at p = " +
                          std::to_string(report.parent_momentum));
  }
  const double p = report.parent_momentum;
  const std::size_t n_cells = report.feasible_cells.size();
  const auto k = std::min(static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n_cells)),
                          n_cells - 1);
  const double lower = static_cast<double>(report.feasible_cells[k]) * report.cell_width;
  const double p1 = lower + uniform01(rng) * report.cell_width;

  // Each partner branch valid at the midpoint gets equal weight.
  const std::size_t first = report.cell_offsets[k];
  const std::size_t n_branches = report.cell_offsets[k + 1] - first;
  const auto branch = std::min(
      static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n_branches)), n_branches - 1);
  const DecaySolution& representative = report.solutions[first + branch];

  if (!(p1 > 0.0)) return representative;
  const double target = curve.energy(p) - curve.energy(p1);
  if (!(target > 0.0)) return representative;

  std::vector<double> roots;
  PartnerTable(curve, kPartnerGridCells).roots(target, roots);
  double best = std::numeric_limits<double>::quiet_NaN();
  double best_distance = std::numeric_limits<double>::infinity();
  for (double p2 : roots) {
    if (!admits_opening_angle(p, p1, p2)) continue;
    const double d = std::abs(p2 - representative.p2);
    if (d < best_distance) {
      best_distance = d;
      best = p2;
    }
  }
  if (std::isnan(best)) return representative;
  return {p1, best, opening_cosine(p, p1, best)};
}

DecaySolution sample_daughters(const Curve& curve, double p, Rng& rng) {
  return sample_daughters(curve, feasibility(curve, p), rng);
}

DecaySolution sample_daughters(const MaterialParams& material, double p, Rng& rng) {
  return sample_daughters(Curve::of(material), p, rng);
}

}  // namespace socktonics
