#pragma once

#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "socktonics/dispersion.hpp"

namespace socktonics {

using Rng = std::mt19937_64;

/// A gapless, positive-for-p>0 dispersion curve on (0, max_momentum].
/// Materials convert to this; tests also build analytic curves directly.
struct Curve {
  std::function<double(double)> energy;
  std::function<double(double)> group_velocity;
  double max_momentum = 0.0;
  std::string label;

  static Curve of(const MaterialParams& material);
};

/// One Beliaev split p -> p1 + p2 in the drum plane.
struct DecaySolution {
  double p1 = 0.0;
  double p2 = 0.0;
  double opening_cosine = 0.0;  // cos of the angle between the daughter momenta
};

/// Result of scanning the daughter momentum p1 over the whole spectrum.
///
/// The scan cuts (0, p_max] into cells of equal width; a cell is feasible when
/// its midpoint admits at least one partner root satisfying the strict triangle
/// inequality. phase_space is the summed width of feasible cells. Daughters
/// above the parent momentum are included: where twice the sockton gap lies
/// below the maxon energy a phonon can split into two socks near p0.
struct FeasibilityReport {
  double parent_momentum = 0.0;
  double cell_width = 0.0;
  bool feasible = false;
  double phase_space = 0.0;
  std::vector<std::size_t> feasible_cells;
  // Valid solutions at feasible cell midpoints; solutions for feasible_cells[k]
  // occupy [cell_offsets[k], cell_offsets[k + 1]).
  std::vector<DecaySolution> solutions;
  std::vector<std::size_t> cell_offsets;
};

inline constexpr std::size_t kPartnerGridCells = 512;
inline constexpr double kPartnerTolerance = 1e-12;
// Relative triangle slack below which a split counts as collinear and is dropped.
inline constexpr double kCollinearBand = 1e-9;

/// All partner roots p2 in (0, p_max] of eps(p2) = eps(p) - eps(p1), ascending.
/// Throws DomainError unless p1 > 0, eps(p1) < eps(p) and p <= p_max.
std::vector<double> solve_partner(const Curve& curve, double p, double p1);
std::vector<double> solve_partner(const MaterialParams& material, double p, double p1);

/// Throws DomainError unless 0 < p <= p_max.
FeasibilityReport feasibility(const Curve& curve, double p, std::size_t grid_n = 512);
FeasibilityReport feasibility(const MaterialParams& material, double p,
                              std::size_t grid_n = 512);

/// Splits with p1 uniform over the feasible cells. Throws InfeasibleError if
/// the report is empty.
DecaySolution sample_daughters(const Curve& curve, const FeasibilityReport& report, Rng& rng);
DecaySolution sample_daughters(const Curve& curve, double p, Rng& rng);
DecaySolution sample_daughters(const MaterialParams& material, double p, Rng& rng);

/// True if the triangle |p1 - p2| <= p <= p1 + p2 holds outside the collinear band.
bool admits_opening_angle(double p, double p1, double p2);

double opening_cosine(double p, double p1, double p2);

/// Uniform in [0, 1) from the top 53 bits of one engine draw.
double uniform01(Rng& rng);

}  // namespace socktonics
