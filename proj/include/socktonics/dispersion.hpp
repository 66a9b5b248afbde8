#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace socktonics {

// Natural units throughout: hbar = k_B = 1.

enum class DispersionKind { Nondispersive, Dispersive };

enum class Curvature { Concave, Convex, Flat };

/// Parameters of one sock material.
///
/// Nondispersive materials follow the phonon line eps = c_s p. Dispersive
/// materials follow the rational cubic
///
///   eps(p) = c_s p [(p - p_r)^2 + w^2] / (p_r^2 + w^2)
///
/// which is gapless, has slope c_s at p = 0, and for p_r > sqrt(3) w has
/// exactly one maxon and one sockton minimum.
struct MaterialParams {
  std::string name;
  DispersionKind kind = DispersionKind::Nondispersive;
  double sound_speed = 1.0;      // c_s
  double center_momentum = 0.0;  // p_r, dispersive only
  double width_momentum = 0.0;   // w, dispersive only
  double max_momentum = 2.0;     // spectrum cutoff
  double momentum_coupling = 15.0;  // momentum per (drum frequency x radius)
  double shrink_coupling = 0.0;     // eta

  bool dispersive() const { return kind == DispersionKind::Dispersive; }
};

/// Throws ParamError if any field violates the material invariants.
void validate(const MaterialParams& material);

struct DispersionSample {
  double momentum = 0.0;
  double energy = 0.0;
  double group_velocity = 0.0;
  double curvature = 0.0;
};

struct SocktonPoint {
  double momentum = 0.0;        // p0
  double gap = 0.0;             // Delta = eps(p0)
  double effective_mass = 0.0;  // 1 / kappa(p0)
};

inline constexpr double kFlatCurvatureTolerance = 1e-12;

DispersionSample evaluate(const MaterialParams& material, double p);

/// Energy only; same arithmetic as evaluate().energy.
double energy(const MaterialParams& material, double p);

/// The sockton minimum of a dispersive material, or nullopt for linear
/// spectra and for minima beyond the momentum cutoff. Throws ParamError when
/// the dispersive curve has no real stationary points.
std::optional<SocktonPoint> find_sockton_minimum(const MaterialParams& material);

/// Momentum of the maxon (the local maximum preceding the sockton).
std::optional<double> find_maxon(const MaterialParams& material);

Curvature classify_curvature(const MaterialParams& material, double p);

std::string_view to_string(Curvature c);
std::string_view to_string(DispersionKind k);

// Built-in materials: polyester, nylon, cotton, wool.
std::vector<std::string> preset_names();
std::optional<MaterialParams> find_preset(std::string_view name);
MaterialParams preset(std::string_view name);  // throws ConfigError

}  // namespace socktonics
