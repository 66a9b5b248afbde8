#include "socktonics/dispersion.hpp"

#include <cmath>
#include <string>

#include "socktonics/errors.hpp"

namespace socktonics {

namespace {

void check_domain(const MaterialParams& m, double p) {
  if (!(p >= 0.0) || p > m.max_momentum) {
    throw DomainError("momentum " + std::to_string(p) + " outside [0, " +
                      std::to_string(m.max_momentum) + "] for material '" + m.name + "'");
  }
}

double normalization(const MaterialParams& m) {
  return m.center_momentum * m.center_momentum + m.width_momentum * m.width_momentum;
}

double dispersive_energy(const MaterialParams& m, double p) {
  const double d = p - m.center_momentum;
  return m.sound_speed * p * (d * d + m.width_momentum * m.width_momentum) / normalization(m);
}

double dispersive_velocity(const MaterialParams& m, double p) {
  const double pr = m.center_momentum;
  return m.sound_speed * (3.0 * p * p - 4.0 * pr * p + normalization(m)) / normalization(m);
}

double dispersive_curvature(const MaterialParams& m, double p) {
  return m.sound_speed * (6.0 * p - 4.0 * m.center_momentum) / normalization(m);
}

// Discriminant of the derivative quadratic, scaled: p_r^2 - 3 w^2.
double stationary_discriminant(const MaterialParams& m) {
  return m.center_momentum * m.center_momentum - 3.0 * m.width_momentum * m.width_momentum;
}

void require_extrema(const MaterialParams& m) {
  if (!(m.width_momentum > 0.0) || !(stationary_discriminant(m) > 0.0) ||
      !(m.center_momentum > 0.0)) {
    throw ParamError("material '" + m.name + "': need p_r > sqrt(3) w > 0 for a sockton minimum");
  }
}

}  // namespace

void validate(const MaterialParams& m) {
  auto fail = [&](const std::string& what) {
    throw ParamError("material '" + m.name + "': " + what);
  };
  if (!(m.sound_speed > 0.0)) fail("speed of sock must be positive");
  if (!(m.max_momentum > 0.0)) fail("momentum cutoff must be positive");
  if (!(m.momentum_coupling > 0.0)) fail("momentum coupling must be positive");
  if (!(m.shrink_coupling >= 0.0)) fail("shrink coupling must be non-negative");
  if (m.dispersive()) require_extrema(m);
}

DispersionSample evaluate(const MaterialParams& m, double p) {
  check_domain(m, p);
  if (!m.dispersive()) {
    return {p, m.sound_speed * p, m.sound_speed, 0.0};
  }
  return {p, dispersive_energy(m, p), dispersive_velocity(m, p), dispersive_curvature(m, p)};
}

double energy(const MaterialParams& m, double p) {
  check_domain(m, p);
  return m.dispersive() ? dispersive_energy(m, p) : m.sound_speed * p;
}

std::optional<SocktonPoint> find_sockton_minimum(const MaterialParams& m) {
  if (!m.dispersive()) return std::nullopt;
  require_extrema(m);
  const double p0 = (2.0 * m.center_momentum + std::sqrt(stationary_discriminant(m))) / 3.0;
  if (p0 > m.max_momentum) return std::nullopt;
  const DispersionSample s = evaluate(m, p0);
  return SocktonPoint{p0, s.energy, 1.0 / s.curvature};
}

std::optional<double> find_maxon(const MaterialParams& m) {
  if (!m.dispersive()) return std::nullopt;
  require_extrema(m);
  const double p = (2.0 * m.center_momentum - std::sqrt(stationary_discriminant(m))) / 3.0;
  if (p > m.max_momentum) return std::nullopt;
  return p;
}

Curvature classify_curvature(const MaterialParams& m, double p) {
  const double kappa = evaluate(m, p).curvature;
  if (std::abs(kappa) <= kFlatCurvatureTolerance) return Curvature::Flat;
  return kappa > 0.0 ? Curvature::Convex : Curvature::Concave;
}

std::string_view to_string(Curvature c) {
  switch (c) {
    case Curvature::Concave: return "concave";
    case Curvature::Convex: return "convex";
    case Curvature::Flat: return "flat";
  }
  return "flat";
}

std::string_view to_string(DispersionKind k) {
  return k == DispersionKind::Dispersive ? "dispersive" : "nondispersive";
}

std::vector<std::string> preset_names() { return {"polyester", "nylon", "cotton", "wool"}; }

std::optional<MaterialParams> find_preset(std::string_view name) {
  MaterialParams m;
  m.name = std::string(name);
  if (name == "polyester" || name == "nylon") {
    m.kind = DispersionKind::Nondispersive;
    return m;
  }
  if (name == "cotton" || name == "wool") {
    m.kind = DispersionKind::Dispersive;
    m.center_momentum = 1.0;
    m.width_momentum = name == "cotton" ? 0.4 : 0.25;
    m.shrink_coupling = 1.0;
    return m;
  }
  return std::nullopt;
}

MaterialParams preset(std::string_view name) {
  if (auto m = find_preset(name)) return *m;
  throw ConfigError("unknown material preset '" + std::string(name) + "'");
}

}  // namespace socktonics
