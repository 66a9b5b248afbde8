#include "socktonics/rates.hpp"

#include <cmath>
#include <string>

#include "socktonics/errors.hpp"

namespace socktonics {

void validate(const WashProgram& w) {
  if (!(w.omega >= 0.0)) throw ConfigError("program.omega must be >= 0");
  if (!(w.radius > 0.0)) throw ConfigError("program.radius must be > 0");
  if (!(w.temperature >= 0.0)) throw ConfigError("program.temperature must be >= 0");
  if (!(w.quench >= 0.0)) throw ConfigError("program.quench must be >= 0");
  if (!(w.duration > 0.0) || !std::isfinite(w.duration)) {
    throw ConfigError("program.duration must be finite and > 0");
  }
}

void validate(const CouplingConstants& c) {
  if (!(c.beliaev >= 0.0) || !(c.landau_khalatnikov >= 0.0) || !(c.casimir >= 0.0) ||
      !(c.casimir_width >= 0.0)) {
    throw ConfigError("couplings must be non-negative");
  }
  if (c.casimir > 0.0 && !(c.casimir_width > 0.0)) {
    throw ConfigError("couplings.casimir_width must be > 0 when the Casimir channel is on");
  }
}

double bose_occupation(double energy, double temperature) {
  if (!(energy > 0.0)) {
    throw DomainError("Bose occupation needs a positive energy, got " + std::to_string(energy));
  }
  if (temperature <= 0.0) return 0.0;
  return 1.0 / std::expm1(energy / temperature);
}

double beliaev_rate(const MaterialParams& material, double p, const CouplingConstants& couplings) {
  if (couplings.beliaev == 0.0) {
    energy(material, p);  // still reject momenta outside the spectrum
    return 0.0;
  }
  return beliaev_rate(feasibility(material, p, 512), couplings);
}

double beliaev_rate(const FeasibilityReport& report, const CouplingConstants& couplings) {
  return couplings.beliaev * report.phase_space;
}

double lk_rate(const MaterialParams& material, double p, const WashProgram& program,
               const CouplingConstants& couplings) {
  if (!(p > 0.0)) throw DomainError("Landau-Khalatnikov rate needs p > 0");
  if (classify_curvature(material, p) != Curvature::Concave) return 0.0;
  if (couplings.landau_khalatnikov == 0.0) return 0.0;
  return couplings.landau_khalatnikov * bose_occupation(energy(material, p), program.temperature);
}

double casimir_rate(const MaterialParams& material, const WashProgram& program,
                    const CouplingConstants& couplings) {
  if (couplings.casimir == 0.0) return 0.0;
  const auto sockton = find_sockton_minimum(material);
  if (!sockton) return 0.0;
  const double detuning = 2.0 * program.omega - sockton->gap;
  const double g2 = couplings.casimir_width * couplings.casimir_width;
  return couplings.casimir * g2 / (detuning * detuning + g2);
}

double resonant_frequency(const MaterialParams& material) {
  const auto sockton = find_sockton_minimum(material);
  if (!sockton) {
    throw NoSocktonError("material '" + material.name + "' has no sockton minimum");
  }
  return 0.5 * sockton->gap;
}

double shrink_factor(const MaterialParams& material, const WashProgram& program) {
  if (!material.dispersive() || program.quench == 0.0 || material.shrink_coupling == 0.0) {
    return 1.0;
  }
  const auto sockton = find_sockton_minimum(material);
  if (!sockton) return 1.0;
  const double kappa = evaluate(material, sockton->momentum).curvature;
  return std::exp(-material.shrink_coupling * kappa * program.quench);
}

}  // namespace socktonics
