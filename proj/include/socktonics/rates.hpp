#pragma once

#include "socktonics/dispersion.hpp"
#include "socktonics/kinematics.hpp"

namespace socktonics {

/// Drum and thermal settings for one wash cycle.
struct WashProgram {
  double omega = 0.1;        // drum angular frequency
  double radius = 1.0;       // drum radius
  double temperature = 0.5;  // wash temperature, k_B = 1
  double quench = 0.0;       // |T_wash - T_rinse|
  double duration = 10.0;    // agitated time

  double peripheral_velocity() const { return radius * omega; }
};

struct CouplingConstants {
  double beliaev = 1.0;             // rate per unit phase space
  double landau_khalatnikov = 1.0;  // rate per unit thermal occupation
  double casimir = 1.0;             // peak pair-creation rate
  double casimir_width = 0.05;      // Lorentzian half-width in energy
};

void validate(const WashProgram& program);          // throws ConfigError
void validate(const CouplingConstants& couplings);  // throws ConfigError

/// Bose occupation 1 / (exp(eps / T) - 1); zero for a frozen bath.
/// Throws DomainError for eps <= 0.
double bose_occupation(double energy, double temperature);

double beliaev_rate(const MaterialParams& material, double p, const CouplingConstants& couplings);

/// Beliaev rate when the kinematic scan is already at hand.
double beliaev_rate(const FeasibilityReport& report, const CouplingConstants& couplings);

/// Active only where the dispersion is locally concave.
double lk_rate(const MaterialParams& material, double p, const WashProgram& program,
               const CouplingConstants& couplings);

/// Lorentzian in the drum frequency, peaked where 2 Omega equals the sockton gap.
/// Zero for materials without a sockton.
double casimir_rate(const MaterialParams& material, const WashProgram& program,
                    const CouplingConstants& couplings);

/// Omega* = Delta / 2. Throws NoSocktonError if the material has no sockton.
double resonant_frequency(const MaterialParams& material);

/// Length scale factor for one cycle: exp(-eta kappa(p0) q).
double shrink_factor(const MaterialParams& material, const WashProgram& program);

}  // namespace socktonics
