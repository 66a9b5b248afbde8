#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "socktonics/engine.hpp"

namespace socktonics {

enum class Parity { Even, Odd };

std::string_view to_string(Parity p);

struct CensusReport {
  std::int64_t total = 0;
  std::int64_t paired = 0;
  std::int64_t unpaired = 0;
  Parity parity = Parity::Even;
  std::map<std::string, std::int64_t> by_color;
  std::map<std::string, std::int64_t> by_material;

  bool operator==(const CensusReport&) const = default;
};

/// Alive socks only. A pair tag counts as paired when exactly two alive socks
/// carry it.
CensusReport take_census(const LaundryState& state);

/// Outcome of replaying an event log against two censuses.
struct LedgerAudit {
  bool consistent = false;
  EventCounts counts;
  std::int64_t expected_total = 0;
  Parity expected_parity = Parity::Even;
  std::string problem;  // empty when consistent
};

LedgerAudit audit_ledger(const CensusReport& initial, const CensusReport& final_census,
                         const std::vector<EventRecord>& log);

bool verify_ledger(const CensusReport& initial, const CensusReport& final_census,
                   const std::vector<EventRecord>& log);

enum class Verdict { CreationFavored, DestructionFavored, Ambiguous };

std::string_view to_string(Verdict v);

inline constexpr double kAmbiguityLogThreshold = 0.1;
inline constexpr double kTruncationTolerance = 1e-12;

struct AmbiguityVerdict {
  double p_net_plus = 0.0;
  double p_net_minus = 0.0;
  double odds_ratio = 1.0;  // +inf when destruction is impossible
  Verdict verdict = Verdict::Ambiguous;
  double tail_mass = 0.0;  // Poisson mass dropped by the truncation
  bool truncation_warning = false;
};

/// Probability that the net population change is +1 versus -1, with
/// independent Poisson counts for the three channels and net = N_B - N_LK + 2 N_C.
/// Arguments are time-integrated channel intensities. Throws DomainError on
/// negative intensities.
AmbiguityVerdict ambiguity_likelihood(double beliaev, double landau_khalatnikov, double casimir,
                                      int truncation = 64);

}  // namespace socktonics
