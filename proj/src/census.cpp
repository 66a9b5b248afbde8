#include "socktonics/census.hpp"

#include <cmath>
#include <limits>
#include <unordered_map>

#include "socktonics/errors.hpp"

namespace socktonics {

namespace {

Parity parity_of(std::int64_t n) { return n % 2 == 0 ? Parity::Even : Parity::Odd; }

Parity flip(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }

std::string check_event_shape(const EventRecord& e) {
  std::size_t parents = 0, created = 0;
  switch (e.channel) {
    case Channel::Beliaev: parents = 1; created = 2; break;
    case Channel::LandauKhalatnikov: parents = 1; created = 0; break;
    case Channel::Casimir: parents = 0; created = 2; break;
  }
  if (e.parent_ids.size() != parents || e.created_ids.size() != created) {
    return "malformed " + std::string(to_string(e.channel)) + " event at t=" + std::to_string(e.t);
  }
  return {};
}

double poisson_pmf(double mean, int k) {
  if (mean == 0.0) return k == 0 ? 1.0 : 0.0;
  return std::exp(k * std::log(mean) - mean - std::lgamma(k + 1.0));
}

// Mass of Poisson(mean) above k_max, summed directly for accuracy in the tail.
double poisson_tail(double mean, int k_max) {
  if (mean == 0.0) return 0.0;
  double tail = 0.0;
  for (int k = k_max + 1;; ++k) {
    const double term = poisson_pmf(mean, k);
    tail += term;
    if (k > mean && term < 1e-300 + tail * 1e-17) break;
  }
  return tail;
}

}  // namespace

std::string_view to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::CreationFavored: return "creation_favored";
    case Verdict::DestructionFavored: return "destruction_favored";
    case Verdict::Ambiguous: return "ambiguous";
  }
  return "ambiguous";
}

CensusReport take_census(const LaundryState& state) {
  CensusReport r;
  std::unordered_map<std::int64_t, int> tag_members;
  for (const Sock& s : state.socks) {
    if (!s.alive) continue;
    ++r.total;
    ++tag_members[s.pair_tag];
    ++r.by_color[s.color];
    ++r.by_material[state.materials[s.material].name];
  }
  for (const auto& [tag, members] : tag_members) {
    if (members == 2) r.paired += 2;
  }
  r.unpaired = r.total - r.paired;
  r.parity = parity_of(r.total);
  return r;
}

LedgerAudit audit_ledger(const CensusReport& initial, const CensusReport& final_census,
                         const std::vector<EventRecord>& log) {
  LedgerAudit a;
  a.counts = count_events(log);
  a.expected_total =
      initial.total + a.counts.beliaev + 2 * a.counts.casimir - a.counts.landau_khalatnikov;
  a.expected_parity =
      (a.counts.beliaev + a.counts.landau_khalatnikov) % 2 == 0 ? initial.parity
                                                                 : flip(initial.parity);
  for (std::size_t i = 0; i < log.size() && a.problem.empty(); ++i) {
    a.problem = check_event_shape(log[i]);
    if (a.problem.empty() && i > 0 && !(log[i].t > log[i - 1].t)) {
      a.problem = "event times not strictly increasing at index " + std::to_string(i);
    }
  }
  if (a.problem.empty() && final_census.total != a.expected_total) {
    a.problem = "final total " + std::to_string(final_census.total) + " but ledger expects " +
                std::to_string(a.expected_total);
  }
  if (a.problem.empty() && final_census.parity != a.expected_parity) {
    a.problem = "final parity does not follow the Beliaev + LK parity rule";
  }
  if (a.problem.empty() && parity_of(final_census.total) != final_census.parity) {
    a.problem = "final census parity disagrees with its total";
  }
  a.consistent = a.problem.empty();
  return a;
}

bool verify_ledger(const CensusReport& initial, const CensusReport& final_census,
                   const std::vector<EventRecord>& log) {
  return audit_ledger(initial, final_census, log).consistent;
}

AmbiguityVerdict ambiguity_likelihood(double beliaev, double landau_khalatnikov, double casimir,
                                      int truncation) {
  if (!(beliaev >= 0.0) || !(landau_khalatnikov >= 0.0) || !(casimir >= 0.0)) {
    throw DomainError("channel intensities must be non-negative");
  }
  if (truncation < 1) throw DomainError("truncation must be >= 1");

  const int K = truncation;
  std::vector<double> pb(K + 1), pl(K + 1), pc(K + 1);
  for (int k = 0; k <= K; ++k) {
    pb[k] = poisson_pmf(beliaev, k);
    pl[k] = poisson_pmf(landau_khalatnikov, k);
    pc[k] = poisson_pmf(casimir, k);
  }

  // P(net = target) over the truncated lattice; b is fixed by (l, c).
  auto net_probability = [&](int target) {
    double sum = 0.0;
    for (int c = 0; c <= K; ++c) {
      for (int l = 0; l <= K; ++l) {
        const int b = target + l - 2 * c;
        if (b < 0 || b > K) continue;
        sum += (pb[b] * pl[l]) * pc[c];
      }
    }
    return sum;
  };
  // Swapping the B and LK intensities maps one sum onto the other term by term.
  auto net_probability_mirrored = [&](int target) {
    double sum = 0.0;
    for (int c = 0; c <= K; ++c) {
      for (int b = 0; b <= K; ++b) {
        const int l = b - target + 2 * c;
        if (l < 0 || l > K) continue;
        sum += (pl[l] * pb[b]) * pc[c];
      }
    }
    return sum;
  };

  AmbiguityVerdict v;
  v.p_net_plus = net_probability(+1);
  v.p_net_minus = net_probability_mirrored(-1);
  v.tail_mass = poisson_tail(beliaev, K) + poisson_tail(landau_khalatnikov, K) +
                poisson_tail(casimir, K);
  v.truncation_warning = v.tail_mass > kTruncationTolerance;

  if (v.p_net_plus == 0.0 && v.p_net_minus == 0.0) {
    v.odds_ratio = 1.0;
  } else if (v.p_net_minus == 0.0) {
    v.odds_ratio = std::numeric_limits<double>::infinity();
  } else {
    v.odds_ratio = v.p_net_plus / v.p_net_minus;
  }
  const double log_odds = std::log(v.odds_ratio);
  if (std::abs(log_odds) <= kAmbiguityLogThreshold) {
    v.verdict = Verdict::Ambiguous;
  } else {
    v.verdict = log_odds > 0.0 ? Verdict::CreationFavored : Verdict::DestructionFavored;
  }
  return v;
}

}  // namespace socktonics
