#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "socktonics/dispersion.hpp"
#include "socktonics/kinematics.hpp"
#include "socktonics/rates.hpp"

namespace socktonics {

enum class Chirality { Sock, Antisock };

enum class Channel { Beliaev, LandauKhalatnikov, Casimir };

inline constexpr std::array<Channel, 3> kChannels = {Channel::Beliaev, Channel::LandauKhalatnikov,
                                                     Channel::Casimir};

std::string_view to_string(Channel c);
std::string_view to_string(Chirality c);
std::optional<Channel> parse_channel(std::string_view s);

struct Sock {
  std::int64_t id = 0;
  std::int64_t pair_tag = 0;
  std::size_t material = 0;  // index into LaundryState::materials
  std::string color;
  double momentum = 0.0;
  double length = 1.0;
  Chirality chirality = Chirality::Sock;
  bool alive = true;
};

struct EventRecord {
  double t = 0.0;
  Channel channel = Channel::Beliaev;
  std::vector<std::int64_t> parent_ids;
  std::vector<std::int64_t> created_ids;
  std::vector<double> momenta;
};

struct MixEntry {
  MaterialParams material;
  double weight = 1.0;
};

struct ChannelRates {
  double beliaev = 0.0;
  double landau_khalatnikov = 0.0;
  double casimir = 0.0;

  double total() const { return beliaev + landau_khalatnikov + casimir; }
};

struct EventCounts {
  std::int64_t beliaev = 0;
  std::int64_t landau_khalatnikov = 0;
  std::int64_t casimir = 0;
};

EventCounts count_events(const std::vector<EventRecord>& log);

/// Cached per-sock channel rates; recomputed only when a sock is created.
struct SockRates {
  double beliaev = 0.0;
  double landau_khalatnikov = 0.0;
  std::shared_ptr<const FeasibilityReport> kinematics;  // null when Beliaev is off
};

struct LaundryState {
  std::vector<MaterialParams> materials;
  std::vector<Sock> socks;  // dead socks stay, flagged !alive
  std::int64_t lint_mass = 0;
  double time = 0.0;
  std::vector<EventRecord> event_log;
  std::uint64_t rng_seed = 0;
  WashProgram program;
  CouplingConstants couplings;

  std::int64_t initial_population = 0;
  // Channel intensities integrated over the elapsed time.
  ChannelRates integrated;
  bool shrink_applied = false;

  std::vector<SockRates> rates;  // parallel to socks
  std::int64_t next_id = 0;
  std::int64_t next_pair_tag = 0;
  Rng rng;

  std::int64_t alive_count() const;
};

/// Builds 2 * pairs socks in matched pairs. Each sock sits at a radius drawn
/// uniformly over the drum area and moves with p = min(lambda_p Omega r, p_max).
/// Throws ConfigError for an empty or invalid mix.
LaundryState init_load(int pairs, const std::vector<MixEntry>& mix, const WashProgram& program,
                       const CouplingConstants& couplings, std::uint64_t seed);

ChannelRates total_rates(const LaundryState& state);

/// One exact stochastic simulation step. Returns nullopt once the cycle
/// reaches its duration (time is then clamped to the duration).
std::optional<EventRecord> step(LaundryState& state, Rng& rng);

/// Runs to the end of the program and applies shrinkage once.
LaundryState run_cycle(LaundryState state);

/// Throws std::logic_error if N_alive != N_0 + N_B + 2 N_C - N_LK.
void check_ledger(const LaundryState& state);

/// Rates of a single sock at momentum p, as the engine caches them.
SockRates sock_rates(const MaterialParams& material, double p, const WashProgram& program,
                     const CouplingConstants& couplings);

}  // namespace socktonics
