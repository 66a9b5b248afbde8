#include "socktonics/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "socktonics/errors.hpp"

namespace socktonics {

namespace {

constexpr std::array<const char*, 6> kPalette = {"black", "white", "grey", "navy", "red",
                                                 "striped"};
constexpr const char* kVacuumColor = "undyed";

double exponential(Rng& rng, double rate) {
  // (0, 1) so the waiting time is finite and strictly positive.
  const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  return -std::log(u) / rate;
}

// Index i with probability weight(i) / sum of weights; the weights must have a
// positive sum.
template <class Weight>
std::size_t pick_weighted(std::size_t n, Weight weight, double total, Rng& rng) {
  const double target = uniform01(rng) * total;
  double acc = 0.0;
  std::size_t last_positive = n;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = weight(i);
    if (w <= 0.0) continue;
    last_positive = i;
    acc += w;
    if (target < acc) return i;
  }
  return last_positive;  // rounding in the running sum
}

std::vector<double> casimir_rates(const LaundryState& s) {
  std::vector<double> out(s.materials.size());
  for (std::size_t m = 0; m < s.materials.size(); ++m) {
    out[m] = casimir_rate(s.materials[m], s.program, s.couplings);
  }
  return out;
}

std::int64_t add_sock(LaundryState& s, std::size_t material, std::string color, double p,
                      double length, Chirality chirality, std::int64_t pair_tag,
                      const SockRates* known = nullptr) {
  Sock sock;
  sock.id = s.next_id++;
  sock.pair_tag = pair_tag;
  sock.material = material;
  sock.color = std::move(color);
  sock.momentum = p;
  sock.length = length;
  sock.chirality = chirality;
  s.rates.push_back(known ? *known
                          : sock_rates(s.materials[material], p, s.program, s.couplings));
  s.socks.push_back(std::move(sock));
  return s.socks.back().id;
}

}  // namespace

std::string_view to_string(Channel c) {
  switch (c) {
    case Channel::Beliaev: return "beliaev";
    case Channel::LandauKhalatnikov: return "landau_khalatnikov";
    case Channel::Casimir: return "casimir";
  }
  return "beliaev";
}

std::string_view to_string(Chirality c) { return c == Chirality::Sock ? "sock" : "antisock"; }

std::optional<Channel> parse_channel(std::string_view s) {
  for (Channel c : kChannels) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

EventCounts count_events(const std::vector<EventRecord>& log) {
  EventCounts n;
  for (const auto& e : log) {
    switch (e.channel) {
      case Channel::Beliaev: ++n.beliaev; break;
      case Channel::LandauKhalatnikov: ++n.landau_khalatnikov; break;
      case Channel::Casimir: ++n.casimir; break;
    }
  }
  return n;
}

std::int64_t LaundryState::alive_count() const {
  return std::count_if(socks.begin(), socks.end(), [](const Sock& s) { return s.alive; });
}

SockRates sock_rates(const MaterialParams& material, double p, const WashProgram& program,
                     const CouplingConstants& couplings) {
  SockRates r;
  // A sock at rest carries no excitation energy and takes part in no channel.
  if (!(p > 0.0)) return r;
  if (couplings.beliaev > 0.0) {
    auto report = std::make_shared<FeasibilityReport>(feasibility(material, p, 512));
    r.beliaev = beliaev_rate(*report, couplings);
    if (report->feasible) r.kinematics = std::move(report);
  }
  r.landau_khalatnikov = lk_rate(material, p, program, couplings);
  return r;
}

LaundryState init_load(int pairs, const std::vector<MixEntry>& mix, const WashProgram& program,
                       const CouplingConstants& couplings, std::uint64_t seed) {
  if (mix.empty()) throw ConfigError("material mix is empty");
  if (pairs < 1) throw ConfigError("load needs at least one pair");
  validate(program);
  validate(couplings);

  LaundryState s;
  s.rng_seed = seed;
  s.rng.seed(seed);
  s.program = program;
  s.couplings = couplings;

  std::vector<std::size_t> mix_material;
  double total_weight = 0.0;
  for (const auto& entry : mix) {
    validate(entry.material);
    if (!(entry.weight > 0.0) || !std::isfinite(entry.weight)) {
      throw ConfigError("mix weight for '" + entry.material.name + "' must be positive");
    }
    total_weight += entry.weight;
    auto it = std::find_if(s.materials.begin(), s.materials.end(),
                           [&](const MaterialParams& m) { return m.name == entry.material.name; });
    if (it == s.materials.end()) {
      s.materials.push_back(entry.material);
      it = s.materials.end() - 1;
    }
    mix_material.push_back(static_cast<std::size_t>(it - s.materials.begin()));
  }

  for (int i = 0; i < pairs; ++i) {
    const std::size_t entry =
        pick_weighted(mix.size(), [&](std::size_t k) { return mix[k].weight; }, total_weight, s.rng);
    const std::size_t m = mix_material[entry];
    const MaterialParams& mat = s.materials[m];
    const auto color_index = std::min(
        static_cast<std::size_t>(uniform01(s.rng) * kPalette.size()), kPalette.size() - 1);
    const std::int64_t tag = s.next_pair_tag++;
    for (int side = 0; side < 2; ++side) {
      const double r = program.radius * std::sqrt(uniform01(s.rng));
      const double p = std::min(mat.momentum_coupling * program.omega * r, mat.max_momentum);
      add_sock(s, m, kPalette[color_index], p, 1.0, Chirality::Sock, tag);
    }
  }
  s.initial_population = s.alive_count();
  return s;
}

ChannelRates total_rates(const LaundryState& s) {
  ChannelRates r;
  for (std::size_t i = 0; i < s.socks.size(); ++i) {
    if (!s.socks[i].alive) continue;
    r.beliaev += s.rates[i].beliaev;
    r.landau_khalatnikov += s.rates[i].landau_khalatnikov;
  }
  for (double c : casimir_rates(s)) r.casimir += c;
  return r;
}

void check_ledger(const LaundryState& s) {
  const EventCounts n = count_events(s.event_log);
  const std::int64_t expected =
      s.initial_population + n.beliaev + 2 * n.casimir - n.landau_khalatnikov;
  if (s.alive_count() != expected) {
    throw std::logic_error("sock ledger violated: " + std::to_string(s.alive_count()) +
                           " alive, expected " + std::to_string(expected));
  }
  if (s.lint_mass != n.landau_khalatnikov) {
    throw std::logic_error("lint mass does not match the destroyed-sock count");
  }
}

std::optional<EventRecord> step(LaundryState& s, Rng& rng) {
  const double end = s.program.duration;
  if (s.time >= end) {
    s.time = end;
    return std::nullopt;
  }
  const ChannelRates rates = total_rates(s);
  const double total = rates.total();
  if (!(total > 0.0)) {
    s.time = end;
    return std::nullopt;
  }

  const double dt = exponential(rng, total);
  auto integrate = [&](double span) {
    s.integrated.beliaev += rates.beliaev * span;
    s.integrated.landau_khalatnikov += rates.landau_khalatnikov * span;
    s.integrated.casimir += rates.casimir * span;
  };
  if (s.time + dt > end) {
    integrate(end - s.time);
    s.time = end;
    return std::nullopt;
  }
  integrate(dt);
  double t = s.time + dt;
  if (!s.event_log.empty() && t <= s.event_log.back().t) {
    t = std::nextafter(s.event_log.back().t, end);
  }
  s.time = t;

  EventRecord ev;
  ev.t = t;
  const std::array<double, 3> channel_rates = {rates.beliaev, rates.landau_khalatnikov,
                                                rates.casimir};
  ev.channel = kChannels[pick_weighted(
      3, [&](std::size_t k) { return channel_rates[k]; }, total, rng)];

  const std::size_t n = s.socks.size();
  switch (ev.channel) {
    case Channel::Beliaev: {
      const std::size_t i = pick_weighted(
          n, [&](std::size_t k) { return s.socks[k].alive ? s.rates[k].beliaev : 0.0; },
          rates.beliaev, rng);
      const MaterialParams& mat = s.materials[s.socks[i].material];
      const DecaySolution split = sample_daughters(Curve::of(mat), *s.rates[i].kinematics, rng);
      s.socks[i].alive = false;
      const Sock parent = s.socks[i];
      ev.parent_ids.push_back(parent.id);
      ev.momenta = {parent.momentum, split.p1, split.p2};
      for (double p : {split.p1, split.p2}) {
        ev.created_ids.push_back(add_sock(s, parent.material, parent.color, p, parent.length,
                                          parent.chirality, s.next_pair_tag++));
      }
      break;
    }
    case Channel::LandauKhalatnikov: {
      const std::size_t i = pick_weighted(
          n, [&](std::size_t k) { return s.socks[k].alive ? s.rates[k].landau_khalatnikov : 0.0; },
          rates.landau_khalatnikov, rng);
      s.socks[i].alive = false;
      ++s.lint_mass;
      ev.parent_ids.push_back(s.socks[i].id);
      ev.momenta.push_back(s.socks[i].momentum);
      break;
    }
    case Channel::Casimir: {
      const std::vector<double> per_material = casimir_rates(s);
      const std::size_t m = pick_weighted(
          per_material.size(), [&](std::size_t k) { return per_material[k]; }, rates.casimir, rng);
      const double p0 = find_sockton_minimum(s.materials[m])->momentum;
      const std::int64_t tag = s.next_pair_tag++;
      ev.momenta = {p0, p0};
      ev.created_ids.push_back(add_sock(s, m, kVacuumColor, p0, 1.0, Chirality::Sock, tag));
      const SockRates twin = s.rates.back();
      ev.created_ids.push_back(
          add_sock(s, m, kVacuumColor, p0, 1.0, Chirality::Antisock, tag, &twin));
      break;
    }
  }

  s.event_log.push_back(ev);
  check_ledger(s);
  return ev;
}

LaundryState run_cycle(LaundryState state) {
  while (step(state, state.rng)) {
  }
  check_ledger(state);
  if (!state.shrink_applied) {
    for (Sock& sock : state.socks) {
      if (!sock.alive) continue;
      sock.length *= shrink_factor(state.materials[sock.material], state.program);
    }
    state.shrink_applied = true;
  }
  return state;
}

}  // namespace socktonics
