#include "socktonics/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>

#include "socktonics/errors.hpp"

namespace socktonics {

namespace {

template <class T>
T required(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ConfigError(std::string("missing key '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
  }
}

Parity parse_parity(const std::string& s) {
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  throw ConfigError("bad parity '" + s + "'");
}

}  // namespace

Json to_json(const EventRecord& e) {
  return Json{{"t", e.t},
              {"channel", std::string(to_string(e.channel))},
              {"parent_ids", e.parent_ids},
              {"created_ids", e.created_ids},
              {"momenta", e.momenta}};
}

EventRecord event_from_json(const Json& j) {
  EventRecord e;
  e.t = required<double>(j, "t");
  const auto channel = required<std::string>(j, "channel");
  const auto parsed = parse_channel(channel);
  if (!parsed) throw ConfigError("unknown channel '" + channel + "'");
  e.channel = *parsed;
  e.parent_ids = required<std::vector<std::int64_t>>(j, "parent_ids");
  e.created_ids = required<std::vector<std::int64_t>>(j, "created_ids");
  e.momenta = required<std::vector<double>>(j, "momenta");
  return e;
}

Json to_json(const CensusReport& c) {
  return Json{{"total", c.total},
              {"paired", c.paired},
              {"unpaired", c.unpaired},
              {"parity", std::string(to_string(c.parity))},
              {"by_color", c.by_color},
              {"by_material", c.by_material}};
}

CensusReport census_from_json(const Json& j) {
  CensusReport c;
  c.total = required<std::int64_t>(j, "total");
  c.paired = required<std::int64_t>(j, "paired");
  c.unpaired = required<std::int64_t>(j, "unpaired");
  c.parity = parse_parity(required<std::string>(j, "parity"));
  c.by_color = required<std::map<std::string, std::int64_t>>(j, "by_color");
  c.by_material = required<std::map<std::string, std::int64_t>>(j, "by_material");
  return c;
}

Json to_json(const AmbiguityVerdict& v) {
  return Json{{"p_net_plus", v.p_net_plus},
              {"p_net_minus", v.p_net_minus},
              {"odds_ratio", v.odds_ratio},  // infinity serializes as null
              {"verdict", std::string(to_string(v.verdict))},
              {"tail_mass", v.tail_mass},
              {"truncation_warning", v.truncation_warning}};
}

Json to_json(const EventCounts& n) {
  return Json{{"beliaev", n.beliaev},
              {"landau_khalatnikov", n.landau_khalatnikov},
              {"casimir", n.casimir}};
}

Json to_json(const ChannelRates& r) {
  return Json{{"beliaev", r.beliaev},
              {"landau_khalatnikov", r.landau_khalatnikov},
              {"casimir", r.casimir}};
}

void write_event_log(std::ostream& out, const std::vector<EventRecord>& log) {
  for (const auto& e : log) out << to_json(e).dump() << '\n';
}

std::vector<EventRecord> read_event_log(std::istream& in) {
  std::vector<EventRecord> log;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      log.push_back(event_from_json(Json::parse(line)));
    } catch (const Json::exception& e) {
      throw ConfigError("events line " + std::to_string(line_no) + ": " + e.what());
    } catch (const ConfigError& e) {
      throw ConfigError("events line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return log;
}

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace socktonics
