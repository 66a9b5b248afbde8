#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "socktonics/census.hpp"
#include "socktonics/engine.hpp"

namespace socktonics {

using Json = nlohmann::json;

Json to_json(const EventRecord& e);
EventRecord event_from_json(const Json& j);  // throws ConfigError on schema mismatch

Json to_json(const CensusReport& c);
CensusReport census_from_json(const Json& j);

Json to_json(const AmbiguityVerdict& v);
Json to_json(const EventCounts& n);
Json to_json(const ChannelRates& r);

/// One JSON object per line, keys t, channel, parent_ids, created_ids, momenta.
void write_event_log(std::ostream& out, const std::vector<EventRecord>& log);
std::vector<EventRecord> read_event_log(std::istream& in);

/// Shortest round-trip decimal, locale independent.
std::string format_number(double x);

}  // namespace socktonics
