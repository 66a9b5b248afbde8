#include "socktonics/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <initializer_list>

#include "socktonics/errors.hpp"

namespace socktonics {

namespace {

void reject_unknown(const Json& j, std::string_view where,
                    std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) throw ConfigError(std::string(where) + " must be an object");
  for (const auto& item : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      throw ConfigError("unknown key '" + item.key() + "' in " + std::string(where));
    }
  }
}

template <class T>
void read(const Json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
  }
}

MaterialParams parse_material(const Json& j) {
  if (j.is_string()) return preset(j.get<std::string>());
  reject_unknown(j, "material",
                 {"name", "preset", "kind", "c_s", "p_r", "w", "p_max", "momentum_coupling",
                  "shrink_coupling"});
  MaterialParams m;
  if (j.contains("preset")) {
    std::string base;
    read(j, "preset", base);
    m = preset(base);
  }
  read(j, "name", m.name);
  if (m.name.empty()) throw ConfigError("material needs a name");
  if (j.contains("kind")) {
    std::string kind;
    read(j, "kind", kind);
    if (kind == "dispersive") {
      m.kind = DispersionKind::Dispersive;
    } else if (kind == "nondispersive") {
      m.kind = DispersionKind::Nondispersive;
    } else {
      throw ConfigError("material kind must be 'dispersive' or 'nondispersive'");
    }
  }
  read(j, "c_s", m.sound_speed);
  read(j, "p_r", m.center_momentum);
  read(j, "w", m.width_momentum);
  read(j, "p_max", m.max_momentum);
  read(j, "momentum_coupling", m.momentum_coupling);
  read(j, "shrink_coupling", m.shrink_coupling);
  try {
    validate(m);
  } catch (const ParamError& e) {
    throw ConfigError(e.what());
  }
  return m;
}

}  // namespace

MaterialParams RunConfig::material(std::string_view name) const {
  for (const auto& m : materials) {
    if (m.name == name) return m;
  }
  return preset(name);
}

std::vector<MixEntry> RunConfig::mix() const {
  std::vector<MixEntry> out;
  for (const auto& [name, weight] : load.mix) out.push_back({material(name), weight});
  return out;
}

RunConfig parse_config(const Json& doc) {
  reject_unknown(doc, "config",
                 {"materials", "load", "program", "couplings", "seed", "replicas", "output_dir"});
  RunConfig c;
  try {
    if (doc.contains("materials")) {
      if (!doc["materials"].is_array()) throw ConfigError("materials must be an array");
      for (const auto& m : doc["materials"]) c.materials.push_back(parse_material(m));
    }
    if (doc.contains("load")) {
      const Json& load = doc["load"];
      reject_unknown(load, "load", {"pairs", "mix"});
      read(load, "pairs", c.load.pairs);
      if (load.contains("mix")) {
        if (!load["mix"].is_array()) throw ConfigError("load.mix must be an array");
        c.load.mix.clear();
        for (const auto& entry : load["mix"]) {
          reject_unknown(entry, "load.mix entry", {"material", "weight"});
          std::string name;
          double weight = 1.0;
          read(entry, "material", name);
          read(entry, "weight", weight);
          c.load.mix.emplace_back(name, weight);
        }
      }
    }
    if (doc.contains("program")) {
      const Json& p = doc["program"];
      reject_unknown(p, "program", {"omega", "radius", "temperature", "quench", "duration"});
      read(p, "omega", c.program.omega);
      read(p, "radius", c.program.radius);
      read(p, "temperature", c.program.temperature);
      read(p, "quench", c.program.quench);
      read(p, "duration", c.program.duration);
    }
    if (doc.contains("couplings")) {
      const Json& g = doc["couplings"];
      reject_unknown(g, "couplings", {"g_beliaev", "g_lk", "g_casimir", "gamma_casimir"});
      read(g, "g_beliaev", c.couplings.beliaev);
      read(g, "g_lk", c.couplings.landau_khalatnikov);
      read(g, "g_casimir", c.couplings.casimir);
      read(g, "gamma_casimir", c.couplings.casimir_width);
    }
    read(doc, "seed", c.seed);
    read(doc, "replicas", c.replicas);
    if (doc.contains("output_dir")) {
      std::string dir;
      read(doc, "output_dir", dir);
      c.output_dir = dir;
    }
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }

  if (c.replicas < 1) throw ConfigError("replicas must be >= 1");
  if (c.load.pairs < 1) throw ConfigError("load.pairs must be >= 1");
  if (c.load.mix.empty()) throw ConfigError("load.mix is empty");
  for (const auto& [name, weight] : c.load.mix) {
    c.material(name);  // throws for unknown names
    if (!(weight > 0.0)) throw ConfigError("mix weight for '" + name + "' must be positive");
  }
  validate(c.program);
  validate(c.couplings);
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ConfigError("config '" + path.string() + "' is not valid JSON: " + e.what());
  }
  RunConfig c = parse_config(doc);
  apply_environment(c);
  return c;
}

void apply_environment(RunConfig& config) {
  if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) config.output_dir = dir;
}

Json to_json(const MaterialParams& m) {
  Json j{{"name", m.name},
         {"kind", std::string(to_string(m.kind))},
         {"c_s", m.sound_speed},
         {"p_max", m.max_momentum},
         {"momentum_coupling", m.momentum_coupling},
         {"shrink_coupling", m.shrink_coupling}};
  if (m.dispersive()) {
    j["p_r"] = m.center_momentum;
    j["w"] = m.width_momentum;
  }
  return j;
}

}  // namespace socktonics
