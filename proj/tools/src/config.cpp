#include <fstream>
#include <limits>

#include <json.hpp>

#include "nomamec_cli/cli.hpp"

namespace nomamec::cli {

namespace {

using nlohmann::json;

std::string_view kind_name(ConfigErrorKind kind) {
  switch (kind) {
    case ConfigErrorKind::MissingKey: return "MissingKey";
    case ConfigErrorKind::TypeMismatch: return "TypeMismatch";
    case ConfigErrorKind::FileUnreadable: return "FileUnreadable";
  }
  return "ConfigError";
}

void read_real(const json& doc, const char* key, const std::string& qualified,
               std::optional<double>& slot) {
  const auto it = doc.find(key);
  if (it == doc.end()) return;
  if (!it->is_number()) {
    throw ConfigError(ConfigErrorKind::TypeMismatch, qualified, "expected a number");
  }
  slot = it->get<double>();
}

template <typename Int>
void read_count(const json& doc, const char* key, const std::string& qualified,
                std::optional<Int>& slot) {
  const auto it = doc.find(key);
  if (it == doc.end()) return;
  if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<std::int64_t>() >= 0)) {
    throw ConfigError(ConfigErrorKind::TypeMismatch, qualified,
                      "expected a nonnegative integer");
  }
  slot = it->get<Int>();
}

const json* section(const json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) return nullptr;
  if (!it->is_object()) {
    throw ConfigError(ConfigErrorKind::TypeMismatch, name, "expected an object");
  }
  return &*it;
}

template <typename T>
void take(std::optional<T>& into, const std::optional<T>& from) {
  if (from) into = from;
}

}  // namespace

ConfigError::ConfigError(ConfigErrorKind kind, std::string key, const std::string& detail)
    : std::runtime_error(std::string(kind_name(kind)) + "(\"" + key + "\"): " + detail),
      kind_(kind),
      key_(std::move(key)) {}

CliConfig load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(ConfigErrorKind::FileUnreadable, path.string(), "cannot open file");
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(ConfigErrorKind::FileUnreadable, path.string(), e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError(ConfigErrorKind::FileUnreadable, path.string(),
                      "top level must be a JSON object");
  }

  CliConfig c;
  read_real(doc, "n", "n", c.n);
  read_real(doc, "dm", "dm", c.dm);
  read_real(doc, "dn", "dn", c.dn);
  read_real(doc, "hm2", "hm2", c.hm2);
  read_real(doc, "hn2", "hn2", c.hn2);
  if (const json* sweep = section(doc, "sweep")) {
    read_real(*sweep, "from", "sweep.from", c.from);
    read_real(*sweep, "to", "sweep.to", c.to);
    read_count(*sweep, "steps", "sweep.steps", c.steps);
  }
  if (const json* surface = section(doc, "surface")) {
    read_real(*surface, "tn", "surface.tn", c.tn);
    read_real(*surface, "p1max", "surface.p1max", c.p1max);
    read_real(*surface, "p2max", "surface.p2max", c.p2max);
    read_count(*surface, "resolution", "surface.resolution", c.resolution);
  }
  if (const json* verify = section(doc, "verify")) {
    read_count(*verify, "seed", "verify.seed", c.seed);
    read_count(*verify, "count", "verify.count", c.count);
    read_real(*verify, "tol", "verify.tol", c.tol);
  }
  return c;
}

CliConfig merge(CliConfig base, const CliConfig& flags) {
  take(base.n, flags.n);
  take(base.dm, flags.dm);
  take(base.dn, flags.dn);
  take(base.hm2, flags.hm2);
  take(base.hn2, flags.hn2);
  take(base.from, flags.from);
  take(base.to, flags.to);
  take(base.steps, flags.steps);
  take(base.tn, flags.tn);
  take(base.p1max, flags.p1max);
  take(base.p2max, flags.p2max);
  take(base.resolution, flags.resolution);
  take(base.tol, flags.tol);
  take(base.seed, flags.seed);
  take(base.count, flags.count);
  take(base.out, flags.out);
  return base;
}

RawScenario require_scenario(const CliConfig& config, bool need_dn) {
  const auto need = [](const std::optional<double>& v, const char* key) {
    if (!v) throw ConfigError(ConfigErrorKind::MissingKey, key, "no value from flags or config");
    return *v;
  };
  RawScenario raw;
  raw.nats = need(config.n, "n");
  raw.d_m = need(config.dm, "dm");
  raw.d_n = need_dn ? need(config.dn, "dn") : config.dn.value_or(raw.d_m);
  raw.h_m_sq = config.hm2.value_or(1.0);
  raw.h_n_sq = config.hn2.value_or(1.0);
  return raw;
}

}  // namespace nomamec::cli
