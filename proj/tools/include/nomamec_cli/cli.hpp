#ifndef NOMAMEC_CLI_CLI_HPP
#define NOMAMEC_CLI_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "nomamec/model.hpp"

namespace nomamec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Everything a subcommand may consume. Unset values fall back to the
/// subcommand's defaults, or are reported as missing.
struct CliConfig {
  std::optional<double> n;
  std::optional<double> dm;
  std::optional<double> dn;
  std::optional<double> hm2;
  std::optional<double> hn2;

  std::optional<double> from;
  std::optional<double> to;
  std::optional<std::size_t> steps;

  std::optional<double> tn;
  std::optional<double> p1max;
  std::optional<double> p2max;
  std::optional<std::size_t> resolution;

  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> count;

  std::optional<std::string> out;
};

enum class ConfigErrorKind { MissingKey, TypeMismatch, FileUnreadable };

class ConfigError : public std::runtime_error {
 public:
  ConfigError(ConfigErrorKind kind, std::string key, const std::string& detail);

  ConfigErrorKind kind() const noexcept { return kind_; }
  const std::string& key() const noexcept { return key_; }

 private:
  ConfigErrorKind kind_;
  std::string key_;
};

/// Reads a JSON scenario document:
///
///   {"n": 15, "dm": 20, "dn": 25, "hm2": 1, "hn2": 1,
///    "sweep":   {"from": 20, "to": 40, "steps": 21},
///    "surface": {"tn": 5, "p1max": 2.4, "p2max": 4.6, "resolution": 200},
///    "verify":  {"seed": 42, "count": 200, "tol": 1e-10}}
///
/// Every key is optional here; presence is checked once flags are merged.
CliConfig load_scenario_file(const std::filesystem::path& path);

/// Values set in `flags` win over values in `base`.
CliConfig merge(CliConfig base, const CliConfig& flags);

/// Throws ConfigError{MissingKey} naming the first absent required key.
/// h_m^2 and h_n^2 default to 1. D_n is only required when `need_dn`.
RawScenario require_scenario(const CliConfig& config, bool need_dn = true);

/// Parses argv, dispatches `solve`, `sweep`, `surface` or `verify`, and
/// returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nomamec::cli

#endif  // NOMAMEC_CLI_CLI_HPP
