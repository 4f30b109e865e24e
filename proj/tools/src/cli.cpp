#include "nomamec_cli/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <fmt/ostream.h>

#include "nomamec/closed_form.hpp"
#include "nomamec/experiments.hpp"
#include "nomamec/strategy.hpp"

namespace nomamec::cli {

namespace {

constexpr std::size_t kDefaultSweepSteps = 21;
constexpr std::size_t kDefaultResolution = 200;
constexpr std::uint64_t kDefaultSeed = 42;
constexpr std::size_t kDefaultCount = 200;

struct Flags {
  CliConfig values;
  std::optional<std::string> config_path;
};

void add_scenario_flags(CLI::App& cmd, Flags& f) {
  cmd.add_option("--n", f.values.n, "task size N of each user [nats]");
  cmd.add_option("--dm", f.values.dm, "deadline D_m of user m [normalized time units]");
  cmd.add_option("--dn", f.values.dn, "deadline D_n of user n, D_n >= D_m [normalized time units]");
  cmd.add_option("--hm2", f.values.hm2,
                 "channel power gain |h_m|^2 over unit noise [1/power unit] (default 1)");
  cmd.add_option("--hn2", f.values.hn2,
                 "channel power gain |h_n|^2 over unit noise [1/power unit] (default 1)");
}

void add_io_flags(CLI::App& cmd, Flags& f) {
  cmd.add_option("--config", f.config_path,
                 "JSON scenario file [path]; command-line flags override its values");
  cmd.add_option("--out", f.values.out, "write output here instead of stdout [path]");
}

void print_report_row(std::ostream& out, const EnergyReport& r) {
  fmt::print(out, "{:<12} {:>8} {:>12} {:>24} {:>24} {:>24} {:>24}\n", to_string(r.strategy),
             r.feasible ? "yes" : "no", format_number(r.schedule.t_n),
             format_number(r.schedule.p_n1), format_number(r.schedule.p_n2),
             format_number(r.energy), format_number(r.normalized_energy));
}

void cmd_solve(const CliConfig& c, std::ostream& out) {
  const OffloadScenario s(require_scenario(c));
  const ComparisonTable table = select_strategy(s);
  const EnergyReport& best = table.selected_report();

  fmt::print(out, "scenario: N={} nats, D_m={}, D_n={}, |h_m|^2={}, |h_n|^2={}\n",
             format_number(s.nats()), format_number(s.d_m()), format_number(s.d_n()),
             format_number(s.h_m_sq()), format_number(s.h_n_sq()));
  fmt::print(out, "regime: {}\n\n", to_string(table.regime));
  fmt::print(out, "{:<12} {:>8} {:>12} {:>24} {:>24} {:>24} {:>24}\n", "strategy", "feasible",
             "t_n", "p_n1", "p_n2", "energy", "normalized_energy");
  for (const EnergyReport* r : {&table.hybrid, &table.pure_noma, &table.oma}) {
    print_report_row(out, *r);
  }
  out << '\n';
  fmt::print(out, "selected={}\n", to_string(table.selected));
  fmt::print(out, "t_n={}\n", format_number(best.schedule.t_n));
  fmt::print(out, "p_n1={}\n", format_number(best.schedule.p_n1));
  fmt::print(out, "p_n2={}\n", format_number(best.schedule.p_n2));
  fmt::print(out, "energy={}\n", format_number(best.energy));
  fmt::print(out, "normalized_energy={}\n", format_number(best.normalized_energy));
  if (best.log_domain) fmt::print(out, "log_energy={}\n", format_number(best.log_energy));
}

void cmd_sweep(const CliConfig& c, std::ostream& out) {
  const RawScenario raw = require_scenario(c, false);
  const SweepBase base{raw.nats, raw.d_m, raw.h_m_sq, raw.h_n_sq};
  const auto rows = deadline_sweep(base, c.from.value_or(raw.d_m), c.to.value_or(2.0 * raw.d_m),
                                   c.steps.value_or(kDefaultSweepSteps));
  write_sweep_csv(out, base, rows);
}

void cmd_surface(const CliConfig& c, std::ostream& out) {
  RawScenario raw = require_scenario(c, false);
  const double t_n = c.tn.value_or(raw.d_m / 4.0);
  if (!c.dn) raw.d_n = raw.d_m + t_n;
  const OffloadScenario s(raw);

  std::optional<SurfaceRanges> ranges;
  if (c.p1max || c.p2max) {
    const SurfaceRanges fallback = default_surface_ranges(s, t_n);
    ranges = SurfaceRanges{c.p1max.value_or(fallback.p1_max), c.p2max.value_or(fallback.p2_max)};
  }
  const auto records = surface_export(s, t_n, ranges, c.resolution.value_or(kDefaultResolution));
  write_surface_csv(out, s, t_n, records);
}

bool cmd_verify(const CliConfig& c, std::ostream& out) {
  OracleOptions opts;
  if (c.tol) opts.tol = *c.tol;
  if (!(opts.tol > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, fmt::format("--tol must be positive, got {}", opts.tol));
  }
  const CampaignSummary summary =
      verification_campaign(c.seed.value_or(kDefaultSeed), c.count.value_or(kDefaultCount), opts);
  write_campaign_summary(out, summary);
  return summary.pass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Energy-optimal NOMA-MEC offloading: closed-form solver and numerical checks",
               "nomamec"};
  app.set_version_flag("--version", std::string(NOMAMEC_VERSION));
  app.require_subcommand(1);

  Flags flags;
  CLI::App* solve = app.add_subcommand("solve", "compare hybrid NOMA, pure NOMA and OMA for one scenario");
  CLI::App* sweep = app.add_subcommand("sweep", "energy and powers versus D_n as CSV");
  CLI::App* surface = app.add_subcommand("surface", "energy over a (P_n1, P_n2) grid at fixed T_n as CSV");
  CLI::App* verify = app.add_subcommand("verify", "check closed forms against the numerical oracle on random scenarios");

  for (CLI::App* cmd : {solve, sweep, surface}) add_scenario_flags(*cmd, flags);
  for (CLI::App* cmd : {solve, sweep, surface, verify}) add_io_flags(*cmd, flags);

  sweep->add_option("--from", flags.values.from, "first D_n of the sweep [normalized time units] (default D_m)");
  sweep->add_option("--to", flags.values.to, "last D_n of the sweep [normalized time units] (default 2 D_m)");
  sweep->add_option("--steps", flags.values.steps, "number of D_n grid points [count] (default 21)");

  surface->add_option("--tn", flags.values.tn, "extension interval T_n [normalized time units] (default D_m/4)");
  surface->add_option("--p1max", flags.values.p1max, "upper end of the P_n1 axis [power units] (default 2 P_n1*)");
  surface->add_option("--p2max", flags.values.p2max, "upper end of the P_n2 axis [power units] (default 2 P_n2*)");
  surface->add_option("--resolution", flags.values.resolution, "grid points per axis [count] (default 200)");

  verify->add_option("--seed", flags.values.seed, "scenario generator seed [integer] (default 42)");
  verify->add_option("--count", flags.values.count, "number of random scenarios [count] (default 200)");
  verify->add_option("--tol", flags.values.tol, "oracle golden-section width on the nat split [dimensionless] (default 1e-10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    CliConfig config = flags.values;
    if (flags.config_path) config = merge(load_scenario_file(*flags.config_path), flags.values);

    // Buffer so a failed command never leaves a partial output file behind.
    std::ostringstream buffer;
    bool verified = true;
    if (solve->parsed()) {
      cmd_solve(config, buffer);
    } else if (sweep->parsed()) {
      cmd_sweep(config, buffer);
    } else if (surface->parsed()) {
      cmd_surface(config, buffer);
    } else {
      verified = cmd_verify(config, buffer);
    }

    if (config.out) {
      std::ofstream file(*config.out, std::ios::binary);
      if (!file || !(file << buffer.str())) {
        fmt::print(err, "error: cannot write {}\n", *config.out);
        return kExitInvalidInput;
      }
    } else {
      out << buffer.str();
    }
    return verified ? kExitOk : kExitVerificationFailed;
  } catch (const ConfigError& e) {
    fmt::print(err, "error: {}\n", e.what());
  } catch (const Error& e) {
    fmt::print(err, "error: {}\n", e.what());
  }
  fmt::print(err, "run with --help for usage\n");
  return kExitInvalidInput;
}

}  // namespace nomamec::cli
