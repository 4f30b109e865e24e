#include "nomamec/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/core.h>
#include <fmt/ostream.h>

#include "nomamec/closed_form.hpp"

namespace nomamec {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double lerp(double lo, double hi, double u) { return lo + (hi - lo) * u; }

void write_metadata(std::ostream& out, std::string_view kind, const RawScenario& raw,
                    bool with_d_n) {
  fmt::print(out, "# nomamec {}\n", kind);
  fmt::print(out, "# version={}\n", NOMAMEC_VERSION);
  fmt::print(out, "# N={}\n", format_number(raw.nats));
  fmt::print(out, "# D_m={}\n", format_number(raw.d_m));
  if (with_d_n) fmt::print(out, "# D_n={}\n", format_number(raw.d_n));
  fmt::print(out, "# h_m2={}\n", format_number(raw.h_m_sq));
  fmt::print(out, "# h_n2={}\n", format_number(raw.h_n_sq));
}

}  // namespace

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  return fmt::format("{:.17g}", value);
}

std::vector<SweepRow> deadline_sweep(const SweepBase& base, double d_n_from, double d_n_to,
                                     std::size_t steps) {
  if (steps < 2) {
    throw Error(ErrorKind::InvalidArgument, fmt::format("sweep needs steps >= 2, got {}", steps));
  }
  if (!(d_n_from < d_n_to)) {
    throw Error(ErrorKind::InvalidArgument,
                fmt::format("sweep needs from < to, got [{}, {}]", d_n_from, d_n_to));
  }

  std::vector<SweepRow> rows;
  rows.reserve(steps);
  const double last = static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) {
    const double d_n =
        i + 1 == steps ? d_n_to : d_n_from + (d_n_to - d_n_from) * static_cast<double>(i) / last;
    const OffloadScenario s({base.nats, base.d_m, d_n, base.h_m_sq, base.h_n_sq});
    const ComparisonTable table = select_strategy(s);
    const PowerSchedule& star = table.selected_report().schedule;
    rows.push_back({d_n, table.hybrid.energy, table.pure_noma.energy, table.oma.energy, star.p_n1,
                    star.p_n2, star.t_n, table.selected});
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const SweepBase& base, const std::vector<SweepRow>& rows) {
  write_metadata(out, "sweep", {base.nats, base.d_m, 0.0, base.h_m_sq, base.h_n_sq}, false);
  out << kSweepCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    fmt::print(out, "{},{},{},{},{},{},{},{}\n", format_number(r.d_n), format_number(r.e_hybrid),
               format_number(r.e_pure), format_number(r.e_oma), format_number(r.p1_star),
               format_number(r.p2_star), format_number(r.t_n_star), to_string(r.selected));
  }
}

SurfaceRanges default_surface_ranges(const OffloadScenario& s, double t_n) {
  const HybridPowers p = hybrid_powers(s, t_n);
  return {2.0 * p.p_n1, 2.0 * p.p_n2};
}

std::vector<SurfaceRecord> surface_export(const OffloadScenario& s, double t_n,
                                          std::optional<SurfaceRanges> ranges,
                                          std::size_t resolution) {
  const SurfaceGrid grid =
      energy_surface(s, t_n, ranges.value_or(default_surface_ranges(s, t_n)), resolution);

  std::vector<SurfaceRecord> records;
  records.reserve(grid.energy.size() + 1);
  for (std::size_t i = 0; i < grid.p1_axis.size(); ++i) {
    for (std::size_t j = 0; j < grid.p2_axis.size(); ++j) {
      const std::size_t k = grid.index(i, j);
      records.push_back({grid.p1_axis[i], grid.p2_axis[j], grid.energy[k], grid.feasible[k], false});
    }
  }
  const HybridPowers p = hybrid_powers(s, t_n);
  records.push_back({p.p_n1, p.p_n2, hybrid_energy(s, t_n), true, true});
  return records;
}

void write_surface_csv(std::ostream& out, const OffloadScenario& s, double t_n,
                       const std::vector<SurfaceRecord>& records) {
  write_metadata(out, "surface", s.raw(), true);
  fmt::print(out, "# T_n={}\n", format_number(t_n));
  out << kSurfaceCsvHeader << '\n';
  for (const SurfaceRecord& r : records) {
    fmt::print(out, "{},{},{},{},{}\n", format_number(r.p1), format_number(r.p2),
               format_number(r.energy), r.feasible ? 1 : 0, r.optimum ? "optimum" : "grid");
  }
}

double ScenarioSampler::uniform(std::uint64_t index, std::uint64_t draw) const noexcept {
  const std::uint64_t bits = splitmix64(splitmix64(splitmix64(seed_) ^ index) ^ draw);
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

OffloadScenario ScenarioSampler::hybrid_scenario(std::uint64_t index) const {
  const double nats = lerp(1.0, 40.0, uniform(index, 0));
  const double d_m = lerp(1.0, 50.0, uniform(index, 1));
  const double d_n = std::min(d_m * (1.0 + uniform(index, 2)), std::nextafter(2.0 * d_m, 0.0));
  return OffloadScenario({nats, d_m, std::max(d_n, std::nextafter(d_m, 2.0 * d_m)),
                          lerp(0.1, 10.0, uniform(index, 4)), lerp(0.1, 10.0, uniform(index, 3))});
}

OffloadScenario ScenarioSampler::oma_scenario(std::uint64_t index) const {
  const double nats = lerp(1.0, 40.0, uniform(index, 0));
  const double d_m = lerp(1.0, 50.0, uniform(index, 1));
  const double d_n = std::max(d_m * lerp(2.0, 4.0, uniform(index, 2)), 2.0 * d_m);
  return OffloadScenario(
      {nats, d_m, d_n, lerp(0.1, 10.0, uniform(index, 4)), lerp(0.1, 10.0, uniform(index, 3))});
}

CampaignSummary verification_campaign(std::uint64_t seed, std::size_t count, OracleOptions opts) {
  if (count == 0) {
    throw Error(ErrorKind::InvalidArgument, "verification campaign needs count >= 1");
  }
  const ScenarioSampler sampler(seed);
  CampaignSummary summary;
  summary.seed = seed;
  summary.count = count;

  for (std::size_t i = 0; i < count; ++i) {
    const OffloadScenario s = sampler.hybrid_scenario(i);
    const ComparisonTable table = select_strategy(s);
    const double t_n = table.hybrid.schedule.t_n;

    try {
      const OracleResult oracle = oracle_fixed_t(s, t_n, opts);
      if (!oracle.tolerance_met) ++summary.oracle_failures;
      const double rel = std::abs(oracle.energy - table.hybrid.energy) / table.hybrid.energy;
      summary.max_rel_err = std::max(summary.max_rel_err, rel);
    } catch (const Error&) {
      ++summary.oracle_failures;
    }

    const double e_hybrid = table.hybrid.energy;
    if (std::isfinite(table.pure_noma.energy)) {
      summary.max_dominance_violation =
          std::max(summary.max_dominance_violation, e_hybrid - table.pure_noma.energy);
    }
    if (std::isfinite(table.oma.energy)) {
      summary.max_dominance_violation =
          std::max(summary.max_dominance_violation, e_hybrid - table.oma.energy);
    } else if (!energy_at_most(table.hybrid, table.oma)) {
      summary.max_dominance_violation = std::numeric_limits<double>::infinity();
    }

    const KktPoint y = kkt_log_vars(s, t_n);
    const double residual = std::abs(s.d_m() * y.y1 + t_n * y.y2 - s.nats()) / s.nats();
    summary.max_kkt_residual = std::max(summary.max_kkt_residual, residual);
    if (y.y2 - y.y1 != s.nats() / s.d_m()) {
      summary.max_kkt_residual = std::numeric_limits<double>::infinity();
    }
  }

  summary.pass = summary.oracle_failures == 0 && summary.max_rel_err <= kCampaignRelTol &&
                 summary.max_dominance_violation <= kCampaignDominanceSlack &&
                 summary.max_kkt_residual <= kCampaignKktTol;
  return summary;
}

void write_campaign_summary(std::ostream& out, const CampaignSummary& summary) {
  fmt::print(out, "seed={}\n", summary.seed);
  fmt::print(out, "count={}\n", summary.count);
  fmt::print(out, "max_rel_err={}\n", format_number(summary.max_rel_err));
  fmt::print(out, "max_dominance_violation={}\n", format_number(summary.max_dominance_violation));
  fmt::print(out, "max_kkt_residual={}\n", format_number(summary.max_kkt_residual));
  fmt::print(out, "oracle_failures={}\n", summary.oracle_failures);
  fmt::print(out, "pass={}\n", summary.pass ? "true" : "false");
}

}  // namespace nomamec
