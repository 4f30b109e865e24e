#include "nomamec/strategy.hpp"

#include <cmath>
#include <limits>

#include <fmt/core.h>

#include "nomamec/closed_form.hpp"

namespace nomamec {

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::Degenerate: return "degenerate";
    case Regime::Hybrid: return "hybrid";
    case Regime::Boundary: return "boundary";
    case Regime::OmaFavored: return "oma-favored";
  }
  return "unknown";
}

Regime classify_regime(const OffloadScenario& s) {
  if (s.d_n() == s.d_m()) return Regime::Degenerate;
  const double twice = 2.0 * s.d_m();
  if (s.d_n() < twice) return Regime::Hybrid;
  if (s.d_n() == twice) return Regime::Boundary;
  return Regime::OmaFavored;
}

const EnergyReport& ComparisonTable::selected_report() const noexcept {
  switch (selected) {
    case StrategyKind::HybridNoma: return hybrid;
    case StrategyKind::PureNoma: return pure_noma;
    case StrategyKind::Oma: return oma;
  }
  return hybrid;
}

ComparisonTable select_strategy(const OffloadScenario& s) {
  ComparisonTable table;
  table.regime = classify_regime(s);
  table.pure_noma = pure_noma_report(s);
  table.oma = oma_report(s, s.free_interval());
  switch (table.regime) {
    case Regime::Degenerate:
    case Regime::Hybrid:
      table.hybrid = hybrid_report(s, s.free_interval());
      table.selected = StrategyKind::HybridNoma;
      break;
    case Regime::Boundary:
    case Regime::OmaFavored:
      table.hybrid = hybrid_report(s, s.d_m());
      table.selected = StrategyKind::Oma;
      break;
  }
  return table;
}

bool energy_at_most(const EnergyReport& a, const EnergyReport& b, double abs_slack) {
  if (!b.feasible) return true;
  if (!a.feasible) return false;
  if (std::isfinite(a.energy) && std::isfinite(b.energy)) return a.energy <= b.energy + abs_slack;
  return a.log_energy <= b.log_energy;
}

double f_tn(const OffloadScenario& s, double x) {
  if (!(x > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, fmt::format("f_tn needs x > 0, got {}", x));
  }
  const double n = s.nats();
  const double dm = s.d_m();
  if (x == dm) return 0.0;
  if (n / x > kMaxExponent) return -std::numeric_limits<double>::infinity();
  return (dm + x) * std::exp(2.0 * n / (dm + x)) - dm * std::exp(n / dm) - x * std::exp(n / x);
}

double noma_oma_gap(const OffloadScenario& s, double t_n) {
  if (!(t_n > 0.0) || t_n > s.d_m()) {
    throw Error(ErrorKind::TimeExtensionOutOfRange,
                fmt::format("gap needs t_n in (0, D_m = {}], got {}", s.d_m(), t_n));
  }
  return hybrid_energy(s, t_n) - oma_energy_n(s, t_n);
}

double hybrid_lower_bound(const OffloadScenario& s) {
  return s.d_m() * (std::expm1(s.nats() / s.d_m()) / s.h_n_sq());
}

}  // namespace nomamec
