#ifndef NOMAMEC_STRATEGY_HPP
#define NOMAMEC_STRATEGY_HPP

#include <string_view>

#include "nomamec/model.hpp"

namespace nomamec {

/// Deadline regime of a scenario, set by D_n relative to D_m and 2 D_m.
enum class Regime {
  Degenerate,  // D_n == D_m
  Hybrid,      // D_m < D_n < 2 D_m
  Boundary,    // D_n == 2 D_m
  OmaFavored,  // D_n > 2 D_m
};

std::string_view to_string(Regime regime);

Regime classify_regime(const OffloadScenario& s);

/// All three strategies evaluated for one scenario plus the pick.
///
/// In the Degenerate and Hybrid regimes the hybrid entry uses
/// T_n = D_n - D_m and is selected. In the Boundary and OmaFavored regimes
/// the hybrid entry is reported at its infimum T_n = D_m and OMA, using the
/// whole slot D_n - D_m, is selected (ties at D_n = 2 D_m go to OMA).
/// Pure NOMA is always reported and never selected.
struct ComparisonTable {
  EnergyReport hybrid;
  EnergyReport pure_noma;
  EnergyReport oma;
  StrategyKind selected = StrategyKind::HybridNoma;
  Regime regime = Regime::Hybrid;

  const EnergyReport& selected_report() const noexcept;
};

ComparisonTable select_strategy(const OffloadScenario& s);

/// a.energy <= b.energy + abs_slack, falling back to log energies when
/// either side has overflowed. An infeasible b is beaten by anything.
bool energy_at_most(const EnergyReport& a, const EnergyReport& b, double abs_slack = 0.0);

/// (D_m + x) e^{2N/(D_m + x)} - D_m e^{N/D_m} - x e^{N/x}, which equals
/// |h_n|^2 (E_hybrid(x) - E_oma(x)). Returns -inf once x e^{N/x} overflows.
double f_tn(const OffloadScenario& s, double x);

/// E_hybrid(t_n) - E_oma(t_n) for 0 < t_n <= D_m; never positive.
double noma_oma_gap(const OffloadScenario& s, double t_n);

/// D_m (e^{N/D_m} - 1) / |h_n|^2, the infimum of hybrid energy over t_n in [0, D_m].
double hybrid_lower_bound(const OffloadScenario& s);

}  // namespace nomamec

#endif  // NOMAMEC_STRATEGY_HPP
