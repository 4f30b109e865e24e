#ifndef NOMAMEC_EXPERIMENTS_HPP
#define NOMAMEC_EXPERIMENTS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nomamec/model.hpp"
#include "nomamec/oracle.hpp"
#include "nomamec/strategy.hpp"

namespace nomamec {

/// Scenario fields shared by every row of a deadline sweep.
struct SweepBase {
  double nats = 15.0;
  double d_m = 20.0;
  double h_m_sq = 1.0;
  double h_n_sq = 1.0;
};

struct SweepRow {
  double d_n = 0.0;
  double e_hybrid = 0.0;
  double e_pure = 0.0;
  double e_oma = 0.0;
  double p1_star = 0.0;
  double p2_star = 0.0;
  double t_n_star = 0.0;
  StrategyKind selected = StrategyKind::HybridNoma;
};

/// One row per D_n on a uniform grid of `steps` points over [d_n_from, d_n_to],
/// the last point being d_n_to exactly. Energies come from select_strategy;
/// the starred columns describe the selected strategy's schedule.
std::vector<SweepRow> deadline_sweep(const SweepBase& base, double d_n_from, double d_n_to,
                                     std::size_t steps);

inline constexpr const char* kSweepCsvHeader =
    "d_n,e_hybrid,e_pure,e_oma,p1_star,p2_star,t_n_star,selected";

/// `#`-prefixed metadata, the header, then one line per row. Doubles use 17
/// significant digits; infinities print as `inf`.
void write_sweep_csv(std::ostream& out, const SweepBase& base, const std::vector<SweepRow>& rows);

struct SurfaceRecord {
  double p1 = 0.0;
  double p2 = 0.0;
  double energy = 0.0;
  bool feasible = false;
  /// Marks the single record holding the closed-form optimum.
  bool optimum = false;
};

/// [0, 2 P_{n,1}*] x [0, 2 P_{n,2}*], which centres the closed-form point.
SurfaceRanges default_surface_ranges(const OffloadScenario& s, double t_n);

/// energy_surface flattened to resolution^2 grid records followed by one
/// record for hybrid_powers(s, t_n).
std::vector<SurfaceRecord> surface_export(const OffloadScenario& s, double t_n,
                                          std::optional<SurfaceRanges> ranges,
                                          std::size_t resolution = 200);

inline constexpr const char* kSurfaceCsvHeader = "p1,p2,energy,feasible,kind";

void write_surface_csv(std::ostream& out, const OffloadScenario& s, double t_n,
                       const std::vector<SurfaceRecord>& records);

/// Deterministic scenario source. Draw k of scenario i is a SplitMix64 hash
/// of (seed, i, k), so scenarios can be generated in any order.
class ScenarioSampler {
 public:
  explicit ScenarioSampler(std::uint64_t seed) : seed_(seed) {}

  /// Uniform in the open interval (0, 1).
  double uniform(std::uint64_t index, std::uint64_t draw) const noexcept;

  /// N in [1, 40], D_m in [1, 50], D_n in (D_m, 2 D_m), |h|^2 in [0.1, 10].
  OffloadScenario hybrid_scenario(std::uint64_t index) const;
  /// Same ranges with D_n in [2 D_m, 4 D_m].
  OffloadScenario oma_scenario(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
};

struct CampaignSummary {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  /// max |E_oracle - E_closed| / E_closed at t_n = D_n - D_m.
  double max_rel_err = 0.0;
  /// max of E_hybrid - E_pure and E_hybrid - E_oma, clipped below at 0.
  double max_dominance_violation = 0.0;
  /// max |D_m y1 + T_n y2 - N| / N.
  double max_kkt_residual = 0.0;
  std::size_t oracle_failures = 0;
  bool pass = false;
};

inline constexpr double kCampaignRelTol = 1e-5;
inline constexpr double kCampaignDominanceSlack = 1e-9;
inline constexpr double kCampaignKktTol = 1e-9;

/// Oracle-equivalence, dominance and KKT-residual checks on `count` sampled
/// hybrid-regime scenarios. count must be >= 1.
CampaignSummary verification_campaign(std::uint64_t seed, std::size_t count,
                                      OracleOptions opts = {});

void write_campaign_summary(std::ostream& out, const CampaignSummary& summary);

/// `inf`, `-inf`, or %.17g.
std::string format_number(double value);

}  // namespace nomamec

#endif  // NOMAMEC_EXPERIMENTS_HPP
