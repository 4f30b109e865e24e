#ifndef NOMAMEC_MODEL_HPP
#define NOMAMEC_MODEL_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace nomamec {

enum class ErrorKind {
  NonPositiveParameter,
  DeadlineOrderViolation,
  InvalidSchedule,
  TimeExtensionOutOfRange,
  RegimeViolation,
  NonConvergence,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every precondition failure in the library is reported as an Error carrying
/// a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// One user's task: size in nats and completion deadline.
struct TaskSpec {
  double nats = 0.0;
  double deadline = 0.0;
};

/// |h|^2, the channel power gain over unit noise power.
struct UserChannel {
  double gain_sq = 0.0;
};

/// Unvalidated scenario fields as they come from a caller or a file.
struct RawScenario {
  double nats = 0.0;
  double d_m = 0.0;
  double d_n = 0.0;
  double h_m_sq = 1.0;
  double h_n_sq = 1.0;
};

/// A validated two-user offloading instance. User m has the tighter deadline
/// (d_m <= d_n) and both users carry the same task size.
class OffloadScenario {
 public:
  /// Throws Error{NonPositiveParameter} or Error{DeadlineOrderViolation}.
  explicit OffloadScenario(const RawScenario& raw);
  OffloadScenario(const TaskSpec& user_m, const TaskSpec& user_n, UserChannel channel_m,
                  UserChannel channel_n);

  double nats() const noexcept { return nats_; }
  double d_m() const noexcept { return d_m_; }
  double d_n() const noexcept { return d_n_; }
  double h_m_sq() const noexcept { return h_m_sq_; }
  double h_n_sq() const noexcept { return h_n_sq_; }

  /// D_n - D_m, the interval available to user n alone.
  double free_interval() const noexcept { return d_n_ - d_m_; }

  RawScenario raw() const noexcept { return {nats_, d_m_, d_n_, h_m_sq_, h_n_sq_}; }

 private:
  double nats_;
  double d_m_;
  double d_n_;
  double h_m_sq_;
  double h_n_sq_;
};

OffloadScenario validate_scenario(const RawScenario& raw);

/// User n's allocation: power during user m's slot, power during the
/// extension interval, and the extension length.
struct PowerSchedule {
  double p_n1 = 0.0;
  double p_n2 = 0.0;
  double t_n = 0.0;
};

/// Throws Error{InvalidSchedule} unless p_n1, p_n2 >= 0 and 0 <= t_n <= D_n - D_m.
void check_schedule(const OffloadScenario& s, const PowerSchedule& p);

/// D_m * P_{n,1} + T_n * P_{n,2}. Does not look at the rate constraint.
double schedule_energy(const OffloadScenario& s, const PowerSchedule& p);

/// Nats user n delivers under schedule p with user m decoded last:
///   D_m ln(1 + e^{-N/D_m} |h_n|^2 P_{n,1}) + T_n ln(1 + |h_n|^2 P_{n,2}).
double offloaded_nats(const OffloadScenario& s, const PowerSchedule& p);

/// True when offloaded_nats(s, p) >= N (1 - rel_slack).
bool rate_feasible(const OffloadScenario& s, const PowerSchedule& p, double rel_slack = 0.0);

enum class StrategyKind { HybridNoma, PureNoma, Oma };

std::string_view to_string(StrategyKind kind);

/// Energy of one strategy for one scenario. `energy` and `normalized_energy`
/// are +inf when the strategy cannot deliver the task (zero-length OMA slot)
/// or when the value overflows a double; `log_energy` stays finite in the
/// second case and is what comparisons use.
struct EnergyReport {
  StrategyKind strategy = StrategyKind::HybridNoma;
  PowerSchedule schedule;
  double energy = 0.0;
  double phase1_energy = 0.0;
  double phase2_energy = 0.0;
  double normalized_energy = 0.0;
  double log_energy = 0.0;
  bool log_domain = false;
  bool feasible = true;
};

}  // namespace nomamec

#endif  // NOMAMEC_MODEL_HPP
