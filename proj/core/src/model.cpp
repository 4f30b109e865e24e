#include "nomamec/model.hpp"

#include <cmath>

#include <fmt/core.h>

namespace nomamec {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorKind::DeadlineOrderViolation: return "DeadlineOrderViolation";
    case ErrorKind::InvalidSchedule: return "InvalidSchedule";
    case ErrorKind::TimeExtensionOutOfRange: return "TimeExtensionOutOfRange";
    case ErrorKind::RegimeViolation: return "RegimeViolation";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(fmt::format("{}: {}", to_string(kind), what)), kind_(kind) {}

namespace {

void require_positive(double value, std::string_view name) {
  // Also rejects NaN and +inf.
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorKind::NonPositiveParameter,
                fmt::format("{} must be positive and finite, got {}", name, value));
  }
}

}  // namespace

OffloadScenario::OffloadScenario(const RawScenario& raw)
    : nats_(raw.nats), d_m_(raw.d_m), d_n_(raw.d_n), h_m_sq_(raw.h_m_sq), h_n_sq_(raw.h_n_sq) {
  require_positive(nats_, "N");
  require_positive(d_m_, "D_m");
  require_positive(d_n_, "D_n");
  require_positive(h_m_sq_, "|h_m|^2");
  require_positive(h_n_sq_, "|h_n|^2");
  if (d_n_ < d_m_) {
    throw Error(ErrorKind::DeadlineOrderViolation,
                fmt::format("users must be ordered by deadline, got D_m={} > D_n={}", d_m_, d_n_));
  }
}

OffloadScenario::OffloadScenario(const TaskSpec& user_m, const TaskSpec& user_n,
                                 UserChannel channel_m, UserChannel channel_n)
    : OffloadScenario(RawScenario{user_m.nats, user_m.deadline, user_n.deadline,
                                  channel_m.gain_sq, channel_n.gain_sq}) {
  require_positive(user_n.nats, "N (user n)");
  if (user_m.nats != user_n.nats) {
    throw Error(ErrorKind::InvalidArgument,
                fmt::format("both users must carry the same task size, got {} and {}",
                            user_m.nats, user_n.nats));
  }
}

OffloadScenario validate_scenario(const RawScenario& raw) { return OffloadScenario(raw); }

void check_schedule(const OffloadScenario& s, const PowerSchedule& p) {
  if (!(p.p_n1 >= 0.0) || !(p.p_n2 >= 0.0)) {
    throw Error(ErrorKind::InvalidSchedule,
                fmt::format("powers must be nonnegative, got ({}, {})", p.p_n1, p.p_n2));
  }
  if (!(p.t_n >= 0.0) || p.t_n > s.free_interval()) {
    throw Error(ErrorKind::InvalidSchedule,
                fmt::format("T_n={} outside [0, D_n - D_m = {}]", p.t_n, s.free_interval()));
  }
}

double schedule_energy(const OffloadScenario& s, const PowerSchedule& p) {
  check_schedule(s, p);
  return s.d_m() * p.p_n1 + p.t_n * p.p_n2;
}

double offloaded_nats(const OffloadScenario& s, const PowerSchedule& p) {
  check_schedule(s, p);
  // User m's OMA power leaves a residual interference term 1 + P_m|h_m|^2 = e^{N/D_m}.
  const double phase1 =
      s.d_m() * std::log1p(std::exp(-s.nats() / s.d_m()) * s.h_n_sq() * p.p_n1);
  const double phase2 = p.t_n > 0.0 ? p.t_n * std::log1p(s.h_n_sq() * p.p_n2) : 0.0;
  return phase1 + phase2;
}

bool rate_feasible(const OffloadScenario& s, const PowerSchedule& p, double rel_slack) {
  return offloaded_nats(s, p) >= s.nats() * (1.0 - rel_slack);
}

std::string_view to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::HybridNoma: return "hybrid-noma";
    case StrategyKind::PureNoma: return "pure-noma";
    case StrategyKind::Oma: return "oma";
  }
  return "unknown";
}

}  // namespace nomamec
