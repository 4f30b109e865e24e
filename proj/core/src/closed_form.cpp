#include "nomamec/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/core.h>

#include "numeric.hpp"

namespace nomamec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_extension_in_range(const OffloadScenario& s, double t_n) {
  if (!(t_n >= 0.0) || t_n > s.d_m()) {
    throw Error(ErrorKind::TimeExtensionOutOfRange,
                fmt::format("t_n={} outside [0, D_m = {}]", t_n, s.d_m()));
  }
}

void require_slot(double t) {
  if (!(t >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, fmt::format("slot length must be >= 0, got {}", t));
  }
}

void finish_report(EnergyReport& r, double h_n_sq) {
  r.energy = r.phase1_energy + r.phase2_energy;
  r.normalized_energy = h_n_sq * r.energy;
  r.log_domain = !std::isfinite(r.energy) && std::isfinite(r.log_energy);
}

}  // namespace

double oma_power_m(const OffloadScenario& s) {
  return std::expm1(s.nats() / s.d_m()) / s.h_m_sq();
}

double oma_power_n(const OffloadScenario& s, double t) {
  require_slot(t);
  if (t == 0.0) return kInf;
  const double exponent = s.nats() / t;
  if (exponent > kMaxExponent) return kInf;
  return std::expm1(exponent) / s.h_n_sq();
}

double oma_energy_n(const OffloadScenario& s, double t) {
  const double power = oma_power_n(s, t);
  return t == 0.0 ? kInf : t * power;
}

double oma_log_energy_n(const OffloadScenario& s, double t) {
  require_slot(t);
  if (t == 0.0) return kInf;
  return std::log(t) + detail::log_expm1(s.nats() / t) - std::log(s.h_n_sq());
}

KktPoint kkt_log_vars(const OffloadScenario& s, double t_n) {
  require_extension_in_range(s, t_n);
  const double phase1_rate = s.nats() / s.d_m();
  // y2 lies in [N/D_m, 2N/D_m], so the subtraction below is exact (Sterbenz)
  // and y2 - y1 gives back N/D_m without rounding.
  const double y2 = std::clamp(2.0 * s.nats() / (s.d_m() + t_n), phase1_rate, 2.0 * phase1_rate);
  return {y2 - phase1_rate, y2};
}

HybridPowers hybrid_powers(const OffloadScenario& s, double t_n) {
  const KktPoint y = kkt_log_vars(s, t_n);
  const double phase1_rate = s.nats() / s.d_m();
  return {std::exp(phase1_rate) * std::expm1(y.y1) / s.h_n_sq(), std::expm1(y.y2) / s.h_n_sq()};
}

double optimal_time_extension(const OffloadScenario& s) {
  if (s.d_n() >= 2.0 * s.d_m()) {
    throw Error(ErrorKind::RegimeViolation,
                fmt::format("hybrid NOMA needs D_n < 2 D_m, got D_m={}, D_n={}", s.d_m(), s.d_n()));
  }
  return s.free_interval();
}

double hybrid_energy(const OffloadScenario& s, double t_n) {
  const HybridPowers p = hybrid_powers(s, t_n);
  return s.d_m() * p.p_n1 + t_n * p.p_n2;
}

double hybrid_log_energy(const OffloadScenario& s, double t_n) {
  const KktPoint y = kkt_log_vars(s, t_n);
  const double phase1_rate = s.nats() / s.d_m();
  const double ninf = -kInf;
  const double phase1 =
      y.y1 > 0.0 ? std::log(s.d_m()) + phase1_rate + detail::log_expm1(y.y1) : ninf;
  const double phase2 = t_n > 0.0 ? std::log(t_n) + detail::log_expm1(y.y2) : ninf;
  return detail::log_add_exp(phase1, phase2) - std::log(s.h_n_sq());
}

double pure_noma_power(const OffloadScenario& s) {
  const double phase1_rate = s.nats() / s.d_m();
  return std::exp(phase1_rate) * std::expm1(phase1_rate) / s.h_n_sq();
}

double pure_noma_energy(const OffloadScenario& s) { return s.d_m() * pure_noma_power(s); }

double pure_noma_log_energy(const OffloadScenario& s) {
  const double phase1_rate = s.nats() / s.d_m();
  return std::log(s.d_m()) + phase1_rate + detail::log_expm1(phase1_rate) -
         std::log(s.h_n_sq());
}

double energy_slope_kernel(double x) {
  // e^x (1 - x) - 1 rewritten around expm1 so small x keeps its digits.
  return std::expm1(x) * (1.0 - x) - x;
}

double energy_derivative(const OffloadScenario& s, double t_n) {
  return energy_slope_kernel(kkt_log_vars(s, t_n).y2);
}

EnergyReport hybrid_report(const OffloadScenario& s, double t_n) {
  const HybridPowers p = hybrid_powers(s, t_n);
  EnergyReport r;
  r.strategy = StrategyKind::HybridNoma;
  r.schedule = {p.p_n1, p.p_n2, t_n};
  r.phase1_energy = s.d_m() * p.p_n1;
  r.phase2_energy = t_n * p.p_n2;
  r.log_energy = hybrid_log_energy(s, t_n);
  finish_report(r, s.h_n_sq());
  return r;
}

EnergyReport pure_noma_report(const OffloadScenario& s) {
  EnergyReport r;
  r.strategy = StrategyKind::PureNoma;
  r.schedule = {pure_noma_power(s), 0.0, 0.0};
  r.phase1_energy = s.d_m() * r.schedule.p_n1;
  r.phase2_energy = 0.0;
  r.log_energy = pure_noma_log_energy(s);
  finish_report(r, s.h_n_sq());
  return r;
}

EnergyReport oma_report(const OffloadScenario& s, double t) {
  EnergyReport r;
  r.strategy = StrategyKind::Oma;
  r.schedule = {0.0, oma_power_n(s, t), t};
  r.phase1_energy = 0.0;
  r.phase2_energy = t == 0.0 ? kInf : t * r.schedule.p_n2;
  r.log_energy = oma_log_energy_n(s, t);
  r.feasible = t > 0.0;
  finish_report(r, s.h_n_sq());
  return r;
}

}  // namespace nomamec
