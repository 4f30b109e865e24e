#ifndef NOMAMEC_CLOSED_FORM_HPP
#define NOMAMEC_CLOSED_FORM_HPP

#include "nomamec/model.hpp"

namespace nomamec {

/// Exponents above this are treated as overflowing; energies beyond it are
/// carried in the log domain.
inline constexpr double kMaxExponent = 700.0;

/// Log-domain rate variables y_i = ln x_i, with
/// x_1 = 1 + e^{-N/D_m}|h_n|^2 P_{n,1} and x_2 = 1 + |h_n|^2 P_{n,2}.
struct KktPoint {
  double y1 = 0.0;
  double y2 = 0.0;
};

/// Powers of user n in its two phases. Not a PowerSchedule because the
/// closed form is defined for any T_n in [0, D_m] irrespective of D_n.
struct HybridPowers {
  double p_n1 = 0.0;
  double p_n2 = 0.0;
};

/// P_m^OMA = (e^{N/D_m} - 1) / |h_m|^2, the power that lets user m finish
/// alone in D_m.
double oma_power_m(const OffloadScenario& s);

/// Power user n needs to send all N nats alone in a slot of length t.
/// +inf for t == 0 or when the exponent N/t overflows.
double oma_power_n(const OffloadScenario& s, double t);

/// t (e^{N/t} - 1) / |h_n|^2; +inf for t == 0.
double oma_energy_n(const OffloadScenario& s, double t);
/// ln of oma_energy_n, finite for every t > 0.
double oma_log_energy_n(const OffloadScenario& s, double t);

/// Optimal log-domain rates for a fixed extension t_n in [0, D_m]:
///   y2 = 2N / (D_m + t_n),  y1 = y2 - N/D_m = N (D_m - t_n) / (D_m (D_m + t_n)).
/// y2 - y1 reproduces N/D_m bit-exactly.
KktPoint kkt_log_vars(const OffloadScenario& s, double t_n);

/// Minimum-energy powers for a fixed t_n in [0, D_m]. The rate constraint is
/// active at the returned point.
HybridPowers hybrid_powers(const OffloadScenario& s, double t_n);

/// T_n* = D_n - D_m. Only defined while D_n < 2 D_m (RegimeViolation otherwise).
double optimal_time_extension(const OffloadScenario& s);

/// D_m P_{n,1}* + t_n P_{n,2}*, non-increasing in t_n.
double hybrid_energy(const OffloadScenario& s, double t_n);
double hybrid_log_energy(const OffloadScenario& s, double t_n);

/// e^{N/D_m} (e^{N/D_m} - 1) / |h_n|^2: user n's power when the whole task goes out during D_m.
double pure_noma_power(const OffloadScenario& s);
double pure_noma_energy(const OffloadScenario& s);
double pure_noma_log_energy(const OffloadScenario& s);

/// e^x (1 - x) - 1. Nonpositive for x >= 0 and zero at the origin.
double energy_slope_kernel(double x);

/// d/dt_n of the normalized energy |h_n|^2 * hybrid_energy(s, t_n),
/// i.e. energy_slope_kernel(2N / (D_m + t_n)).
double energy_derivative(const OffloadScenario& s, double t_n);

EnergyReport hybrid_report(const OffloadScenario& s, double t_n);
EnergyReport pure_noma_report(const OffloadScenario& s);
/// OMA for user n over a slot of length t. Infeasible (energy +inf) when t == 0.
EnergyReport oma_report(const OffloadScenario& s, double t);

}  // namespace nomamec

#endif  // NOMAMEC_CLOSED_FORM_HPP
