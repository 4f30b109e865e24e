#ifndef NOMAMEC_ORACLE_HPP
#define NOMAMEC_ORACLE_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "nomamec/model.hpp"

// Numerical reference solvers. Nothing here calls into closed_form: the
// oracle only knows the objective and the rate constraint from model.hpp.

namespace nomamec {

struct LineMinimum {
  double x = 0.0;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Golden-section search for the minimum of a unimodal f on [lo, hi].
/// Stops once the bracket is narrower than tol or after max_iterations.
/// The endpoints are compared against the interior result, so minima sitting
/// on the boundary are returned exactly.
LineMinimum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                    double tol, int max_iterations);

struct OracleOptions {
  double tol = 1e-10;
  int max_iterations = 200;
};

struct OracleResult {
  double p_n1 = 0.0;
  double p_n2 = 0.0;
  double t_n = 0.0;
  double energy = 0.0;
  /// Share of the N nats sent during D_m at the optimum.
  double split = 0.0;
  int iterations = 0;
  bool tolerance_met = false;
};

/// Powers on the active rate constraint that send split*N nats during D_m and
/// the rest during t_n. split must lie in [0, 1]; t_n == 0 forces split = 1.
PowerSchedule schedule_for_split(const OffloadScenario& s, double t_n, double split);

/// Energy of schedule_for_split; +inf where a power overflows.
double energy_at_split(const OffloadScenario& s, double t_n, double split);

/// Minimum energy at a fixed extension 0 < t_n <= D_m, found by searching
/// the nat split along the active constraint. Throws NonConvergence when the
/// iteration cap is hit first.
OracleResult oracle_fixed_t(const OffloadScenario& s, double t_n, OracleOptions opts = {});

/// Joint search: oracle_fixed_t on t_i = T_max i / t_steps, i = 1..t_steps,
/// T_max = min(D_n - D_m, D_m), returning the best grid point. With
/// D_n == D_m the only option is pure NOMA at t_n = 0.
OracleResult oracle_joint(const OffloadScenario& s, std::size_t t_steps = 256,
                          OracleOptions opts = {});

/// Objective sampled on a uniform power grid at fixed t_n. Row-major in
/// (p1, p2): index = i * p2_axis.size() + j.
struct SurfaceGrid {
  double t_n = 0.0;
  std::vector<double> p1_axis;
  std::vector<double> p2_axis;
  std::vector<double> energy;
  std::vector<bool> feasible;

  std::size_t index(std::size_t i, std::size_t j) const noexcept { return i * p2_axis.size() + j; }
};

struct SurfaceRanges {
  double p1_max = 0.0;
  double p2_max = 0.0;
};

/// Requires D_n - D_m >= t_n so every grid point is a valid schedule.
SurfaceGrid energy_surface(const OffloadScenario& s, double t_n, SurfaceRanges ranges,
                           std::size_t resolution = 200);

/// Cell (i, j) spans [p1_axis[i], p1_axis[i+1]] x [p2_axis[j], p2_axis[j+1]];
/// (p1, p2) is the cheapest feasible point inside it.
struct SurfaceMinimum {
  std::size_t i = 0;
  std::size_t j = 0;
  double p1 = 0.0;
  double p2 = 0.0;
  double energy = 0.0;
  bool found = false;
};

/// Cheapest feasible cell of a surface. A cell is feasible when any point in
/// it meets the rate constraint and is valued at its cheapest such point.
SurfaceMinimum feasible_minimum(const OffloadScenario& s, const SurfaceGrid& grid);

}  // namespace nomamec

#endif  // NOMAMEC_ORACLE_HPP
