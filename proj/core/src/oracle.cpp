#include "nomamec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/core.h>

namespace nomamec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMaxExponent = 700.0;

// The objective and the rate constraint do not involve D_n, so evaluate them
// on a copy whose free interval admits t_n.
OffloadScenario admitting(const OffloadScenario& s, double t_n) {
  RawScenario raw = s.raw();
  raw.d_n = std::max(raw.d_n, raw.d_m + t_n);
  return OffloadScenario(raw);
}

void require_fixed_t(const OffloadScenario& s, double t_n) {
  if (!(t_n > 0.0) || t_n > s.d_m()) {
    throw Error(ErrorKind::TimeExtensionOutOfRange,
                fmt::format("oracle needs t_n in (0, D_m = {}], got {}", s.d_m(), t_n));
  }
}

double power_for_rate(double exponent, double h_sq) {
  if (exponent > kMaxExponent) return kInf;
  return std::expm1(exponent) / h_sq;
}

}  // namespace

LineMinimum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                    double tol, int max_iterations) {
  if (!(hi >= lo) || !(tol > 0.0)) {
    throw Error(ErrorKind::InvalidArgument,
                fmt::format("bad golden-section bracket [{}, {}] tol {}", lo, hi, tol));
  }
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int iterations = 0;
  while (b - a > tol && iterations < max_iterations) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++iterations;
  }

  LineMinimum best{fc < fd ? c : d, std::min(fc, fd), iterations, b - a <= tol};
  for (double edge : {lo, hi}) {
    const double fe = f(edge);
    if (fe < best.value) {
      best.x = edge;
      best.value = fe;
    }
  }
  return best;
}

PowerSchedule schedule_for_split(const OffloadScenario& s, double t_n, double split) {
  if (!(split >= 0.0 && split <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, fmt::format("split {} outside [0, 1]", split));
  }
  const double n = s.nats();
  const double phase1_rate = n / s.d_m();
  // y1 = split N / D_m and y2 = (1 - split) N / t_n keep D_m y1 + t_n y2 = N.
  const double y1 = split * phase1_rate;
  PowerSchedule p;
  p.t_n = t_n;
  p.p_n1 = phase1_rate + y1 > kMaxExponent
               ? kInf
               : std::exp(phase1_rate) * std::expm1(y1) / s.h_n_sq();
  if (t_n > 0.0) {
    p.p_n2 = power_for_rate((1.0 - split) * n / t_n, s.h_n_sq());
  } else if (split < 1.0) {
    throw Error(ErrorKind::InvalidArgument, "t_n == 0 leaves no room for split < 1");
  }
  return p;
}

double energy_at_split(const OffloadScenario& s, double t_n, double split) {
  const OffloadScenario wide = admitting(s, t_n);
  return schedule_energy(wide, schedule_for_split(wide, t_n, split));
}

OracleResult oracle_fixed_t(const OffloadScenario& s, double t_n, OracleOptions opts) {
  require_fixed_t(s, t_n);
  const OffloadScenario wide = admitting(s, t_n);

  // Splits below this push the phase-2 exponent past the overflow guard.
  const double lowest_split = std::clamp(1.0 - kMaxExponent * t_n / wide.nats(), 0.0, 1.0);
  const auto objective = [&](double split) {
    return schedule_energy(wide, schedule_for_split(wide, t_n, split));
  };
  const LineMinimum m =
      golden_section_minimize(objective, lowest_split, 1.0, opts.tol, opts.max_iterations);
  if (!m.converged) {
    throw Error(ErrorKind::NonConvergence,
                fmt::format("golden section stopped after {} iterations above tol {}",
                            m.iterations, opts.tol));
  }

  const PowerSchedule p = schedule_for_split(wide, t_n, m.x);
  OracleResult r;
  r.p_n1 = p.p_n1;
  r.p_n2 = p.p_n2;
  r.t_n = t_n;
  r.energy = m.value;
  r.split = m.x;
  r.iterations = m.iterations;
  r.tolerance_met = rate_feasible(wide, p, 1e-9);
  return r;
}

OracleResult oracle_joint(const OffloadScenario& s, std::size_t t_steps, OracleOptions opts) {
  if (t_steps < 2) {
    throw Error(ErrorKind::InvalidArgument, fmt::format("t_steps must be >= 2, got {}", t_steps));
  }
  const double t_max = std::min(s.free_interval(), s.d_m());
  if (t_max == 0.0) {
    const PowerSchedule p = schedule_for_split(s, 0.0, 1.0);
    OracleResult r;
    r.p_n1 = p.p_n1;
    r.energy = schedule_energy(s, p);
    r.split = 1.0;
    r.tolerance_met = rate_feasible(s, p, 1e-9);
    return r;
  }

  OracleResult best;
  best.energy = kInf;
  for (std::size_t i = 1; i <= t_steps; ++i) {
    const double t = i == t_steps ? t_max : t_max * static_cast<double>(i) / t_steps;
    OracleResult r = oracle_fixed_t(s, t, opts);
    if (r.energy < best.energy) best = r;
  }
  return best;
}

SurfaceGrid energy_surface(const OffloadScenario& s, double t_n, SurfaceRanges ranges,
                           std::size_t resolution) {
  if (resolution < 2) {
    throw Error(ErrorKind::InvalidArgument,
                fmt::format("surface resolution must be >= 2, got {}", resolution));
  }
  if (!(ranges.p1_max > 0.0) || !(ranges.p2_max > 0.0) || !(t_n >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument,
                fmt::format("surface needs positive ranges and t_n >= 0, got ({}, {}) t_n={}",
                            ranges.p1_max, ranges.p2_max, t_n));
  }
  const OffloadScenario wide = admitting(s, t_n);

  SurfaceGrid grid;
  grid.t_n = t_n;
  grid.p1_axis.resize(resolution);
  grid.p2_axis.resize(resolution);
  const double last = static_cast<double>(resolution - 1);
  for (std::size_t k = 0; k < resolution; ++k) {
    const double share = k + 1 == resolution ? 1.0 : static_cast<double>(k) / last;
    grid.p1_axis[k] = ranges.p1_max * share;
    grid.p2_axis[k] = ranges.p2_max * share;
  }
  grid.energy.resize(resolution * resolution);
  grid.feasible.resize(resolution * resolution);
  for (std::size_t i = 0; i < resolution; ++i) {
    for (std::size_t j = 0; j < resolution; ++j) {
      const PowerSchedule p{grid.p1_axis[i], grid.p2_axis[j], t_n};
      grid.energy[grid.index(i, j)] = schedule_energy(wide, p);
      grid.feasible[grid.index(i, j)] = rate_feasible(wide, p);
    }
  }
  return grid;
}

SurfaceMinimum feasible_minimum(const OffloadScenario& s, const SurfaceGrid& grid) {
  const OffloadScenario wide = admitting(s, grid.t_n);
  const double n = wide.nats();
  const double d_m = wide.d_m();
  const double t_n = grid.t_n;
  const double h = wide.h_n_sq();
  const double c = n / d_m;
  const auto energy = [&](double p1, double p2) { return d_m * p1 + t_n * p2; };
  // Rate-constraint curve: cheapest P2 for a given P1, and its inverse.
  const auto p2_on_curve = [&](double p1) {
    return std::expm1((n - d_m * std::log1p(std::exp(-c) * h * p1)) / t_n) / h;
  };
  const auto p1_on_curve = [&](double p2) {
    return std::exp(c) * std::expm1((n - t_n * std::log1p(h * p2)) / d_m) / h;
  };

  SurfaceMinimum best;
  best.energy = kInf;
  const std::size_t cells1 = grid.p1_axis.size() - 1;
  const std::size_t cells2 = grid.p2_axis.size() - 1;
  for (std::size_t i = 0; i < cells1; ++i) {
    for (std::size_t j = 0; j < cells2; ++j) {
      // Rates grow with both powers, so the upper corner decides feasibility.
      if (!grid.feasible[grid.index(i + 1, j + 1)]) continue;
      const double a0 = grid.p1_axis[i], a1 = grid.p1_axis[i + 1];
      const double b0 = grid.p2_axis[j], b1 = grid.p2_axis[j + 1];
      double p1 = a0;
      double p2 = b0;
      if (!grid.feasible[grid.index(i, j)]) {
        // The cheapest feasible point of the cell sits on the constraint curve.
        if (t_n == 0.0) {
          p1 = std::clamp(std::exp(c) * std::expm1(c) / h, a0, a1);
        } else {
          const double lo = std::clamp(p1_on_curve(b1), a0, a1);
          const double hi = std::max(lo, std::clamp(p1_on_curve(b0), a0, a1));
          const LineMinimum m = golden_section_minimize(
              [&](double x) { return energy(x, p2_on_curve(x)); }, lo, hi,
              std::max(1e-14, 1e-12 * (a1 - a0)), 200);
          p1 = m.x;
          p2 = std::clamp(p2_on_curve(p1), b0, b1);
        }
      }
      const double e = energy(p1, p2);
      if (e < best.energy) best = {i, j, p1, p2, e, true};
    }
  }
  return best;
}

}  // namespace nomamec
