#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "nomamec/closed_form.hpp"
#include "nomamec/oracle.hpp"
#include "reference.hpp"

using namespace nomamec;
namespace base_case = reference::base_case;

namespace {

OffloadScenario scenario(double n, double d_m, double d_n, double h_n_sq = 1) {
  return OffloadScenario({n, d_m, d_n, 1, h_n_sq});
}

}  // namespace

TEST_CASE("golden section on simple functions") {
  const auto quad = [](double x) { return (x - 0.3) * (x - 0.3); };
  const LineMinimum m = golden_section_minimize(quad, 0, 1, 1e-10, 200);
  CHECK(m.converged);
  CHECK(m.x == doctest::Approx(0.3).epsilon(1e-9));

  // Minimum on the boundary is returned exactly.
  const LineMinimum edge = golden_section_minimize([](double x) { return x; }, 0, 1, 1e-10, 200);
  CHECK(edge.x == 0.0);
  CHECK(edge.value == 0.0);

  const LineMinimum capped = golden_section_minimize(quad, 0, 1, 1e-10, 5);
  CHECK_FALSE(capped.converged);
  CHECK(capped.iterations == 5);

  CHECK_THROWS_AS(golden_section_minimize(quad, 1, 0, 1e-10, 200), Error);
}

TEST_CASE("oracle_fixed_t reproduces the closed form at the base case") {
  const OffloadScenario s = scenario(15, 20, 25);
  const OracleResult r = oracle_fixed_t(s, 5, {1e-10, 200});
  CHECK(r.tolerance_met);
  CHECK(r.energy == doctest::Approx(base_case::kEnergy).epsilon(1e-12));
  CHECK(std::abs(r.p_n1 - 1.203116) < 1e-5);
  CHECK(std::abs(r.p_n2 - 2.320117) < 1e-5);
  CHECK(reference::rel_close(r.energy, hybrid_energy(s, 5), 1e-5));
  CHECK(r.split == doctest::Approx(20 * 0.45 / 15).epsilon(1e-8));
}

TEST_CASE("oracle at t_n = D_m puts nothing in phase 1") {
  const OffloadScenario s = scenario(15, 20, 40);
  const OracleResult r = oracle_fixed_t(s, 20);
  CHECK(r.energy == doctest::Approx(base_case::kLowerBound).epsilon(1e-12));
  CHECK(r.p_n1 == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(r.split < 1e-6);
}

TEST_CASE("split endpoints") {
  const OffloadScenario s = scenario(15, 20, 25);
  CHECK(energy_at_split(s, 5, 1.0) == doctest::Approx(pure_noma_energy(s)).epsilon(1e-15));
  CHECK(energy_at_split(s, 5, 0.0) == doctest::Approx(oma_energy_n(s, 5)).epsilon(1e-15));
  const PowerSchedule p = schedule_for_split(s, 5, 0.37);
  CHECK(offloaded_nats(s, p) == doctest::Approx(15).epsilon(1e-14));
  CHECK_THROWS_AS(schedule_for_split(s, 5, 1.5), Error);
  CHECK_THROWS_AS(schedule_for_split(s, 0, 0.5), Error);
}

TEST_CASE("oracle argument checks") {
  const OffloadScenario s = scenario(15, 20, 25);
  CHECK_THROWS_AS(oracle_fixed_t(s, 0), Error);
  CHECK_THROWS_AS(oracle_fixed_t(s, 21), Error);
  try {
    oracle_fixed_t(s, 5, {1e-10, 3});
    FAIL("expected NonConvergence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonConvergence);
  }
  CHECK_THROWS_AS(oracle_joint(s, 1), Error);
}

TEST_CASE("oracle minimum is below every sample of the split") {
  const OffloadScenario s = scenario(15, 20, 25);
  const OracleResult r = oracle_fixed_t(s, 5, {1e-10, 200});
  for (int k = 0; k <= 10000; ++k) {
    CHECK(r.energy <= energy_at_split(s, 5, k / 10000.0) + 1e-12);
  }
}

TEST_CASE("halving tol does not raise the minimum") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    const double d_m = 1 + 49 * u(rng);
    const OffloadScenario s = scenario(1 + 39 * u(rng), d_m, d_m * (1 + u(rng)), 0.1 + 9.9 * u(rng));
    const double t = s.free_interval();
    const double coarse = oracle_fixed_t(s, t, {1e-8, 200}).energy;
    const double fine = oracle_fixed_t(s, t, {5e-9, 200}).energy;
    CHECK(fine <= coarse * (1 + 1e-9));
  }
}

TEST_CASE("oracle_fixed_t agrees with closed form and brute force on random scenarios") {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 300; ++k) {
    const double d_m = 1 + 49 * u(rng);
    const OffloadScenario s = scenario(1 + 39 * u(rng), d_m, d_m * (1 + u(rng)), 0.1 + 9.9 * u(rng));
    const double t = s.free_interval();
    const OracleResult r = oracle_fixed_t(s, t);
    CHECK(r.tolerance_met);
    CHECK(reference::rel_close(r.energy, hybrid_energy(s, t), 1e-5));
    if (k < 30) {
      const auto brute = reference::brute_force_fixed_t({s.nats(), s.d_m(), s.h_n_sq()}, t);
      CHECK(reference::rel_close(r.energy, brute.energy, 1e-9));
    }
  }
}

TEST_CASE("oracle_joint lands on the largest admissible extension") {
  const OracleResult r25 = oracle_joint(scenario(15, 20, 25), 100);
  CHECK(r25.t_n == 5);
  CHECK(r25.energy == doctest::Approx(base_case::kEnergy).epsilon(1e-10));

  const OffloadScenario s21 = scenario(15, 20, 21);
  const OracleResult r21 = oracle_joint(s21, 100);
  CHECK(r21.t_n == 1);
  CHECK(reference::rel_close(r21.energy, hybrid_energy(s21, 1), 1e-5));

  const OffloadScenario s20 = scenario(15, 20, 20);
  const OracleResult r20 = oracle_joint(s20);
  CHECK(r20.t_n == 0);
  CHECK(r20.energy == doctest::Approx(pure_noma_energy(s20)).epsilon(1e-15));
}

TEST_CASE("oracle_joint boundary property on random hybrid scenarios") {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 10; ++k) {
    const double d_m = 1 + 49 * u(rng);
    const OffloadScenario s = scenario(1 + 39 * u(rng), d_m, d_m * (1.05 + 0.9 * u(rng)), 0.1 + 9.9 * u(rng));
    const std::size_t steps = 64;
    const OracleResult r = oracle_joint(s, steps);
    CHECK(std::abs(r.t_n - s.free_interval()) <= s.free_interval() / steps);
  }
}

TEST_CASE("energy surface") {
  const OffloadScenario s = scenario(15, 20, 25);
  const SurfaceGrid g = energy_surface(s, 5, {2 * base_case::kP1, 2 * base_case::kP2}, 200);
  REQUIRE(g.p1_axis.size() == 200);
  REQUIRE(g.energy.size() == 200 * 200);
  CHECK_FALSE(g.feasible[g.index(0, 0)]);
  for (std::size_t i = 0; i < 200; i += 7) {
    for (std::size_t j = 0; j < 200; j += 11) {
      const std::size_t k = g.index(i, j);
      CHECK(g.energy[k] == doctest::Approx(20 * g.p1_axis[i] + 5 * g.p2_axis[j]).epsilon(1e-15));
      const double sent = offloaded_nats(s, {g.p1_axis[i], g.p2_axis[j], 5});
      CHECK(g.feasible[k] == (sent >= 15));
    }
  }

  const SurfaceMinimum m = feasible_minimum(s, g);
  REQUIRE(m.found);
  const double cell1 = g.p1_axis[1] - g.p1_axis[0];
  const double cell2 = g.p2_axis[1] - g.p2_axis[0];
  CHECK(std::abs(g.p1_axis[m.i] - base_case::kP1) <= cell1);
  CHECK(std::abs(g.p2_axis[m.j] - base_case::kP2) <= cell2);
  CHECK(m.energy >= base_case::kEnergy);

  CHECK_THROWS_AS(energy_surface(s, 5, {1, 1}, 1), Error);
}

TEST_CASE("feasible minimum cell contains the optimum at any resolution") {
  // Point samples alone miss the optimum whenever it falls between grid lines.
  const OffloadScenario s = scenario(15, 20, 25);
  for (std::size_t resolution : {57, 200, 201, 400, 1000}) {
    const SurfaceGrid g = energy_surface(s, 5, {2 * base_case::kP1, 2 * base_case::kP2}, resolution);
    const SurfaceMinimum m = feasible_minimum(s, g);
    REQUIRE(m.found);
    CHECK(g.p1_axis[m.i] <= base_case::kP1);
    CHECK(base_case::kP1 <= g.p1_axis[m.i + 1]);
    CHECK(g.p2_axis[m.j] <= base_case::kP2);
    CHECK(base_case::kP2 <= g.p2_axis[m.j + 1]);
    CHECK(m.energy == doctest::Approx(base_case::kEnergy).epsilon(1e-12));
    CHECK(m.p1 == doctest::Approx(base_case::kP1).epsilon(1e-6));
  }
}

TEST_CASE("surface at an extension longer than D_n - D_m still evaluates") {
  const OffloadScenario s = scenario(15, 20, 21);
  const SurfaceGrid g = energy_surface(s, 5, {3, 5}, 10);
  CHECK(g.t_n == 5);
}
