#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "nomamec/closed_form.hpp"
#include "nomamec/strategy.hpp"
#include "reference.hpp"

using namespace nomamec;
namespace base_case = reference::base_case;

namespace {

OffloadScenario scenario(double n, double d_m, double d_n, double h_n_sq = 1) {
  return OffloadScenario({n, d_m, d_n, 1, h_n_sq});
}

}  // namespace

TEST_CASE("regimes") {
  CHECK(classify_regime(scenario(15, 20, 20)) == Regime::Degenerate);
  CHECK(classify_regime(scenario(15, 20, 25)) == Regime::Hybrid);
  CHECK(classify_regime(scenario(15, 20, 40)) == Regime::Boundary);
  CHECK(classify_regime(scenario(15, 20, 50)) == Regime::OmaFavored);
}

TEST_CASE("select_strategy in the hybrid regime") {
  const ComparisonTable t = select_strategy(scenario(15, 20, 25));
  CHECK(t.selected == StrategyKind::HybridNoma);
  CHECK(t.hybrid.schedule.t_n == 5);
  CHECK(std::abs(t.hybrid.energy - 35.66291) < 1e-4);
  CHECK(std::abs(t.pure_noma.energy - 47.29378) < 1e-4);
  CHECK(std::abs(t.oma.energy - 95.42769) < 1e-4);
  CHECK(&t.selected_report() == &t.hybrid);
}

TEST_CASE("select_strategy with equal deadlines") {
  const ComparisonTable t = select_strategy(scenario(15, 20, 20));
  CHECK(t.selected == StrategyKind::HybridNoma);
  CHECK(t.hybrid.schedule.t_n == 0);
  CHECK(t.hybrid.energy == t.pure_noma.energy);
  CHECK(std::isinf(t.oma.energy));
  CHECK(t.oma.energy > 0);
  CHECK_FALSE(t.oma.feasible);
}

TEST_CASE("select_strategy in the OMA regime") {
  const ComparisonTable t = select_strategy(scenario(15, 20, 50));
  CHECK(t.selected == StrategyKind::Oma);
  CHECK(t.oma.schedule.t_n == 30);
  CHECK(t.oma.energy == doctest::Approx(base_case::kOmaSlot30).epsilon(1e-14));
  CHECK(t.oma.energy < t.pure_noma.energy);
  CHECK(t.hybrid.schedule.t_n == 20);
  CHECK(t.hybrid.energy == doctest::Approx(base_case::kLowerBound).epsilon(1e-15));
}

TEST_CASE("boundary tie goes to OMA and both energies meet the lower bound") {
  const OffloadScenario s = scenario(15, 20, 40);
  const ComparisonTable t = select_strategy(s);
  CHECK(t.selected == StrategyKind::Oma);
  CHECK(t.hybrid.energy == t.oma.energy);
  CHECK(t.oma.energy == hybrid_lower_bound(s));
}

TEST_CASE("f_tn") {
  const OffloadScenario s = scenario(15, 20, 40);
  CHECK(f_tn(s, 20) == 0.0);
  CHECK(f_tn(s, 10) == doctest::Approx(base_case::kFtnAt10).epsilon(1e-13));
  CHECK(f_tn(s, 5) == doctest::Approx(base_case::kFtnAt5).epsilon(1e-13));
  CHECK(f_tn(s, 15) == doctest::Approx(base_case::kFtnAt15).epsilon(1e-12));
  CHECK(f_tn(s, 5) <= f_tn(s, 10));
  CHECK(f_tn(s, 10) <= f_tn(s, 15));
  CHECK(f_tn(s, 15) <= 0.0);
  CHECK(std::isinf(f_tn(s, 1e-3)));
  CHECK(f_tn(s, 1e-3) < 0);
  CHECK_THROWS_AS(f_tn(s, 0.0), Error);
}

TEST_CASE("noma_oma_gap") {
  const OffloadScenario s = scenario(15, 20, 40);
  CHECK(std::abs(noma_oma_gap(s, 20)) <= 1e-9);
  CHECK(noma_oma_gap(s, 5) == doctest::Approx(base_case::kGapAt5).epsilon(1e-13));
  CHECK(noma_oma_gap(s, 10) == doctest::Approx(base_case::kFtnAt10).epsilon(1e-12));
  CHECK_THROWS_AS(noma_oma_gap(s, 0), Error);
  CHECK_THROWS_AS(noma_oma_gap(s, 21), Error);
}

TEST_CASE("gap equals f_tn / |h_n|^2 and is never positive") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    const double d_m = 1 + 49 * u(rng);
    const OffloadScenario s = scenario(1 + 39 * u(rng), d_m, 2 * d_m, 0.1 + 9.9 * u(rng));
    const double t = d_m * (0.05 + 0.95 * u(rng));
    const double gap = noma_oma_gap(s, t);
    CHECK(gap <= 1e-9);
    const double f = f_tn(s, t);
    if (std::isfinite(f) && std::abs(f) > 1e-6 * s.d_m() * std::exp(2 * s.nats() / s.d_m())) {
      CHECK(reference::rel_close(gap * s.h_n_sq(), f, 1e-6));
    }
  }
}

TEST_CASE("hybrid_lower_bound") {
  CHECK(hybrid_lower_bound(scenario(15, 20, 25)) == doctest::Approx(22.34000).epsilon(1e-6));
  CHECK(hybrid_lower_bound(scenario(15, 20, 25, 2)) == doctest::Approx(11.17000).epsilon(1e-6));
  const OffloadScenario s = scenario(15, 20, 25);
  for (int i = 0; i <= 100; ++i) {
    CHECK(hybrid_energy(s, 20.0 * i / 100) >= hybrid_lower_bound(s));
  }
}

TEST_CASE("dominance in the hybrid regime") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    const double d_m = 1 + 49 * u(rng);
    const OffloadScenario s = scenario(1 + 39 * u(rng), d_m, d_m * (1 + 0.999 * u(rng) + 1e-4),
                                       0.1 + 9.9 * u(rng));
    const ComparisonTable t = select_strategy(s);
    CHECK(t.selected == StrategyKind::HybridNoma);
    CHECK(energy_at_most(t.hybrid, t.pure_noma, 1e-9));
    CHECK(energy_at_most(t.hybrid, t.oma, 1e-9));
  }
}

TEST_CASE("OMA regime inequalities") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    const double d_m = 1 + 49 * u(rng);
    const double n = 1 + 39 * u(rng);
    const OffloadScenario s = scenario(n, d_m, d_m * (2 + 2 * u(rng)), 0.1 + 9.9 * u(rng));
    const ComparisonTable t = select_strategy(s);
    CHECK(t.selected == StrategyKind::Oma);
    CHECK(t.oma.energy <= t.pure_noma.energy + 1e-9);
    CHECK(t.oma.energy <= hybrid_lower_bound(s) + 1e-9);
    const double c = std::expm1(n / d_m);
    CHECK(t.oma.energy - t.pure_noma.energy <=
          -d_m * c * c / s.h_n_sq() + 1e-6);
  }
}

TEST_CASE("selection is invariant to the gain of user n") {
  for (double d_n : {20.0, 25.0, 39.0, 40.0, 70.0}) {
    const ComparisonTable base = select_strategy(scenario(15, 20, d_n, 1));
    for (double c : {0.01, 0.5, 3.0, 1e4}) {
      const ComparisonTable scaled = select_strategy(scenario(15, 20, d_n, c));
      CHECK(scaled.selected == base.selected);
      CHECK(scaled.regime == base.regime);
      CHECK(scaled.pure_noma.energy == doctest::Approx(base.pure_noma.energy / c).epsilon(1e-14));
      CHECK(scaled.hybrid.energy == doctest::Approx(base.hybrid.energy / c).epsilon(1e-14));
      if (std::isfinite(base.oma.energy)) {
        CHECK(scaled.oma.energy == doctest::Approx(base.oma.energy / c).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("energy_at_most falls back to log energies") {
  const OffloadScenario s = scenario(40, 1, 1.001);
  const ComparisonTable t = select_strategy(s);
  CHECK(t.oma.log_domain);
  CHECK(energy_at_most(t.hybrid, t.oma));
  CHECK_FALSE(energy_at_most(t.oma, t.hybrid));
}
