#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sysent/bounds.hpp"
#include "sysent/inversion.hpp"
#include "sysent/thresholds.hpp"

using namespace sysent;

TEST_CASE("loewner objective values") {
  // paper quotes "about 18.201" at alpha = .031
  CHECK(loewner_objective(0.031) ==
        doctest::Approx(18.20142489938107).epsilon(1e-12));  // oracle pin
  CHECK(std::abs(loewner_objective(0.031) - 18.201) < 0.01);
  // direct-formula pin (the stated arithmetic, frozen via the oracle)
  CHECK(loewner_objective(0.01) ==
        doctest::Approx(22.83514730200539).epsilon(1e-12));

  // pole at the closed right endpoint, divergence near the open left one
  CHECK(std::isinf(loewner_objective(0.125)));
  CHECK(loewner_objective(0.1249999) > 1e6);
  CHECK(std::isfinite(loewner_objective(0.1249999)));
  // log^2 divergence toward the open left endpoint is slow but monotone
  CHECK(loewner_objective(1e-9) > 100.0);
  CHECK(loewner_objective(1e-12) > loewner_objective(1e-9));

  CHECK_THROWS_AS(loewner_objective(0.0), std::invalid_argument);
  CHECK_THROWS_AS(loewner_objective(-0.02), std::invalid_argument);
  CHECK_THROWS_AS(loewner_objective(0.13), std::invalid_argument);
}

TEST_CASE("loewner objective is unimodal on a 1e4 grid") {
  const int n = 10000;
  int sign_changes = 0;
  double prev = loewner_objective(0.125 * 1.0 / (n + 1));
  int prev_sign = 0;
  for (int i = 2; i <= n; ++i) {
    const double cur = loewner_objective(0.125 * i / (n + 1));
    const int s = (cur > prev) - (cur < prev);
    if (s != 0) {
      if (prev_sign != 0 && s != prev_sign) ++sign_changes;
      prev_sign = s;
    }
    prev = cur;
  }
  CHECK(sign_changes <= 1);
}

TEST_CASE("loewner genus threshold") {
  const ThresholdReport rep = loewner_genus_threshold();
  CHECK(rep.objective_min >= 18.1);
  CHECK(rep.objective_min <= 18.3);
  CHECK(rep.genus_threshold == 20);
  CHECK(rep.argmin_alpha == doctest::Approx(0.0307668).epsilon(1e-3));
  // consistency with the reported argmin, and the threshold derivation window
  CHECK(loewner_objective(rep.argmin_alpha) == rep.objective_min);
  CHECK(rep.genus_threshold ==
        static_cast<long long>(std::floor(rep.objective_min)) + 2);
  CHECK(19 - 1 <= rep.objective_min);
  CHECK(rep.objective_min < 20 - 1);
  // the recorded evaluations replay exactly
  REQUIRE(!rep.evaluations.empty());
  for (const auto& [a, v] : rep.evaluations) CHECK(loewner_objective(a) == v);
}

TEST_CASE("improved packing fixed point at alpha = 1/30") {
  const PackingFixedPoint fp = improved_packing_fixed_point(1.0 / 30.0);
  CHECK(fp.ball_count == 382);
  CHECK(fp.coefficient == doctest::Approx(779.0 / 382.0).epsilon(1e-15));
  CHECK(std::abs(fp.coefficient - 2.039) <= 0.002);
  CHECK(fp.objective == doctest::Approx(18.12267715918772).epsilon(1e-12));  // oracle pin
  CHECK(std::abs(fp.objective - 18.12) <= 0.02);

  // definition of the coefficient and fixed-point self-consistency
  CHECK(fp.coefficient ==
        (15.0 * 3.0 + (fp.ball_count - 15.0) * 2.0) / fp.ball_count);
  CHECK(fp.coefficient > 2.0);
  CHECK(fp.coefficient <= 3.0);
  CHECK(static_cast<long long>(std::floor(
            kSqrt3 / (2.0 * fp.coefficient * fp.alpha * fp.alpha))) ==
        fp.ball_count);

  // better than the plain objective, but not below 18
  CHECK(fp.objective < loewner_genus_threshold().objective_min);
  CHECK(fp.objective > 18.0);
}

TEST_CASE("improved packing preconditions and other radii") {
  // 15 seed disks must fit disjointly along the loop: 30*alpha <= 1
  CHECK_THROWS_AS(improved_packing_fixed_point(0.05), std::domain_error);
  CHECK_THROWS_AS(improved_packing_fixed_point(0.0), std::invalid_argument);

  const PackingFixedPoint fp = improved_packing_fixed_point(0.02);
  CHECK(fp.coefficient > 2.0);
  CHECK(fp.coefficient <= 3.0);
  CHECK(static_cast<long long>(std::floor(
            kSqrt3 / (2.0 * fp.coefficient * fp.alpha * fp.alpha))) ==
        fp.ball_count);
}

TEST_CASE("asymptotic genus") {
  // regression value pinned on the first run
  CHECK(asymptotic_genus(1.0) == 1187.0);
  CHECK(asymptotic_genus(0.1) == 2.0);
  // a tighter constant needs a (much) larger genus
  CHECK(asymptotic_genus(3.0) >= asymptotic_genus(1.0));
  CHECK(asymptotic_genus(3.0) > 1e50);

  CHECK_THROWS_WITH_AS(asymptotic_genus(kPi),
                       doctest::Contains("exceeds asymptotic constant"),
                       std::domain_error);
  CHECK_THROWS_AS(asymptotic_genus(0.0), std::invalid_argument);
}

TEST_CASE("asymptotic genus threshold is sharp at lambda = 1") {
  const double lambda = 1.0;
  const double lambda_plus = 0.5 * (lambda + kPi);
  const double beta = std::sqrt(lambda_plus / (4.0 * kPi));
  const AdmissiblePair pair(0.9 * (0.5 - beta) / 4.0, beta);
  const double g0 = asymptotic_genus(lambda);
  auto holds = [&](double g) {
    return sigma_upper_continuous(pair, g) <=
           std::log(g) * std::log(g) / (lambda * g);
  };
  CHECK(holds(g0));
  CHECK_FALSE(holds(g0 - 1.0));
}

TEST_CASE("crossover genus") {
  const long long g = crossover_genus();
  CHECK(g >= 2);
  CHECK(g == 2);  // the 4/3 clamp already beats 64/(4 sqrt(2) + 27)
  CHECK(best_sigma_upper(g).sigma < classical_bounds(g).gromov_genus);
  // stable under doubled optimizer grid
  CHECK(crossover_genus(128) == g);
}
