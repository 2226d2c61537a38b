#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "sysent/bounds.hpp"
#include "sysent/inversion.hpp"

using namespace sysent;

TEST_CASE("bracket invariants") {
  CHECK_THROWS_AS(Bracket(1.0, 1.0, 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(Bracket(2.0, 1.0, 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(Bracket(0.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("solve_monotone basics") {
  CHECK(solve_monotone([](double x) { return x * x; }, 4.0,
                       Bracket(0.0, 10.0, 1e-9)) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(solve_monotone([](double x) { return -x; }, -3.0,
                       Bracket(0.0, 10.0, 1e-9)) == doctest::Approx(3.0).epsilon(1e-9));
  CHECK_THROWS_WITH_AS(
      solve_monotone([](double x) { return x * x; }, 4.0, Bracket(3.0, 10.0, 1e-9)),
      doctest::Contains("bracket invalid"), std::domain_error);
}

TEST_CASE("solve_monotone random monotone functions") {
  std::mt19937 rng(99u);
  std::uniform_real_distribution<double> coef(0.1, 3.0);
  for (int i = 0; i < 500; ++i) {
    const double a = coef(rng), b = coef(rng), c = coef(rng) - 1.5;
    auto f = [=](double x) { return a * x * x * x + b * x + c; };
    const double lo = -4.0, hi = 4.0;
    std::uniform_real_distribution<double> tdist(f(lo) + 1e-6, f(hi) - 1e-6);
    const double target = tdist(rng);
    const double tol = 1e-10;
    const double root = solve_monotone(f, target, Bracket(lo, hi, tol));
    const double lipschitz = 3.0 * a * hi * hi + b;
    CHECK(std::abs(f(root) - target) <= lipschitz * 2.0 * tol + 1e-12);
  }
}

TEST_CASE("sigma_upper fixed pair") {
  const AdmissiblePair pair(0.05, 0.29);

  const double s101 = sigma_upper(pair, 101);
  CHECK(s101 > 0.35);
  CHECK(s101 < 0.40);
  CHECK(s101 == doctest::Approx(0.37353851173627).epsilon(1e-8));  // oracle pin

  // residual of the corollary at the root is zero to 1e-6 relative
  const double target = 4.0 * kPi * 0.29 * 0.29 * 100.0;
  CHECK(std::abs(corollary_residual(pair, 101, SystolicRatio(s101))) <=
        1e-6 * target);
  // positive below the root, negative above (still inside the log domain)
  CHECK(corollary_residual(pair, 101, SystolicRatio(0.5 * s101)) > 0.0);
  const double above = std::min(2.0 * s101, 0.99 / (2.0 * 0.05 * 0.05));
  CHECK(corollary_residual(pair, 101, SystolicRatio(above)) < 0.0);

  // genus 2: unclamped root exceeds the aspherical bound, so the value clamps
  CHECK(sigma_upper(pair, 2) == 4.0 / 3.0);
  CHECK(corollary_residual(pair, 2, SystolicRatio(4.0 / 3.0)) > 0.0);

  CHECK(sigma_upper(pair, 1001) < sigma_upper(pair, 101));
  CHECK_THROWS_AS(sigma_upper(pair, 1), std::invalid_argument);
}

TEST_CASE("sigma_upper_continuous handles astronomical genus") {
  const AdmissiblePair pair(0.0013, 0.49);
  const double s = sigma_upper_continuous(pair, 1e100);
  CHECK(s > 0.0);
  CHECK(s < 1e-90);
  CHECK(sigma_upper_continuous(pair, 1e200) < s);
}

TEST_CASE("best_sigma_upper") {
  const BestSigma b20 = best_sigma_upper(20);
  CHECK(b20.sigma <= 4.0 / 3.0);
  CHECK(4.0 * b20.pair.alpha + b20.pair.beta < 0.5);

  // ratio to the large-genus asymptote decreases
  auto ratio = [](double g) {
    const BestSigma bs = best_sigma_upper_continuous(g);
    return bs.sigma * kPi * g / (std::log(g) * std::log(g));
  };
  CHECK(ratio(1e6) < ratio(1e4));

  // refinement stability: doubling the grid moves the value below 1e-6
  const double v64 = best_sigma_upper_continuous(1e8, 64).sigma;
  const double v128 = best_sigma_upper_continuous(1e8, 128).sigma;
  CHECK(std::abs(v64 - v128) <= 1e-6);

  // deterministic across repeat calls and execution policies
  const BestSigma r1 = best_sigma_upper(1000);
  const BestSigma r2 = best_sigma_upper(1000);
  CHECK(r1.sigma == r2.sigma);
  CHECK(r1.pair.alpha == r2.pair.alpha);
  const BestSigma rs = best_sigma_upper(1000, 64, Exec::serial);
  CHECK(rs.sigma == r1.sigma);
  CHECK(rs.pair.alpha == r1.pair.alpha);
  CHECK(rs.pair.beta == r1.pair.beta);
}

TEST_CASE("invert_rho_log_rho") {
  CHECK(invert_rho_log_rho(kEuler) == doctest::Approx(kEuler).epsilon(1e-12));
  const double r = invert_rho_log_rho(100.0);
  CHECK(r == doctest::Approx(29.536599054329336).epsilon(1e-9));  // oracle pin
  CHECK(r * std::log(r) == doctest::Approx(100.0).epsilon(1e-9));
  CHECK(r >= 100.0 / std::log(100.0));
  CHECK_THROWS_WITH_AS(invert_rho_log_rho(1.0),
                       doctest::Contains("outside monotone range"),
                       std::domain_error);
}

TEST_CASE("invert_rho_log_rho log-spaced property") {
  const double lo = kEuler * kEuler, hi = 1e9;
  for (int i = 0; i <= 400; ++i) {
    const double delta = lo * std::pow(hi / lo, i / 400.0);
    const double rho = invert_rho_log_rho(delta);
    CHECK(std::abs(rho * std::log(rho) - delta) <= 1e-9 * delta);
    CHECK(rho >= delta / std::log(delta) * (1.0 - 1e-12));
  }
}

TEST_CASE("invert_scaled_log") {
  CHECK(invert_scaled_log(1.0, 100.0) == invert_rho_log_rho(100.0));
  CHECK(invert_scaled_log(2.0, 2.0 * kEuler) ==
        doctest::Approx(2.0 * kEuler).epsilon(1e-12));
  // substitution u = a v
  for (double a : {0.3, 2.0, 11.0})
    for (double d : {5.0, 123.0, 4.5e6}) {
      if (!(d / a >= kEuler)) continue;
      CHECK(invert_scaled_log(a, d) == a * invert_rho_log_rho(d / a));
    }
  CHECK_THROWS_AS(invert_scaled_log(2.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(invert_scaled_log(0.0, 10.0), std::invalid_argument);
}

TEST_CASE("emb_lower_bound") {
  // zero entropy: the round-sphere floor, exactly
  for (int n : {2, 3}) {
    const EmbBound eb =
        emb_lower_bound(MinEntValue(0.0, n), BallGrowthConstant(2.0, n));
    CHECK(eb.value == sphere_isoembolic(n));
    CHECK(eb.from_berger);
  }

  const EmbBound e100 =
      emb_lower_bound(MinEntValue(100.0, 2), BallGrowthConstant(1.0, 2));
  CHECK_FALSE(e100.from_berger);
  CHECK(e100.value > sphere_isoembolic(2));
  CHECK(e100.value > 15.0);   // grid-only oracle reaches 15.676
  CHECK(e100.value < 17.0);
  CHECK(4.0 * e100.alpha + e100.beta < 0.5);
  // self-consistency against the reported constant
  const double lam = e100.lambda_implied;
  CHECK(e100.value >=
        lam * 100.0 * 100.0 / (std::log(101.0) * std::log(101.0)) - 1e-9);

  // monotone in the entropy
  double prev = 0.0;
  for (double m : {0.0, 1.0, 10.0, 100.0, 1000.0}) {
    const double v =
        emb_lower_bound(MinEntValue(m, 2), BallGrowthConstant(1.0, 2)).value;
    CHECK(v >= prev);
    prev = v;
  }

  CHECK_THROWS_AS(
      emb_lower_bound(MinEntValue(1.0, 2), BallGrowthConstant(1.0, 3)),
      std::invalid_argument);
  CHECK_THROWS_AS(MinEntValue(-1.0, 2), std::invalid_argument);
}

TEST_CASE("bound_curve") {
  const BoundCurve curve = bound_curve(2, 12, 32);
  REQUIRE(curve.size() == 11);
  for (size_t i = 0; i < curve.size(); ++i) {
    CHECK(curve[i].sigma_upper <= 4.0 / 3.0);
    if (i > 0) CHECK(curve[i].sigma_upper <= curve[i - 1].sigma_upper + 1e-12);
  }
  CHECK_THROWS_AS(bound_curve(1, 5), std::invalid_argument);
}
