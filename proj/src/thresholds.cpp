#include "sysent/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sysent/bounds.hpp"
#include "sysent/inversion.hpp"

namespace sysent {

namespace {

constexpr double kGoldenInv = 0.61803398874989484820458683436563812;

// Octagon objective with a general disk-area coefficient c; c = 2 is the
// extremal-surface value appearing in the Loewner threshold.
double octagon_objective(double alpha, double c) {
  const double num = std::log(kSqrt3 / (2.0 * c * alpha * alpha));
  const double den = 0.5 - 4.0 * alpha;
  const double q = num / den;
  return (kSqrt3 / (8.0 * kPi)) * q * q;
}

template <class F>
double golden_min(F&& f, double lo, double hi, double tol) {
  double c = hi - kGoldenInv * (hi - lo);
  double d = lo + kGoldenInv * (hi - lo);
  double fc = f(c), fd = f(d);
  while (hi - lo > tol) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kGoldenInv * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kGoldenInv * (hi - lo);
      fd = f(d);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double loewner_objective(double alpha) {
  if (!(alpha > 0.0) || !(alpha <= 0.125))
    throw std::invalid_argument("alpha must lie in (0, 1/8]");
  return octagon_objective(alpha, 2.0);
}

ThresholdReport loewner_genus_threshold() {
  constexpr int kGrid = 64;
  ThresholdReport report;
  report.evaluations.reserve(kGrid);
  int best_i = 0;
  for (int i = 0; i < kGrid; ++i) {
    const double a = 0.125 * (i + 1) / (kGrid + 1);
    const double v = loewner_objective(a);
    report.evaluations.emplace_back(a, v);
    if (v < report.evaluations[best_i].second) best_i = i;
  }
  const double step = 0.125 / (kGrid + 1);
  const double lo = std::max(step * 0.5, report.evaluations[best_i].first - step);
  const double hi = std::min(0.125 - 1e-12, report.evaluations[best_i].first + step);
  report.argmin_alpha =
      golden_min([](double a) { return loewner_objective(a); }, lo, hi, 1e-10);
  report.objective_min = loewner_objective(report.argmin_alpha);
  report.genus_threshold =
      static_cast<long long>(std::floor(report.objective_min)) + 2;
  return report;
}

PackingFixedPoint improved_packing_fixed_point(double alpha) {
  if (!(alpha > 0.0) || !(alpha <= 0.125))
    throw std::invalid_argument("alpha must lie in (0, 1/8]");
  if (!(30.0 * alpha <= 1.0))
    throw std::domain_error("15 disks of diameter 2*alpha*sys do not fit disjointly "
                            "along a systolic loop (need 30*alpha <= 1)");
  // seed: plain packing bound with coefficient 2 at the unLoewner boundary
  long long count = static_cast<long long>(std::floor(kSqrt3 / (4.0 * alpha * alpha)));
  long long prev = -1;
  for (int iter = 0; iter < 100; ++iter) {
    const double c = (45.0 + 2.0 * static_cast<double>(count - 15)) /
                     static_cast<double>(count);
    const long long next =
        static_cast<long long>(std::floor(kSqrt3 / (2.0 * c * alpha * alpha)));
    if (next == count) {
      return PackingFixedPoint{alpha, count, c, octagon_objective(alpha, c)};
    }
    prev = count;
    count = next;
  }
  throw std::runtime_error("packing fixed point did not converge; last iterates " +
                           std::to_string(prev) + ", " + std::to_string(count));
}

double asymptotic_genus(double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  if (!(lambda < kPi))
    throw std::domain_error("exceeds asymptotic constant: lambda must be below pi");
  const double lambda_plus = 0.5 * (lambda + kPi);
  const double beta = std::sqrt(lambda_plus / (4.0 * kPi));
  const double alpha = 0.9 * (0.5 - beta) / 4.0;  // strictly inside the constraint
  const AdmissiblePair pair(alpha, beta);

  auto holds = [&](double g) {
    const double lg = std::log(g);
    return sigma_upper_continuous(pair, g) <= lg * lg / (lambda * g);
  };
  // first genus satisfying the single-point condition at or above `from`
  auto first_true = [&](double from) {
    double lo = from, hi = from;
    if (!holds(hi)) {
      while (!holds(hi)) {
        lo = hi;
        hi = std::min(hi * 2.0, 1e306);
        if (hi >= 1e306 && !holds(hi))
          throw std::runtime_error("no asymptotic threshold below 1e306");
      }
      while (true) {
        const double mid = std::floor(0.5 * (lo + hi));
        if (mid <= lo || mid >= hi) break;
        if (holds(mid))
          hi = mid;
        else
          lo = mid;
      }
    }
    return hi;
  };

  double g0 = first_true(2.0);
  // the paper's claim is "for g large enough": verify a sampled log window
  // above the candidate and advance past any failure
  for (int pass = 0; pass < 64; ++pass) {
    constexpr int kSamples = 65;
    double failed_at = -1.0;
    for (int s = 0; s < kSamples; ++s) {
      double g = g0 * std::pow(100.0, static_cast<double>(s) / (kSamples - 1));
      if (g < 9.007199254740992e15) g = std::floor(g);  // integral when exact
      if (!holds(g)) {
        failed_at = g;
        break;
      }
    }
    if (failed_at < 0.0) return g0;
    g0 = first_true(failed_at + 1.0);
  }
  throw std::runtime_error("asymptotic window did not settle");
}

long long crossover_genus(int grid, Exec exec) {
  for (long long g = 2; g <= 1000000; ++g) {
    const double best = best_sigma_upper(g, grid, exec).sigma;
    if (best < classical_bounds(g).gromov_genus) return g;
  }
  throw std::runtime_error("no crossover found below genus 1e6");
}

}  // namespace sysent
