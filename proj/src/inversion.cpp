#include "sysent/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sysent {

namespace {

constexpr double kGoldenInv = 0.61803398874989484820458683436563812;

// Root of log^2(k e^t)/e^t = target_lhs in t = log(sigma).  Working in log
// space keeps the solve stable for genus up to ~1e300, where sigma falls
// into the denormal range.  Both sides are compared through their logs.
double sigma_root_logspace(double k, double target_log) {
  const double t_hi = -std::log(k) - 1e-14;  // log argument must stay below 1
  const double t_lo = -744.0;                // exp(t_lo) is still a normal double
  const double log_k = std::log(k);
  auto lhs_log = [log_k](double t) {
    const double u = log_k + t;  // log(k sigma) < 0 on the bracket
    return 2.0 * std::log(-u) - t;
  };
  // strictly decreasing in t, so a plain monotone solve applies
  const double t =
      solve_monotone(lhs_log, target_log, Bracket(t_lo, t_hi, 1e-13));
  return std::exp(t);
}

double sigma_upper_impl(const AdmissiblePair& pair, double genus_minus_1) {
  const double k = 2.0 * pair.alpha * pair.alpha;
  const double target_log = std::log(4.0 * kPi * pair.beta * pair.beta) +
                            std::log(genus_minus_1);
  const double root = sigma_root_logspace(k, target_log);
  return std::min(4.0 / 3.0, root);
}

// One-dimensional golden-section minimizer (or maximizer via sign flip).
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

struct GridBest {
  double value;
  double beta;
  double alpha;
};

// Scans the (beta, alpha) grid; objective(alpha, beta) is minimized when
// minimize = true, maximized otherwise.  Grid cells are evaluated
// independently (parallelizable); the argmin scan is serial and breaks ties
// toward the lexicographically smallest (beta, alpha).
template <class Obj>
GridBest scan_pair_grid(Obj&& objective, int grid, bool minimize, Exec exec) {
  const int n = grid;
  std::vector<double> vals(static_cast<size_t>(n) * n);
  auto cell = [&](int i, int j) {
    const double beta = 0.5 * (i + 1) / (n + 1);
    const double amax = (0.5 - beta) / 4.0;
    const double alpha = amax * (j + 1) / (n + 1);
    return objective(alpha, beta);
  };
  if (exec == Exec::par) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        vals[static_cast<size_t>(i) * n + j] = cell(i, j);
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        vals[static_cast<size_t>(i) * n + j] = cell(i, j);
  }
  GridBest best{minimize ? std::numeric_limits<double>::infinity()
                         : -std::numeric_limits<double>::infinity(),
                0.0, 0.0};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = vals[static_cast<size_t>(i) * n + j];
      const bool better = minimize ? (v < best.value) : (v > best.value);
      if (better) {
        const double beta = 0.5 * (i + 1) / (n + 1);
        const double amax = (0.5 - beta) / 4.0;
        best = {v, beta, amax * (j + 1) / (n + 1)};
      }
    }
  }
  return best;
}

// Coordinate golden-section refinement around a grid optimum.  Movement is
// confined to a window of 1/8 of each parameter's admissible range per round;
// stops once both parameters move less than 1e-10.
template <class Obj>
GridBest refine_pair(Obj&& objective, GridBest start, bool minimize) {
  double alpha = start.alpha, beta = start.beta;
  auto signed_obj = [&](double a, double b) {
    const double v = objective(a, b);
    return minimize ? v : -v;
  };
  for (int round = 0; round < 64; ++round) {
    const double alpha_prev = alpha, beta_prev = beta;
    const double amax = (0.5 - beta) / 4.0;
    double lo = std::max(amax * 1e-6, alpha - amax / 8.0);
    double hi = std::min(amax * (1.0 - 1e-9), alpha + amax / 8.0);
    if (lo < hi)
      alpha = golden_min([&](double a) { return signed_obj(a, beta); }, lo, hi,
                         1e-11);
    const double bmax = 0.5 - 4.0 * alpha;
    lo = std::max(bmax * 1e-6, beta - 0.5 / 8.0);
    hi = std::min(bmax * (1.0 - 1e-9), beta + 0.5 / 8.0);
    if (lo < hi)
      beta = golden_min([&](double b) { return signed_obj(alpha, b); }, lo, hi,
                        1e-11);
    if (std::abs(alpha - alpha_prev) < 1e-10 && std::abs(beta - beta_prev) < 1e-10)
      break;
  }
  const double v = objective(alpha, beta);
  const bool better = minimize ? (v < start.value) : (v > start.value);
  return better ? GridBest{v, beta, alpha} : start;
}

}  // namespace

double sigma_upper(const AdmissiblePair& pair, long long genus) {
  if (genus < 2) throw std::invalid_argument("sigma bound requires genus >= 2");
  return sigma_upper_impl(pair, static_cast<double>(genus) - 1.0);
}

double sigma_upper_continuous(const AdmissiblePair& pair, double genus) {
  if (!(genus >= 2.0))
    throw std::invalid_argument("sigma bound requires genus >= 2");
  return sigma_upper_impl(pair, genus - 1.0);
}

BestSigma best_sigma_upper_continuous(double genus, int grid, Exec exec) {
  if (!(genus >= 2.0))
    throw std::invalid_argument("sigma bound requires genus >= 2");
  if (grid < 4) throw std::invalid_argument("grid too coarse");
  auto objective = [genus](double alpha, double beta) {
    return sigma_upper_impl(AdmissiblePair(alpha, beta), genus - 1.0);
  };
  GridBest best = scan_pair_grid(objective, grid, /*minimize=*/true, exec);
  best = refine_pair(objective, best, /*minimize=*/true);
  return BestSigma{best.value, AdmissiblePair(best.alpha, best.beta)};
}

BestSigma best_sigma_upper(long long genus, int grid, Exec exec) {
  if (genus < 2) throw std::invalid_argument("sigma bound requires genus >= 2");
  return best_sigma_upper_continuous(static_cast<double>(genus), grid, exec);
}

double invert_rho_log_rho(double delta) {
  if (!(delta >= kEuler))
    throw std::domain_error("outside monotone range: delta must be at least e");
  auto f = [](double r) { return r * std::log(r); };
  // root at (or within rounding of) the left endpoint
  if (f(kEuler) >= delta || !(delta > kEuler)) return kEuler;
  const double hi = delta;  // f(delta) = delta log(delta) >= delta for delta >= e
  const double tol = std::max(1e-15, 1e-15 * delta);
  return solve_monotone(f, delta, Bracket(kEuler, hi, tol));
}

double invert_scaled_log(double a, double delta) {
  if (!(a > 0.0)) throw std::invalid_argument("scale must be positive");
  if (!(delta / a >= kEuler))
    throw std::domain_error("outside monotone range: delta/a must be at least e");
  return a * invert_rho_log_rho(delta / a);
}

EmbBound emb_lower_bound(const MinEntValue& minent,
                         const BallGrowthConstant& growth, int grid, Exec exec) {
  if (minent.dim != growth.dim)
    throw std::invalid_argument("dimension mismatch between entropy and growth constant");
  const int n = growth.dim;
  const double berger = sphere_isoembolic(n);
  if (minent.value == 0.0) return EmbBound{berger, true, 0.0, 0.0, 0.0};

  const double m = minent.value;
  const double c_root = std::pow(growth.c, 1.0 / n);
  // Bound from one admissible pair: invert u log(u/A) = beta*m/n at
  // A = c^(1/n) alpha, then raise to the n-th power.  Pairs for which the
  // inversion precondition fails contribute nothing.
  auto objective = [&](double alpha, double beta) {
    const double A = c_root * alpha;
    const double delta = beta * m / n;
    if (!(delta / A >= kEuler)) return 0.0;
    return ipow(invert_scaled_log(A, delta), n);
  };
  GridBest best = scan_pair_grid(objective, grid, /*minimize=*/false, exec);
  if (best.value > 0.0) best = refine_pair(objective, best, /*minimize=*/false);

  const double lam = best.value * ipow(std::log(1.0 + m), n) / ipow(m, n);
  if (best.value <= berger) return EmbBound{berger, true, best.alpha, best.beta, lam};
  return EmbBound{best.value, false, best.alpha, best.beta, lam};
}

BoundCurve bound_curve(long long gmin, long long gmax, int grid, Exec exec) {
  if (gmin < 2 || gmax < gmin)
    throw std::invalid_argument("bound curve needs 2 <= gmin <= gmax");
  BoundCurve curve;
  curve.reserve(static_cast<size_t>(gmax - gmin + 1));
  for (long long g = gmin; g <= gmax; ++g) {
    BestSigma bs = best_sigma_upper(g, grid, exec);
    curve.push_back(BoundCurveEntry{g, bs.sigma, bs.pair});
  }
  return curve;
}

}  // namespace sysent
