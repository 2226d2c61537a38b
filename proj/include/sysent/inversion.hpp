#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "sysent/bounds.hpp"
#include "sysent/exec.hpp"

namespace sysent {

/// Root bracket with an absolute tolerance on the root location.
struct Bracket {
  double lo;
  double hi;
  double tol;
  Bracket(double lo_, double hi_, double tol_) : lo(lo_), hi(hi_), tol(tol_) {
    if (!(lo < hi)) throw std::invalid_argument("bracket: lo must be below hi");
    if (!(tol > 0.0)) throw std::invalid_argument("bracket: tol must be positive");
  }
};

// Bisection for f strictly monotone on [lo, hi] with f(lo), f(hi) on opposite
// sides of the target.  Stops when the interval is within 2*tol or cannot be
// split further in double precision.  Deterministic.
template <class F>
double solve_monotone(F&& f, double target, const Bracket& bracket) {
  double lo = bracket.lo, hi = bracket.hi;
  double flo = f(lo) - target;
  double fhi = f(hi) - target;
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw std::domain_error("bracket invalid: no sign change across [lo, hi]");
  while (hi - lo > 2.0 * bracket.tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval no longer splittable
    const double fm = f(mid) - target;
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Upper bound on the systolic ratio from the counting corollary: the root of
// log^2(2 a^2 s)/s = 4 pi b^2 (genus - 1), clamped at the aspherical bound 4/3.
double sigma_upper(const AdmissiblePair& pair, long long genus);

// Same bound with a real-valued genus; needed where genus thresholds exceed
// the integer range.
double sigma_upper_continuous(const AdmissiblePair& pair, double genus);

struct BestSigma {
  double sigma;
  AdmissiblePair pair;
};

// Minimizes sigma_upper over admissible pairs: grid scan (grid points per
// axis) plus coordinate golden-section refinement to 1e-10 in the parameters.
BestSigma best_sigma_upper(long long genus, int grid = 64, Exec exec = Exec::par);
BestSigma best_sigma_upper_continuous(double genus, int grid = 64,
                                      Exec exec = Exec::par);

// rho solving rho log rho = delta, for delta >= e; always >= delta/log(delta).
double invert_rho_log_rho(double delta);

// u solving u log(u/a) = delta on the increasing branch u > a e; requires
// delta/a >= e.  Satisfies the scaling identity u(a, d) = a * u(1, d/a).
double invert_scaled_log(double a, double delta);

/// Minimal volume entropy, volume-normalized.
struct MinEntValue {
  double value;
  int dim;
  MinEntValue(double value_, int dim_) : value(value_), dim(dim_) {
    if (!(value >= 0.0)) throw std::invalid_argument("minimal entropy must be nonnegative");
    if (dim < 1) throw std::invalid_argument("dimension must be positive");
  }
};

struct EmbBound {
  double value;
  bool from_berger;       // true when the round-sphere floor is the binding bound
  double alpha;           // optimizing pair (meaningful when !from_berger)
  double beta;
  double lambda_implied;  // value * log^n(1 + minent)/minent^n, 0 at minent = 0
};

// Largest lower bound on the isoembolic ratio obtainable from the entropy
// inequality, optimized over admissible pairs and floored by the round
// sphere's ratio.
EmbBound emb_lower_bound(const MinEntValue& minent,
                         const BallGrowthConstant& growth, int grid = 64,
                         Exec exec = Exec::par);

struct BoundCurveEntry {
  long long genus;
  double sigma_upper;
  AdmissiblePair pair;
};

/// Tabulated genus -> sigma upper bound with the optimizing pair per genus.
using BoundCurve = std::vector<BoundCurveEntry>;

BoundCurve bound_curve(long long gmin, long long gmax, int grid = 64,
                       Exec exec = Exec::par);

}  // namespace sysent
