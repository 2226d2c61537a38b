#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sysent/exec.hpp"

namespace sysent {

/// Result of minimizing the octagon objective over the packing radius.
struct ThresholdReport {
  double objective_min;
  double argmin_alpha;
  long long genus_threshold;
  std::vector<std::pair<double, double>> evaluations;  // (alpha, objective) grid
};

/// Fixed point of the improved-packing ball count at a given radius fraction.
struct PackingFixedPoint {
  double alpha;
  long long ball_count;
  double coefficient;  // (15*3 + (count-15)*2)/count
  double objective;
};

// (sqrt3/(8 pi)) * (log(sqrt3/(4 a^2)) / (1/2 - 4 a))^2 on (0, 1/8]; the value
// diverges at both ends (+inf is returned at a = 1/8 exactly).
double loewner_objective(double alpha);

// Minimizes loewner_objective (grid plus golden section, 1e-10 in alpha) and
// derives the genus threshold: an unLoewner surface forces
// genus - 1 <= objective_min, so every genus >= floor(objective_min) + 2 is
// Loewner.
ThresholdReport loewner_genus_threshold();

// Iterates the ball count N -> floor(sqrt3/(2 c(N) a^2)) with
// c(N) = (45 + 2(N-15))/N to a fixed point, then re-evaluates the objective
// with the improved area coefficient.  Requires the 15 seed disks to fit
// disjointly along the systolic loop (30 a <= 1).
PackingFixedPoint improved_packing_fixed_point(double alpha);

// Smallest genus from which the corollary bound stays below log^2(g)/(lambda g)
// across a sampled window [g0, 100 g0]; lambda must lie in (0, pi).  Returned
// as a double: near lambda = pi the threshold exceeds the integer range.
double asymptotic_genus(double lambda);

// Smallest genus where the optimized corollary bound beats the classical
// 64/(4 sqrt(g) + 27) estimate.
long long crossover_genus(int grid = 64, Exec exec = Exec::par);

}  // namespace sysent
