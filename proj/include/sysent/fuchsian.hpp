#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "sysent/exec.hpp"

namespace sysent {

/// Orientation-preserving isometry of the hyperbolic plane as a real 2x2
/// matrix of determinant one (renormalized after products).  m and -m are the
/// same isometry.  The basepoint is i in the upper half-plane, which the
/// Cayley transform carries to the disk origin.
struct HyperbolicIsometry {
  std::array<double, 4> m{1.0, 0.0, 0.0, 1.0};  // row-major a b c d

  static HyperbolicIsometry identity() { return {}; }

  HyperbolicIsometry compose(const HyperbolicIsometry& o) const;
  HyperbolicIsometry inverse() const {
    return HyperbolicIsometry{{m[3], -m[1], -m[2], m[0]}};
  }
  double trace() const { return m[0] + m[3]; }
  double frobenius2() const {
    return m[0] * m[0] + m[1] * m[1] + m[2] * m[2] + m[3] * m[3];
  }
  // hyperbolic distance the basepoint is moved: cosh d = ||m||_F^2 / 2
  double displacement() const;
};

// 2*acosh(|tr|/2) when |tr| > 2, else 0.
double translation_length(const HyperbolicIsometry& g);

/// Discrete cocompact group of hyperbolic isometries given by generators and
/// a relator word (letters +-(k+1) mean generator k resp. its inverse).
struct FuchsianSurface {
  std::vector<HyperbolicIsometry> generators;
  std::vector<int> relator;
  int genus = 0;

  HyperbolicIsometry evaluate_relator() const;
  // relator must evaluate to +-identity within tol; generators must be
  // hyperbolic (|trace| > 2)
  void validate(double tol = 1e-6) const;
};

// Genus-2 surface group of the regular hyperbolic octagon: four generators
// conjugate to a translation of trace 2(1+sqrt2) by rotations through
// multiples of pi/4 about the basepoint.  Validated on construction.
FuchsianSurface bolza_surface();

// All distinct group elements of word length <= depth in the generators and
// their inverses.  Projective dedup (m ~ -m) with a canonical rounded-entry
// key; insertion order is deterministic and independent of Exec.
std::vector<HyperbolicIsometry> enumerate_ball(const FuchsianSurface& surf,
                                               int depth, Exec exec = Exec::par);

// Minimum positive translation length over the ball; nonincreasing in depth.
double fuchsian_systole(const FuchsianSurface& surf, int depth,
                        Exec exec = Exec::par);

/// Orbit counts of the basepoint: rows (R, #orbit points within distance R).
struct OrbitTable {
  std::vector<std::pair<double, long long>> rows;
};

/// Least-squares growth-rate estimate from log orbit counts.
struct EntropyFit {
  double slope = 0.0;
  double window_lo = 0.0;
  double window_hi = 0.0;
  double residual = 0.0;             // rms residual of the fit
  bool saturated_depth_flag = false; // counts still changing at the last depth
  int stabilized_depth = 0;
  OrbitTable table;
};

// Deepens the enumeration until the count at rmax is unchanged across two
// consecutive depths, then fits log(count) against R over [rmax/2, rmax].
EntropyFit orbit_entropy(const FuchsianSurface& surf, double rmax,
                         int depth_limit = 12, Exec exec = Exec::par);

// h_est^2 * area / (2 pi |chi|) with area = 2 pi |chi| (curvature -1), i.e.
// the square of the fitted slope.  Katok's bound predicts >= 1 in the limit.
double katok_check(const FuchsianSurface& surf, double rmax,
                   int depth_limit = 12, Exec exec = Exec::par);

// Sorted basepoint displacements of the stabilized ball at radius rmax, plus
// the depth at which the count stabilized.  Shared by the entropy fit and the
// homotopy counting check.
std::pair<std::vector<double>, int> stabilized_displacements(
    const FuchsianSurface& surf, double rmax, int depth_limit = 12,
    Exec exec = Exec::par);

}  // namespace sysent
