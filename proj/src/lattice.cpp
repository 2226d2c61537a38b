#include "sysent/lattice.hpp"

#include "sysent/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sysent {

namespace {

void check_nondegenerate(const Lattice2& lat) {
  const double d = std::abs(det(lat.b1, lat.b2));
  const double scale = lat.b1.norm() * lat.b2.norm();
  if (!(d > 1e-12 * scale) || !(scale > 0.0))
    throw std::domain_error("degenerate basis");
}

Vec2 canonical_sign(Vec2 v) {
  if (v.x < 0.0 || (v.x == 0.0 && v.y < 0.0)) return {-v.x, -v.y};
  return v;
}

}  // namespace

Lattice2 lattice_reduce(const Lattice2& lat) {
  check_nondegenerate(lat);
  Vec2 u = lat.b1, v = lat.b2;
  for (int iter = 0; iter < 64; ++iter) {
    if (u.norm2() > v.norm2()) std::swap(u, v);
    const double mu = std::round(dot(u, v) / u.norm2());
    if (mu == 0.0) break;
    const Vec2 w = v - mu * u;
    // a tie at |dot| = |u|^2/2 rounds to mu = +-1 without shortening v;
    // stop there, the basis is already reduced
    if (w.norm2() >= v.norm2()) break;
    v = w;
  }
  if (u.norm2() > v.norm2()) std::swap(u, v);
  return Lattice2{canonical_sign(u), canonical_sign(v)};
}

FlatInvariants flat_invariants(const Lattice2& lat) {
  const Lattice2 red = lattice_reduce(lat);
  const double sys = red.b1.norm();
  const double area = std::abs(det(lat.b1, lat.b2));
  return FlatInvariants{sys, area, sys * sys / area};
}

long long flat_orbit_count(const Lattice2& lat, double R, Exec exec) {
  if (!(R >= 0.0)) throw std::invalid_argument("radius must be nonnegative");
  const Lattice2 red = lattice_reduce(lat);  // same lattice, tight coefficient box
  const double area = std::abs(det(red.b1, red.b2));
  const long long M =
      static_cast<long long>(std::floor(R * red.b2.norm() / area + 1e-9));
  const long long N =
      static_cast<long long>(std::floor(R * red.b1.norm() / area + 1e-9));
  const double r2 = R * R;
  const Vec2 b1 = red.b1, b2 = red.b2;
  long long count = 0;
  if (exec == Exec::par) {
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : count) schedule(static)
#endif
    for (long long m = -M; m <= M; ++m) {
      for (long long n = -N; n <= N; ++n) {
        const Vec2 w{m * b1.x + n * b2.x, m * b1.y + n * b2.y};
        if (w.norm2() <= r2) ++count;
      }
    }
  } else {
    for (long long m = -M; m <= M; ++m)
      for (long long n = -N; n <= N; ++n) {
        const Vec2 w{m * b1.x + n * b2.x, m * b1.y + n * b2.y};
        if (w.norm2() <= r2) ++count;
      }
  }
  return count;
}

double torus_dist2(const Lattice2& reduced, Vec2 p, Vec2 q) {
  double best = (p - q).norm2();
  for (int m = -2; m <= 2; ++m)
    for (int n = -2; n <= 2; ++n) {
      const Vec2 d = p - q + static_cast<double>(m) * reduced.b1 +
                     static_cast<double>(n) * reduced.b2;
      best = std::min(best, d.norm2());
    }
  return best;
}

FlatPacking maximal_packing_flat(const Lattice2& lat, double alpha) {
  if (!(alpha > 0.0) || !(alpha < 0.25))
    throw std::invalid_argument("packing radius fraction must lie in (0, 1/4)");
  const Lattice2 red = lattice_reduce(lat);
  const FlatInvariants inv = flat_invariants(lat);
  const double r = alpha * inv.sys;
  const double pitch = r / 8.0;
  const long long n1 =
      std::max<long long>(1, static_cast<long long>(std::ceil(red.b1.norm() / pitch)));
  const long long n2 =
      std::max<long long>(1, static_cast<long long>(std::ceil(red.b2.norm() / pitch)));
  const double lim2 = (2.0 * r) * (2.0 * r) * (1.0 - 1e-12);
  std::vector<Vec2> accepted;
  // greedy: sequential by construction, kept serial
  for (long long j = 0; j < n2; ++j) {
    for (long long i = 0; i < n1; ++i) {
      const Vec2 p = (static_cast<double>(i) / n1) * red.b1 +
                     (static_cast<double>(j) / n2) * red.b2;
      bool ok = true;
      for (const Vec2& q : accepted) {
        if (torus_dist2(red, p, q) < lim2) {
          ok = false;
          break;
        }
      }
      if (ok) accepted.push_back(p);
    }
  }
  const double bound = inv.area / (kPi * r * r);
  return FlatPacking{static_cast<long long>(accepted.size()), bound};
}

}  // namespace sysent
