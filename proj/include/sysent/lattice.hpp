#pragma once

#include <cmath>
#include <cstdint>

#include "sysent/exec.hpp"

namespace sysent {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
  double norm2() const { return x * x + y * y; }
  double norm() const { return std::sqrt(norm2()); }
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double det(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

/// Rank-2 lattice in the plane; models a flat torus of area |det(b1, b2)|.
struct Lattice2 {
  Vec2 b1;
  Vec2 b2;
};

// Lagrange-Gauss reduction: returns a basis of the same lattice with
// |b1| <= |b2| <= |b2 +- b1|, signs canonicalized.  Deterministic.
Lattice2 lattice_reduce(const Lattice2& lat);

struct FlatInvariants {
  double sys;    // shortest nonzero vector length
  double area;   // |det|
  double ratio;  // sys^2/area, at most 2/sqrt(3)
};

FlatInvariants flat_invariants(const Lattice2& lat);

// Number of lattice points within Euclidean distance R of the origin,
// inclusive; integer coefficients enumerated over an exact box.
long long flat_orbit_count(const Lattice2& lat, double R, Exec exec = Exec::par);

struct FlatPacking {
  long long count;  // greedy maximal packing size
  double bound;     // area/(pi r^2), the analytic ceiling
};

// Greedy maximal packing of disjoint disks of radius alpha*sys on the torus,
// over a deterministic candidate grid of pitch alpha*sys/8 scanned in
// row-major order.
FlatPacking maximal_packing_flat(const Lattice2& lat, double alpha);

// Torus distance squared between two points given in the plane (minimum over
// nearby lattice translates; the basis is assumed reduced).
double torus_dist2(const Lattice2& reduced, Vec2 p, Vec2 q);

}  // namespace sysent
