#pragma once

#include <span>
#include <vector>

#include "sysent/bounds.hpp"
#include "sysent/exec.hpp"
#include "sysent/fuchsian.hpp"
#include "sysent/lattice.hpp"

namespace sysent {

struct HomotopyCheckRow {
  double T;
  long long count;     // P'(T): orbit points within distance T
  double log_bound;    // log of (c a^2 sigma)^(-T/(beta sys))
  double log_margin;   // log_bound - log(count), nonnegative when the bound holds
};

struct HomotopyCheckReport {
  double sys = 0.0;
  double sigma = 0.0;
  std::vector<HomotopyCheckRow> rows;
};

// Checks P'(T) <= (c a^2 sigma)^(-T/(beta sys)) on a flat torus; counts come
// from exact lattice enumeration.  Throws if any T violates the bound.
HomotopyCheckReport homotopy_count_check(const Lattice2& lat,
                                         const AdmissiblePair& pair, double c,
                                         std::span<const double> T_grid,
                                         Exec exec = Exec::par);

// Same check on a hyperbolic surface; counts come from the depth-stabilized
// orbit enumeration, sigma from the systole and the Gauss-Bonnet area.
HomotopyCheckReport homotopy_count_check(const FuchsianSurface& surf,
                                         const AdmissiblePair& pair, double c,
                                         std::span<const double> T_grid,
                                         int depth_limit = 12,
                                         Exec exec = Exec::par);

}  // namespace sysent
