#include "sysent/homotopy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sysent {

namespace {

// shared tail: given counts per T, assemble rows against the exponential bound
HomotopyCheckReport assemble(double sys, double sigma,
                             const AdmissiblePair& pair, double c,
                             std::span<const double> T_grid,
                             std::span<const long long> counts) {
  const double x = c * pair.alpha * pair.alpha * sigma;
  if (!(x < 1.0))
    throw std::domain_error("counting bound vacuous: c*alpha^2*sigma >= 1");
  const double log_x = std::log(x);
  HomotopyCheckReport report;
  report.sys = sys;
  report.sigma = sigma;
  report.rows.reserve(T_grid.size());
  for (size_t i = 0; i < T_grid.size(); ++i) {
    const double T = T_grid[i];
    const double log_bound = -T / (pair.beta * sys) * log_x;
    const double log_count = std::log(static_cast<double>(counts[i]));
    if (log_count > log_bound)
      throw std::runtime_error("homotopy count bound violated at T = " +
                               std::to_string(T));
    report.rows.push_back(
        HomotopyCheckRow{T, counts[i], log_bound, log_bound - log_count});
  }
  return report;
}

}  // namespace

HomotopyCheckReport homotopy_count_check(const Lattice2& lat,
                                         const AdmissiblePair& pair, double c,
                                         std::span<const double> T_grid,
                                         Exec exec) {
  const FlatInvariants inv = flat_invariants(lat);
  std::vector<long long> counts;
  counts.reserve(T_grid.size());
  for (double T : T_grid) counts.push_back(flat_orbit_count(lat, T, exec));
  return assemble(inv.sys, inv.ratio, pair, c, T_grid, counts);
}

HomotopyCheckReport homotopy_count_check(const FuchsianSurface& surf,
                                         const AdmissiblePair& pair, double c,
                                         std::span<const double> T_grid,
                                         int depth_limit, Exec exec) {
  if (T_grid.empty()) throw std::invalid_argument("empty T grid");
  const double sys = fuchsian_systole(surf, 4, exec);
  // Gauss-Bonnet at curvature -1
  const double area = 2.0 * kPi * static_cast<double>(2 * surf.genus - 2);
  const double sigma = sys * sys / area;
  const double rmax = *std::max_element(T_grid.begin(), T_grid.end());
  auto [disp, depth] = stabilized_displacements(surf, rmax, depth_limit, exec);
  std::vector<long long> counts;
  counts.reserve(T_grid.size());
  for (double T : T_grid)
    counts.push_back(std::upper_bound(disp.begin(), disp.end(), T) - disp.begin());
  return assemble(sys, sigma, pair, c, T_grid, counts);
}

}  // namespace sysent
