// Serial vs OpenMP timings for the three data-parallel kernels.  Each kernel
// is checked for result agreement before the timing is reported.

#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "sysent/exec.hpp"
#include "sysent/fuchsian.hpp"
#include "sysent/inversion.hpp"
#include "sysent/lattice.hpp"

using namespace sysent;

namespace {

template <class F>
double time_ms(F&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double par_ms) {
  std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n",
              name, serial_ms, par_ms, serial_ms / par_ms);
}

}  // namespace

int main() {
  const Lattice2 square{{1.0, 0.0}, {0.0, 1.0}};

  long long c_serial = 0, c_par = 0;
  const double t1s = time_ms([&] { c_serial = flat_orbit_count(square, 4000.0, Exec::serial); });
  const double t1p = time_ms([&] { c_par = flat_orbit_count(square, 4000.0, Exec::par); });
  if (c_serial != c_par) throw std::runtime_error("orbit count mismatch");
  report("flat_orbit_count R=4000", t1s, t1p);

  const FuchsianSurface bolza = bolza_surface();
  size_t n_serial = 0, n_par = 0;
  const double t2s = time_ms([&] { n_serial = enumerate_ball(bolza, 7, Exec::serial).size(); });
  const double t2p = time_ms([&] { n_par = enumerate_ball(bolza, 7, Exec::par).size(); });
  if (n_serial != n_par) throw std::runtime_error("ball size mismatch");
  report("enumerate_ball depth=7", t2s, t2p);

  BestSigma b_serial{0.0, AdmissiblePair(0.01, 0.01)};
  BestSigma b_par = b_serial;
  const double t3s = time_ms([&] { b_serial = best_sigma_upper(1000000, 256, Exec::serial); });
  const double t3p = time_ms([&] { b_par = best_sigma_upper(1000000, 256, Exec::par); });
  if (b_serial.sigma != b_par.sigma) throw std::runtime_error("best sigma mismatch");
  report("best_sigma_upper grid=256", t3s, t3p);

  return 0;
}
