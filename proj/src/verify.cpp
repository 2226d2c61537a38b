#include "sysent/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sysent/bounds.hpp"
#include "sysent/fuchsian.hpp"
#include "sysent/homotopy.hpp"
#include "sysent/inversion.hpp"
#include "sysent/lattice.hpp"
#include "sysent/thresholds.hpp"

namespace sysent {

namespace {

struct check_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw check_failure(what);
}

Lattice2 random_lattice(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  while (true) {
    Lattice2 lat{{u(rng), u(rng)}, {u(rng), u(rng)}};
    if (std::abs(det(lat.b1, lat.b2)) > 1e-3) return lat;
  }
}

// exact shortest vector by scanning integer coefficients in [-10, 10]^2
double brute_shortest(const Lattice2& lat) {
  double best = 0.0;
  for (int m = -10; m <= 10; ++m)
    for (int n = -10; n <= 10; ++n) {
      if (m == 0 && n == 0) continue;
      const Vec2 v = static_cast<double>(m) * lat.b1 + static_cast<double>(n) * lat.b2;
      if (best == 0.0 || v.norm2() < best) best = v.norm2();
    }
  return std::sqrt(best);
}

const Lattice2 kSquare{{1.0, 0.0}, {0.0, 1.0}};
const Lattice2 kHex{{1.0, 0.0}, {0.5, kSqrt3 / 2.0}};

}  // namespace

int verify_all(bool quick, std::ostream& out) {
  std::vector<std::pair<std::string, std::function<void()>>> checks;
  auto add = [&](std::string name, std::function<void()> fn) {
    checks.emplace_back(std::move(name), std::move(fn));
  };

  add("hexagonal-loewner-equality", [] {
    const FlatInvariants inv = flat_invariants(kHex);
    require(std::abs(inv.ratio - 2.0 / kSqrt3) <= 1e-12, "hexagonal ratio off");
  });

  add("random-lattice-loewner", [quick] {
    std::mt19937 rng(20240901u);
    const int n = quick ? 2000 : 10000;
    for (int i = 0; i < n; ++i) {
      const FlatInvariants inv = flat_invariants(random_lattice(rng));
      require(inv.ratio <= 2.0 / kSqrt3 + 1e-12, "loewner bound violated");
    }
  });

  add("lattice-reduction-brute-force", [quick] {
    std::mt19937 rng(7u);
    const int n = quick ? 60 : 300;
    for (int i = 0; i < n; ++i) {
      const Lattice2 lat = random_lattice(rng);
      const Lattice2 red = lattice_reduce(lat);
      require(std::abs(red.b1.norm() - brute_shortest(lat)) <= 1e-9,
              "reduced b1 is not the shortest vector");
      require(std::abs(std::abs(det(red.b1, red.b2)) - std::abs(det(lat.b1, lat.b2))) <=
                  1e-9 * std::abs(det(lat.b1, lat.b2)),
              "reduction changed the covolume");
    }
  });

  add("square-orbit-counts", [] {
    require(flat_orbit_count(kSquare, 5.0) == 81, "count(5) != 81");
    require(flat_orbit_count(kSquare, 10.0) == 317, "count(10) != 317");
    require(flat_orbit_count(kSquare, 0.0) == 1, "count(0) != 1");
    for (double r : {3.0, 7.5, 12.0})
      require(flat_orbit_count(kSquare, r, Exec::serial) ==
                  flat_orbit_count(kSquare, r, Exec::par),
              "serial/parallel count mismatch");
  });

  add("gromov-loewner-crossing-51", [] {
    require(classical_bounds(50).gromov_genus > classical_bounds(50).loewner,
            "genus 50 already below loewner");
    require(classical_bounds(51).gromov_genus < classical_bounds(51).loewner,
            "genus 51 not below loewner");
    for (long long g = 2; g < 200; ++g)
      require(classical_bounds(g + 1).gromov_genus < classical_bounds(g).gromov_genus,
              "gromov bound not strictly decreasing");
  });

  add("katok-identity", [] {
    for (long long g = 2; g <= 30; ++g)
      for (double area : {0.5, 1.0, 4.0 * kPi, 123.0}) {
        const double h = katok_entropy_lower(g, area);
        const double lhs = h * h * area;
        const double rhs = 2.0 * kPi * static_cast<double>(2 * g - 2);
        require(std::abs(lhs - rhs) <= 1e-12 * rhs, "katok identity broken");
      }
  });

  add("corollary-monotone-in-sigma", [] {
    const AdmissiblePair pair(0.05, 0.29);
    double prev = corollary_residual(pair, 5, SystolicRatio(0.01));
    for (double s = 0.05; s < 1.0 / (2.0 * 0.05 * 0.05); s += 7.77) {
      const double cur = corollary_residual(pair, 5, SystolicRatio(s));
      require(cur < prev, "residual not strictly decreasing in sigma");
      prev = cur;
    }
  });

  add("loewner-threshold", [] {
    const ThresholdReport rep = loewner_genus_threshold();
    require(rep.objective_min >= 18.1 && rep.objective_min <= 18.3,
            "objective minimum outside [18.1, 18.3]");
    require(rep.genus_threshold == 20, "genus threshold != 20");
    require(loewner_objective(rep.argmin_alpha) == rep.objective_min,
            "reported minimum inconsistent with argmin");
    require(18.0 <= rep.objective_min && rep.objective_min < 19.0,
            "threshold derivation window broken");
  });

  add("improved-packing", [] {
    const PackingFixedPoint fp = improved_packing_fixed_point(1.0 / 30.0);
    require(std::llabs(fp.ball_count - 382) <= 1, "ball count != 382 +- 1");
    require(std::abs(fp.coefficient - 2.039) <= 0.002, "coefficient off 2.039");
    require(std::abs(fp.objective - 18.12) <= 0.02, "objective off 18.12");
    require(fp.objective < loewner_genus_threshold().objective_min,
            "improved objective not below the plain one");
  });

  add("rho-log-rho-inversion", [] {
    const double lo = kEuler * kEuler, hi = 1e9;
    for (int i = 0; i <= 200; ++i) {
      const double delta = lo * std::pow(hi / lo, i / 200.0);
      const double rho = invert_rho_log_rho(delta);
      require(std::abs(rho * std::log(rho) - delta) <= 1e-9 * delta,
              "rho log rho residual above 1e-9 relative");
      require(rho >= delta / std::log(delta) * (1.0 - 1e-12),
              "explicit lower inverse violated");
    }
  });

  add("scaled-log-reduction", [] {
    require(std::abs(invert_scaled_log(2.0, 2.0 * kEuler) - 2.0 * kEuler) <= 1e-9,
            "fixed point 2e failed");
    for (double a : {0.25, 1.0, 3.5})
      for (double d : {10.0, 100.0, 1e5}) {
        if (!(d / a >= kEuler)) continue;
        const double u = invert_scaled_log(a, d);
        require(std::abs(u - a * invert_rho_log_rho(d / a)) <= 1e-9 * u,
                "scaling identity violated");
      }
  });

  add("best-sigma-asymptote", [quick] {
    std::vector<double> genera = {1e3, 1e4, 1e5};
    if (!quick) {
      genera.push_back(1e6);
      genera.push_back(1e8);
    }
    double prev = 1e300;
    for (double g : genera) {
      const BestSigma bs = best_sigma_upper_continuous(g);
      const double ratio = bs.sigma * kPi * g / (std::log(g) * std::log(g));
      require(ratio < prev, "ratio to the asymptote not decreasing");
      prev = ratio;
    }
  });

  add("sigma-residual-at-root", [] {
    for (long long g : {5LL, 101LL, 5001LL}) {
      const AdmissiblePair pair(0.05, 0.29);
      const double s = sigma_upper(pair, g);
      if (s >= 4.0 / 3.0) continue;  // clamped: root above the aspherical bound
      const double target = 4.0 * kPi * pair.beta * pair.beta * (g - 1);
      const double res = corollary_residual(pair, g, SystolicRatio(s));
      require(std::abs(res) <= 1e-6 * target, "root residual above tolerance");
    }
  });

  add("packing-greedy-square", [] {
    const FlatPacking p = maximal_packing_flat(kSquare, 0.1);
    require(p.count >= 25 && p.count <= 31, "greedy count outside [25, 31]");
    require(std::abs(p.bound - 1.0 / (kPi * 0.01)) <= 1e-9, "analytic bound off");
    require(static_cast<double>(p.count) <= p.bound, "count above area bound");
  });

  add("bolza-construction", [] {
    const FuchsianSurface surf = bolza_surface();
    require(surf.genus == 2, "genus != 2");
    require(surf.generators.size() == 4, "generator count != 4");
    for (const HyperbolicIsometry& g : surf.generators) {
      require(std::abs(g.trace() - 2.0 * (1.0 + std::sqrt(2.0))) <= 1e-12,
              "generator trace off 2(1+sqrt2)");
      require(std::abs(translation_length(g) -
                       2.0 * std::acosh(1.0 + std::sqrt(2.0))) <= 1e-12,
              "generator translation length off");
    }
  });

  add("bolza-systole", [quick] {
    const FuchsianSurface surf = bolza_surface();
    const double expected = 2.0 * std::acosh(1.0 + std::sqrt(2.0));
    const double s4 = fuchsian_systole(surf, 4);
    require(std::abs(s4 - expected) <= 1e-9, "depth-4 systole off");
    if (!quick) {
      const double s6 = fuchsian_systole(surf, 6);
      require(std::abs(s6 - s4) <= 1e-9, "systole not stable at depth 6");
    }
  });

  add("bolza-entropy-katok", [quick] {
    const FuchsianSurface surf = bolza_surface();
    const double rmax = quick ? 5.0 : 7.0;
    const EntropyFit fit = orbit_entropy(surf, rmax);
    long long prev = 0;
    for (const auto& [r, c] : fit.table.rows) {
      require(c >= prev, "orbit counts decreasing in R");
      prev = c;
    }
    require(!fit.saturated_depth_flag, "enumeration depth saturated");
    if (!quick) {
      require(fit.slope >= 0.85 && fit.slope <= 1.10, "entropy slope outside window");
      const double k = katok_check(surf, rmax);
      require(k == fit.slope * fit.slope, "katok ratio is not slope^2");
      require(k >= 0.72 && k <= 1.21, "katok ratio outside window");
    } else {
      require(fit.slope > 0.0 && fit.slope < 2.0, "entropy slope implausible");
    }
  });

  add("homotopy-count-bounds", [quick] {
    std::vector<double> ts;
    for (int t = 1; t <= (quick ? 10 : 20); ++t) ts.push_back(t);
    const AdmissiblePair flat_pair(0.1, 0.09);
    homotopy_count_check(kSquare, flat_pair, kPi, ts);
    homotopy_count_check(kHex, flat_pair, kPi, ts);
    const std::vector<double> tb = quick ? std::vector<double>{2.0, 4.0}
                                         : std::vector<double>{2.0, 4.0, 6.0};
    const AdmissiblePair hyp_pair(0.05, 0.29);
    const HomotopyCheckReport rep =
        homotopy_count_check(bolza_surface(), hyp_pair, kPi, tb);
    for (const HomotopyCheckRow& row : rep.rows)
      require(row.log_margin >= 0.0, "nonpositive margin");
  });

  add("sphere-isoembolic", [] {
    require(sphere_isoembolic(1) == 2.0, "circle value off");
    require(std::abs(sphere_isoembolic(2) - 4.0 / kPi) <= 1e-15 * (4.0 / kPi),
            "S^2 value off");
    require(std::abs(sphere_isoembolic(3) - 2.0 / kPi) <= 1e-15 * (2.0 / kPi),
            "S^3 value off");
    for (int n : {2, 3, 4}) {
      const EmbBound floor0 =
          emb_lower_bound(MinEntValue(0.0, n), BallGrowthConstant(1.0, n));
      require(floor0.value == sphere_isoembolic(n) && floor0.from_berger,
              "berger floor not returned at zero entropy");
    }
    const EmbBound eb =
        emb_lower_bound(MinEntValue(100.0, 2), BallGrowthConstant(1.0, 2));
    require(eb.value >= sphere_isoembolic(2), "bound below berger floor");
    const double lam = eb.lambda_implied;
    require(eb.value >= lam * 100.0 * 100.0 / (std::log(101.0) * std::log(101.0)) -
                1e-9,
            "reported constant inconsistent");
  });

  add("enumeration-order-independence", [quick] {
    const FuchsianSurface surf = bolza_surface();
    FuchsianSurface permuted;
    permuted.genus = surf.genus;
    const int perm[4] = {2, 0, 3, 1};  // new index of old generator k
    permuted.generators.resize(4);
    for (int k = 0; k < 4; ++k) permuted.generators[perm[k]] = surf.generators[k];
    for (int letter : surf.relator) {
      const int k = std::abs(letter) - 1;
      permuted.relator.push_back((letter > 0 ? 1 : -1) * (perm[k] + 1));
    }
    permuted.validate();
    const int depth = quick ? 3 : 4;
    auto keys = [](const std::vector<HyperbolicIsometry>& ball) {
      std::set<std::array<long long, 4>> s;
      for (const HyperbolicIsometry& g : ball) {
        std::array<double, 4> c = g.m;
        for (double e : g.m)
          if (std::abs(e) > 1e-9) {
            if (e < 0)
              for (int i = 0; i < 4; ++i) c[i] = -c[i];
            break;
          }
        s.insert({llround(c[0] * 1e6), llround(c[1] * 1e6), llround(c[2] * 1e6),
                  llround(c[3] * 1e6)});
      }
      return s;
    };
    require(keys(enumerate_ball(surf, depth)) == keys(enumerate_ball(permuted, depth)),
            "ball depends on generator order");
    require(keys(enumerate_ball(surf, depth, Exec::serial)) ==
                keys(enumerate_ball(surf, depth, Exec::par)),
            "serial/parallel balls differ");
  });

  add("conjugation-invariant-systole", [] {
    const FuchsianSurface surf = bolza_surface();
    HyperbolicIsometry h;
    h.m = {std::cosh(0.4), std::sinh(0.4), std::sinh(0.4), std::cosh(0.4)};
    FuchsianSurface conj;
    conj.genus = surf.genus;
    conj.relator = surf.relator;
    for (const HyperbolicIsometry& g : surf.generators)
      conj.generators.push_back(h.compose(g).compose(h.inverse()));
    conj.validate();
    require(std::abs(fuchsian_systole(conj, 4) - fuchsian_systole(surf, 4)) <= 1e-9,
            "systole not conjugation invariant");
  });

  add("flat-growth-rate-zero", [] {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (double r = 10.0; r <= 20.0; r += 1.0) {
      const double y = std::log(static_cast<double>(flat_orbit_count(kSquare, r)));
      sx += r;
      sy += y;
      sxx += r * r;
      sxy += r * y;
      ++n;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    require(slope < 0.3, "flat torus growth rate not near zero");
  });

  add("solve-monotone", [] {
    const double r = solve_monotone([](double x) { return x * x; }, 4.0,
                                    Bracket(0.0, 10.0, 1e-9));
    require(std::abs(r - 2.0) <= 1e-9, "sqrt solve off");
    const double r2 =
        solve_monotone([](double x) { return -x; }, -3.0, Bracket(0.0, 10.0, 1e-9));
    require(std::abs(r2 - 3.0) <= 1e-9, "decreasing solve off");
    bool threw = false;
    try {
      solve_monotone([](double x) { return x * x; }, 4.0, Bracket(3.0, 10.0, 1e-9));
    } catch (const std::domain_error&) {
      threw = true;
    }
    require(threw, "invalid bracket accepted");
  });

  add("determinism-recompute", [] {
    const BestSigma a = best_sigma_upper(1000);
    const BestSigma b = best_sigma_upper(1000);
    require(a.sigma == b.sigma && a.pair.alpha == b.pair.alpha &&
                a.pair.beta == b.pair.beta,
            "best sigma not reproducible");
    const ThresholdReport r1 = loewner_genus_threshold();
    const ThresholdReport r2 = loewner_genus_threshold();
    require(r1.objective_min == r2.objective_min &&
                r1.argmin_alpha == r2.argmin_alpha,
            "threshold not reproducible");
  });

  int failures = 0;
  for (auto& [name, fn] : checks) {
    try {
      fn();
      out << "ok   " << name << "\n";
    } catch (const std::exception& e) {
      ++failures;
      out << "FAIL " << name << ": " << e.what() << "\n";
    }
  }
  out << "verify: " << (checks.size() - failures) << "/" << checks.size()
      << " checks passed\n";
  return failures;
}

}  // namespace sysent
