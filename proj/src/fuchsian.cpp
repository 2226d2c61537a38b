#include "sysent/fuchsian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "sysent/bounds.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sysent {

namespace {

// projective canonical form: flip the sign so the first entry of magnitude
// above 1e-9 is positive, then quantize to 1e-6 for the dedup key
std::array<double, 4> canonical_entries(const std::array<double, 4>& m) {
  double s = 1.0;
  for (double e : m) {
    if (std::abs(e) > 1e-9) {
      s = (e > 0.0) ? 1.0 : -1.0;
      break;
    }
  }
  return {s * m[0], s * m[1], s * m[2], s * m[3]};
}

struct BallKey {
  std::array<long long, 4> q;
  bool operator==(const BallKey&) const = default;
};

BallKey make_key(const std::array<double, 4>& canon) {
  BallKey k;
  for (int i = 0; i < 4; ++i) k.q[i] = llround(canon[i] * 1e6);
  return k;
}

struct BallKeyHash {
  size_t operator()(const BallKey& k) const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (long long v : k.q) {
      uint64_t x = static_cast<uint64_t>(v);
      x ^= x >> 30;
      x *= 0xbf58476d1ce4e5b9ull;
      x ^= x >> 27;
      x *= 0x94d049bb133111ebull;
      x ^= x >> 31;
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
  }
};

// incremental enumeration state reused by the depth-stabilized drivers
struct BallState {
  std::vector<HyperbolicIsometry> elems;
  std::vector<uint32_t> frontier;  // indices added at the previous depth
  std::unordered_map<BallKey, uint32_t, BallKeyHash> index;
  int depth = 0;

  BallState() {
    const HyperbolicIsometry id = HyperbolicIsometry::identity();
    elems.push_back(id);
    frontier.push_back(0);
    index.emplace(make_key(canonical_entries(id.m)), 0u);
  }

  void insert_candidate(const HyperbolicIsometry& cand,
                        std::vector<uint32_t>& next_frontier) {
    const std::array<double, 4> canon = canonical_entries(cand.m);
    const BallKey key = make_key(canon);
    auto [it, inserted] = index.emplace(key, static_cast<uint32_t>(elems.size()));
    if (!inserted) {
      // same cell must mean same group element; anything else is a genuine
      // hash collision and invalidates the dedup
      const std::array<double, 4> have = canonical_entries(elems[it->second].m);
      double diff = 0.0, scale = 1.0;
      for (int i = 0; i < 4; ++i) {
        diff = std::max(diff, std::abs(have[i] - canon[i]));
        scale = std::max(scale, std::abs(canon[i]));
      }
      if (diff > 1e-4 * scale)
        throw std::runtime_error(
            "enumeration dedup collision: distinct elements in one cell, "
            "max entry deviation " + std::to_string(diff));
      return;
    }
    elems.push_back(cand);
    next_frontier.push_back(it->second);
  }

  // expand one word length; candidate order (frontier index, letter) is fixed,
  // so parallel chunking merges to the same element order as the serial path
  void grow(const std::vector<HyperbolicIsometry>& letters, Exec exec) {
    const size_t f = frontier.size();
    const size_t L = letters.size();
    std::vector<HyperbolicIsometry> cands(f * L);
    if (exec == Exec::par) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
      for (long long i = 0; i < static_cast<long long>(f); ++i)
        for (size_t l = 0; l < L; ++l)
          cands[static_cast<size_t>(i) * L + l] =
              elems[frontier[static_cast<size_t>(i)]].compose(letters[l]);
    } else {
      for (size_t i = 0; i < f; ++i)
        for (size_t l = 0; l < L; ++l)
          cands[i * L + l] = elems[frontier[i]].compose(letters[l]);
    }
    std::vector<uint32_t> next_frontier;
    for (const HyperbolicIsometry& cand : cands) insert_candidate(cand, next_frontier);
    frontier = std::move(next_frontier);
    ++depth;
  }
};

std::vector<HyperbolicIsometry> letter_set(const FuchsianSurface& surf) {
  std::vector<HyperbolicIsometry> letters = surf.generators;
  for (const HyperbolicIsometry& g : surf.generators) letters.push_back(g.inverse());
  return letters;
}

constexpr size_t kElementBudget = 30000000;

}  // namespace

HyperbolicIsometry HyperbolicIsometry::compose(const HyperbolicIsometry& o) const {
  HyperbolicIsometry r;
  r.m[0] = m[0] * o.m[0] + m[1] * o.m[2];
  r.m[1] = m[0] * o.m[1] + m[1] * o.m[3];
  r.m[2] = m[2] * o.m[0] + m[3] * o.m[2];
  r.m[3] = m[2] * o.m[1] + m[3] * o.m[3];
  const double d = r.m[0] * r.m[3] - r.m[1] * r.m[2];
  if (!(d > 0.0))
    throw std::domain_error("isometry product lost positive determinant");
  if (std::abs(d - 1.0) > 1e-9) {
    const double s = 1.0 / std::sqrt(d);
    for (double& e : r.m) e *= s;
  }
  return r;
}

double HyperbolicIsometry::displacement() const {
  return std::acosh(std::max(1.0, 0.5 * frobenius2()));
}

double translation_length(const HyperbolicIsometry& g) {
  const double t = std::abs(g.trace());
  if (t <= 2.0) return 0.0;
  return 2.0 * std::acosh(0.5 * t);
}

HyperbolicIsometry FuchsianSurface::evaluate_relator() const {
  HyperbolicIsometry w = HyperbolicIsometry::identity();
  for (int letter : relator) {
    const int k = std::abs(letter) - 1;
    if (k < 0 || k >= static_cast<int>(generators.size()))
      throw std::invalid_argument("relator letter out of range");
    w = w.compose(letter > 0 ? generators[k] : generators[k].inverse());
  }
  return w;
}

void FuchsianSurface::validate(double tol) const {
  if (generators.empty()) throw std::invalid_argument("no generators");
  for (const HyperbolicIsometry& g : generators)
    if (!(std::abs(g.trace()) > 2.0))
      throw std::domain_error("generator is not hyperbolic (|trace| <= 2)");
  const HyperbolicIsometry w = evaluate_relator();
  double dev_plus = 0.0, dev_minus = 0.0;
  const std::array<double, 4> id{1.0, 0.0, 0.0, 1.0};
  for (int i = 0; i < 4; ++i) {
    dev_plus = std::max(dev_plus, std::abs(w.m[i] - id[i]));
    dev_minus = std::max(dev_minus, std::abs(w.m[i] + id[i]));
  }
  if (std::min(dev_plus, dev_minus) > tol)
    throw std::domain_error("relator does not evaluate to +-identity");
}

FuchsianSurface bolza_surface() {
  const double half_len = std::acosh(1.0 + std::sqrt(2.0));
  HyperbolicIsometry trans;
  trans.m = {std::exp(half_len), 0.0, 0.0, std::exp(-half_len)};
  FuchsianSurface surf;
  surf.genus = 2;
  for (int k = 0; k < 4; ++k) {
    const double h = 0.5 * k * kPi / 4.0;  // half-angle of the k*pi/4 rotation
    HyperbolicIsometry rot;
    rot.m = {std::cos(h), std::sin(h), -std::sin(h), std::cos(h)};
    surf.generators.push_back(rot.compose(trans).compose(rot.inverse()));
  }
  // octagon side pairing: opposite sides are identified, giving the length-8
  // relation below (a product of two commutators after a change of basis)
  surf.relator = {1, -2, 3, -4, -1, 2, -3, 4};
  surf.validate();
  return surf;
}

std::vector<HyperbolicIsometry> enumerate_ball(const FuchsianSurface& surf,
                                               int depth, Exec exec) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  BallState state;
  const std::vector<HyperbolicIsometry> letters = letter_set(surf);
  for (int d = 0; d < depth; ++d) {
    state.grow(letters, exec);
    if (state.elems.size() > kElementBudget)
      throw std::runtime_error("enumeration element budget exceeded");
  }
  return std::move(state.elems);
}

double fuchsian_systole(const FuchsianSurface& surf, int depth, Exec exec) {
  if (depth < 2) throw std::invalid_argument("systole needs depth >= 2");
  double best = 0.0;
  for (const HyperbolicIsometry& g : enumerate_ball(surf, depth, exec)) {
    const double len = translation_length(g);
    if (len > 1e-9 && (best == 0.0 || len < best)) best = len;
  }
  if (best == 0.0) throw std::runtime_error("no hyperbolic element found");
  return best;
}

std::pair<std::vector<double>, int> stabilized_displacements(
    const FuchsianSurface& surf, double rmax, int depth_limit, Exec exec) {
  if (!(rmax > 0.0)) throw std::invalid_argument("rmax must be positive");
  BallState state;
  const std::vector<HyperbolicIsometry> letters = letter_set(surf);
  const double frob_cap = 2.0 * std::cosh(rmax);
  auto count_at_rmax = [&]() {
    long long c = 0;
    for (const HyperbolicIsometry& g : state.elems)
      if (g.frobenius2() <= frob_cap) ++c;
    return c;
  };
  long long prev = -1;
  while (state.depth < depth_limit) {
    state.grow(letters, exec);
    if (state.elems.size() > kElementBudget)
      throw std::runtime_error("enumeration element budget exceeded");
    const long long cur = count_at_rmax();
    if (state.depth >= 2 && cur == prev) {
      std::vector<double> disp;
      disp.reserve(state.elems.size());
      for (const HyperbolicIsometry& g : state.elems) {
        const double d = g.displacement();
        if (d <= rmax) disp.push_back(d);
      }
      std::sort(disp.begin(), disp.end());
      return {std::move(disp), state.depth};
    }
    prev = cur;
  }
  throw std::runtime_error(
      "orbit counts still changing at the depth limit (saturated_depth_flag)");
}

EntropyFit orbit_entropy(const FuchsianSurface& surf, double rmax,
                         int depth_limit, Exec exec) {
  if (!(rmax > 2.0)) throw std::invalid_argument("rmax must exceed 2");
  auto [disp, depth] = stabilized_displacements(surf, rmax, depth_limit, exec);

  EntropyFit fit;
  fit.stabilized_depth = depth;
  fit.window_lo = 0.5 * rmax;
  fit.window_hi = rmax;

  const long long n = std::max<long long>(8, llround(rmax / 0.25));
  fit.table.rows.reserve(n);
  for (long long i = 1; i <= n; ++i) {
    const double r = rmax * static_cast<double>(i) / static_cast<double>(n);
    const long long c =
        std::upper_bound(disp.begin(), disp.end(), r) - disp.begin();
    fit.table.rows.emplace_back(r, c);
  }

  // least squares of log(count) against R over the upper half window
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  long long pts = 0;
  for (long long i = 1; i <= n; ++i) {
    if (2 * i < n) continue;
    const auto& [r, c] = fit.table.rows[static_cast<size_t>(i - 1)];
    const double y = std::log(static_cast<double>(c));
    sx += r;
    sy += y;
    sxx += r * r;
    sxy += r * y;
    ++pts;
  }
  const double denom = pts * sxx - sx * sx;
  fit.slope = (pts * sxy - sx * sy) / denom;
  const double intercept = (sy - fit.slope * sx) / pts;
  double ss = 0.0;
  for (long long i = 1; i <= n; ++i) {
    if (2 * i < n) continue;
    const auto& [r, c] = fit.table.rows[static_cast<size_t>(i - 1)];
    const double e = std::log(static_cast<double>(c)) - fit.slope * r - intercept;
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / pts);
  return fit;
}

double katok_check(const FuchsianSurface& surf, double rmax, int depth_limit,
                   Exec exec) {
  if (surf.genus < 2)
    throw std::domain_error("katok check needs genus >= 2");
  const double h = orbit_entropy(surf, rmax, depth_limit, exec).slope;
  // area = 2 pi |chi| by Gauss-Bonnet at curvature -1, so the ratio is h^2
  return h * h;
}

}  // namespace sysent
