#include "sysent/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sysent {

AdmissiblePair::AdmissiblePair(double alpha_, double beta_)
    : alpha(alpha_), beta(beta_) {
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw std::invalid_argument("admissible pair: alpha and beta must be positive");
  if (!(4.0 * alpha + beta < 0.5))
    throw std::invalid_argument("admissible pair: 4*alpha + beta must be below 1/2");
}

SystolicRatio::SystolicRatio(double value_) : value(value_) {
  if (!(value > 0.0))
    throw std::invalid_argument("systolic ratio must be positive");
}

BallGrowthConstant::BallGrowthConstant(double c_, int dim_) : c(c_), dim(dim_) {
  if (!(c > 0.0)) throw std::invalid_argument("ball growth constant must be positive");
  if (dim < 2) throw std::invalid_argument("ball growth dimension must be at least 2");
}

double ipow(double base, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

double katok_entropy_lower(long long genus, double area) {
  if (genus <= 1)
    throw std::domain_error("katok bound needs negative Euler characteristic; "
                            "genus <= 1 gives nonnegative Euler characteristic");
  if (!(area > 0.0)) throw std::invalid_argument("area must be positive");
  const double abs_chi = static_cast<double>(2 * genus - 2);
  return std::sqrt(2.0 * kPi * abs_chi / area);
}

BoundRecord classical_bounds(long long genus) {
  if (genus <= 0) throw std::invalid_argument("genus must be at least 1");
  const double g = static_cast<double>(genus);
  const double lg = std::log(g);  // 0 at genus 1, which zeroes both asymptotics
  BoundRecord rec;
  rec.loewner = 2.0 / kSqrt3;
  rec.gromov_aspherical = 4.0 / 3.0;
  rec.gromov_genus = 64.0 / (4.0 * std::sqrt(g) + 27.0);
  rec.buser_sarnak_lower = (4.0 / (9.0 * kPi)) * lg * lg / g;
  rec.balacheff_coeff = 8.0 / (3.0 * std::log(2.0) * std::log(2.0));
  rec.paper_asymptotic = lg * lg / (kPi * g);
  return rec;
}

double extremal_disk_area_lower(double r, double sys) {
  if (!(r > 0.0) || !(sys > 0.0))
    throw std::invalid_argument("radius and systole must be positive");
  if (r > 0.5 * sys) throw std::domain_error("radius exceeds half-systole");
  return 2.0 * r * r;
}

double corollary_residual(const AdmissiblePair& pair, long long genus,
                          SystolicRatio sigma) {
  if (genus < 2) throw std::invalid_argument("corollary requires genus >= 2");
  const double x = (2.0 * ipow(pair.alpha, 2)) * sigma.value;
  if (x >= 1.0)
    throw std::domain_error("argument of log not below one: 2*alpha^2*sigma >= 1");
  const double lx = std::log(x);
  return lx * lx / sigma.value -
         4.0 * kPi * pair.beta * pair.beta * static_cast<double>(genus - 1);
}

double entropy_upper(const AdmissiblePair& pair, double sys,
                     SystolicRatio sigma, const BallGrowthConstant& growth) {
  if (!(sys > 0.0)) throw std::invalid_argument("systole must be positive");
  const double x = (growth.c * ipow(pair.alpha, growth.dim)) * sigma.value;
  if (x >= 1.0) throw std::domain_error("bound vacuous: c*alpha^n*sigma >= 1");
  return -std::log(x) / (pair.beta * sys);
}

double entropy_upper_extremal(const AdmissiblePair& pair, double sys,
                              SystolicRatio sigma) {
  return entropy_upper(pair, sys, sigma, BallGrowthConstant(2.0, 2));
}

double entropy_upper_isoembolic(const AdmissiblePair& pair, double inj,
                                double emb, const BallGrowthConstant& growth) {
  if (!(inj > 0.0)) throw std::invalid_argument("injectivity radius must be positive");
  if (!(emb > 0.0)) throw std::invalid_argument("isoembolic ratio must be positive");
  const double denom = growth.c * ipow(pair.alpha, growth.dim);
  if (!(emb / denom > 1.0)) throw std::domain_error("bound vacuous: emb <= c*alpha^n");
  return std::log(emb / denom) / (pair.beta * inj);
}

double sphere_isoembolic(int n) {
  if (n <= 0) throw std::invalid_argument("sphere dimension must be positive");
  // vol(S^n)/pi^n via vol(S^n) = vol(S^{n-2}) * 2 pi/(n-1), seeded with the
  // circle (2 pi) and the 2-sphere (4 pi).  Keeps n = 2, 3 exact in doubles.
  double r = (n % 2 == 1) ? 2.0 : 4.0 / kPi;  // ratio at n = 1 resp. n = 2
  for (int m = (n % 2 == 1) ? 1 : 2; m < n; m += 2)
    r *= 2.0 / ((m + 1) * kPi);
  return r;
}

}  // namespace sysent
