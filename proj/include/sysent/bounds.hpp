#pragma once

#include <cstdint>

namespace sysent {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kSqrt3 = 1.73205080756887729352744634150587237;
inline constexpr double kEuler = 2.71828182845904523536028747135266250;

/// Packing radius (alpha) and partition step (beta) as fractions of the
/// systole.  The strict constraint 4*alpha + beta < 1/2 keeps every coarsened
/// loop shorter than the systole, hence contractible; it is enforced here at
/// construction time.
struct AdmissiblePair {
  double alpha;
  double beta;
  AdmissiblePair(double alpha_, double beta_);
};

struct GenusClass {
  long long genus = 1;
  bool orientable = true;
  long long euler_characteristic() const { return 2 - 2 * genus; }
};

/// sys^n / volume, dimensionless.
struct SystolicRatio {
  double value;
  explicit SystolicRatio(double value_);
};

/// Constant c in the small-ball lower bound "vol B(r) >= c r^n", valid for
/// r below half the systole.  c = 2 (n = 2) is the extremal-surface case;
/// c = pi is the flat/hyperbolic comparison value.  The constant is always
/// caller-supplied.
struct BallGrowthConstant {
  double c;
  int dim;
  BallGrowthConstant(double c_, int dim_);
};

/// Classical systolic-ratio bounds evaluated at a fixed genus.
struct BoundRecord {
  double loewner;            // 2/sqrt(3), the torus constant
  double gromov_aspherical;  // 4/3
  double gromov_genus;       // 64/(4 sqrt(g) + 27)
  double buser_sarnak_lower; // (4/(9 pi)) log^2(g)/g
  double balacheff_coeff;    // 8/(3 log^2 2)
  double paper_asymptotic;   // log^2(g)/(pi g)
};

// x^n by repeated multiplication; keeps call paths bit-identical when a
// specialization hardcodes the exponent.
double ipow(double base, int n);

// h >= sqrt(2 pi |chi| / area) for surfaces of negative Euler characteristic.
double katok_entropy_lower(long long genus, double area);

BoundRecord classical_bounds(long long genus);

// area D(x, r) >= 2 r^2 on systolically extremal surfaces, r <= sys/2.
double extremal_disk_area_lower(double r, double sys);

// log^2(2 a^2 sigma)/sigma - 4 pi b^2 (genus - 1); nonnegative iff sigma is
// consistent with the counting bound.
double corollary_residual(const AdmissiblePair& pair, long long genus,
                          SystolicRatio sigma);

// Generic entropy bound -(1/(b sys)) log(c a^n sigma); requires c a^n sigma < 1.
double entropy_upper(const AdmissiblePair& pair, double sys,
                     SystolicRatio sigma, const BallGrowthConstant& growth);

// Specialization for extremal surfaces (c = 2, n = 2); agrees bit-for-bit
// with entropy_upper at that growth constant.
double entropy_upper_extremal(const AdmissiblePair& pair, double sys,
                              SystolicRatio sigma);

// (1/(b inj)) log(emb/(c a^n)); requires emb > c a^n.
double entropy_upper_isoembolic(const AdmissiblePair& pair, double inj,
                                double emb, const BallGrowthConstant& growth);

// vol(S^n, round)/pi^n, the isoembolic ratio of the round sphere.
double sphere_isoembolic(int n);

}  // namespace sysent
