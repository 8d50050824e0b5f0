#pragma once

// Certificates for the first-eigenvalue inequalities of minimal isoparametric
// hypersurfaces with g = 4 and of their focal submanifolds. Every verdict is
// computed twice: once in floating point with error bounds, once with exact
// surds, rationals and rigorous enclosures of pi.

#include "isospec/catalog.hpp"
#include "isospec/exact.hpp"
#include "isospec/special_functions.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace isospec {

enum class Verdict { kPass, kFail, kInconclusive };
std::string to_string(Verdict v);

/// One certified relation lhs < rhs (or lhs <= rhs when !strict).
struct Check {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool strict = true;
  /// Bound on the floating-point error of rhs - lhs.
  double error = 0.0;
  Verdict float_verdict = Verdict::kInconclusive;
  Verdict exact_verdict = Verdict::kInconclusive;

  double margin() const { return rhs - lhs; }
  bool agree() const { return float_verdict == exact_verdict; }
};

struct DualValue {
  double closed_form = 0.0;
  double quadrature = 0.0;
  double quadrature_error = 0.0;
  double relative_difference() const;
};

/// G = integral_0^{pi/2} sin^m1 x cos^m2 x dx = B((m1+1)/2, (m2+1)/2) / 2.
DualValue compute_G(const MultiplicityPair& pair);

struct KValue {
  int alpha = 1;
  double value = 0.0;
  double error = 0.0;
  /// Beta-function form, available for alpha = 1 and alpha = 4.
  std::optional<double> closed_form;
};

/// K_alpha = sin^2(theta_alpha) integral_0^{pi/4} sin^m1 2x cos^m2 2x / sin^2((alpha-1) pi/4 + x) dx.
/// Throws DivergenceError for alpha = 1 with m1 = 1 and alpha = 4 with m2 = 1.
KValue compute_K_alpha(const MultiplicityPair& pair, int alpha, double theta1);

/// S(m1, m2) = Gamma((m2+2)/2) Gamma((m1+m2)/2) / (Gamma((m2+1)/2) Gamma((m1+m2+1)/2)).
double compute_S(const MultiplicityPair& pair);
PiMonomial compute_S_exact(const MultiplicityPair& pair);

/// T(p, q) = (2q+1)!! (2p+2q-1)!! pi / (q! (p+q)! 2^{p+2q+1}), evaluated in log space.
double compute_T(int p, int q);
PiMonomial compute_T_exact(int p, int q);

struct AValue {
  double value = 0.0;
  Surd exact;
  /// m2 (m1+m2)^3 >= (m2^2 + m1 m2 + m2 + 1)^2, the integer form of A >= 2.
  bool polynomial_check = false;
};

/// A(m1, m2) = ((n+2)/n) (1 / sin^2 theta1) (m1 - 1)/(m1 + m2) for the minimal hypersurface.
AValue compute_A(const MultiplicityPair& pair);

struct HypersurfaceCertificate {
  MultiplicityPair pair;
  int n = 0;
  double theta1 = 0.0;
  Surd sin2_theta1;
  std::array<KValue, 4> K;
  DualValue G;
  double S = 0.0;
  double S_mirror = 0.0;
  AValue A;
  AValue A_mirror;
  /// K_alpha n / ((n+2) G)
  std::array<double, 4> ratios{};
  std::vector<Check> checks;
  int digits = 0;
  Verdict overall = Verdict::kInconclusive;
  bool paths_agree = false;
};

/// Requires g = 4 and m1, m2 >= 2. digits sets the width of the pi and sqrt enclosures.
HypersurfaceCertificate certify_hypersurface(const MultiplicityPair& pair, int digits = 40);

enum class FocalSide { kM1, kM2 };
std::string to_string(FocalSide side);

struct FocalCertificate {
  MultiplicityPair pair;
  FocalSide which = FocalSide::kM1;
  int n = 0;
  int dim = 0;
  /// 2(n+2)(m2-1)/(m1+m2) for M1, 2(n+2)(m1-1)/(m1+m2) for M2.
  Rational bound;
  /// dim < bound, decided exactly.
  bool inequality_holds = false;
  /// 2 m2 >= m1 + 3 for M1, 2 m1 >= m2 + 3 for M2.
  bool condition_met = false;
  /// 3 dim >= 2n + 3, which must coincide with condition_met.
  bool dimension_hypothesis = false;
  /// lambda_1 <= 4m from the explicit eigenfunction on M2 of an OT-FKM family (m = m1).
  std::optional<int> solomon_upper;
  /// lambda_1 = dim when certified.
  std::optional<int> lambda1;
  bool certified() const { return inequality_holds; }
};

FocalCertificate certify_focal(const MultiplicityPair& pair, FocalSide which);

enum class SolomonClass { kCertifiedEqual, kStrictlyLess, kUndetermined };
std::string to_string(SolomonClass c);

struct SolomonReport {
  MultiplicityPair pair;
  int m = 0;
  int k = 0;
  int upper = 0;
  int dim_M2 = 0;
  SolomonClass classification = SolomonClass::kUndetermined;
  /// min{4, 2 + m2} when m1 = 1, from the quotient description of M2.
  std::optional<int> quotient_lambda1;
};

/// Compares the 4m upper bound with dim M2 for the OT-FKM family of (m, k).
SolomonReport solomon_comparison(int m, int k);

/// Oriented OT-FKM pairs (m, k delta(m) - m - 1) with both entries positive and
/// m2 <= max_m2, sorted by (m1, m2).
std::vector<SolomonReport> ot_fkm_families(int max_m, int max_m2);

/// Oriented OT-FKM pairs whose focal submanifold on `which` fails the sufficient condition.
std::vector<MultiplicityPair> focal_leftovers(FocalSide which, int max_m = 40);

}  // namespace isospec
