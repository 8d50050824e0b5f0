#include "isospec/certificates.hpp"

#include "isospec/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace isospec {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::string to_string(FocalSide side) { return side == FocalSide::kM1 ? "M1" : "M2"; }

std::string to_string(SolomonClass c) {
  switch (c) {
    case SolomonClass::kCertifiedEqual:
      return "certified-equal";
    case SolomonClass::kStrictlyLess:
      return "strictly-less";
    case SolomonClass::kUndetermined:
      return "undetermined";
  }
  return "undetermined";
}

double DualValue::relative_difference() const {
  const double scale = std::max(std::abs(closed_form), std::numeric_limits<double>::min());
  return std::abs(closed_form - quadrature) / scale;
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kQuarterPi = 0.78539816339744830962;

void require_g4(const MultiplicityPair& pair) {
  validate(pair);
  if (pair.g != 4) throw UnsupportedCase("certificates are only implemented for g = 4");
}

double ipow(double x, int e) {
  double r = 1.0;
  for (; e > 0; --e) r *= x;
  return r;
}

Verdict float_verdict(double margin, double error, bool strict) {
  if (margin > error) return Verdict::kPass;
  if (margin < -error) return Verdict::kFail;
  if (!strict && margin == 0.0 && error == 0.0) return Verdict::kPass;
  return Verdict::kInconclusive;
}

// Exact verdict for lo < hi (or lo <= hi) given enclosures.
Verdict interval_verdict(const Interval& lo, const Interval& hi) {
  if (certainly_less(lo, hi)) return Verdict::kPass;
  if (certainly_less(hi, lo)) return Verdict::kFail;
  return Verdict::kInconclusive;
}

Verdict sign_verdict(int sign_of_margin, bool strict) {
  if (sign_of_margin > 0) return Verdict::kPass;
  if (sign_of_margin < 0) return Verdict::kFail;
  return strict ? Verdict::kFail : Verdict::kPass;
}

Verdict worst(Verdict a, Verdict b) {
  if (a == Verdict::kFail || b == Verdict::kFail) return Verdict::kFail;
  if (a == Verdict::kInconclusive || b == Verdict::kInconclusive) return Verdict::kInconclusive;
  return Verdict::kPass;
}

bool is_ot_fkm(int m1, int m2) {
  const std::int64_t d = delta(m1);
  return (static_cast<std::int64_t>(m1) + m2 + 1) % d == 0;
}

}  // namespace

DualValue compute_G(const MultiplicityPair& pair) {
  require_g4(pair);
  DualValue g;
  g.closed_form = 0.5 * beta(0.5 * (pair.m1 + 1), 0.5 * (pair.m2 + 1)).value;
  const int a = pair.m1;
  const int b = pair.m2;
  const auto q = integrate([a, b](double x) { return ipow(std::sin(x), a) * ipow(std::cos(x), b); }, 0.0,
                           2.0 * kQuarterPi);
  g.quadrature = q.value;
  g.quadrature_error = q.error;
  return g;
}

KValue compute_K_alpha(const MultiplicityPair& pair, int alpha, double theta1) {
  require_g4(pair);
  if (alpha < 1 || alpha > 4) throw DomainError("alpha must lie in 1..4");
  if (!(theta1 > 0.0 && theta1 < kQuarterPi)) throw DomainError("theta1 must lie in (0, pi/4)");
  const int a = pair.m1;
  const int b = pair.m2;
  if (alpha == 1 && a == 1) throw DivergenceError("K_1 diverges for m1 = 1");
  if (alpha == 4 && b == 1) throw DivergenceError("K_4 diverges for m2 = 1");
  const double theta = theta1 + (alpha - 1) * kQuarterPi;
  const double s2 = ipow(std::sin(theta), 2);

  // The removable singularities of alpha = 1 at x = 0 and alpha = 4 at x = pi/4
  // are cancelled analytically: sin^2 2x / sin^2 x = 4 cos^2 x.
  std::function<double(double)> f;
  switch (alpha) {
    case 1:
      f = [a, b](double x) {
        return 4.0 * ipow(std::cos(x), 2) * ipow(std::sin(2 * x), a - 2) * ipow(std::cos(2 * x), b);
      };
      break;
    case 2:
      f = [a, b](double x) {
        return ipow(std::sin(2 * x), a) * ipow(std::cos(2 * x), b) / ipow(std::sin(kQuarterPi + x), 2);
      };
      break;
    case 3:
      f = [a, b](double x) { return ipow(std::sin(2 * x), a) * ipow(std::cos(2 * x), b) / ipow(std::cos(x), 2); };
      break;
    default:
      f = [a, b](double x) {
        return 4.0 * ipow(std::cos(kQuarterPi - x), 2) * ipow(std::sin(2 * x), a) * ipow(std::cos(2 * x), b - 2);
      };
      break;
  }
  const auto q = integrate(f, 0.0, kQuarterPi);
  KValue k;
  k.alpha = alpha;
  k.value = s2 * q.value;
  k.error = s2 * q.error + 8.0 * kEps * std::abs(k.value);
  if (alpha == 1)
    k.closed_form = 0.5 * s2 * (beta(0.5 * (a - 1), 0.5 * (b + 1)).value + beta(0.5 * (a - 1), 0.5 * (b + 2)).value);
  if (alpha == 4)
    k.closed_form = 0.5 * s2 * (beta(0.5 * (b - 1), 0.5 * (a + 1)).value + beta(0.5 * (b - 1), 0.5 * (a + 2)).value);
  return k;
}

double compute_S(const MultiplicityPair& pair) {
  if (pair.m1 < 1 || pair.m2 < 1) throw DomainError("S requires positive multiplicities");
  const double s = pair.m1 + pair.m2;
  return std::exp(std::lgamma(0.5 * (pair.m2 + 2)) + std::lgamma(0.5 * s) - std::lgamma(0.5 * (pair.m2 + 1)) -
                  std::lgamma(0.5 * (s + 1)));
}

PiMonomial compute_S_exact(const MultiplicityPair& pair) {
  if (pair.m1 < 1 || pair.m2 < 1) throw DomainError("S requires positive multiplicities");
  const int s = pair.m1 + pair.m2;
  return gamma_half_integer(pair.m2 + 2) * gamma_half_integer(s) /
         (gamma_half_integer(pair.m2 + 1) * gamma_half_integer(s + 1));
}

namespace {

// log((2k+1)!!)
double log_odd_factorial(int k) {
  return std::lgamma(2.0 * k + 2.0) - k * std::log(2.0) - std::lgamma(k + 1.0);
}

BigInt odd_factorial(int k) {
  BigInt r = 1;
  for (int j = 3; j <= 2 * k + 1; j += 2) r *= j;
  return r;
}

BigInt factorial(int k) {
  BigInt r = 1;
  for (int j = 2; j <= k; ++j) r *= j;
  return r;
}

}  // namespace

double compute_T(int p, int q) {
  if (p < 1 || q < 1) throw DomainError("T(p, q) requires p, q >= 1");
  const double log_t = log_odd_factorial(q) + log_odd_factorial(p + q - 1) + std::log(M_PI) - std::lgamma(q + 1.0) -
                       std::lgamma(p + q + 1.0) - (p + 2.0 * q + 1.0) * std::log(2.0);
  return std::exp(log_t);
}

PiMonomial compute_T_exact(int p, int q) {
  if (p < 1 || q < 1) throw DomainError("T(p, q) requires p, q >= 1");
  const BigInt num = odd_factorial(q) * odd_factorial(p + q - 1);
  const BigInt den = factorial(q) * factorial(p + q) * (BigInt(1) << (p + 2 * q + 1));
  return {Rational(num, den), 2};
}

AValue compute_A(const MultiplicityPair& pair) {
  require_g4(pair);
  const MinimalAngle angle = minimal_theta1(pair);
  const int s = pair.m1 + pair.m2;
  const int n = dimension(pair);
  AValue a;
  a.value = (n + 2.0) / n / angle.sin2_theta1 * (pair.m1 - 1.0) / s;
  a.exact = Surd(Rational((n + 2) * (pair.m1 - 1), n * s)) / *angle.sin2_exact;
  const BigInt m1 = pair.m1;
  const BigInt m2 = pair.m2;
  const BigInt lhs = m2 * (m1 + m2) * (m1 + m2) * (m1 + m2);
  const BigInt inner = m2 * m2 + m1 * m2 + m2 + 1;
  a.polynomial_check = lhs >= inner * inner;
  return a;
}

HypersurfaceCertificate certify_hypersurface(const MultiplicityPair& pair, int digits) {
  require_g4(pair);
  if (std::min(pair.m1, pair.m2) < 2)
    throw DomainError("hypersurface certificate requires m1, m2 >= 2; the (1,k) families are homogeneous");
  if (digits < 10 || digits > 100) throw DomainError("certificate precision must lie in 10..100 digits");

  HypersurfaceCertificate c;
  c.pair = pair;
  c.digits = digits;
  c.n = dimension(pair);
  const MinimalAngle angle = minimal_theta1(pair);
  c.theta1 = angle.theta1;
  c.sin2_theta1 = *angle.sin2_exact;
  c.G = compute_G(pair);
  for (int alpha = 1; alpha <= 4; ++alpha) c.K[alpha - 1] = compute_K_alpha(pair, alpha, angle.theta1);

  const MultiplicityPair mirror{4, pair.m2, pair.m1};
  const PiMonomial s_exact = compute_S_exact(pair);
  const PiMonomial s_mirror_exact = compute_S_exact(mirror);
  c.S = compute_S(pair);
  c.S_mirror = compute_S(mirror);
  c.A = compute_A(pair);
  c.A_mirror = compute_A(mirror);

  const double n = c.n;
  const double scale = (n + 2.0) / n;
  const double g = c.G.closed_form;
  const double g_err = 8.0 * kEps * g;
  for (int i = 0; i < 4; ++i) c.ratios[i] = c.K[i].value / (scale * g);

  const Interval one = Interval::point(1);
  const Interval s_int = s_exact.bounds(digits);
  const Interval s_mirror_int = s_mirror_exact.bounds(digits);
  const Interval a_int = c.A.exact.bounds(digits);
  const Interval a_mirror_int = c.A_mirror.exact.bounds(digits);

  // K_2 < sin^2(theta_2) G and K_3 < sin^2(theta_3) G since 1/sin^2 is at most 2 on the ranges involved.
  const Rational sum(pair.m1 + pair.m2);
  const Surd sin2_theta2 = (Surd(1) + Surd::sqrt_of(Rational(pair.m1) / sum)) / Surd(Rational(2));
  const Surd sin2_theta3 = (Surd(1) + Surd::sqrt_of(Rational(pair.m2) / sum)) / Surd(Rational(2));
  const Rational exact_scale(c.n + 2, c.n);

  auto add = [&c](std::string name, double lhs, double rhs, bool strict, double error, Verdict exact) {
    Check k;
    k.name = std::move(name);
    k.lhs = lhs;
    k.rhs = rhs;
    k.strict = strict;
    k.error = error;
    k.float_verdict = float_verdict(rhs - lhs, error, strict);
    k.exact_verdict = exact;
    c.checks.push_back(std::move(k));
  };

  add("K1 < (n+2)G/n", c.K[0].value, scale * g, true, c.K[0].error + scale * g_err,
      interval_verdict(one + s_int, a_int));
  add("K2 < (n+2)G/n", c.K[1].value, scale * g, true, c.K[1].error + scale * g_err,
      sign_verdict((Surd(exact_scale) - sin2_theta2).sign(), true));
  add("K3 < (n+2)G/n", c.K[2].value, scale * g, true, c.K[2].error + scale * g_err,
      sign_verdict((Surd(exact_scale) - sin2_theta3).sign(), true));
  add("K4 < (n+2)G/n", c.K[3].value, scale * g, true, c.K[3].error + scale * g_err,
      interval_verdict(one + s_mirror_int, a_mirror_int));

  const double s_err = 64.0 * kEps * c.S;
  const double s_mirror_err = 64.0 * kEps * c.S_mirror;
  const double a_err = 16.0 * kEps * c.A.value;
  const double a_mirror_err = 16.0 * kEps * c.A_mirror.value;
  add("S < 1", c.S, 1.0, true, s_err, interval_verdict(s_int, one));
  add("S' < 1", c.S_mirror, 1.0, true, s_mirror_err, interval_verdict(s_mirror_int, one));
  add("A >= 2", 2.0, c.A.value, false, a_err, sign_verdict((c.A.exact - Surd(Rational(2))).sign(), false));
  add("A' >= 2", 2.0, c.A_mirror.value, false, a_mirror_err,
      sign_verdict((c.A_mirror.exact - Surd(Rational(2))).sign(), false));
  add("1+S < A", 1.0 + c.S, c.A.value, true, s_err + a_err, interval_verdict(one + s_int, a_int));
  add("1+S' < A'", 1.0 + c.S_mirror, c.A_mirror.value, true, s_mirror_err + a_mirror_err,
      interval_verdict(one + s_mirror_int, a_mirror_int));

  c.overall = Verdict::kPass;
  c.paths_agree = true;
  for (const Check& k : c.checks) {
    c.overall = worst(c.overall, worst(k.float_verdict, k.exact_verdict));
    c.paths_agree = c.paths_agree && k.agree();
  }
  if (c.A.polynomial_check != (c.checks[6].exact_verdict == Verdict::kPass) ||
      c.A_mirror.polynomial_check != (c.checks[7].exact_verdict == Verdict::kPass)) {
    c.paths_agree = false;
    c.overall = worst(c.overall, Verdict::kInconclusive);
  }
  if (!c.paths_agree) c.overall = worst(c.overall, Verdict::kInconclusive);
  return c;
}

FocalCertificate certify_focal(const MultiplicityPair& pair, FocalSide which) {
  require_g4(pair);
  FocalCertificate f;
  f.pair = pair;
  f.which = which;
  f.n = dimension(pair);
  const int s = pair.m1 + pair.m2;
  const auto [d1, d2] = focal_dims(pair);
  // M2 is M1 of the family with the roles of m1 and m2 exchanged.
  const int own = which == FocalSide::kM1 ? pair.m1 : pair.m2;
  const int other = which == FocalSide::kM1 ? pair.m2 : pair.m1;
  f.dim = which == FocalSide::kM1 ? d1 : d2;
  f.bound = Rational(2 * (f.n + 2) * (other - 1), s);
  f.inequality_holds = Rational(f.dim) < f.bound;
  f.condition_met = 2 * other >= own + 3;
  f.dimension_hypothesis = 3 * f.dim >= 2 * f.n + 3;
  if (which == FocalSide::kM2 && is_ot_fkm(pair.m1, pair.m2)) f.solomon_upper = 4 * pair.m1;
  if (f.inequality_holds) f.lambda1 = f.dim;
  return f;
}

SolomonReport solomon_comparison(int m, int k) {
  SolomonReport r;
  r.pair = fkm_pair(m, k);
  if (r.pair.m2 < 1) throw ValidationError("OT-FKM family (m, k) requires k delta(m) - m - 1 >= 1");
  r.m = m;
  r.k = k;
  r.upper = 4 * m;
  r.dim_M2 = 2 * r.pair.m1 + r.pair.m2;
  if (2 * r.pair.m1 >= r.pair.m2 + 3)
    r.classification = SolomonClass::kCertifiedEqual;
  else if (2 * r.pair.m1 < r.pair.m2)
    r.classification = SolomonClass::kStrictlyLess;
  else
    r.classification = SolomonClass::kUndetermined;
  if (r.pair.m1 == 1) r.quotient_lambda1 = std::min(4, 2 + r.pair.m2);
  return r;
}

std::vector<SolomonReport> ot_fkm_families(int max_m, int max_m2) {
  std::vector<SolomonReport> out;
  for (int m = 1; m <= max_m; ++m) {
    const std::int64_t d = delta(m);
    for (std::int64_t k = 1;; ++k) {
      const std::int64_t m2 = k * d - m - 1;
      if (m2 > max_m2) break;
      if (m2 >= 1) out.push_back(solomon_comparison(m, static_cast<int>(k)));
    }
  }
  return out;
}

std::vector<MultiplicityPair> focal_leftovers(FocalSide which, int max_m) {
  std::vector<MultiplicityPair> out;
  // Both leftover conditions force m2 <= 2 m1 + 2, so this bound loses nothing.
  for (const SolomonReport& r : ot_fkm_families(max_m, 2 * max_m + 2)) {
    if (which == FocalSide::kM1) {
      if (!certify_focal(r.pair, FocalSide::kM1).condition_met) out.push_back(r.pair);
    } else if (r.classification == SolomonClass::kUndetermined) {
      out.push_back(r.pair);
    }
  }
  return out;
}

}  // namespace isospec
