#include "isospec/catalog.hpp"

#include "isospec/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace isospec {

void validate(const MultiplicityPair& pair) {
  const int g = pair.g;
  if (g != 1 && g != 2 && g != 3 && g != 4 && g != 6)
    throw ValidationError("g must be one of 1, 2, 3, 4, 6 (got " + std::to_string(g) + ")");
  if (pair.m1 < 1 || pair.m2 < 1) throw ValidationError("multiplicities must be positive");
  if (g % 2 == 1 && pair.m1 != pair.m2) throw ValidationError("odd g requires m1 == m2");
  if (g == 4 && pair.m1 % 2 == 0 && pair.m2 % 2 == 0 && !(pair.m1 == 2 && pair.m2 == 2))
    throw ValidationError("g = 4 multiplicities cannot both be even except (2,2)");
}

int dimension(const MultiplicityPair& pair) {
  validate(pair);
  if (pair.g % 2 == 0) return pair.g / 2 * (pair.m1 + pair.m2);
  return pair.g * pair.m1;
}

int multiplicity(const MultiplicityPair& pair, int alpha) {
  if (alpha < 1 || alpha > pair.g) throw DomainError("principal curvature index out of range");
  return (alpha % 2 == 1) ? pair.m1 : pair.m2;
}

FamilyGeometry family_geometry(const MultiplicityPair& pair, double theta1) {
  FamilyGeometry geo;
  geo.n = dimension(pair);
  geo.theta1 = theta1;
  for (int alpha = 1; alpha <= pair.g; ++alpha)
    geo.theta_alpha.push_back(theta1 + (alpha - 1) * std::numbers::pi / pair.g);
  geo.dim_M1 = geo.n - pair.m1;
  geo.dim_M2 = geo.n - pair.m2;
  geo.codim_M1 = pair.m1 + 1;
  geo.codim_M2 = pair.m2 + 1;
  return geo;
}

double mean_curvature_sum(const MultiplicityPair& pair, double theta1) {
  double sum = 0.0;
  for (int alpha = 1; alpha <= pair.g; ++alpha) {
    const double theta = theta1 + (alpha - 1) * std::numbers::pi / pair.g;
    sum += multiplicity(pair, alpha) * std::cos(theta) / std::sin(theta);
  }
  return sum;
}

MinimalAngle minimal_theta1(const MultiplicityPair& pair) {
  validate(pair);
  if (pair.g % 2 == 1) throw UnsupportedCase("minimal angle is only provided for even g");
  // nH = (g m1/2) cot(g theta/2) - (g m2/2) tan(g theta/2) vanishes iff tan^2(g theta/2) = m1/m2.
  MinimalAngle out;
  const double ratio = static_cast<double>(pair.m1) / pair.m2;
  out.theta1 = 2.0 / pair.g * std::atan(std::sqrt(ratio));
  const Rational s(pair.m1 + pair.m2);
  switch (pair.g) {
    case 2:
      out.sin2_exact = Surd(Rational(pair.m1) / s);
      break;
    case 4:
      // cos(2 theta1) = sqrt(m2 / (m1 + m2))
      out.sin2_exact = (Surd(1) - Surd::sqrt_of(Rational(pair.m2) / s)) / Surd(Rational(2));
      break;
    case 6:
      if (pair.m1 == pair.m2) out.sin2_exact = (Surd(2) - Surd::sqrt_of(3)) / Surd(Rational(4));
      break;
    default:
      break;
  }
  out.sin2_theta1 = out.sin2_exact ? out.sin2_exact->to_double() : std::pow(std::sin(out.theta1), 2);
  return out;
}

std::int64_t delta(int m) {
  if (m <= 0) throw DomainError("delta(m) requires m >= 1");
  static constexpr std::int64_t kTable[8] = {1, 2, 4, 4, 8, 8, 8, 8};
  std::int64_t value = kTable[(m - 1) % 8];
  for (int periods = (m - 1) / 8; periods > 0; --periods) {
    if (value > (std::int64_t{1} << 58)) throw DomainError("delta(m) overflows 64-bit integers");
    value *= 16;
  }
  return value;
}

MultiplicityPair fkm_pair(int m, int k) {
  if (m < 1 || k < 1) throw DomainError("OT-FKM family requires m >= 1 and k >= 1");
  const std::int64_t l = k * delta(m);
  return {4, m, static_cast<int>(l - m - 1)};
}

std::vector<MultiplicityPair> enumerate_admissible(int bound) {
  if (bound < 2) throw DomainError("enumeration bound must be at least 2");
  std::set<std::pair<int, int>> pairs;
  auto add = [&](long a, long b) {
    if (a < 1 || b < 1 || a + b > bound) return;
    pairs.emplace(static_cast<int>(std::min(a, b)), static_cast<int>(std::max(a, b)));
  };
  // Homogeneous families.
  for (long k = 1; k <= bound; ++k) {
    add(1, k);
    add(2, 2 * k - 1);
    add(4, 4 * k - 1);
  }
  add(2, 2);
  add(4, 5);
  add(6, 9);
  // OT-FKM families (m, k delta(m) - m - 1).
  for (int m = 1; m < bound; ++m) {
    const std::int64_t d = delta(m);
    if (d > 4 * static_cast<std::int64_t>(bound)) break;
    for (std::int64_t k = 1; k * d - 1 <= bound; ++k) add(m, k * d - m - 1);
  }
  // Possibly exceptional family.
  add(7, 8);

  std::vector<MultiplicityPair> out;
  for (auto [a, b] : pairs) out.push_back({4, a, b});
  std::sort(out.begin(), out.end(), [](const MultiplicityPair& x, const MultiplicityPair& y) {
    if (x.m1 + x.m2 != y.m1 + y.m2) return x.m1 + x.m2 < y.m1 + y.m2;
    return x.m1 < y.m1;
  });
  return out;
}

std::pair<int, int> focal_dims(const MultiplicityPair& pair) {
  if (pair.g != 4) throw UnsupportedCase("focal_dims is defined for g = 4");
  return {pair.m1 + 2 * pair.m2, 2 * pair.m1 + pair.m2};
}

const std::vector<KnownEigenvalueFact>& known_eigenvalue_facts() {
  static const std::vector<KnownEigenvalueFact> facts = {
      {KnownManifold::kFocalG2Sphere, "focal submanifold S^p(1) of a g=2 family", "S^{p+q+1}(1)",
       std::nullopt, std::nullopt, "p", std::nullopt, "p+1"},
      {KnownManifold::kVeroneseRP2, "Veronese RP^2 (focal, g=3, m=1)", "S^4(1)", 2, Rational(2), "2", 5, "5"},
      {KnownManifold::kVeroneseCP2, "Veronese CP^2 (focal, g=3, m=2)", "S^7(1)", 4, Rational(4), "4", std::nullopt,
       "unknown"},
      {KnownManifold::kVeroneseHP2, "Veronese HP^2 (focal, g=3, m=4)", "S^13(1)", 8, Rational(8), "8", std::nullopt,
       "unknown"},
      {KnownManifold::kVeroneseOP2, "Veronese OP^2 (focal, g=3, m=8)", "S^25(1)", 16, Rational(16), "16",
       std::nullopt, "unknown"},
      {KnownManifold::kQuotientOneK, "focal M2 of the OT-FKM family with (m1,m2)=(1,k)", "S^{2k+3}(1)",
       std::nullopt, std::nullopt, "min(4, k+2)", std::nullopt, "see exact quotient spectrum"},
      {KnownManifold::kMinimalHypersurface, "closed minimal isoparametric hypersurface", "S^{n+1}(1)",
       std::nullopt, std::nullopt, "n", std::nullopt, "n+2"},
  };
  return facts;
}

std::string to_string(KnownManifold id) {
  switch (id) {
    case KnownManifold::kFocalG2Sphere: return "focal-g2-sphere";
    case KnownManifold::kVeroneseRP2: return "veronese-RP2";
    case KnownManifold::kVeroneseCP2: return "veronese-CP2";
    case KnownManifold::kVeroneseHP2: return "veronese-HP2";
    case KnownManifold::kVeroneseOP2: return "veronese-OP2";
    case KnownManifold::kQuotientOneK: return "quotient-(1,k)";
    case KnownManifold::kMinimalHypersurface: return "hypersurface";
  }
  return "unknown";
}

}  // namespace isospec
