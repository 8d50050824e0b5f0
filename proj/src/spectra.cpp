#include "isospec/spectra.hpp"

#include "isospec/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace isospec {

std::string to_string(SpectrumSource s) {
  switch (s) {
    case SpectrumSource::kSphere:
      return "sphere";
    case SpectrumSource::kProductSpheres:
      return "product-spheres";
    case SpectrumSource::kQuotient:
      return "quotient";
  }
  return "sphere";
}

double ExactSpectrum::eigenvalue_at(std::int64_t index) const {
  if (index < 0) throw DomainError("eigenvalue index must be nonnegative");
  for (const SpectrumLevel& l : levels) {
    if (index < l.multiplicity) return l.value;
    index -= l.multiplicity;
  }
  throw DomainError("eigenvalue index beyond the cutoff");
}

SpectrumLevel ExactSpectrum::first_positive() const {
  for (const SpectrumLevel& l : levels)
    if (l.value > 0.0) return l;
  throw DomainError("cutoff excludes every positive eigenvalue");
}

namespace {

using boost::multiprecision::cpp_int;

cpp_int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  cpp_int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<SpectrumLevel> merge(std::vector<SpectrumLevel> raw) {
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  std::vector<SpectrumLevel> out;
  for (const SpectrumLevel& l : raw) {
    if (!out.empty() && std::abs(l.value - out.back().value) <= 1e-12 * std::max(1.0, std::abs(l.value)))
      out.back().multiplicity += l.multiplicity;
    else
      out.push_back(l);
  }
  return out;
}

}  // namespace

std::int64_t sphere_harmonic_multiplicity(int n, int d) {
  if (n < 1 || d < 0) throw DomainError("harmonic multiplicity requires n >= 1 and d >= 0");
  const cpp_int m = binomial(n + d, n) - binomial(n + d - 2, n);
  if (m > std::numeric_limits<std::int64_t>::max()) throw DomainError("harmonic multiplicity overflows 64 bits");
  return static_cast<std::int64_t>(m);
}

ExactSpectrum exact_sphere_spectrum(int n, double cutoff) {
  if (n < 1) throw DomainError("sphere dimension must be at least 1");
  ExactSpectrum s;
  s.source = SpectrumSource::kSphere;
  for (int d = 0;; ++d) {
    const double value = static_cast<double>(d) * (d + n - 1);
    if (value > cutoff) break;
    s.levels.push_back({value, sphere_harmonic_multiplicity(n, d)});
  }
  return s;
}

ExactSpectrum exact_product_sphere_spectrum(int p, double r1, int q, double r2, double cutoff) {
  if (!(r1 > 0.0) || !(r2 > 0.0)) throw DomainError("radii must be positive");
  const ExactSpectrum a = exact_sphere_spectrum(p, cutoff * r1 * r1);
  const ExactSpectrum b = exact_sphere_spectrum(q, cutoff * r2 * r2);
  std::vector<SpectrumLevel> raw;
  for (const SpectrumLevel& x : a.levels)
    for (const SpectrumLevel& y : b.levels) {
      const double value = x.value / (r1 * r1) + y.value / (r2 * r2);
      if (value <= cutoff * (1.0 + 1e-12)) raw.push_back({value, x.multiplicity * y.multiplicity});
    }
  ExactSpectrum s;
  s.source = SpectrumSource::kProductSpheres;
  s.levels = merge(std::move(raw));
  return s;
}

ExactSpectrum exact_quotient_spectrum(int k, double cutoff) {
  if (k < 1) throw DomainError("quotient spectrum requires k >= 1");
  std::map<std::int64_t, std::int64_t> levels;
  for (std::int64_t d = 0; d * (d + k) <= cutoff; ++d)
    for (std::int64_t a = d % 2; a * a + d * (d + k) <= cutoff; a += 2)
      levels[a * a + d * (d + k)] += (a == 0 ? 1 : 2) * sphere_harmonic_multiplicity(k + 1, static_cast<int>(d));
  ExactSpectrum s;
  s.source = SpectrumSource::kQuotient;
  for (const auto& [value, mult] : levels) s.levels.push_back({static_cast<double>(value), mult});
  return s;
}

std::vector<Cluster> cluster_multiplicities(std::vector<double> eigs, double gap_tol) {
  std::sort(eigs.begin(), eigs.end());
  std::vector<Cluster> out;
  for (std::size_t i = 0; i < eigs.size(); ++i) {
    const double v = eigs[i];
    bool fresh = out.empty();
    if (!fresh) {
      const double prev = eigs[i - 1];
      const double gap = v - prev;
      fresh = gap > gap_tol * std::max(std::abs(prev), std::abs(v)) && gap > 1e-9;
    }
    if (fresh) {
      out.push_back({v, v, v, static_cast<int>(i), 1});
    } else {
      Cluster& c = out.back();
      c.mean = (c.mean * c.size + v) / (c.size + 1);
      c.max = v;
      c.size += 1;
    }
  }
  return out;
}

}  // namespace isospec
