#pragma once

// Closed-form Laplace-Beltrami spectra and multiplicity clustering.

#include <cstdint>
#include <string>
#include <vector>

namespace isospec {

enum class SpectrumSource { kSphere, kProductSpheres, kQuotient };
std::string to_string(SpectrumSource s);

struct SpectrumLevel {
  double value = 0.0;
  std::int64_t multiplicity = 0;
};

struct ExactSpectrum {
  SpectrumSource source = SpectrumSource::kSphere;
  /// Ascending distinct eigenvalues up to the cutoff, starting with 0.
  std::vector<SpectrumLevel> levels;

  /// Eigenvalue at a position of the list in which each eigenvalue is repeated
  /// by its multiplicity; index 0 is the constant function.
  double eigenvalue_at(std::int64_t index) const;
  /// Smallest positive level; throws DomainError when the cutoff excludes it.
  SpectrumLevel first_positive() const;
};

/// Harmonic multiplicity of degree d on the round sphere S^n.
std::int64_t sphere_harmonic_multiplicity(int n, int d);

/// Round unit S^n: d(d + n - 1) for harmonic degree d, values <= cutoff.
ExactSpectrum exact_sphere_spectrum(int n, double cutoff);

/// S^p(r1) x S^q(r2): sums mu/r1^2 + nu/r2^2 of the factor spectra, values <= cutoff.
ExactSpectrum exact_product_sphere_spectrum(int p, double r1, int q, double r2, double cutoff);

/// (S^1 x S^{k+1}) / Z_2 with (theta, x) ~ (theta + pi, -x): a^2 + d(d + k) with a + d even,
/// multiplicity (a = 0 ? 1 : 2) times the degree-d harmonic multiplicity of S^{k+1}.
ExactSpectrum exact_quotient_spectrum(int k, double cutoff);

struct Cluster {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  int first = 0;
  int size = 0;
};

/// Groups sorted values: a new cluster starts where the gap exceeds both
/// gap_tol * max(|a|, |b|) and 1e-9. Unsorted input is sorted first.
std::vector<Cluster> cluster_multiplicities(std::vector<double> eigs, double gap_tol = 0.15);

}  // namespace isospec
