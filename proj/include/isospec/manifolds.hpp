#pragma once

// Manifolds with a point sampler, and first-eigenvalue estimation from samples.

#include "isospec/certificates.hpp"
#include "isospec/fkm.hpp"
#include "isospec/graph_laplacian.hpp"
#include "isospec/spectra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace isospec {

struct ManifoldSpec {
  enum class Kind { kSphere, kProductSpheres, kFkmLevel, kFkmFocal };
  Kind kind = Kind::kSphere;
  /// Sphere dimension, or the factor dimensions of a product.
  int dim = 2;
  int p = 1;
  int q = 1;
  double r1 = 1.0;
  double r2 = 1.0;
  /// Clifford system parameters of an FKM family.
  int m = 1;
  int k = 1;
  double t = 0.0;
  FocalSide focal = FocalSide::kM1;

  static ManifoldSpec sphere(int dim);
  static ManifoldSpec product(int p, double r1, int q, double r2);
  /// S^1(sqrt(1/2)) x S^1(sqrt(1/2)) in S^3.
  static ManifoldSpec clifford_torus();
  static ManifoldSpec fkm_level(int m, int k, double t);
  static ManifoldSpec fkm_focal(int m, int k, FocalSide side);

  std::string describe() const;
  /// Intrinsic dimension.
  int manifold_dimension() const;
  /// lambda_1 when known in closed form.
  std::optional<double> exact_lambda1() const;
};

PointCloud sample_manifold(const ManifoldSpec& spec, std::size_t count, std::uint64_t seed, unsigned threads = 0);

struct EstimatorOptions {
  GraphOptions graph;
  /// Number of smallest eigenvalues requested from Lanczos.
  int nev = 12;
  double gap_tol = 0.15;
  double lanczos_tol = 1e-8;
  int max_iterations = 1500;
  /// Eigenvalue scale of the graph Laplacian. The Gaussian-kernel operator
  /// (I - S)/t targets the Laplace-Beltrami operator with unit scale.
  double scale = 1.0;
  /// Sample sizes for the trend, as fractions of N; the last entry is the reported run.
  std::vector<double> trend_fractions{0.25, 1.0};
};

struct TrendPoint {
  std::size_t points = 0;
  double lambda1 = 0.0;
  int multiplicity = 0;
};

struct SpectrumEstimate {
  std::vector<double> eigenvalues;
  std::vector<Cluster> clusters;
  /// Cluster index of every eigenvalue.
  std::vector<int> cluster_id;
  double lambda1 = 0.0;
  int multiplicity = 0;
  std::size_t points = 0;
  double bandwidth = 0.0;
  double radius = 0.0;
  double mean_degree = 0.0;
  Normalization normalization = Normalization::kRandomWalk;
  int lanczos_iterations = 0;
  std::uint64_t seed = 0;
  std::vector<TrendPoint> trend;
};

/// Graph Laplacian and Lanczos on a given cloud; lambda1 is the mean of the
/// first cluster after the one containing the constant eigenvalue.
SpectrumEstimate estimate_spectrum(const PointCloud& cloud, const EstimatorOptions& options = {});

/// Samples the manifold at every trend size and estimates its spectrum; the
/// result describes the largest run and carries the trend.
SpectrumEstimate estimate_lambda1(const ManifoldSpec& spec, std::size_t points, std::uint64_t seed,
                                  const EstimatorOptions& options = {});

}  // namespace isospec
