#pragma once

// Heat-kernel graph Laplacians of point clouds on submanifolds of Euclidean space.

#include "isospec/fkm.hpp"
#include "isospec/sparse.hpp"

#include <optional>
#include <string>

namespace isospec {

enum class Normalization {
  /// Kernel divided by the degree estimates q_i q_j before the random-walk
  /// normalization; presented through its symmetric conjugate. Insensitive to
  /// the sampling density.
  kRandomWalk,
  /// Plain symmetric normalization of the raw kernel; inherits the sampling density.
  kSymmetric,
};

std::string to_string(Normalization n);
Normalization normalization_from_string(const std::string& s);

struct GraphOptions {
  /// Heat-kernel time t; empty means (mean distance to the 12th nearest neighbour)^2.
  std::optional<double> bandwidth;
  int knn = 12;
  /// Weights are dropped beyond truncation * sqrt(4 t).
  double truncation = 3.0;
  Normalization normalization = Normalization::kRandomWalk;
  unsigned threads = 0;
};

struct GraphLaplacian {
  /// (I - D^{-1/2} W D^{-1/2}) / t, symmetric, spectrum in [0, 2/t].
  SparseSymmetric matrix;
  double bandwidth = 0.0;
  double radius = 0.0;
  Normalization normalization = Normalization::kRandomWalk;
  double mean_degree = 0.0;
};

/// t = (mean over points of the distance to the knn-th nearest neighbour)^2.
double default_bandwidth(const PointCloud& cloud, int knn = 12, unsigned threads = 0);

/// Truncated Gaussian weights exp(-|x_i - x_j|^2 / (4t)), no self loops.
SparseSymmetric kernel_weights(const PointCloud& cloud, double bandwidth, double truncation = 3.0,
                               unsigned threads = 0);

/// D - W for a symmetric weight matrix W with zero diagonal; rows sum to zero.
SparseSymmetric unnormalized_laplacian(const SparseSymmetric& weights);

/// Throws ConnectivityError when the weight graph has more than one component.
void require_connected(const SparseSymmetric& weights);

GraphLaplacian build_graph_laplacian(const PointCloud& cloud, const GraphOptions& options = {});

}  // namespace isospec
