#pragma once

#include "isospec/sparse.hpp"

#include <cstdint>
#include <vector>

namespace isospec {

struct LanczosOptions {
  /// Residual tolerance relative to max(1, ||A|| estimate).
  double tol = 1e-8;
  int max_iterations = 1500;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  int check_every = 10;
};

struct LanczosResult {
  /// k smallest Ritz values, ascending.
  std::vector<double> eigenvalues;
  /// beta_j |s_last| for each returned Ritz pair.
  std::vector<double> residuals;
  int iterations = 0;
  double norm_estimate = 0.0;
};

/// Lanczos with full reorthogonalization (classical Gram-Schmidt, applied
/// twice). Throws ConvergenceError at the iteration cap.
LanczosResult lanczos_smallest(const SparseSymmetric& a, int k, const LanczosOptions& options = {});

/// Last component of the unit eigenvector of the symmetric tridiagonal matrix
/// (diag, off) for the eigenvalue estimate theta, by inverse iteration.
double tridiagonal_eigvec_last(const std::vector<double>& diag, const std::vector<double>& off, double theta);

}  // namespace isospec
