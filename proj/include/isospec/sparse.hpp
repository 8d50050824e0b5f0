#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <vector>

namespace isospec {

struct Triplet {
  std::int32_t i = 0;
  std::int32_t j = 0;
  double value = 0.0;
};

/// Symmetric matrix in compressed sparse rows. Both triangles are stored so a
/// row-parallel product needs no scatter; columns within a row are ascending.
class SparseSymmetric {
 public:
  SparseSymmetric() = default;

  /// Triplets with i <= j; duplicates are summed.
  static SparseSymmetric from_upper_triplets(std::int32_t n, std::span<const Triplet> upper);
  /// Full rows (column, value) with ascending columns. Throws DomainError unless symmetric.
  static SparseSymmetric from_rows(std::int32_t n, std::vector<std::vector<std::pair<std::int32_t, double>>>&& rows);

  /// Takes ownership of CSR arrays with ascending columns per row. Throws DomainError unless symmetric.
  static SparseSymmetric from_csr(std::int32_t n, std::vector<std::int64_t>&& row_ptr, std::vector<std::int32_t>&& cols,
                                  std::vector<double>&& values);

  std::int32_t dimension() const { return n_; }
  std::size_t nnz() const { return vals_.size(); }
  std::span<const std::int64_t> row_ptr() const { return row_ptr_; }
  std::span<const std::int32_t> cols() const { return cols_; }
  std::span<const double> values() const { return vals_; }

  /// y = A x. Each row is reduced in a fixed order, so the result does not depend on threads.
  void multiply(std::span<const double> x, std::span<double> y, unsigned threads = 1) const;
  std::vector<double> multiply(std::span<const double> x, unsigned threads = 1) const;

  std::vector<Triplet> upper_triplets() const;
  double row_sum(std::int32_t i) const;
  bool is_symmetric() const;
  Eigen::MatrixXd to_dense() const;

  friend bool operator==(const SparseSymmetric&, const SparseSymmetric&) = default;

 private:
  std::int32_t n_ = 0;
  std::vector<std::int64_t> row_ptr_{0};
  std::vector<std::int32_t> cols_;
  std::vector<double> vals_;
};

}  // namespace isospec
