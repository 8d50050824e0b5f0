#include "isospec/sparse.hpp"

#include "isospec/error.hpp"
#include "isospec/parallel.hpp"
#include "isospec/simd.hpp"

#include <algorithm>
#include <map>

namespace isospec {

SparseSymmetric SparseSymmetric::from_upper_triplets(std::int32_t n, std::span<const Triplet> upper) {
  std::vector<std::map<std::int32_t, double>> rows(n);
  for (const Triplet& t : upper) {
    if (t.i < 0 || t.j < 0 || t.i >= n || t.j >= n) throw DomainError("triplet index out of range");
    if (t.i > t.j) throw DomainError("upper triplets require i <= j");
    rows[t.i][t.j] += t.value;
    if (t.i != t.j) rows[t.j][t.i] += t.value;
  }
  SparseSymmetric a;
  a.n_ = n;
  a.row_ptr_.assign(1, 0);
  for (const auto& row : rows) {
    for (const auto& [c, v] : row) {
      a.cols_.push_back(c);
      a.vals_.push_back(v);
    }
    a.row_ptr_.push_back(static_cast<std::int64_t>(a.cols_.size()));
  }
  return a;
}

SparseSymmetric SparseSymmetric::from_rows(std::int32_t n,
                                           std::vector<std::vector<std::pair<std::int32_t, double>>>&& rows) {
  if (static_cast<std::int32_t>(rows.size()) != n) throw DimensionMismatch("row count differs from dimension");
  SparseSymmetric a;
  a.n_ = n;
  std::size_t total = 0;
  for (const auto& row : rows) total += row.size();
  a.cols_.reserve(total);
  a.vals_.reserve(total);
  a.row_ptr_.assign(1, 0);
  a.row_ptr_.reserve(static_cast<std::size_t>(n) + 1);
  for (auto& row : rows) {
    for (const auto& [c, v] : row) {
      a.cols_.push_back(c);
      a.vals_.push_back(v);
    }
    a.row_ptr_.push_back(static_cast<std::int64_t>(a.cols_.size()));
    std::vector<std::pair<std::int32_t, double>>().swap(row);
  }
  if (!a.is_symmetric()) throw DomainError("rows do not describe a symmetric matrix");
  return a;
}

SparseSymmetric SparseSymmetric::from_csr(std::int32_t n, std::vector<std::int64_t>&& row_ptr,
                                          std::vector<std::int32_t>&& cols, std::vector<double>&& values) {
  if (static_cast<std::int32_t>(row_ptr.size()) != n + 1 || row_ptr.front() != 0 ||
      row_ptr.back() != static_cast<std::int64_t>(cols.size()) || cols.size() != values.size())
    throw DimensionMismatch("inconsistent CSR arrays");
  SparseSymmetric a;
  a.n_ = n;
  a.row_ptr_ = std::move(row_ptr);
  a.cols_ = std::move(cols);
  a.vals_ = std::move(values);
  if (!a.is_symmetric()) throw DomainError("CSR arrays do not describe a symmetric matrix");
  return a;
}

void SparseSymmetric::multiply(std::span<const double> x, std::span<double> y, unsigned threads) const {
  if (static_cast<std::int32_t>(x.size()) != n_ || static_cast<std::int32_t>(y.size()) != n_)
    throw DimensionMismatch("sparse product dimension mismatch");
  const auto& k = simd::active();
  parallel_for(static_cast<std::size_t>(n_), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const std::int64_t b = row_ptr_[i];
      const std::int64_t e = row_ptr_[i + 1];
      y[i] = k.sparse_row_dot(vals_.data() + b, cols_.data() + b, x.data(), static_cast<std::size_t>(e - b));
    }
  });
}

std::vector<double> SparseSymmetric::multiply(std::span<const double> x, unsigned threads) const {
  std::vector<double> y(x.size());
  multiply(x, y, threads);
  return y;
}

std::vector<Triplet> SparseSymmetric::upper_triplets() const {
  std::vector<Triplet> out;
  for (std::int32_t i = 0; i < n_; ++i)
    for (std::int64_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
      if (cols_[p] >= i) out.push_back({i, cols_[p], vals_[p]});
  return out;
}

double SparseSymmetric::row_sum(std::int32_t i) const {
  double s = 0.0;
  for (std::int64_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) s += vals_[p];
  return s;
}

bool SparseSymmetric::is_symmetric() const {
  for (std::int32_t i = 0; i < n_; ++i)
    for (std::int64_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
      const std::int32_t j = cols_[p];
      if (j < 0 || j >= n_) return false;
      const auto first = cols_.begin() + row_ptr_[j];
      const auto last = cols_.begin() + row_ptr_[j + 1];
      const auto it = std::lower_bound(first, last, i);
      if (it == last || *it != i || vals_[it - cols_.begin()] != vals_[p]) return false;
    }
  return true;
}

Eigen::MatrixXd SparseSymmetric::to_dense() const {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n_, n_);
  for (std::int32_t i = 0; i < n_; ++i)
    for (std::int64_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) d(i, cols_[p]) += vals_[p];
  return d;
}

}  // namespace isospec
