#pragma once

// Symmetric Clifford systems P_0..P_m on R^{2l} with integer entries, built from
// signed-permutation representations of real Clifford algebras and verified
// with exact integer arithmetic.

#include <cstdint>
#include <string>
#include <vector>

namespace isospec {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  static IntMatrix identity(int n);
  static IntMatrix zero(int n) { return IntMatrix(n, n); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::int64_t operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  IntMatrix transpose() const;
  std::int64_t trace() const;
  bool is_symmetric() const;
  bool is_skew() const;
  /// Block matrix [[a, b], [c, d]] of equally sized square blocks.
  static IntMatrix blocks(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c, const IntMatrix& d);
  /// Kronecker product a (x) b.
  static IntMatrix kron(const IntMatrix& a, const IntMatrix& b);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend IntMatrix operator*(std::int64_t s, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// m-1 anticommuting orthogonal complex structures on R^{delta(m)}.
struct SkewRepresentation {
  int m = 1;
  int dim = 1;
  std::vector<IntMatrix> generators;
};

struct CliffordSystem {
  int m = 0;
  int l = 0;
  /// P_0..P_m, each 2l x 2l.
  std::vector<IntMatrix> matrices;
};

struct VerificationReport {
  bool pass = true;
  /// Empty on success, otherwise a description of the first violated identity.
  std::string violation;
  int i = -1;
  int j = -1;
};

/// Left multiplications by imaginary octonion units restricted to the smallest
/// subalgebra that holds m-1 of them; Bott periodicity for m > 8.
SkewRepresentation skew_representation(int m);

/// P_0 = diag(I, -I), P_1 = antidiag(I, I), P_{1+i} = [[0, E_i], [-E_i, 0]]
/// with E_i the k-fold direct sum of the skew representation.
CliffordSystem build_system(int m, int k);

VerificationReport verify_system(const CliffordSystem& system);
VerificationReport verify_skew(const SkewRepresentation& rep);

}  // namespace isospec
