#include "isospec/clifford.hpp"

#include "isospec/catalog.hpp"
#include "isospec/error.hpp"

#include <array>

namespace isospec {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix id(n, n);
  for (int i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::int64_t IntMatrix::trace() const {
  std::int64_t s = 0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

bool IntMatrix::is_symmetric() const { return rows_ == cols_ && *this == transpose(); }
bool IntMatrix::is_skew() const { return rows_ == cols_ && *this == -transpose(); }

IntMatrix IntMatrix::blocks(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c, const IntMatrix& d) {
  const int n = a.rows();
  IntMatrix out(2 * n, 2 * n);
  for (int r = 0; r < n; ++r)
    for (int col = 0; col < n; ++col) {
      out(r, col) = a(r, col);
      out(r, col + n) = b(r, col);
      out(r + n, col) = c(r, col);
      out(r + n, col + n) = d(r, col);
    }
  return out;
}

IntMatrix IntMatrix::kron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const std::int64_t s = a(i, j);
      if (s == 0) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q) out(i * b.rows() + p, j * b.cols() + q) = s * b(p, q);
    }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("integer matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const std::int64_t s = a(i, k);
      if (s == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += s * b(k, j);
    }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("integer matrix sum shape mismatch");
  IntMatrix out = a;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
  return out;
}

IntMatrix operator-(const IntMatrix& a) { return -1 * a; }

IntMatrix operator*(std::int64_t s, const IntMatrix& a) {
  IntMatrix out = a;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out(r, c) *= s;
  return out;
}

namespace {

// Fano-plane triples (i, j, k) with e_i e_j = e_k.
constexpr std::array<std::array<int, 3>, 7> kOctonionTriples = {{
    {1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}}};

// e_a * e_b = sign * e_index.
std::pair<int, int> octonion_product(int a, int b) {
  if (a == 0) return {1, b};
  if (b == 0) return {1, a};
  if (a == b) return {-1, 0};
  for (const auto& t : kOctonionTriples)
    for (int rot = 0; rot < 3; ++rot) {
      const int x = t[rot], y = t[(rot + 1) % 3], z = t[(rot + 2) % 3];
      if (a == x && b == y) return {1, z};
      if (a == y && b == x) return {-1, z};
    }
  throw Error("octonion table is incomplete");
}

// Left multiplication by e_unit on the subalgebra spanned by e_0..e_{dim-1}.
IntMatrix octonion_left(int unit, int dim) {
  IntMatrix out(dim, dim);
  for (int b = 0; b < dim; ++b) {
    const auto [sign, index] = octonion_product(unit, b);
    out(index, b) = sign;
  }
  return out;
}

// Eight anticommuting complex structures on R^16.
std::vector<IntMatrix> period_generators() {
  std::vector<IntMatrix> f;
  const IntMatrix zero = IntMatrix::zero(8);
  const IntMatrix id = IntMatrix::identity(8);
  for (int u = 1; u <= 7; ++u) {
    const IntMatrix l = octonion_left(u, 8);
    f.push_back(IntMatrix::blocks(l, zero, zero, -l));
  }
  f.push_back(IntMatrix::blocks(zero, -id, id, zero));
  return f;
}

}  // namespace

SkewRepresentation skew_representation(int m) {
  if (m < 1) throw DomainError("Clifford representation requires m >= 1");
  SkewRepresentation rep;
  rep.m = m;
  rep.dim = static_cast<int>(delta(m));
  const int count = m - 1;
  if (m <= 8) {
    for (int u = 1; u <= count; ++u) rep.generators.push_back(octonion_left(u, rep.dim));
    return rep;
  }
  // C_{m-1} from C_{m-9}: F_a (x) I together with omega (x) E_b, omega = F_1...F_8.
  const SkewRepresentation inner = skew_representation(m - 8);
  const std::vector<IntMatrix> f = period_generators();
  IntMatrix omega = IntMatrix::identity(16);
  for (const auto& fa : f) omega = omega * fa;
  const IntMatrix id_inner = IntMatrix::identity(inner.dim);
  for (const auto& fa : f) rep.generators.push_back(IntMatrix::kron(fa, id_inner));
  for (const auto& e : inner.generators) rep.generators.push_back(IntMatrix::kron(omega, e));
  return rep;
}

CliffordSystem build_system(int m, int k) {
  if (m < 1 || k < 1) throw DomainError("build_system requires m >= 1 and k >= 1");
  if (m > 40) throw DomainError("build_system supports m <= 40");
  const SkewRepresentation rep = skew_representation(m);
  const int l = k * rep.dim;
  if (l > 4096) throw DomainError("Clifford system dimension too large");
  CliffordSystem sys;
  sys.m = m;
  sys.l = l;
  const IntMatrix id = IntMatrix::identity(l);
  const IntMatrix zero = IntMatrix::zero(l);
  const IntMatrix copies = IntMatrix::identity(k);
  sys.matrices.push_back(IntMatrix::blocks(id, zero, zero, -id));
  sys.matrices.push_back(IntMatrix::blocks(zero, id, id, zero));
  for (const auto& e : rep.generators) {
    const IntMatrix ek = IntMatrix::kron(copies, e);
    sys.matrices.push_back(IntMatrix::blocks(zero, ek, -ek, zero));
  }
  return sys;
}

VerificationReport verify_system(const CliffordSystem& system) {
  VerificationReport report;
  const auto& p = system.matrices;
  const int size = p.empty() ? 0 : p.front().rows();
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    if (p[i].rows() != size || p[i].cols() != size) {
      report = {false, "P_" + std::to_string(i) + " has the wrong shape", i, i};
      return report;
    }
    if (!p[i].is_symmetric()) return {false, "P_" + std::to_string(i) + " is not symmetric", i, i};
    if (p[i].trace() != 0) return {false, "P_" + std::to_string(i) + " has nonzero trace", i, i};
  }
  const IntMatrix two_id = 2 * IntMatrix::identity(size);
  const IntMatrix zero = IntMatrix::zero(size);
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    for (int j = i; j < static_cast<int>(p.size()); ++j) {
      const IntMatrix anti = p[i] * p[j] + p[j] * p[i];
      if (anti != (i == j ? two_id : zero)) {
        report.pass = false;
        report.i = i;
        report.j = j;
        report.violation = "P_" + std::to_string(i) + " P_" + std::to_string(j) + " + P_" + std::to_string(j) +
                           " P_" + std::to_string(i) + (i == j ? " != 2I" : " != 0");
        return report;
      }
    }
  return report;
}

VerificationReport verify_skew(const SkewRepresentation& rep) {
  const auto& e = rep.generators;
  const IntMatrix minus_two = -2 * IntMatrix::identity(rep.dim);
  const IntMatrix zero = IntMatrix::zero(rep.dim);
  for (int i = 0; i < static_cast<int>(e.size()); ++i) {
    if (!e[i].is_skew()) return {false, "E_" + std::to_string(i + 1) + " is not skew", i, i};
    for (int j = i; j < static_cast<int>(e.size()); ++j) {
      const IntMatrix anti = e[i] * e[j] + e[j] * e[i];
      if (anti != (i == j ? minus_two : zero))
        return {false, "E_" + std::to_string(i + 1) + " and E_" + std::to_string(j + 1) + " violate the relation", i,
                j};
    }
  }
  return {};
}

}  // namespace isospec
