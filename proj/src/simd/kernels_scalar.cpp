#include "kernels.hpp"

namespace isospec::simd::detail {
namespace {

double dot(const double* x, const double* y, std::size_t n) {
  double s[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    for (int lane = 0; lane < 4; ++lane) s[lane] = s[lane] + x[i + lane] * y[i + lane];
  double total = (s[0] + s[1]) + (s[2] + s[3]);
  for (; i < n; ++i) total = total + x[i] * y[i];
  return total;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + a * x[i];
}

void squared_distances(const double* query, const double* coords, std::size_t stride, std::size_t dim,
                       std::size_t begin, std::size_t count, double* out) {
  for (std::size_t j = 0; j < count; ++j) out[j] = 0.0;
  for (std::size_t d = 0; d < dim; ++d) {
    const double* row = coords + d * stride + begin;
    const double q = query[d];
    for (std::size_t j = 0; j < count; ++j) {
      const double diff = row[j] - q;
      out[j] = out[j] + diff * diff;
    }
  }
}

double sparse_row_dot(const double* values, const std::int32_t* cols, const double* x, std::size_t n) {
  double s[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    for (int lane = 0; lane < 4; ++lane) s[lane] = s[lane] + values[i + lane] * x[cols[i + lane]];
  double total = (s[0] + s[1]) + (s[2] + s[3]);
  for (; i < n; ++i) total = total + values[i] * x[cols[i]];
  return total;
}

}  // namespace

const Kernels& scalar_table() {
  static const Kernels table{Level::kScalar, "scalar", dot, axpy, squared_distances, sparse_row_dot};
  return table;
}

}  // namespace isospec::simd::detail
