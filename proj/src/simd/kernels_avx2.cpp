#include "kernels.hpp"

#include <immintrin.h>

namespace isospec::simd::detail {
namespace {

inline double combine(__m256d acc) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

double dot(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  double total = combine(acc);
  for (; i < n; ++i) total = total + x[i] * y[i];
  return total;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), _mm256_mul_pd(va, _mm256_loadu_pd(x + i))));
  for (; i < n; ++i) y[i] = y[i] + a * x[i];
}

void squared_distances(const double* query, const double* coords, std::size_t stride, std::size_t dim,
                       std::size_t begin, std::size_t count, double* out) {
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t d = 0; d < dim; ++d) {
      const __m256d diff =
          _mm256_sub_pd(_mm256_loadu_pd(coords + d * stride + begin + j), _mm256_set1_pd(query[d]));
      acc = _mm256_add_pd(acc, _mm256_mul_pd(diff, diff));
    }
    _mm256_storeu_pd(out + j, acc);
  }
  for (; j < count; ++j) {
    double acc = 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
      const double diff = coords[d * stride + begin + j] - query[d];
      acc = acc + diff * diff;
    }
    out[j] = acc;
  }
}

double sparse_row_dot(const double* values, const std::int32_t* cols, const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(cols + i));
    const __m256d gathered = _mm256_i32gather_pd(x, idx, 8);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(values + i), gathered));
  }
  double total = combine(acc);
  for (; i < n; ++i) total = total + values[i] * x[cols[i]];
  return total;
}

}  // namespace

const Kernels& avx2_table() {
  static const Kernels table{Level::kAvx2, "avx2", dot, axpy, squared_distances, sparse_row_dot};
  return table;
}

}  // namespace isospec::simd::detail
