#pragma once

// Data-parallel inner loops with a scalar reference and an AVX2 variant chosen
// at runtime. Both variants round identically: reductions use four interleaved
// partial sums combined as (s0 + s1) + (s2 + s3), and no fused multiply-add is
// used, so results agree bit for bit.

#include <cstddef>
#include <cstdint>
#include <string>

namespace isospec::simd {

enum class Level { kScalar, kAvx2 };

struct Kernels {
  Level level;
  const char* name;
  /// sum_i x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);
  /// y[i] += a * x[i]
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  /// out[j] = sum_d (coords[d * stride + begin + j] - query[d])^2 for j < count.
  /// Coordinates are stored dimension-major; the sum over d runs in order.
  void (*squared_distances)(const double* query, const double* coords, std::size_t stride, std::size_t dim,
                            std::size_t begin, std::size_t count, double* out);
  /// sum_i values[i] * x[cols[i]]
  double (*sparse_row_dot)(const double* values, const std::int32_t* cols, const double* x, std::size_t n);
};

const Kernels& scalar_kernels();
/// nullptr when the build or the CPU lacks AVX2.
const Kernels* avx2_kernels();

/// Kernels in effect: AVX2 when available unless ISOSPEC_SIMD=scalar.
const Kernels& active();
/// Overrides the runtime choice; requesting AVX2 on a machine without it falls back to scalar.
void force(Level level);
std::string to_string(Level level);

}  // namespace isospec::simd
