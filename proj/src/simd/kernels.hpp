#pragma once

#include "isospec/simd.hpp"

namespace isospec::simd::detail {

const Kernels& scalar_table();
#if defined(ISOSPEC_BUILD_AVX2)
const Kernels& avx2_table();
#endif

}  // namespace isospec::simd::detail
