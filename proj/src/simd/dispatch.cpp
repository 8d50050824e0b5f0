#include "kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace isospec::simd {
namespace {

bool cpu_has_avx2() {
#if defined(ISOSPEC_BUILD_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Kernels* initial_choice() {
  const char* env = std::getenv("ISOSPEC_SIMD");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return &scalar_kernels();
  const Kernels* vec = avx2_kernels();
  return vec != nullptr ? vec : &scalar_kernels();
}

std::atomic<const Kernels*>& current() {
  static std::atomic<const Kernels*> choice{initial_choice()};
  return choice;
}

}  // namespace

const Kernels& scalar_kernels() { return detail::scalar_table(); }

const Kernels* avx2_kernels() {
#if defined(ISOSPEC_BUILD_AVX2)
  static const bool ok = cpu_has_avx2();
  return ok ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const Kernels& active() { return *current().load(std::memory_order_acquire); }

void force(Level level) {
  const Kernels* vec = avx2_kernels();
  const Kernels* chosen = (level == Level::kAvx2 && vec != nullptr) ? vec : &scalar_kernels();
  current().store(chosen, std::memory_order_release);
}

std::string to_string(Level level) { return level == Level::kAvx2 ? "avx2" : "scalar"; }

}  // namespace isospec::simd
