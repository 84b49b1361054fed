#include <cstdlib>
#include <string_view>

#include "diffract/kernels.hpp"

namespace diffract::kernels {

#if !defined(DIFFRACT_HAVE_AVX2)
const KernelSet *avx2() { return nullptr; }
#endif

bool cpu_has_avx2() {
#if defined(DIFFRACT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

const KernelSet &resolve() {
  const KernelSet *simd = cpu_has_avx2() ? avx2() : nullptr;
  if (const char *env = std::getenv("DIFFRACT_KERNELS")) {
    std::string_view want{env};
    if (want == "scalar")
      return scalar();
    if (want == "avx2" && simd)
      return *simd;
  }
  return simd ? *simd : scalar();
}

} // namespace

const KernelSet &active() {
  static const KernelSet &chosen = resolve();
  return chosen;
}

} // namespace diffract::kernels
