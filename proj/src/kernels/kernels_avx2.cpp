// Compiled with -mavx2. Nothing here may run unless cpu_has_avx2() is true.

#include "diffract/kernels.hpp"

#include <immintrin.h>

namespace diffract::kernels {
namespace {

constexpr std::size_t kLanes = 8;

inline __m256i load(const Element *p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i *>(p));
}

inline void store(Element *p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i *>(p), v);
}

// Indices are < 2^31 for every table this library builds (order cap 20000),
// so the signed 32-bit gather offsets are safe.
void compose_avx2(const Element *outer, const Element *inner, Element *out,
                  std::size_t len) {
  const auto *base = reinterpret_cast<const int *>(outer);
  std::size_t i = 0;
  for (; i + kLanes <= len; i += kLanes)
    store(out + i, _mm256_i32gather_epi32(base, load(inner + i), 4));
  for (; i < len; ++i)
    out[i] = outer[inner[i]];
}

void lookup_avx2(const Element *table, std::size_t stride, const Element *rows,
                 const Element *cols, Element *out, std::size_t len) {
  const auto *base = reinterpret_cast<const int *>(table);
  const __m256i vstride = _mm256_set1_epi32(static_cast<int>(stride));
  std::size_t i = 0;
  for (; i + kLanes <= len; i += kLanes) {
    __m256i idx = _mm256_add_epi32(_mm256_mullo_epi32(load(rows + i), vstride),
                                   load(cols + i));
    store(out + i, _mm256_i32gather_epi32(base, idx, 4));
  }
  for (; i < len; ++i)
    out[i] = table[static_cast<std::size_t>(rows[i]) * stride + cols[i]];
}

std::size_t first_mismatch_avx2(const Element *a, const Element *b,
                                std::size_t len) {
  std::size_t i = 0;
  for (; i + kLanes <= len; i += kLanes) {
    auto eq = static_cast<unsigned>(
        _mm256_movemask_ps(_mm256_castsi256_ps(
            _mm256_cmpeq_epi32(load(a + i), load(b + i)))));
    if (eq != 0xFFu)
      return i + static_cast<std::size_t>(__builtin_ctz(~eq));
  }
  for (; i < len; ++i)
    if (a[i] != b[i])
      return i;
  return len;
}

std::size_t first_moved_avx2(const Element *images, std::size_t len) {
  __m256i iota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i step = _mm256_set1_epi32(kLanes);
  std::size_t i = 0;
  for (; i + kLanes <= len; i += kLanes) {
    auto eq = static_cast<unsigned>(_mm256_movemask_ps(
        _mm256_castsi256_ps(_mm256_cmpeq_epi32(load(images + i), iota))));
    if (eq != 0xFFu)
      return i + static_cast<std::size_t>(__builtin_ctz(~eq));
    iota = _mm256_add_epi32(iota, step);
  }
  for (; i < len; ++i)
    if (images[i] != i)
      return i;
  return len;
}

} // namespace

const KernelSet *avx2() {
  static const KernelSet set{"avx2", compose_avx2, lookup_avx2,
                             first_mismatch_avx2, first_moved_avx2};
  return &set;
}

} // namespace diffract::kernels
