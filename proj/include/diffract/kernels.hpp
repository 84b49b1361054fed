#pragma once

// Index-array kernels used by the group validator, the law suite and the
// benchmark. Every kernel has a scalar reference implementation; an AVX2
// variant is compiled on x86-64 and selected at runtime when the CPU
// supports it. The environment variable DIFFRACT_KERNELS=scalar|avx2
// overrides the automatic choice.

#include <cstddef>
#include <span>

#include "diffract/error.hpp"

namespace diffract::kernels {

struct KernelSet {
  const char *name;

  /// out[i] = outer[inner[i]], i.e. the composition outer∘inner.
  void (*compose)(const Element *outer, const Element *inner, Element *out,
                  std::size_t len);

  /// out[i] = table[rows[i] * stride + cols[i]].
  void (*lookup)(const Element *table, std::size_t stride, const Element *rows,
                 const Element *cols, Element *out, std::size_t len);

  /// Index of the first i with a[i] != b[i], or len.
  std::size_t (*first_mismatch)(const Element *a, const Element *b,
                                std::size_t len);

  /// Index of the first i with images[i] != i, or len.
  std::size_t (*first_moved)(const Element *images, std::size_t len);
};

const KernelSet &scalar();

/// nullptr when the AVX2 variant was not compiled in.
const KernelSet *avx2();

bool cpu_has_avx2();

/// The kernel set chosen for this process (resolved once).
const KernelSet &active();

// Convenience wrappers over active().

inline void compose(std::span<const Element> outer,
                    std::span<const Element> inner, std::span<Element> out) {
  active().compose(outer.data(), inner.data(), out.data(), inner.size());
}

inline std::size_t first_mismatch(std::span<const Element> a,
                                  std::span<const Element> b) {
  return active().first_mismatch(a.data(), b.data(), a.size());
}

inline std::size_t first_moved(std::span<const Element> images) {
  return active().first_moved(images.data(), images.size());
}

} // namespace diffract::kernels
