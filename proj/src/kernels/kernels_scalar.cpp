#include "diffract/kernels.hpp"

namespace diffract::kernels {
namespace {

void compose_scalar(const Element *outer, const Element *inner, Element *out,
                    std::size_t len) {
  for (std::size_t i = 0; i < len; ++i)
    out[i] = outer[inner[i]];
}

void lookup_scalar(const Element *table, std::size_t stride,
                   const Element *rows, const Element *cols, Element *out,
                   std::size_t len) {
  for (std::size_t i = 0; i < len; ++i)
    out[i] = table[static_cast<std::size_t>(rows[i]) * stride + cols[i]];
}

std::size_t first_mismatch_scalar(const Element *a, const Element *b,
                                  std::size_t len) {
  for (std::size_t i = 0; i < len; ++i)
    if (a[i] != b[i])
      return i;
  return len;
}

std::size_t first_moved_scalar(const Element *images, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i)
    if (images[i] != i)
      return i;
  return len;
}

} // namespace

const KernelSet &scalar() {
  static const KernelSet set{"scalar", compose_scalar, lookup_scalar,
                             first_mismatch_scalar, first_moved_scalar};
  return set;
}

} // namespace diffract::kernels
