#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"

#include "diffract/kernels.hpp"

using diffract::Element;
namespace kernels = diffract::kernels;

namespace {

std::vector<Element> random_permutation(std::size_t n, std::mt19937 &rng) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::vector<const kernels::KernelSet *> simd_variants() {
  std::vector<const kernels::KernelSet *> out;
  if (kernels::cpu_has_avx2() && kernels::avx2())
    out.push_back(kernels::avx2());
  return out;
}

} // namespace

TEST(Kernels, ScalarComposeAppliesRightFactorFirst) {
  std::vector<Element> f{1, 2, 3, 0}, g{1, 0, 2, 3}, out(4);
  kernels::scalar().compose(f.data(), g.data(), out.data(), 4);
  EXPECT_EQ(out, (std::vector<Element>{2, 1, 3, 0}));
}

TEST(Kernels, ScalarScansReportFirstDifference) {
  std::vector<Element> a{0, 1, 2, 3}, b{0, 1, 5, 3};
  EXPECT_EQ(kernels::scalar().first_mismatch(a.data(), b.data(), 4), 2u);
  EXPECT_EQ(kernels::scalar().first_mismatch(a.data(), a.data(), 4), 4u);
  EXPECT_EQ(kernels::scalar().first_moved(a.data(), 4), 4u);
  EXPECT_EQ(kernels::scalar().first_moved(b.data(), 4), 2u);
}

TEST(Kernels, ActiveSetIsOneOfTheCompiledVariants) {
  const auto &k = kernels::active();
  EXPECT_TRUE(&k == &kernels::scalar() || &k == kernels::avx2());
}

// Every SIMD variant must agree with the scalar reference on every length,
// including the tails that do not fill a vector.
TEST(Kernels, SimdMatchesScalarOnRandomInputs) {
  auto variants = simd_variants();
  if (variants.empty())
    GTEST_SKIP() << "no SIMD kernel set available on this CPU";
  std::mt19937 rng(12345);
  const auto &ref = kernels::scalar();
  for (const auto *simd : variants) {
    for (std::size_t len = 0; len <= 131; ++len) {
      for (int trial = 0; trial < 8; ++trial) {
        auto outer = random_permutation(std::max<std::size_t>(len, 1), rng);
        auto inner = random_permutation(std::max<std::size_t>(len, 1), rng);
        std::vector<Element> a(len + 1), b(len + 1);
        ref.compose(outer.data(), inner.data(), a.data(), len);
        simd->compose(outer.data(), inner.data(), b.data(), len);
        ASSERT_EQ(a, b) << simd->name << " compose, len " << len;

        // Plant at most one difference and compare the scans.
        std::vector<Element> x = outer, y = outer;
        if (len && trial % 2) {
          std::size_t at = rng() % len;
          y[at] += 1;
        }
        ASSERT_EQ(ref.first_mismatch(x.data(), y.data(), len),
                  simd->first_mismatch(x.data(), y.data(), len))
            << simd->name << " first_mismatch, len " << len;

        std::vector<Element> ident(len + 1);
        std::iota(ident.begin(), ident.end(), Element{0});
        if (len && trial % 2)
          ident[rng() % len] += 7;
        ASSERT_EQ(ref.first_moved(ident.data(), len), simd->first_moved(ident.data(), len))
            << simd->name << " first_moved, len " << len;
      }
    }
  }
}

TEST(Kernels, SimdLookupMatchesScalar) {
  auto variants = simd_variants();
  if (variants.empty())
    GTEST_SKIP() << "no SIMD kernel set available on this CPU";
  std::mt19937 rng(99);
  for (std::size_t n : {1u, 3u, 8u, 24u, 200u}) {
    std::vector<Element> table(n * n);
    for (auto &v : table)
      v = static_cast<Element>(rng() % n);
    for (std::size_t len : {0u, 1u, 7u, 8u, 9u, 64u, 1001u}) {
      std::vector<Element> rows(len), cols(len), a(len), b(len);
      for (std::size_t i = 0; i < len; ++i) {
        rows[i] = static_cast<Element>(rng() % n);
        cols[i] = static_cast<Element>(rng() % n);
      }
      kernels::scalar().lookup(table.data(), n, rows.data(), cols.data(), a.data(), len);
      for (const auto *simd : variants) {
        simd->lookup(table.data(), n, rows.data(), cols.data(), b.data(), len);
        ASSERT_EQ(a, b) << simd->name << " lookup, n " << n << ", len " << len;
      }
    }
  }
}
