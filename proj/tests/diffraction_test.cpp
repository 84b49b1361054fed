#include <set>
#include <vector>

#include "gtest/gtest.h"

#include "corpus.hpp"
#include "diffract/diffraction.hpp"

using namespace diffract;
using diffract::testing::corpus_groups;
using diffract::testing::corpus_strategies;
using diffract::testing::corpus_subgroups;
using diffract::testing::share;

namespace {

Fibration fibration_of(const char *spec, std::vector<Element> gens,
                       TransversalStrategy s = TransversalStrategy::min_index(),
                       bool allow_non_transversal = false) {
  auto g = share(builtin_from_spec(spec));
  return Fibration(choose(left_cosets(Subgroup::generate(g, gens)), s, allow_non_transversal));
}

Errc code_of(auto fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  return Errc::UnknownElement;
}

} // namespace

// Oracle: g·t factored by hand as bar(g·t) · (bar(g·t)⁻¹ · g · t), using only
// the multiplication table and the representative map.
TEST(Delta, S3TableMatchesFactoring) {
  auto f = fibration_of("symmetric:3", {1});
  const auto &g = f.group();
  const auto &t = f.transversal();
  for (Element x = 0; x < 6; ++x)
    for (Element rep : t.reps()) {
      Element xt = g.mul(x, rep);
      Element b = t.bar(xt);
      Element d = f.delta(x, rep);
      EXPECT_EQ(d, g.mul(g.inv(b), xt));
      EXPECT_EQ(g.mul(b, d), xt);
      EXPECT_TRUE(f.subgroup().contains(d));
    }
  // Two spot values read off the S3 table: (0 1)·(0 1) = e, (0 1)·e = (0 1).
  EXPECT_EQ(f.delta(2, 2), 0u);
  EXPECT_EQ(f.delta(2, 0), 0u);
  EXPECT_EQ(f.delta(1, 0), 1u);
}

TEST(Delta, Errors) {
  auto f = fibration_of("symmetric:3", {1});
  EXPECT_EQ(code_of([&] { f.delta(0, 1); }), Errc::NotARepresentative);
  EXPECT_EQ(code_of([&] { f.delta(6, 0); }), Errc::IndexOutOfRange);
  auto nt = fibration_of("symmetric:3", {1}, TransversalStrategy::explicit_list({1, 2, 4}));
  EXPECT_EQ(code_of([&] { nt.delta_zero(0); }), Errc::RequiresTransversal);
  EXPECT_EQ(code_of([&] { nt.nabla(0); }), Errc::RequiresTransversal);
  EXPECT_EQ(nt.delta(0, 1), 0u);
}

TEST(Gamma, Examples) {
  auto f = fibration_of("symmetric:3", {1});
  EXPECT_TRUE(f.gamma(0).is_identity());
  // Hand-computed left action on gH: (0 1)·H = {2,3}, (0 1)·{2,3} = H,
  // (0 1)·{4,5} = {4,5}; (1 2) fixes H and swaps the other two.
  EXPECT_EQ(f.gamma(1), Permutation({0, 2, 1}));
  EXPECT_EQ(f.gamma(2), Permutation({1, 0, 2}));
  EXPECT_EQ(code_of([&] { f.gamma(6); }), Errc::IndexOutOfRange);
}

TEST(Gamma, IsAHomomorphismOnCorpus) {
  for (const auto &[name, g] : corpus_groups()) {
    const auto n = static_cast<Element>(g->order());
    for (const auto &sc : corpus_subgroups(g)) {
      Fibration f(choose(left_cosets(Subgroup::generate(g, sc.gens)),
                         TransversalStrategy::min_index()));
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          ASSERT_EQ(f.gamma(g->mul(a, b)), f.gamma(a) * f.gamma(b)) << name;
    }
  }
}

TEST(Nabla, ExamplesAndErrors) {
  auto f = fibration_of("symmetric:3", {1});
  EXPECT_EQ(f.delta_zero(0), 0u);
  EXPECT_EQ(f.delta_zero(1), 1u);
  EXPECT_EQ(f.nabla(0), (Spectrum{0, 0}));
  EXPECT_EQ(f.nabla(3), (Spectrum{2, 1}));
  EXPECT_EQ(f.nabla_inv({2, 1}), 3u);
  EXPECT_EQ(code_of([&] { f.nabla_inv({1, 0}); }), Errc::InvalidSpectrum);
  EXPECT_EQ(code_of([&] { f.nabla_inv({2, 2}); }), Errc::InvalidSpectrum);
  EXPECT_EQ(code_of([&] { f.nabla_inv({2, 9}); }), Errc::InvalidSpectrum);
}

TEST(Nabla, RoundTripsOnCorpus) {
  for (const auto &[name, g] : corpus_groups()) {
    const auto n = static_cast<Element>(g->order());
    for (const auto &sc : corpus_subgroups(g))
      for (const auto &s : corpus_strategies()) {
        Fibration f(choose(left_cosets(Subgroup::generate(g, sc.gens)), s));
        std::set<std::size_t> seen;
        for (Element x = 0; x < n; ++x) {
          auto sp = f.nabla(x);
          ASSERT_EQ(f.nabla_inv(sp), x) << name;
          ASSERT_EQ(f.pair_at(f.pair_index(sp)), sp);
          seen.insert(f.pair_index(sp));
        }
        ASSERT_EQ(seen.size(), n);
        for (std::size_t i = 0; i < f.pair_count(); ++i)
          ASSERT_EQ(f.pair_index(f.nabla(f.nabla_inv(f.pair_at(i)))), i) << name;
      }
  }
}

TEST(Pairs, EnumerationIsTMajor) {
  auto f = fibration_of("symmetric:3", {1});
  EXPECT_EQ(f.pair_count(), 6u);
  EXPECT_EQ(f.pair_at(0), (Spectrum{0, 0}));
  EXPECT_EQ(f.pair_at(1), (Spectrum{0, 1}));
  EXPECT_EQ(f.pair_at(2), (Spectrum{2, 0}));
  EXPECT_EQ(f.pair_index(Spectrum{4, 1}), 5u);
  EXPECT_EQ(code_of([&] { f.pair_at(6); }), Errc::IndexOutOfRange);
}

TEST(DualDelta, Examples) {
  auto f = fibration_of("cyclic:4", {2});
  EXPECT_EQ(f.dual_delta(0), f.constant_identity());
  EXPECT_EQ(f.dual_delta(1), f.fiber_map({0, 1}));
  EXPECT_EQ(f.dual_delta(3), f.fiber_map({1, 0}));
}

TEST(DualDelta, CanCollapseDistinctElements) {
  // With H trivial every δ value is e, so δ̂ forgets g entirely.
  auto f = fibration_of("cyclic:4", {});
  EXPECT_EQ(f.dual_delta(1), f.dual_delta(2));
  EXPECT_EQ(f.dual_delta(3), f.constant_identity());
}

TEST(FiberMap, PointwiseProduct) {
  auto f = fibration_of("cyclic:4", {2});
  auto a = f.fiber_map({1, 0});
  auto b = f.fiber_map({1, 1});
  EXPECT_EQ(fibermap_mul(f, a, b).values()[0], 0u);
  EXPECT_EQ(fibermap_mul(f, a, b).values()[1], 1u);
  EXPECT_EQ(fibermap_mul(f, a, f.constant_identity()), a);
  EXPECT_EQ(fibermap_mul(f, a, f.fiber_inverse(a)), f.constant_identity());
  EXPECT_EQ(code_of([&] { f.fiber_map({2, 0}); }), Errc::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { f.fiber_map({0}); }), Errc::IndexOutOfRange);

  auto other = fibration_of("cyclic:4", {2});
  auto c = other.fiber_map({1, 0});
  EXPECT_EQ(code_of([&] { fibermap_mul(f, a, c); }), Errc::FibrationMismatch);
  EXPECT_EQ(code_of([&] { f.beta(c); }), Errc::FibrationMismatch);
}

TEST(Beta, Examples) {
  auto f = fibration_of("cyclic:4", {2});
  EXPECT_TRUE(f.beta(f.constant_identity()).is_identity());
  // ⟨t0,h⟩ ↦ ⟨t0, 2+h⟩, ⟨t1,h⟩ fixed.
  EXPECT_EQ(f.beta(f.fiber_map({1, 0})), Permutation({1, 0, 2, 3}));
}

TEST(Beta, IsAHomomorphismOnAllFiberMaps) {
  auto f = fibration_of("symmetric:3", {3});
  ASSERT_EQ(f.h_size(), 3u);
  ASSERT_EQ(f.t_size(), 2u);
  std::vector<FiberMap> maps;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      maps.push_back(f.fiber_map({a, b}));
  std::set<std::vector<Element>> images;
  for (const auto &x : maps) {
    auto bx = f.beta(x);
    images.emplace(bx.images().begin(), bx.images().end());
    for (const auto &y : maps)
      ASSERT_EQ(f.beta(f.fiber_mul(x, y)), bx * f.beta(y));
  }
  EXPECT_EQ(images.size(), maps.size());
}

TEST(Alpha, Examples) {
  auto f = fibration_of("cyclic:4", {2});
  EXPECT_TRUE(f.alpha(0).is_identity());
  // 1·⟨0,h⟩ = ⟨1,h⟩; 1·⟨1,h⟩ = 2+h = ⟨0, 2+h⟩.
  EXPECT_EQ(f.alpha(1), Permutation({2, 3, 1, 0}));
  EXPECT_EQ(f.alpha(1), f.gamma_times_identity(1) * f.beta(f.dual_delta(1)));
}

TEST(Alpha, MatchesLeftMultiplicationThroughNabla) {
  for (const auto &[name, g] : corpus_groups()) {
    const auto n = static_cast<Element>(g->order());
    for (const auto &sc : corpus_subgroups(g)) {
      Fibration f(choose(left_cosets(Subgroup::generate(g, sc.gens)),
                         TransversalStrategy::random(5)));
      for (Element a = 0; a < n; ++a) {
        auto pa = f.alpha(a);
        for (Element x = 0; x < n; ++x)
          ASSERT_EQ(pa(static_cast<Element>(f.pair_index(f.nabla(x)))),
                    f.pair_index(f.nabla(g->mul(a, x))))
              << name;
      }
    }
  }
}
