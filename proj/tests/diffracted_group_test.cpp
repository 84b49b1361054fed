#include <vector>

#include "gtest/gtest.h"

#include "corpus.hpp"
#include "diffract/diffracted_group.hpp"

using namespace diffract;
using diffract::testing::corpus_groups;
using diffract::testing::corpus_strategies;
using diffract::testing::corpus_subgroups;
using diffract::testing::share;

namespace {

Fibration fibration_of(GroupPtr g, std::vector<Element> gens,
                       TransversalStrategy s = TransversalStrategy::min_index()) {
  return Fibration(choose(left_cosets(Subgroup::generate(std::move(g), gens)), s));
}

Fibration fibration_of(const char *spec, std::vector<Element> gens,
                       TransversalStrategy s = TransversalStrategy::min_index()) {
  return fibration_of(share(builtin_from_spec(spec)), std::move(gens), s);
}

// ∇ computed from first principles: t = the representative in g's coset,
// h = t⁻¹·g.
std::size_t oracle_pair(const Fibration &f, Element x) {
  const FiniteGroup &g = f.group();
  const auto &dec = f.transversal().decomposition();
  Element t = 0;
  for (Element r : f.transversal().reps())
    if (dec.coset_of(r) == dec.coset_of(x))
      t = r;
  Element h = g.mul(g.inv(t), x);
  return f.pair_index(Spectrum{t, h});
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

TEST(Bequeath, Examples) {
  auto f = fibration_of("symmetric:3", {1});
  for (std::size_t i = 0; i < f.pair_count(); ++i) {
    EXPECT_EQ(bequeath_product(f, {0, 0}, f.pair_at(i)), f.pair_at(i));
    EXPECT_EQ(bequeath_product(f, f.pair_at(i), {0, 0}), f.pair_at(i));
  }
  // (0 1)·(0 1) = e.
  EXPECT_EQ(bequeath_product(f, {2, 0}, {2, 0}), (Spectrum{0, 0}));
  // (1 2)·(0 1) = (0 2 1) = index 4 = 4·e.
  EXPECT_EQ(bequeath_product(f, {0, 1}, {2, 0}), (Spectrum{4, 0}));
  EXPECT_EQ(code_of([&] { bequeath_product(f, {1, 0}, {0, 0}); }), Errc::InvalidSpectrum);
}

TEST(Bequeath, RequiresTransversal) {
  auto g = share(builtin("symmetric", 3));
  Fibration nt(choose(left_cosets(Subgroup::generate(g, std::vector<Element>{1})),
                      TransversalStrategy::explicit_list({1, 2, 4})));
  EXPECT_EQ(code_of([&] { bequeath_product(nt, {2, 0}, {2, 0}); }), Errc::RequiresTransversal);
  EXPECT_EQ(code_of([&] { DiffractedGroup::build(nt); }), Errc::RequiresTransversal);
  EXPECT_EQ(code_of([&] { rewrite_product(nt, 0, 0); }), Errc::RequiresTransversal);
}

TEST(DiffractedGroup, S3TableIsTheRelabeledCayleyTable) {
  auto f = fibration_of("symmetric:3", {1});
  auto d = DiffractedGroup::build(f);
  ASSERT_EQ(d.order(), 6u);
  EXPECT_EQ(d.pair(d.identity()), (Spectrum{0, 0}));
  const auto &g = f.group();
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b)
      EXPECT_EQ(d.mul(oracle_pair(f, a), oracle_pair(f, b)), oracle_pair(f, g.mul(a, b)));
}

TEST(DiffractedGroup, RelabelingHoldsOnCorpus) {
  for (const auto &[name, g] : corpus_groups()) {
    const auto n = static_cast<Element>(g->order());
    for (const auto &sc : corpus_subgroups(g))
      for (const auto &s : corpus_strategies()) {
        auto f = fibration_of(g, sc.gens, s);
        auto d = DiffractedGroup::build(f);
        std::vector<std::size_t> nab(n);
        for (Element x = 0; x < n; ++x)
          nab[x] = oracle_pair(f, x);
        for (Element a = 0; a < n; ++a) {
          ASSERT_EQ(d.inverse(nab[a]), nab[g->inv(a)]);
          for (Element b = 0; b < n; ++b)
            ASSERT_EQ(d.mul(nab[a], nab[b]), nab[g->mul(a, b)])
                << name << " H=" << diffract::testing::join(sc.members) << " " << s.describe();
        }
        ASSERT_TRUE(iso_check(f, d).passed());
      }
  }
}

TEST(DiffractedGroup, ExtremeSubgroupsGiveTheOriginalTable) {
  auto g = share(builtin("symmetric", 4));
  std::vector<Element> everything(24);
  for (Element x = 0; x < 24; ++x)
    everything[x] = x;
  for (auto gens : {std::vector<Element>{}, everything}) {
    auto d = DiffractedGroup::build(fibration_of(g, gens));
    EXPECT_TRUE(std::equal(d.table().begin(), d.table().end(), g->table().begin()));
  }
}

TEST(DiffractedGroup, QuaternionOverItsCenter) {
  auto f = fibration_of("quaternion", {1});
  ASSERT_EQ(f.h_size(), 2u);
  ASSERT_EQ(f.t_size(), 4u);
  auto d = DiffractedGroup::build(f);
  EXPECT_EQ(d.order(), 8u);
  auto r = iso_check(f, d);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checks_run, 8u + 64u + 2u + 8u);
}

TEST(DiffractedGroup, JsonShape) {
  auto d = DiffractedGroup::build(fibration_of("cyclic:4", {2}));
  auto j = d.to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it)
    keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"order", "t_size", "h_size", "pairs", "table",
                                            "identity"}));
  EXPECT_EQ(j["pairs"].dump(), "[[0,0],[0,2],[1,0],[1,2]]");
  EXPECT_EQ(j["table"][2].dump(), "[2,3,1,0]");
}

TEST(Rewrite, AllProductsInS4OverA4) {
  auto g = share(builtin("symmetric", 4));
  std::vector<Element> gens{*g->find("(0 1 2)"), *g->find("(1 2 3)")};
  auto f = fibration_of(g, gens, TransversalStrategy::random(3));
  ASSERT_EQ(f.h_size(), 12u);
  std::size_t checked = 0;
  for (Element a = 0; a < 24; ++a)
    for (Element b = 0; b < 24; ++b) {
      auto tr = rewrite_product(f, a, b);
      ASSERT_TRUE(f.transversal().is_rep(tr.rep_part));
      ASSERT_TRUE(f.subgroup().contains(tr.fib_part));
      ASSERT_TRUE(f.subgroup().contains(tr.h_tail));
      ASSERT_EQ(g->mul(tr.t1, tr.h1), a);
      ASSERT_EQ(g->mul(tr.t2, tr.h2), b);
      ASSERT_EQ(g->mul(g->mul(tr.rep_part, tr.fib_part), tr.h_tail), g->mul(a, b));
      ASSERT_EQ(tr.result, g->mul(a, b));
      ++checked;
    }
  EXPECT_EQ(checked, 576u);
}

TEST(IsoCheck, CatchesEveryTableMutationInS3) {
  auto f = fibration_of("symmetric:3", {3});
  auto d = DiffractedGroup::build(f);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      Element wrong = static_cast<Element>((d.mul(a, b) + 1) % 6);
      auto r = iso_check(f, d.with_table_entry(a, b, wrong));
      ASSERT_TRUE(r.failed()) << a << "," << b;
      ASSERT_TRUE(r.counterexample.has_value());
    }
}

TEST(IsoCheck, SkipsNonTransversals) {
  auto g = share(builtin("symmetric", 3));
  auto d = DiffractedGroup::build(fibration_of(g, {1}));
  Fibration nt(choose(left_cosets(Subgroup::generate(g, std::vector<Element>{1})),
                      TransversalStrategy::explicit_list({1, 2, 4})));
  auto r = iso_check(nt, d);
  EXPECT_EQ(r.status, LawStatus::Skipped);
  EXPECT_EQ(r.skip_reason, "requires-transversal");
}
