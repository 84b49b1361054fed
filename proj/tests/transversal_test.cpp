#include <cstdint>
#include <vector>

#include "gtest/gtest.h"

#include "corpus.hpp"
#include "diffract/lcg.hpp"
#include "diffract/transversal.hpp"

using namespace diffract;
using diffract::testing::corpus_groups;
using diffract::testing::corpus_strategies;
using diffract::testing::corpus_subgroups;
using diffract::testing::share;

namespace {

CosetDecomposition s3_over(std::vector<Element> gens) {
  auto g = share(builtin("symmetric", 3));
  return left_cosets(Subgroup::generate(g, gens));
}

std::vector<Element> reps_of(const Transversal &t) {
  return {t.reps().begin(), t.reps().end()};
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

TEST(Lcg, MatchesTheDocumentedRecurrence) {
  std::uint64_t state = 42;
  Lcg rng(42);
  for (int i = 0; i < 16; ++i) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    ASSERT_EQ(rng.next(), static_cast<std::uint32_t>(state >> 32));
  }
}

TEST(Strategy, ParseAndDescribe) {
  EXPECT_EQ(TransversalStrategy::parse("min").describe(), "min");
  EXPECT_EQ(TransversalStrategy::parse("random:7").describe(), "random:7");
  EXPECT_EQ(TransversalStrategy::parse("list:0,3,5").describe(), "list:0,3,5");
  for (const char *bad : {"", "max", "random:", "random:x", "list:", "list:1,,2"})
    EXPECT_EQ(code_of([&] { TransversalStrategy::parse(bad); }), Errc::ParseError) << bad;
}

TEST(Choose, MinIndexExamples) {
  auto d = s3_over({1});
  auto t = choose(d, TransversalStrategy::min_index());
  EXPECT_EQ(reps_of(t), (std::vector<Element>{0, 2, 4}));
  EXPECT_TRUE(t.is_transversal());

  auto all = s3_over({1, 2});
  EXPECT_EQ(reps_of(choose(all, TransversalStrategy::min_index())), std::vector<Element>{0});
  auto trivial = s3_over({});
  EXPECT_EQ(reps_of(choose(trivial, TransversalStrategy::min_index())),
            (std::vector<Element>{0, 1, 2, 3, 4, 5}));
}

TEST(Choose, ExplicitLists) {
  auto d = s3_over({1});
  auto t = choose(d, TransversalStrategy::explicit_list({5, 0, 3}));
  EXPECT_EQ(reps_of(t), (std::vector<Element>{0, 3, 5}));
  EXPECT_TRUE(t.is_transversal());

  auto nt = choose(d, TransversalStrategy::explicit_list({1, 2, 4}));
  EXPECT_FALSE(nt.is_transversal());

  auto bad = [&](std::vector<Element> xs) {
    return code_of([&] { choose(d, TransversalStrategy::explicit_list(xs)); });
  };
  EXPECT_EQ(bad({0, 1, 2}), Errc::NotARepresentativeSystem);
  EXPECT_EQ(bad({0, 2}), Errc::NotARepresentativeSystem);
  EXPECT_EQ(bad({0, 2, 4, 5}), Errc::NotARepresentativeSystem);
  EXPECT_EQ(bad({0, 2, 6}), Errc::NotARepresentativeSystem);
}

// Oracle: the same recurrence evaluated by hand, one draw per coset in
// coset-id order, index into the ascending member list.
TEST(Choose, RandomDrawsFollowTheLcg) {
  for (const auto &[name, g] : corpus_groups()) {
    for (const auto &sc : corpus_subgroups(g)) {
      auto d = left_cosets(Subgroup::generate(g, sc.gens));
      for (std::uint64_t seed : {1ULL, 7ULL, 123456789ULL}) {
        std::uint64_t state = seed;
        std::vector<Element> expect;
        for (std::size_t c = 0; c < d.count(); ++c) {
          state = state * 6364136223846793005ULL + 1442695040888963407ULL;
          auto members = d.coset(c);
          expect.push_back(members[static_cast<std::uint32_t>(state >> 32) % members.size()]);
        }
        auto raw = choose(d, TransversalStrategy::random(seed), true);
        ASSERT_EQ(reps_of(raw), expect) << name;
        expect[0] = 0;
        auto forced = choose(d, TransversalStrategy::random(seed));
        ASSERT_EQ(reps_of(forced), expect) << name;
        ASSERT_TRUE(forced.is_transversal());
      }
    }
  }
}

TEST(Choose, RandomIsDeterministic) {
  auto d = s3_over({1});
  auto a = choose(d, TransversalStrategy::random(7));
  auto b = choose(d, TransversalStrategy::random(7));
  EXPECT_EQ(reps_of(a), reps_of(b));
}

TEST(Bar, Examples) {
  auto d = s3_over({1});
  auto t = choose(d, TransversalStrategy::min_index());
  EXPECT_EQ(t.bar(0), 0u);
  EXPECT_EQ(t.bar(1), 0u);
  EXPECT_EQ(t.bar(3), 2u);
  EXPECT_EQ(t.bar(5), 4u);
  EXPECT_EQ(code_of([&] { t.bar(6); }), Errc::IndexOutOfRange);
  EXPECT_TRUE(t.is_rep(2));
  EXPECT_FALSE(t.is_rep(3));
  EXPECT_EQ(t.rep_position(4), 2u);
}

TEST(Bar, IsIdempotentAndConstantOnCosets) {
  for (const auto &[name, g] : corpus_groups()) {
    const auto n = static_cast<Element>(g->order());
    for (const auto &sc : corpus_subgroups(g))
      for (const auto &strategy : corpus_strategies()) {
        auto d = left_cosets(Subgroup::generate(g, sc.gens));
        auto t = choose(d, strategy);
        for (Element x = 0; x < n; ++x) {
          ASSERT_EQ(t.bar(t.bar(x)), t.bar(x)) << name;
          ASSERT_TRUE(t.is_rep(t.bar(x)));
          for (Element h : sc.members)
            ASSERT_EQ(t.bar(g->mul(x, h)), t.bar(x)) << name;
        }
      }
  }
}

TEST(RepresentativeCalculus, HoldsOnCorpusIncludingNonTransversals) {
  for (const auto &[name, g] : corpus_groups()) {
    const std::size_t n = g->order();
    for (const auto &sc : corpus_subgroups(g))
      for (const auto &strategy : corpus_strategies()) {
        auto d = left_cosets(Subgroup::generate(g, sc.gens));
        auto r = check_representative_calculus(choose(d, strategy, true));
        ASSERT_TRUE(r.passed()) << name << " " << strategy.describe();
        ASSERT_EQ(r.checks_run, n + n * n);
      }
  }
}

TEST(RepresentativeCalculus, MutatedBarIsCaught) {
  auto d = s3_over({1});
  auto t = choose(d, TransversalStrategy::min_index());
  for (Element x = 0; x < 6; ++x)
    for (Element wrong : {0u, 2u, 4u}) {
      if (wrong == t.bar(x))
        continue;
      auto r = check_representative_calculus(t.with_bar_entry(x, wrong));
      ASSERT_TRUE(r.failed()) << x << " -> " << wrong;
      ASSERT_TRUE(r.counterexample.has_value());
    }
}
