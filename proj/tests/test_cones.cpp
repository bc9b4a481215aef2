#include <gtest/gtest.h>

#include <random>

#include "expect_error.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "posetkit/complement.hpp"
#include "posetkit/cones.hpp"

using namespace posetkit;

namespace {

struct Setup {
  Poset p;
  oracle::Order o;
};

Setup load(const std::string& name) {
  Setup s{fixtures::poset(name), {}};
  s.o = oracle::Order::of(s.p);
  return s;
}


}  // namespace

TEST(Cones, Fig4UpperOfAB) {
  auto p = fixtures::poset("fig4");
  EXPECT_EQ(p.label(upper(p, p.subset_named({"a", "b"}))), "{e,1}");
}

TEST(Cones, EmptySetConventions) {
  auto p = fixtures::poset("n5");
  EXPECT_EQ(upper(p, p.empty_set()), p.full_set());
  EXPECT_EQ(lower(p, p.empty_set()), p.full_set());
  EXPECT_TRUE(min_of(p, p.empty_set()).empty());
  EXPECT_TRUE(upclose(p, p.empty_set()).empty());
  EXPECT_EQ(upclose(p, p.full_set()), p.full_set());
  EXPECT_TRUE(set_le(p, p.empty_set(), p.singleton(0)));
  EXPECT_TRUE(le1(p, p.empty_set(), p.singleton(0)));
  EXPECT_TRUE(le2(p, p.singleton(0), p.empty_set()));
  EXPECT_EQ(sup_of(p, p.empty_set()), std::optional<Element>(p.index("0")));
}

TEST(Cones, Fig8Examples) {
  auto bp = fixtures::bounded("fig8");
  const Poset& p = bp;
  auto o = oracle::Order::of(p);
  EXPECT_EQ(p.label(min_of(p, upper(p, p.subset_named({"a", "b"})))), "{e,f}");
  EXPECT_FALSE(sup_of(p, p.subset_named({"a", "b"})).has_value());

  auto b_plus = plus(bp, p.index("b"));
  auto s = b_plus | p.subset_named({"c"});
  EXPECT_EQ(oracle::from_subset(upper(p, s)), o.upper(oracle::from_subset(s)));
  EXPECT_EQ(oracle::from_subset(lower(p, s)), o.lower(oracle::from_subset(s)));
}

TEST(Cones, N5UpcloseOfB) {
  auto p = fixtures::poset("n5");
  EXPECT_EQ(p.label(upclose(p, p.subset_named({"b"}))), "{b,1}");
}

TEST(Cones, ChainMinimumAndSingletonSup) {
  auto p = chain(5);
  EXPECT_EQ(min_of(p, p.full_set()), p.singleton(0));
  for (Element x = 0; x < p.size(); ++x) EXPECT_EQ(sup_of(p, p.singleton(x)), std::optional<Element>(x));
}

TEST(Cones, Fig7KPlusNotBelowFPlus) {
  auto bp = fixtures::bounded("fig7");
  auto kp = plus(bp, bp.index("k"));
  auto fp = plus(bp, bp.index("f"));
  EXPECT_FALSE(le1(bp, kp, fp));
  auto o = oracle::Order::of(bp);
  EXPECT_FALSE(o.le1(oracle::from_subset(kp), oracle::from_subset(fp)));
}

TEST(Cones, ForeignSubset) {
  auto p = chain(3);
  auto q = chain(3);
  EXPECT_POSET_ERROR(upper(p, q.full_set()), ErrorKind::ForeignSubset);
  EXPECT_POSET_ERROR(le1(p, p.full_set(), q.full_set()), ErrorKind::ForeignSubset);
  EXPECT_POSET_ERROR(sup_of(p, q.singleton(1)), ErrorKind::ForeignSubset);
}

class ConesOnFixture : public ::testing::TestWithParam<const char*> {};

TEST_P(ConesOnFixture, OperatorsMatchOracle) {
  auto [p, o] = load(GetParam());
  std::mt19937_64 rng(11);
  for (int i = 0; i < 150; ++i) {
    auto a = oracle::random_set(o.n, rng);
    auto b = oracle::random_set(o.n, rng);
    auto sa = oracle::to_subset(p, a);
    auto sb = oracle::to_subset(p, b);
    ASSERT_EQ(oracle::from_subset(upper(p, sa)), o.upper(a));
    ASSERT_EQ(oracle::from_subset(lower(p, sa)), o.lower(a));
    ASSERT_EQ(oracle::from_subset(min_of(p, sa)), o.min_of(a));
    ASSERT_EQ(oracle::from_subset(max_of(p, sa)), o.max_of(a));
    ASSERT_EQ(oracle::from_subset(upclose(p, sa)), o.upclose(a));
    ASSERT_EQ(oracle::from_subset(downclose(p, sa)), o.downclose(a));
    ASSERT_EQ(set_le(p, sa, sb), o.set_le(a, b));
    ASSERT_EQ(le1(p, sa, sb), o.le1(a, b));
    ASSERT_EQ(le2(p, sa, sb), o.le2(a, b));
    ASSERT_EQ(sqle(p, sa, sb), o.le1(a, b) && o.le2(a, b));
    ASSERT_EQ(sup_of(p, sa), o.sup(a));
    ASSERT_EQ(inf_of(p, sa), o.inf(a));
    ASSERT_EQ(least_of(p, sa), o.least(a));
    ASSERT_EQ(greatest_of(p, sa), o.greatest(a));
  }
}

TEST_P(ConesOnFixture, GaloisAndClosureLaws) {
  auto [p, o] = load(GetParam());
  std::mt19937_64 rng(23);
  for (int i = 0; i < 150; ++i) {
    auto a = oracle::random_set(o.n, rng);
    auto b = oracle::random_set(o.n, rng);
    auto sa = oracle::to_subset(p, a);
    auto sb = oracle::to_subset(p, b);

    ASSERT_EQ(sa.is_subset_of(lower(p, sb)), sb.is_subset_of(upper(p, sa)));
    ASSERT_EQ(lower(p, upper(p, lower(p, sa))), lower(p, sa));
    ASSERT_EQ(upper(p, lower(p, upper(p, sa))), upper(p, sa));

    for (auto close : {&upclose, &downclose}) {
      auto ca = close(p, sa);
      ASSERT_TRUE(sa.is_subset_of(ca));
      ASSERT_EQ(close(p, ca), ca);
      ASSERT_TRUE(close(p, sa & sb).is_subset_of(ca));
    }

    ASSERT_EQ(upper(p, sa), upper(p, max_of(p, sa)));
    ASSERT_EQ(lower(p, sa), lower(p, min_of(p, sa)));
    ASSERT_TRUE(le1(p, sa, max_of(p, sa)));
    ASSERT_TRUE(le2(p, min_of(p, sa), sa));

    // A <=1 B iff A ⊆ B↓ iff A↓ ⊆ B↓
    const bool l1 = le1(p, sa, sb);
    ASSERT_EQ(l1, sa.is_subset_of(downclose(p, sb)));
    ASSERT_EQ(l1, downclose(p, sa).is_subset_of(downclose(p, sb)));
  }
}

TEST_P(ConesOnFixture, MaxMinLemmaOnNestedSets) {
  auto [p, o] = load(GetParam());
  std::mt19937_64 rng(31);
  for (int i = 0; i < 150; ++i) {
    auto a = oracle::random_set(o.n, rng);
    auto b = oracle::unite(a, oracle::random_set(o.n, rng));
    ASSERT_TRUE(o.le1(o.max_of(a), o.max_of(b)));
    ASSERT_TRUE(o.le1(o.max_of(o.lower(b)), o.max_of(o.lower(a))));
    ASSERT_TRUE(o.le2(o.min_of(b), o.min_of(a)));
    ASSERT_TRUE(o.le2(o.min_of(o.upper(a)), o.min_of(o.upper(b))));

    auto sa = oracle::to_subset(p, a);
    auto sb = oracle::to_subset(p, b);
    ASSERT_TRUE(le1(p, max_of(p, sa), max_of(p, sb)));
    ASSERT_TRUE(le1(p, max_of(p, lower(p, sb)), max_of(p, lower(p, sa))));
    ASSERT_TRUE(le2(p, min_of(p, sb), min_of(p, sa)));
    ASSERT_TRUE(le2(p, min_of(p, upper(p, sa)), min_of(p, upper(p, sb))));
  }
}

INSTANTIATE_TEST_SUITE_P(Fixtures, ConesOnFixture, ::testing::ValuesIn(fixtures::all_bounded),
                         [](const auto& info) { return std::string(info.param); });
