#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <numeric>
#include <random>
#include <set>

#include "expect_error.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "posetkit/complement.hpp"
#include "posetkit/completion.hpp"

using namespace posetkit;
using nlohmann::json;

namespace {

json manifest() {
  std::ifstream in(fixtures::path("manifest.json"));
  return json::parse(in);
}

// Short names used by the lattice figures: "{b,c}" -> "bc", "{}" -> "empty".
std::string figure_name(const Poset& base, const Subset& s) {
  if (s.empty()) return "empty";
  if (s.size() == base.size()) return "";
  std::string out;
  for (auto e : s.elements()) out += base.name(e);
  return out;
}

}  // namespace

TEST(Complement, PerpExamples) {
  auto n5 = fixtures::bounded("n5");
  EXPECT_TRUE(perp(n5, n5.index("b"), n5.index("a")));
  EXPECT_TRUE(perp(n5, n5.bottom(), n5.top()));
  auto fig4 = fixtures::bounded("fig4");
  EXPECT_FALSE(perp(fig4, fig4.index("b"), fig4.index("e")));
}

TEST(Complement, BoundsComplementEachOther) {
  for (const char* name : fixtures::all_bounded) {
    auto bp = fixtures::bounded(name);
    EXPECT_EQ(plus(bp, bp.bottom()), bp.poset().singleton(bp.top())) << name;
    EXPECT_EQ(plus(bp, bp.top()), bp.poset().singleton(bp.bottom())) << name;
    EXPECT_EQ(plus_least(bp, bp.bottom()), std::optional<Element>(bp.top()));
    EXPECT_EQ(plus_greatest(bp, bp.bottom()), std::optional<Element>(bp.top()));
  }
}

TEST(Complement, ManifestComplementSets) {
  for (const auto& entry : manifest()["fixtures"]) {
    if (!entry.contains("plus")) continue;
    const std::string file = entry["file"];
    auto bp = as_bounded(load_poset(fixtures::path(file)));
    for (const auto& [elem, expected] : entry["plus"].items()) {
      std::vector<std::string> names = expected;
      auto want = bp.poset().subset_named(std::span<const std::string>(names));
      EXPECT_EQ(plus(bp, bp.index(elem)), want) << file << " " << elem << "+";
    }
  }
}

TEST(Complement, SetPlusExamples) {
  auto bp = fixtures::bounded("n5");
  const Poset& p = bp;
  EXPECT_EQ(p.label(plus(bp, p.subset_named({"a", "c"}))), "{b}");
  EXPECT_EQ(plus(bp, p.empty_set()), p.full_set());
  EXPECT_TRUE(plus(bp, p.full_set()).empty());
  EXPECT_EQ(p.label(bi_plus(bp, p.subset_named({"a"}))), "{a,c}");
  EXPECT_FALSE(is_closed(bp, p.subset_named({"a"})));
  EXPECT_TRUE(bi_plus(bp, p.empty_set()).empty());

  auto fig8 = fixtures::bounded("fig8");
  EXPECT_EQ(fig8.poset().label(plus(fig8, fig8.poset().subset_named({"a"}))), "{c,d,g,h}");
}

TEST(Complement, PlusExtrema) {
  auto n5 = fixtures::bounded("n5");
  EXPECT_EQ(plus_least(n5, n5.index("b")), std::optional<Element>(n5.index("a")));
  EXPECT_EQ(plus_greatest(n5, n5.index("b")), std::optional<Element>(n5.index("c")));

  auto fig1 = fixtures::bounded("fig1");
  for (Element x = 0; x < fig1.size(); ++x) {
    auto only = plus(fig1, x).elements();
    ASSERT_EQ(only.size(), 1u);
    EXPECT_EQ(plus_least(fig1, x), std::optional<Element>(only[0]));
    EXPECT_EQ(plus_greatest(fig1, x), std::optional<Element>(only[0]));
  }

  auto fig6 = fixtures::bounded("fig6");
  // b+ = {f,g,i,j}: no least element.
  EXPECT_FALSE(plus_least(fig6, fig6.index("b")).has_value());

  auto c3 = as_bounded(chain(3));
  EXPECT_POSET_ERROR(plus_least(c3, 1), ErrorKind::EmptyComplementSet);
  EXPECT_POSET_ERROR(plus_greatest(c3, 1), ErrorKind::EmptyComplementSet);
}

class ComplementOnFixture : public ::testing::TestWithParam<const char*> {};

TEST_P(ComplementOnFixture, PlusMatchesOracle) {
  auto bp = fixtures::bounded(GetParam());
  auto o = oracle::Order::of(bp);
  for (Element x = 0; x < bp.size(); ++x) {
    for (Element y = 0; y < bp.size(); ++y) ASSERT_EQ(perp(bp, x, y), o.perp(x, y));
    ASSERT_EQ(oracle::from_subset(plus(bp, x)), o.plus(o.single(x)));
  }
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto a = oracle::random_set(o.n, rng);
    ASSERT_EQ(oracle::from_subset(plus(bp, oracle::to_subset(bp, a))), o.plus(a));
  }
}

TEST_P(ComplementOnFixture, GaloisLemma) {
  auto bp = fixtures::bounded(GetParam());
  auto o = oracle::Order::of(bp);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    auto a = oracle::random_set(o.n, rng);
    auto b = oracle::random_set(o.n, rng);
    auto ab = oracle::unite(a, b);
    ASSERT_TRUE(oracle::subset_of(a, o.plus(o.plus(a))));
    ASSERT_TRUE(oracle::subset_of(o.plus(ab), o.plus(a)));
    ASSERT_EQ(o.plus(o.plus(o.plus(a))), o.plus(a));
    ASSERT_EQ(oracle::subset_of(a, o.plus(b)), oracle::subset_of(b, o.plus(a)));

    auto sa = oracle::to_subset(bp, a);
    ASSERT_EQ(plus(bp, bi_plus(bp, sa)), plus(bp, sa));
    ASSERT_TRUE(is_closed(bp, plus(bp, sa)));
  }
}

TEST_P(ComplementOnFixture, ClosedSetsAreExactlyThePlusImages) {
  auto bp = fixtures::bounded(GetParam());
  if (bp.size() > 14) {
    GTEST_SKIP() << "2^n subsets";
  }
  auto o = oracle::Order::of(bp);
  std::vector<oracle::Set> perp_row(o.n);
  for (std::size_t x = 0; x < o.n; ++x) perp_row[x] = o.plus(o.single(x));
  std::set<oracle::Set> images;
  for (std::uint64_t m = 0; m < (1ull << o.n); ++m) {
    oracle::Set img = o.full();
    for (std::size_t x = 0; x < o.n; ++x) {
      if ((m >> x) & 1u) img = oracle::intersect(img, perp_row[x]);
    }
    images.insert(img);
  }
  auto cl = closed_sets(bp);
  std::set<oracle::Set> got;
  for (const auto& s : cl.elements()) got.insert(oracle::from_subset(s));
  EXPECT_EQ(got, images);
  EXPECT_FALSE(cl.ortholattice_violation().has_value()) << *cl.ortholattice_violation();
}

TEST_P(ComplementOnFixture, ElementPlusFacts) {
  auto bp = fixtures::bounded(GetParam());
  for (Element a = 0; a < bp.size(); ++a) {
    auto ap = plus(bp, a);
    if (ap.empty()) continue;
    auto single = bp.poset().singleton(a);
    EXPECT_TRUE(single.is_subset_of(bi_plus(bp, single)));
    EXPECT_EQ(plus(bp, plus(bp, ap)), ap);
    EXPECT_TRUE(is_convex(bp, ap));
  }
}

INSTANTIATE_TEST_SUITE_P(Fixtures, ComplementOnFixture, ::testing::ValuesIn(fixtures::all_bounded),
                         [](const auto& info) { return std::string(info.param); });

TEST(ClLattice, N5IsFig3) {
  auto bp = fixtures::bounded("n5");
  auto cl = closed_sets(bp);
  ASSERT_EQ(cl.size(), 6u);
  std::vector<std::string> labels;
  for (const auto& s : cl.elements()) labels.push_back(bp.poset().label(s));
  std::sort(labels.begin(), labels.end());
  EXPECT_EQ(labels, (std::vector<std::string>{"{0,a,b,c,1}", "{0}", "{1}", "{a,c}", "{b}", "{}"}));

  // Ortholattice isomorphism: an order isomorphism onto the fig3 fixture that also
  // carries X -> X+ to the figure's complementation.
  auto fig3 = fixtures::poset("fig3");
  const std::map<std::string, std::string> fig3_ortho = {{"empty", "N5"}, {"N5", "empty"}, {"0", "1"},
                                                         {"1", "0"},       {"b", "ac"},      {"ac", "b"}};
  auto lat = cl.as_poset();
  std::vector<std::size_t> perm(6);
  std::iota(perm.begin(), perm.end(), 0);
  bool found = false;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < 6 && ok; ++i) {
      for (std::size_t j = 0; j < 6 && ok; ++j) ok = lat.leq(i, j) == fig3.leq(perm[i], perm[j]);
      ok = ok && fig3.name(perm[cl.ortho(i)]) == fig3_ortho.at(fig3.name(perm[i]));
    }
    found = found || ok;
  } while (!found && std::next_permutation(perm.begin(), perm.end()));
  EXPECT_TRUE(found);
}

TEST(ClLattice, Fig4MatchesFig5Labels) {
  auto bp = fixtures::bounded("fig4");
  auto cl = closed_sets(bp);
  ASSERT_EQ(cl.size(), 10u);
  auto fig5 = fixtures::poset("fig5");
  std::vector<std::size_t> to_fig(cl.size());
  for (std::size_t i = 0; i < cl.size(); ++i) {
    std::string name = figure_name(bp, cl.element(i));
    if (name.empty()) name = "P";
    auto idx = fig5.find(name);
    ASSERT_TRUE(idx.has_value()) << name;
    to_fig[i] = *idx;
  }
  for (std::size_t i = 0; i < cl.size(); ++i) {
    for (std::size_t j = 0; j < cl.size(); ++j) EXPECT_EQ(cl.leq(i, j), fig5.leq(to_fig[i], to_fig[j]));
  }
  EXPECT_TRUE(oracle::isomorphic(cl.as_poset(), fig5));
}

TEST(ClLattice, TwoChain) {
  auto bp = fixtures::bounded("twochain");
  auto cl = closed_sets(bp);
  EXPECT_EQ(cl.size(), 4u);
  EXPECT_TRUE(cl.element(cl.bottom()).empty());
  EXPECT_EQ(cl.element(cl.top()), bp.poset().full_set());
}

TEST(ClLattice, OperationsAgreeWithSetDefinitions) {
  for (const char* name : fixtures::all_bounded) {
    auto bp = fixtures::bounded(name);
    auto cl = closed_sets(bp);
    for (std::size_t i = 0; i < cl.size(); ++i) {
      EXPECT_EQ(cl.element(cl.ortho(i)), plus(bp, cl.element(i)));
      for (std::size_t j = 0; j < cl.size(); ++j) {
        EXPECT_EQ(cl.element(cl.meet(i, j)), cl.element(i) & cl.element(j));
        EXPECT_EQ(cl.element(cl.join(i, j)), bi_plus(bp, cl.element(i) | cl.element(j)));
        EXPECT_EQ(cl.leq(i, j), cl.element(i).is_subset_of(cl.element(j)));
      }
    }
    if (bp.size() == 2) continue;
    EXPECT_POSET_ERROR(cl.index_of(bp.poset().subset_named({bp.name(bp.bottom()), bp.name(bp.top())})),
                       ErrorKind::InvalidArgument);
  }
}
