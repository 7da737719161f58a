#include <gtest/gtest.h>

#include <set>

#include "latrb/lattice.hpp"
#include "latrb/lattice_spec.hpp"
#include "oracles.hpp"

using namespace latrb;

namespace {

constexpr Element A = 1, B = 2, C = 3, U = 4, V = 5, W = 6;

FiniteLattice n8_from_covers() {
  const std::vector<Cover> covers{{0, A}, {0, B}, {0, C}, {A, U}, {B, V},
                                  {C, W}, {V, U}, {V, W}, {U, 7}, {W, 7}};
  return FiniteLattice::from_covers(8, covers);
}

void expect_matches_oracle(const FiniteLattice& l, const oracle::Poset& p) {
  ASSERT_EQ(l.size(), p.n);
  for (Element x = 0; x < p.n; ++x)
    for (Element y = 0; y < p.n; ++y) {
      EXPECT_EQ(l.leq(x, y), p.le[x][y]) << x << " " << y;
      EXPECT_EQ(l.meet(x, y), p.meet(x, y)) << x << " " << y;
      EXPECT_EQ(l.join(x, y), p.join(x, y)) << x << " " << y;
    }
}

}  // namespace

TEST(FromCovers, TwoChain) {
  const std::vector<Cover> covers{{0, 1}};
  const auto l = FiniteLattice::from_covers(2, covers);
  EXPECT_EQ(l.meet(0, 1), 0u);
  EXPECT_EQ(l.join(0, 1), 1u);
  EXPECT_EQ(l.bottom(), 0u);
  EXPECT_EQ(l.top(), 1u);
}

TEST(FromCovers, N8Example) {
  const auto l = n8_from_covers();
  EXPECT_EQ(l.meet(l.join(A, B), l.join(C, B)), V);
  EXPECT_EQ(l.join(A, B), U);
  expect_matches_oracle(l, oracle::n8());
}

TEST(FromCovers, TwoMaximalElementsIsNotALattice) {
  const std::vector<Cover> covers{{0, 1}, {0, 2}};
  try {
    FiniteLattice::from_covers(3, covers);
    FAIL() << "expected NotALattice";
  } catch (const NotALattice& e) {
    EXPECT_EQ(std::set<Element>({e.x, e.y}), std::set<Element>({1, 2}));
  }
}

TEST(FromCovers, NonUniqueJoin) {
  // 0 < a, b < c, d < 1: a and b have two minimal upper bounds.
  const std::vector<Cover> covers{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};
  EXPECT_THROW(FiniteLattice::from_covers(6, covers), NotALattice);
}

TEST(FromCovers, Errors) {
  const std::vector<Cover> cyclic{{0, 1}, {1, 2}, {2, 0}};
  EXPECT_THROW(FiniteLattice::from_covers(3, cyclic), CyclicCovers);
  const std::vector<Cover> loop{{0, 0}};
  EXPECT_THROW(FiniteLattice::from_covers(1, loop), CyclicCovers);
  const std::vector<Cover> out_of_range{{0, 5}};
  EXPECT_THROW(FiniteLattice::from_covers(2, out_of_range), IndexOutOfRange);
  const std::vector<Cover> duplicate{{0, 1}, {0, 1}};
  EXPECT_THROW(FiniteLattice::from_covers(2, duplicate), DuplicateCover);
  EXPECT_THROW(FiniteLattice::from_covers(0, {}), BadSpec);
  EXPECT_THROW(FiniteLattice::from_covers(2, std::vector<Cover>{{0, 1}}, {"x"}), BadSpec);
}

TEST(FromCovers, StoresTransitiveReduction) {
  const std::vector<Cover> covers{{0, 2}, {0, 1}, {1, 2}};
  const auto l = FiniteLattice::from_covers(3, covers);
  const std::vector<Cover> reduced{{0, 1}, {1, 2}};
  EXPECT_TRUE(std::ranges::equal(l.covers(), reduced));
}

TEST(FromCovers, SingleElement) {
  const auto l = FiniteLattice::from_covers(1, {});
  EXPECT_EQ(l.bottom(), 0u);
  EXPECT_EQ(l.top(), 0u);
  EXPECT_TRUE(is_chain(l));
}

TEST(Builtin, MatchesOracles) {
  for (unsigned n = 1; n <= 7; ++n) expect_matches_oracle(builtin(LatticeSpec::chain(n)), oracle::chain(n));
  for (unsigned n = 3; n <= 7; ++n) expect_matches_oracle(builtin(LatticeSpec::diamond(n)), oracle::diamond(n));
  for (unsigned k = 1; k <= 3; ++k) expect_matches_oracle(builtin(LatticeSpec::boolean(k)), oracle::boolean(k));
  expect_matches_oracle(builtin("n5"), oracle::n5());
  expect_matches_oracle(builtin("n8"), oracle::n8());
  expect_matches_oracle(builtin("prod(chain:2,chain:3)"),
                        oracle::product(oracle::chain(2), oracle::chain(3)));
  EXPECT_EQ(builtin("n8"), n8_from_covers());
}

TEST(Builtin, DiamondFive) {
  const auto l = builtin("m:5");
  EXPECT_EQ(l.size(), 5u);
  for (Element i = 1; i <= 3; ++i)
    for (Element j = 1; j <= 3; ++j)
      if (i != j) {
        EXPECT_FALSE(l.comparable(i, j));
        EXPECT_EQ(l.meet(i, j), 0u);
        EXPECT_EQ(l.join(i, j), 4u);
      }
  EXPECT_EQ(l.atoms(), (std::vector<Element>{1, 2, 3}));
  EXPECT_EQ(l.label(1), "b1");
}

TEST(Builtin, ChainOneIsBothBottomAndTop) {
  const auto l = builtin("chain:1");
  EXPECT_EQ(l.bottom(), l.top());
}

TEST(Builtin, BoolTwoIsIsomorphicToM4) {
  // Brute-force isomorphism search between the two constructions.
  const auto b2 = builtin("bool:2");
  const auto m4 = builtin("m:4");
  std::vector<Element> perm{0, 1, 2, 3};
  bool found = false;
  do {
    bool ok = true;
    for (Element x = 0; x < 4 && ok; ++x)
      for (Element y = 0; y < 4 && ok; ++y) ok = b2.leq(x, y) == m4.leq(perm[x], perm[y]);
    found = found || ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_TRUE(found);
}

TEST(MeetJoin, Examples) {
  EXPECT_EQ(meet(builtin("m:5"), 1, 2), 0u);
  const auto c4 = builtin("chain:4");
  EXPECT_EQ(meet(c4, 1, 3), 1u);
  EXPECT_EQ(join(c4, 1, 3), 3u);
  EXPECT_THROW(meet(c4, 0, 4), IndexOutOfRange);
  EXPECT_THROW(join(c4, 9, 0), IndexOutOfRange);
  EXPECT_THROW(c4.leq(4, 0), IndexOutOfRange);
}

TEST(MeetJoin, LatticeAxiomsOnCatalog) {
  for (const char* spec : {"chain:5", "m:6", "n5", "n8", "bool:3", "prod(chain:2,chain:3)"}) {
    const auto l = builtin(spec);
    const auto n = static_cast<Element>(l.size());
    for (Element x = 0; x < n; ++x) {
      EXPECT_EQ(l.meet(x, x), x);
      EXPECT_EQ(l.join(x, x), x);
      for (Element y = 0; y < n; ++y) {
        EXPECT_EQ(l.meet(x, y), l.meet(y, x));
        EXPECT_EQ(l.join(x, y), l.join(y, x));
        EXPECT_EQ(l.meet(x, l.join(x, y)), x);
        EXPECT_EQ(l.join(x, l.meet(x, y)), x);
        for (Element z = 0; z < n; ++z) {
          EXPECT_EQ(l.meet(l.meet(x, y), z), l.meet(x, l.meet(y, z)));
          EXPECT_EQ(l.join(l.join(x, y), z), l.join(x, l.join(y, z)));
        }
      }
    }
  }
}

TEST(Properties, StructureFlags) {
  for (unsigned n = 1; n <= 7; ++n) {
    const auto l = builtin(LatticeSpec::chain(n));
    EXPECT_TRUE(is_distributive(l));
    EXPECT_TRUE(is_modular(l));
    EXPECT_TRUE(is_chain(l));
  }
  const auto m5 = builtin("m:5");
  EXPECT_TRUE(is_modular(m5));
  EXPECT_FALSE(is_distributive(m5));
  EXPECT_EQ(m5.meet(m5.join(1, 2), 3), 3u);
  EXPECT_FALSE(is_modular(builtin("n8")));
  EXPECT_FALSE(is_modular(builtin("n5")));
  EXPECT_TRUE(is_distributive(builtin("bool:3")));
  EXPECT_TRUE(is_chain(builtin("bool:1")));
}

TEST(WeakModular, Examples) {
  EXPECT_TRUE(weak_modular_identity(builtin("m:5")));
  EXPECT_TRUE(weak_modular_identity(builtin("chain:4")));
  const auto v = weak_modular_identity(builtin("n8"));
  ASSERT_FALSE(v);
  EXPECT_EQ(v.witness->args, (std::array<Element, 3>{A, C, B}));
  EXPECT_EQ(v.witness->law, "weak-modular");
}

TEST(BelowComparable, Examples) {
  EXPECT_TRUE(below_comparable(builtin("chain:5"), 3, 1));
  EXPECT_FALSE(below_comparable(builtin("m:5"), 4, 1));
  EXPECT_TRUE(below_comparable(builtin("m:5"), 1, 0));
  EXPECT_THROW(below_comparable(builtin("m:5"), 1, 2), BadParams);
  EXPECT_THROW(below_comparable(builtin("m:5"), 1, 1), BadParams);
}

TEST(Embedding, Examples) {
  const auto n8 = builtin("n8");
  const auto self = sublattice_embeds(n8, n8);
  ASSERT_TRUE(self);
  EXPECT_EQ(*self, (std::vector<Element>{0, 1, 2, 3, 4, 5, 6, 7}));
  EXPECT_FALSE(sublattice_embeds(n8, builtin("chain:8")));
  EXPECT_FALSE(sublattice_embeds(n8, builtin("m:6")));
}

TEST(Embedding, WitnessPreservesOperations) {
  const auto pattern = builtin("bool:2");
  const auto l = builtin("bool:3");
  const auto h = sublattice_embeds(pattern, l);
  ASSERT_TRUE(h);
  std::set<Element> distinct(h->begin(), h->end());
  EXPECT_EQ(distinct.size(), pattern.size());
  for (Element x = 0; x < pattern.size(); ++x)
    for (Element y = 0; y < pattern.size(); ++y) {
      EXPECT_EQ((*h)[pattern.meet(x, y)], l.meet((*h)[x], (*h)[y]));
      EXPECT_EQ((*h)[pattern.join(x, y)], l.join((*h)[x], (*h)[y]));
    }
  // N5 sits inside n8 (0 < a < u < 1 with c, w on the other side).
  EXPECT_TRUE(sublattice_embeds(builtin("n5"), builtin("n8")));
  EXPECT_FALSE(sublattice_embeds(builtin("n5"), builtin("m:7")));
  EXPECT_FALSE(sublattice_embeds(builtin("m:5"), builtin("bool:3")));
}

TEST(Automorphisms, Examples) {
  for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(automorphisms(builtin(LatticeSpec::chain(n))).size(), 1u);
  EXPECT_EQ(automorphisms(builtin("m:5")).size(), 6u);
  EXPECT_EQ(automorphisms(builtin("bool:2")).size(), 2u);
  EXPECT_EQ(automorphisms(builtin("bool:3")).size(), 6u);
}

TEST(Automorphisms, MatchOracleAndFormAGroup) {
  const std::vector<std::pair<std::string, oracle::Poset>> cases{
      {"m:6", oracle::diamond(6)},
      {"n5", oracle::n5()},
      {"n8", oracle::n8()},
      {"bool:3", oracle::boolean(3)},
      {"prod(chain:2,chain:3)", oracle::product(oracle::chain(2), oracle::chain(3))},
      {"prod(chain:2,chain:2)", oracle::product(oracle::chain(2), oracle::chain(2))},
  };
  for (const auto& [spec, poset] : cases) {
    const auto group = automorphisms(builtin(spec));
    std::vector<oracle::Map> got;
    for (const auto& g : group) got.push_back(testing_support::to_map(g));
    EXPECT_EQ(got, oracle::automorphisms(poset)) << spec;
    const std::set<std::vector<Element>> members(group.begin(), group.end());
    for (const auto& f : group) {
      std::vector<Element> inv(f.size());
      for (Element x = 0; x < f.size(); ++x) inv[f[x]] = x;
      EXPECT_TRUE(members.count(inv)) << spec;
      for (const auto& g : group) {
        std::vector<Element> fg(f.size());
        for (Element x = 0; x < f.size(); ++x) fg[x] = f[g[x]];
        EXPECT_TRUE(members.count(fg)) << spec;
      }
    }
  }
}

TEST(LinearExtension, RespectsOrder) {
  for (const char* spec : {"n8", "bool:3", "m:5", "prod(chain:2,chain:3)"}) {
    const auto l = builtin(spec);
    const auto order = linear_extension(l);
    std::vector<std::size_t> pos(l.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    for (const auto& [lo, hi] : l.covers()) EXPECT_LT(pos[lo], pos[hi]) << spec;
  }
  EXPECT_EQ(heights(builtin("n8")), (std::vector<std::size_t>{0, 1, 1, 1, 3, 2, 3, 4}));
}
