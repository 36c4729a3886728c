#include <gtest/gtest.h>

#include <random>

#include "lscat/error.hpp"
#include "lscat/finspace.hpp"
#include "lscat/harness.hpp"
#include "support.hpp"

using namespace lscat;

namespace {

FinSpace circle4() { return *builtin_space("circle4"); }

}  // namespace

TEST(FinSpace, BuildClosesTransitively) {
  const FinSpace s = FinSpace::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  EXPECT_TRUE(s.leq(0, 2));
  EXPECT_TRUE(s.leq(1, 1));
  EXPECT_FALSE(s.leq(2, 0));
}

TEST(FinSpace, BuildRejectsBadInput) {
  EXPECT_THROW(FinSpace::build({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InputError);
  try {
    FinSpace::build({"a", "a"}, {});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.field(), "points[1]");
  }
  try {
    FinSpace::build({"a", "b"}, {{"a", "b"}, {"a", "zz"}});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.field(), "order[1][1]");
  }
  std::vector<std::string> many;
  for (int i = 0; i < 65; ++i) many.push_back("p" + std::to_string(i));
  EXPECT_THROW(FinSpace::build(many, {}), InputError);
}

TEST(FinSpace, Circle4OpenAndClosedSets) {
  const FinSpace s = circle4();
  // Up-sets of c,d < a,b: {}, a, b, ab, abc, abd, abcd.
  EXPECT_EQ(s.open_sets().size(), 7u);
  EXPECT_EQ(s.closed_sets().size(), 7u);
  EXPECT_EQ(s.open_sets(), oracle::brute_opens(s));
}

TEST(FinSpace, OpenSetsMatchBruteForce) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const FinSpace s = oracle::random_space(rng, 1 + trial % 8);
    SCOPED_TRACE(s.format(s.all()));
    EXPECT_EQ(s.open_sets(), oracle::brute_opens(s));
    EXPECT_EQ(s.closed_sets(), oracle::brute_closeds(s));
  }
}

TEST(FinSpace, HullAndClosureAreSmallest) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const FinSpace s = oracle::random_space(rng, 2 + trial % 6);
    const auto opens = oracle::brute_opens(s);
    const auto closeds = oracle::brute_closeds(s);
    for_each_subset(s.all(), [&](PointSet a) {
      PointSet hull = s.all(), closure = s.all();
      for (PointSet u : opens)
        if (a.subset_of(u) && u.size() < hull.size()) hull = u;
      for (PointSet c : closeds)
        if (a.subset_of(c) && c.size() < closure.size()) closure = c;
      EXPECT_EQ(s.open_hull(a), hull);
      EXPECT_EQ(s.closure(a), closure);
      EXPECT_EQ(s.is_open(a), oracle::brute_is_open(s, a));
      EXPECT_EQ(s.is_closed(a), oracle::brute_is_closed(s, a));
    });
  }
}

TEST(FinSpace, CoversAndExtremes) {
  const FinSpace s = circle4();
  const int a = *s.index_of("a"), c = *s.index_of("c");
  EXPECT_EQ(s.upper_covers(c).size(), 2);
  EXPECT_EQ(s.lower_covers(a).size(), 2);
  EXPECT_EQ(s.minimal_points(s.all()), s.parse_subset("c,d"));
  EXPECT_EQ(s.maximal_points(s.all()), s.parse_subset("a,b"));
  EXPECT_EQ(s.components().size(), 1u);
  EXPECT_EQ(builtin_space("antichain(4)")->components().size(), 4u);
}

TEST(FinSpace, ParseSubset) {
  const FinSpace s = circle4();
  EXPECT_EQ(s.parse_subset("full"), s.all());
  EXPECT_EQ(s.parse_subset(""), PointSet{});
  EXPECT_EQ(s.parse_subset(" a , c "), PointSet::single(*s.index_of("a")).with(*s.index_of("c")));
  EXPECT_THROW(s.parse_subset("a,q"), InputError);
  EXPECT_THROW(s.parse_subset("a,,b"), InputError);
}

TEST(FinSpace, Builtins) {
  EXPECT_EQ(builtin_space("chain(4)")->size(), 4);
  EXPECT_EQ(builtin_space("sphere(2)")->size(), 6);
  EXPECT_EQ(builtin_space("torus16")->size(), 16);
  EXPECT_EQ(builtin_space("wedge2circles")->size(), 5);
  EXPECT_FALSE(builtin_space("nothing").has_value());
  EXPECT_THROW(builtin_space("chain(0)"), InputError);
  EXPECT_TRUE(isomorphic(*builtin_space("sphere(1)"), circle4()));
  EXPECT_TRUE(isomorphic(*builtin_space("torus16"), product(circle4(), circle4())));
}

TEST(FinSpace, ProductOrder) {
  const FinSpace p = product(circle4(), *builtin_space("chain(2)"));
  ASSERT_EQ(p.size(), 8);
  const FinSpace& x = circle4();
  const FinSpace y = *builtin_space("chain(2)");
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const bool expected = x.leq(i / 2, j / 2) && y.leq(i % 2, j % 2);
      const bool expected_alt = x.leq(i % 4, j % 4) && y.leq(i / 4, j / 4);
      EXPECT_TRUE(p.leq(i, j) == expected || p.leq(i, j) == expected_alt);
    }
  EXPECT_EQ(p.open_sets(), oracle::brute_opens(p));
}

TEST(FinSpace, OppositeSwapsOpenAndClosed) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const FinSpace s = oracle::random_space(rng, 5);
    EXPECT_EQ(s.opposite().open_sets(), s.closed_sets());
  }
}

TEST(ContMap, ContinuityIsChecked) {
  const SpacePtr c = share(*builtin_space("chain(2)"));
  EXPECT_NO_THROW(ContMap(c, c, {0, 1}));
  EXPECT_NO_THROW(ContMap(c, c, {1, 1}));
  EXPECT_THROW(ContMap(c, c, {1, 0}), InputError);
  EXPECT_THROW(ContMap(c, c, {0, 2}), InputError);
  EXPECT_THROW(ContMap(c, c, {0}), InputError);
}

TEST(ContMap, ContinuityEqualsOrderPreservation) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const SpacePtr a = share(oracle::random_space(rng, 4));
    const SpacePtr b = share(oracle::random_space(rng, 3));
    for (const auto& img : oracle::brute_maps(*a, *b)) {
      const ContMap f(a, b, img);
      // Preimages of open sets are open.
      for (PointSet u : b->open_sets()) EXPECT_TRUE(a->is_open(f.preimage(u)));
    }
  }
}

TEST(ContMap, CompositionAndSubspace) {
  const SpacePtr s = share(circle4());
  const Subspace sub = subspace(s, s->parse_subset("a,b,c"));
  EXPECT_EQ(sub.space->size(), 3);
  EXPECT_EQ(sub.embedding.image_of(sub.space->all()), s->parse_subset("a,b,c"));
  const ContMap k = ContMap::constant(s, s, 0);
  EXPECT_TRUE(k.after(sub.embedding).is_constant());
  EXPECT_THROW(subspace(s, PointSet{}), EmptySubsetError);
}
