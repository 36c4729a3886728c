#include <gtest/gtest.h>

#include <random>
#include <set>

#include "lscat/error.hpp"
#include "lscat/homotopy.hpp"
#include "support.hpp"

using namespace lscat;

TEST(Homotopy, BfsAgreesWithBruteForce) {
  std::mt19937_64 rng(21);
  int positives = 0, negatives = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const SpacePtr dom = share(oracle::random_space(rng, 2 + trial % 3));
    const SpacePtr cod = share(oracle::random_space(rng, 2 + (trial / 3) % 3, 0.5));
    const auto maps = oracle::brute_maps(*dom, *cod);
    std::uniform_int_distribution<std::size_t> pick(0, maps.size() - 1);
    const auto& f = maps[pick(rng)];
    const auto& g = maps[pick(rng)];
    const bool truth = oracle::brute_homotopic(*dom, *cod, f, g);
    (truth ? positives : negatives)++;
    const ContMap cf(dom, cod, f), cg(dom, cod, g);
    EXPECT_EQ(are_homotopic(cf, cg), truth ? Verdict::yes : Verdict::no);
    EXPECT_EQ(homotopy_oracle(cf, cg), truth);
  }
  EXPECT_GT(positives, 10);
  EXPECT_GT(negatives, 10);
}

TEST(Homotopy, AllContinuousMapsMatchesBruteForce) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const SpacePtr a = share(oracle::random_space(rng, 4));
    const SpacePtr b = share(oracle::random_space(rng, 4));
    std::set<std::vector<std::uint8_t>> lib, brute;
    for (const auto& f : all_continuous_maps(a, b)) lib.insert(f.image());
    for (const auto& img : oracle::brute_maps(*a, *b)) brute.insert(img);
    EXPECT_EQ(lib, brute);
  }
  const SpacePtr big = share(*builtin_space("chain(8)"));
  EXPECT_THROW(all_continuous_maps(big, big, 1000), SizeCapError);
}

TEST(Homotopy, Circle4IdentityIsNotConstant) {
  const SpacePtr s = share(*builtin_space("circle4"));
  EXPECT_EQ(are_homotopic(ContMap::identity(s), ContMap::constant(s, s, 0)), Verdict::no);
  EXPECT_EQ(is_contractible_in(s, s->all()), Verdict::no);
  EXPECT_EQ(is_contractible_in(s, s->parse_subset("a,b,c")), Verdict::yes);
  EXPECT_EQ(is_contractible_in(s, s->parse_subset("a,b")), Verdict::yes);
  EXPECT_EQ(is_contractible_in(s, s->parse_subset("c,d")), Verdict::yes);
  EXPECT_THROW(is_contractible_in(s, PointSet{}), EmptySubsetError);
}

TEST(Homotopy, ContractibilityMatchesBruteForce) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 25; ++trial) {
    const SpacePtr s = share(oracle::random_space(rng, 3 + trial % 3));
    for_each_subset(s->all(), [&](PointSet a) {
      if (a.empty()) return;
      EXPECT_EQ(is_contractible_in(s, a) == Verdict::yes, oracle::brute_contractible(s, a))
          << s->format(a);
    });
  }
}

TEST(Homotopy, SubsetOfSphereIsContractibleButSphereIsNot) {
  const SpacePtr s = share(*builtin_space("sphere(2)"));
  EXPECT_EQ(is_contractible_in(s, s->all()), Verdict::no);
  // The equator is a circle, yet it bounds a hemisphere: contractible in S².
  EXPECT_EQ(is_contractible_in(s, s->parse_subset("a0,b0,a1,b1")), Verdict::yes);
}

TEST(Homotopy, EnumerationOfChain2) {
  const SpacePtr c = share(*builtin_space("chain(2)"));
  const auto e = enumerate_self_maps_homotopic_to_id(c, 100);
  EXPECT_FALSE(e.truncated);
  EXPECT_EQ(e.maps.size(), 3u);
  EXPECT_TRUE(enumerate_self_maps_homotopic_to_id(c, 2).truncated);
}

TEST(Homotopy, EnumerationMatchesOracleClass) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 25; ++trial) {
    const SpacePtr s = share(oracle::random_space(rng, 2 + trial % 4));
    const auto e = enumerate_self_maps_homotopic_to_id(s, 100000);
    ASSERT_FALSE(e.truncated);
    std::set<std::vector<std::uint8_t>> bfs, cls;
    for (const auto& f : e.maps) bfs.insert(f.image());
    for (const auto& f : oracle_homotopy_class(ContMap::identity(s))) cls.insert(f.image());
    EXPECT_EQ(bfs, cls);
    EXPECT_EQ(e.maps.front(), ContMap::identity(s));
  }
}

TEST(Homotopy, EnumerationIsReproducible) {
  const SpacePtr s = share(*builtin_space("torus16"));
  const auto a = enumerate_self_maps_homotopic_to_id(s, 300);
  const auto b = enumerate_self_maps_homotopic_to_id(s, 300);
  ASSERT_EQ(a.maps.size(), b.maps.size());
  for (std::size_t i = 0; i < a.maps.size(); ++i) EXPECT_EQ(a.maps[i].image(), b.maps[i].image());
}

TEST(BeatPoints, Circle4HasNone) {
  EXPECT_TRUE(find_beat_points(share(*builtin_space("circle4"))).empty());
  EXPECT_TRUE(find_beat_points(share(*builtin_space("torus16"))).empty());
}

TEST(BeatPoints, ChainCollapsesToAPoint) {
  const SpacePtr c = share(*builtin_space("chain(4)"));
  EXPECT_FALSE(find_beat_points(c).empty());
  const CoreReduction red = core_of(c);
  EXPECT_EQ(red.core->size(), 1);
}

TEST(BeatPoints, RetractionsAreHomotopyEquivalences) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const SpacePtr s = share(oracle::random_space(rng, 3 + trial % 4));
    for (const BeatPoint& b : find_beat_points(s)) {
      EXPECT_EQ(b.retraction.after(b.inclusion), ContMap::identity(b.reduced));
      EXPECT_TRUE(oracle::brute_homotopic(*s, *s, b.inclusion.after(b.retraction).image(),
                                          ContMap::identity(s).image()));
      // Only one point has its image changed, to a comparable point.
      EXPECT_TRUE(s->comparable(b.point, b.target));
    }
    const CoreReduction red = core_of(s);
    EXPECT_EQ(red.retraction.after(red.inclusion), ContMap::identity(red.core));
    EXPECT_TRUE(find_beat_points(red.core).empty() || red.core->size() == 1);
  }
}

TEST(Homotopy, CapYieldsUndecided) {
  // Constant maps at incomparable points need a fence of two moves.
  const SpacePtr dom = share(*builtin_space("chain(2)"));
  const SpacePtr cod = share(*builtin_space("torus16"));
  int far = 0;
  while (cod->comparable(0, far)) ++far;
  const ContMap f = ContMap::constant(dom, cod, 0);
  const ContMap g = ContMap::constant(dom, cod, far);
  EXPECT_EQ(are_homotopic(f, g), Verdict::yes);
  EXPECT_EQ(are_homotopic(f, g, SearchLimits{1}), Verdict::undecided);
}

TEST(Homotopy, DifferentEndsRejected) {
  const SpacePtr a = share(*builtin_space("chain(2)"));
  const SpacePtr b = share(*builtin_space("chain(3)"));
  EXPECT_THROW(are_homotopic(ContMap::identity(a), ContMap::constant(a, b, 0)), InputError);
}
