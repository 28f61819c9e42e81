#include <algorithm>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "latpath/brute.h"
#include "latpath/construct.h"
#include "latpath/errors.h"
#include "latpath/rank_table.h"
#include "latpath/set_system.h"
#include "support/generators.h"

namespace latpath {
namespace {

using ::latpath::testing::M;
using ::latpath::testing::Rng;
using ::testing::ElementsAre;
using ::testing::IsEmpty;

ExprPtr P3() {
  return TruncateTo(Sum(Uniform(2, 3), Uniform(2, 3)), 3);
}

// (T_2(U(1,2)+U(1,2)) + U(1,1)) + y
ExprPtr D3() {
  return FreeExt(
      Sum(TruncateTo(Sum(Uniform(1, 2), Uniform(1, 2)), 2), Uniform(1, 1)));
}

ExprPtr Prism() {
  return DualOf(TruncateTo(
      Sum({Uniform(1, 2), Uniform(1, 2), Uniform(1, 2)}), 2));
}

std::vector<int> All(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::vector<int> Elements0(Mask m) { return MaskElements(m); }

// 1-based closed interval as 0-based members.
std::vector<int> Iv(int lo, int hi) {
  std::vector<int> out;
  for (int x = lo; x <= hi; ++x) out.push_back(x - 1);
  return out;
}

TEST(MatchingRankTest, TwoSets) {
  SetSystem s(4, {Iv(1, 3), Iv(2, 4)});
  EXPECT_EQ(MatchingRank(s, All(4)), 2);
}

TEST(MatchingRankTest, FourIntervalsOnEleven) {
  SetSystem s(11, {Iv(1, 4), Iv(2, 7), Iv(5, 10), Iv(6, 11)});
  EXPECT_EQ(MatchingRank(s, All(11)), 4);
}

TEST(MatchingRankTest, EmptySetHasRankZero) {
  SetSystem s(4, {Iv(1, 3), Iv(2, 4)});
  EXPECT_EQ(MatchingRank(s, std::vector<int>{}), 0);
}

TEST(MatchingRankTest, ElementOutsideGroundIsRejected) {
  SetSystem s(4, {Iv(1, 3)});
  EXPECT_THROW(MatchingRank(s, std::vector<int>{4}), DomainError);
}

TEST(SetSystemTest, RejectsRepeatedAndForeignMembers) {
  EXPECT_THROW(SetSystem(3, {{0, 0}}), DomainError);
  EXPECT_THROW(SetSystem(3, {{3}}), DomainError);
}

TEST(SpecialElementsTest, SingletonSetForcesIsthmus) {
  SetSystem s(3, {{0}, Iv(2, 3)});
  const SpecialElements e = FindSpecialElements(s);
  EXPECT_THAT(e.loops, IsEmpty());
  EXPECT_THAT(e.isthmuses, ElementsAre(0));
}

TEST(SpecialElementsTest, LoopAndIsthmusAgreeWithRankDrops) {
  SetSystem s(6, {Iv(2, 4), Iv(4, 5), Iv(6, 6)});
  const SpecialElements e = FindSpecialElements(s);
  EXPECT_THAT(e.loops, ElementsAre(0));
  EXPECT_THAT(e.isthmuses, ElementsAre(5));
  // Independent check on the rank table.
  const RankTable t = RankTableFromSystem(s);
  for (int x = 0; x < 6; ++x) {
    const bool loop = t.Rank(Bit(x)) == 0;
    const bool isthmus = t.Rank(t.ground() & ~Bit(x)) == t.rank() - 1;
    EXPECT_EQ(loop, x == 0);
    EXPECT_EQ(isthmus, x == 5);
  }
}

TEST(SpecialElementsTest, UniformHasNone) {
  const SpecialElements e =
      FindSpecialElements(SetSystem(4, {Iv(1, 3), Iv(2, 4)}));
  EXPECT_THAT(e.loops, IsEmpty());
  EXPECT_THAT(e.isthmuses, IsEmpty());
}

TEST(MaximalPresentationTest, UniformWidensToWholeSet) {
  const SetSystem m = MaximalPresentation(SetSystem(4, {Iv(1, 3), Iv(2, 4)}));
  EXPECT_EQ(m.set(0), Iv(1, 4));
  EXPECT_EQ(m.set(1), Iv(1, 4));
}

TEST(MaximalPresentationTest, P3MiddleSetAbsorbsBothEnds) {
  // Deleting [2,5] leaves 1 and 6 as isthmuses.
  const SetSystem s(6, {Iv(1, 3), Iv(2, 5), Iv(4, 6)});
  const SetSystem m = MaximalPresentation(s);
  EXPECT_EQ(m.set(0), Iv(1, 3));
  EXPECT_EQ(m.set(1), Iv(1, 6));
  EXPECT_EQ(m.set(2), Iv(4, 6));
  EXPECT_EQ(MaximalPresentation(m), m);
}

TEST(MaximalPresentationTest, TooManySetsIsMalformed) {
  const SetSystem s(2, {{0, 1}, {0, 1}, {0, 1}});
  EXPECT_THROW(MaximalPresentation(s), MalformedPresentationError);
  const SetSystem reduced = ReduceToBasisSets(s);
  EXPECT_EQ(reduced.num_sets(), 2);
  EXPECT_EQ(RankTableFromSystem(reduced), RankTableFromSystem(s));
}

TEST(ComponentsTest, Examples) {
  EXPECT_THAT(Components(SetSystem(4, {Iv(1, 2), Iv(3, 4)})),
              ElementsAre(ElementsAre(0, 1), ElementsAre(2, 3)));
  EXPECT_THAT(Components(SetSystem(4, {Iv(1, 3), Iv(2, 4)})),
              ElementsAre(ElementsAre(0, 1, 2, 3)));
  EXPECT_THAT(Components(SetSystem(1, {})), ElementsAre(ElementsAre(0)));
}

TEST(ConstructTest, Examples) {
  EXPECT_EQ(Construct(Uniform(2, 4)).Rank(M({1, 2, 3})), 2);
  const RankTable p3 = Construct(P3());
  EXPECT_EQ(p3.Rank(M({1, 2, 3})), 2);
  EXPECT_EQ(p3.Rank(M({1, 2, 4})), 3);
  const RankTable e3 = Construct(DualOf(D3()));
  EXPECT_EQ(e3.size(), 6);
  EXPECT_EQ(e3.rank(), 3);
}

TEST(ConstructTest, EveryConstructorYieldsAMatroid) {
  for (const ExprPtr& e :
       {Uniform(0, 3), Uniform(3, 5), P3(), D3(), DualOf(D3()), Prism(),
        ParallelExt(Uniform(2, 3), 0), FreeExt(Uniform(1, 2)),
        Relax(P3(), M({1, 2, 3})),
        Paving(3, 6, {M({1, 2, 4}), M({2, 3, 5}), M({1, 3, 6}),
                      M({4, 5, 6})})}) {
    EXPECT_TRUE(IsMatroid(Construct(e))) << Describe(*e);
  }
}

TEST(ConstructTest, InvalidRelaxationAndPaving) {
  EXPECT_THROW(Construct(Relax(P3(), M({1, 2, 4}))), InvalidRelaxationError);
  EXPECT_THROW(Construct(Paving(3, 5, {M({1, 2, 3}), M({1, 2, 4})})),
               InvalidPavingError);
  EXPECT_THROW(Construct(Uniform(3, 2)), DomainError);
}

TEST(ConstructTest, ParallelAndFreeExtensionRanks) {
  const RankTable par = Construct(ParallelExt(Uniform(2, 3), 0));
  EXPECT_EQ(par.Rank(M({1, 4})), 1);
  EXPECT_EQ(par.Rank(M({2, 4})), 2);
  const RankTable free = Construct(FreeExt(Sum(Uniform(1, 2), Uniform(1, 1))));
  EXPECT_EQ(free.Rank(M({1, 2, 4})), 2);
  EXPECT_EQ(free.Rank(M({3, 4})), 2);
}

TEST(BruteCapTest, CapIsEnforced) {
  EXPECT_THROW(Construct(Uniform(1, BruteCap() + 1)), ResourceError);
  EXPECT_THROW(SetBruteCap(kHardBruteCap + 1), DomainError);
  SetBruteCap(4);
  EXPECT_THROW(BruteCircuits(Construct(P3())), ResourceError);
  SetBruteCap(kDefaultBruteCap);
}

TEST(MinorTest, Examples) {
  const RankTable u24 = Construct(Uniform(2, 4));
  EXPECT_EQ(Minor(u24, M({4}), 0), Construct(Uniform(2, 3)));
  EXPECT_EQ(Minor(u24, 0, M({1})), Construct(Uniform(1, 3)));
  const RankTable m = Minor(Construct(P3()), 0, M({1}));
  EXPECT_EQ(m.rank(), 2);
  // Elements 2 and 3 of P_3 are the first two of the minor.
  EXPECT_EQ(m.Rank(M({1, 2})), 1);
  EXPECT_THAT(BruteCircuits(m), ::testing::Contains(M({1, 2})));
  EXPECT_EQ(m.labels()[0], "2");
  EXPECT_THROW(Minor(u24, M({1}), M({1})), DomainError);
}

TEST(BruteCircuitsTest, Examples) {
  EXPECT_THAT(BruteCircuits(Construct(Uniform(2, 4))),
              ElementsAre(M({1, 2, 3}), M({1, 2, 4}), M({1, 3, 4}),
                          M({2, 3, 4})));
  const auto p3 = BruteCircuits(Construct(P3()));
  ASSERT_EQ(p3.size(), 11u);
  EXPECT_EQ(p3[0], M({1, 2, 3}));
  EXPECT_EQ(p3[1], M({4, 5, 6}));
  for (size_t i = 2; i < p3.size(); ++i) {
    EXPECT_EQ(PopCount(p3[i]), 4);
    EXPECT_FALSE(IsSubset(M({1, 2, 3}), p3[i]));
    EXPECT_FALSE(IsSubset(M({4, 5, 6}), p3[i]));
  }
  EXPECT_THAT(BruteCircuits(Construct(Uniform(3, 3))), IsEmpty());
}

TEST(BruteConnectedFlatsTest, Examples) {
  EXPECT_THAT(BruteConnectedFlats(Construct(P3())),
              ElementsAre(Flat{M({1, 2, 3}), 2}, Flat{M({4, 5, 6}), 2},
                          Flat{M({1, 2, 3, 4, 5, 6}), 3}));
  EXPECT_THAT(BruteConnectedFlats(Construct(Uniform(2, 4))),
              ElementsAre(Flat{M({1, 2, 3, 4}), 2}));
  EXPECT_THAT(BruteConnectedFlats(Construct(Uniform(1, 2))),
              ElementsAre(Flat{M({1, 2}), 1}));
}

TEST(BruteFundamentalFlatsTest, Examples) {
  EXPECT_THAT(BruteFundamentalFlats(Construct(P3())),
              ElementsAre(Flat{M({1, 2, 3}), 2}, Flat{M({4, 5, 6}), 2}));
  EXPECT_THAT(BruteFundamentalFlats(Construct(Uniform(2, 4))), IsEmpty());
  const RankTable prism = Construct(Prism());
  EXPECT_EQ(prism.rank(), 4);
  EXPECT_THAT(BruteFundamentalFlats(prism), IsEmpty());
  EXPECT_THROW(
      BruteFundamentalFlats(Construct(Sum(Uniform(1, 2), Uniform(1, 2)))),
      DomainError);
}

TEST(BruteConnectivityTest, Examples) {
  EXPECT_EQ(BruteConnectivity(Construct(Uniform(2, 4))),
            kInfiniteConnectivity);
  EXPECT_EQ(BruteConnectivity(Construct(P3())), 2);
  EXPECT_TRUE(IsExactSeparation(Construct(P3()), M({1, 2, 3}), 2));
  EXPECT_EQ(BruteConnectivity(Construct(Sum(Uniform(1, 2), Uniform(1, 2)))),
            1);
}

TEST(IsomorphismTest, Examples) {
  const RankTable u24 = Construct(Uniform(2, 4));
  const std::vector<int> order{2, 0, 3, 1};
  EXPECT_TRUE(FindIsomorphism(u24, Relabel(u24, order)).has_value());
  EXPECT_FALSE(FindIsomorphism(u24, Construct(P3())).has_value());
  EXPECT_TRUE(IsIsomorphic(Construct(D3()), Construct(DualOf(DualOf(D3())))));
}

TEST(IsomorphismTest, FoundBijectionPreservesRank) {
  Rng rng(11);
  const RankTable d3 = Construct(D3());
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<int> order = testing::RandomPermutation(rng, 6);
    const RankTable shuffled = Relabel(d3, order);
    const auto phi = FindIsomorphism(d3, shuffled);
    ASSERT_TRUE(phi.has_value());
    for (Mask x = 0; x <= d3.ground(); ++x) {
      Mask image = 0;
      for (int e : MaskElements(x)) image |= Bit((*phi)[e]);
      ASSERT_EQ(d3.Rank(x), shuffled.Rank(image));
    }
  }
}

TEST(IsomorphismTest, DistinguishesNonIsomorphicTablesWithEqualCounts) {
  // P_3 and its relaxation share size and rank but not circuits.
  EXPECT_FALSE(IsIsomorphic(Construct(P3()),
                            Construct(Relax(P3(), M({1, 2, 3})))));
}

TEST(AutomorphismTest, BruteCounts) {
  EXPECT_EQ(BruteAutomorphismCount(Construct(Uniform(2, 4))), 24u);
  EXPECT_EQ(BruteAutomorphismCount(Construct(P3())), 72u);
}

TEST(HasMinorTest, Examples) {
  const RankTable p3 = Construct(P3());
  const RankTable p2 = Construct(TruncateTo(Sum(Uniform(1, 2), Uniform(1, 2)), 2));
  EXPECT_TRUE(HasMinor(p3, Construct(Uniform(1, 2))));
  // Every rank-2 minor of P_3 has a single nontrivial parallel class.
  EXPECT_FALSE(HasMinor(p3, p2));
  EXPECT_TRUE(HasMinor(p3, Construct(Uniform(2, 4))));
  EXPECT_FALSE(HasMinor(Construct(Uniform(2, 4)), p2));
}

// Properties.

TEST(CoreProperties, MatchingRankIsAMatroidRank) {
  Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(0, 12)(rng);
    const int sets = std::uniform_int_distribution<int>(0, 6)(rng);
    const SetSystem s = testing::RandomSystem(rng, n, sets, 0.35);
    const RankTable t = RankTableFromSystem(s);
    ASSERT_TRUE(IsMatroid(t));
    // The table agrees with direct matching on sampled subsets.
    for (int k = 0; k < 40; ++k) {
      const Mask x =
          static_cast<Mask>(rng()) & t.ground();
      ASSERT_EQ(t.Rank(x), MatchingRank(s, Elements0(x)));
    }
  }
}

TEST(CoreProperties, MaximalPresentationIsIdempotentAndFaithful) {
  Rng rng(102);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 9)(rng);
    const int sets = std::uniform_int_distribution<int>(1, 5)(rng);
    const SetSystem s =
        ReduceToBasisSets(testing::RandomSystem(rng, n, sets, 0.4));
    const SetSystem m = MaximalPresentation(s);
    EXPECT_EQ(MaximalPresentation(m), m);
    EXPECT_EQ(RankTableFromSystem(m), RankTableFromSystem(s));
    for (int j = 0; j < s.num_sets(); ++j) {
      EXPECT_TRUE(std::includes(m.set(j).begin(), m.set(j).end(),
                                s.set(j).begin(), s.set(j).end()));
    }
  }
}

TEST(CoreProperties, DualityAndMinors) {
  Rng rng(103);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    const RankTable t = RankTableFromSystem(testing::RandomSystem(
        rng, n, std::uniform_int_distribution<int>(0, 5)(rng), 0.4));
    EXPECT_EQ(Dual(Dual(t)), t);
    EXPECT_TRUE(IsMatroid(Dual(t)));
    for (int x = 0; x < n; ++x) {
      EXPECT_EQ(Dual(Minor(t, Bit(x), 0)), Minor(Dual(t), 0, Bit(x)));
      EXPECT_EQ(Dual(Minor(t, 0, Bit(x))), Minor(Dual(t), Bit(x), 0));
    }
  }
}

TEST(CoreProperties, RelaxationChangesOnlyTheHyperplane) {
  for (int n = 2; n <= 5; ++n) {
    const ExprPtr pn =
        TruncateTo(Sum(Uniform(n - 1, n), Uniform(n - 1, n)), n);
    const RankTable base = Construct(pn);
    for (Mask h : {FullMask(n), FullMask(n) << n}) {
      const RankTable relaxed = Construct(Relax(pn, h));
      for (Mask x = 0; x <= base.ground(); ++x) {
        ASSERT_EQ(relaxed.Rank(x) != base.Rank(x), x == h);
      }
      EXPECT_EQ(relaxed.Rank(h), base.Rank(h) + 1);
    }
  }
}

TEST(CoreProperties, ConnectivityIsSelfDual) {
  Rng rng(104);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    const RankTable t = RankTableFromSystem(testing::RandomSystem(
        rng, n, std::uniform_int_distribution<int>(1, 5)(rng), 0.5));
    EXPECT_EQ(BruteConnectivity(t), BruteConnectivity(Dual(t)));
  }
}

TEST(CoreProperties, CircuitIncidenceSizes) {
  Rng rng(105);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    const SetSystem s = testing::RandomSystem(
        rng, n, std::uniform_int_distribution<int>(1, 5)(rng), 0.35);
    const RankTable t = RankTableFromSystem(s);
    auto image = [&](Mask x) {
      std::vector<char> hit(s.num_sets(), 0);
      for (int e : MaskElements(x)) {
        for (int j : s.incidence(e)) hit[j] = 1;
      }
      return static_cast<int>(std::count(hit.begin(), hit.end(), 1));
    };
    for (Mask c : BruteCircuits(t)) {
      ASSERT_EQ(image(c), t.Rank(c));
      for (int x : MaskElements(c)) {
        ASSERT_EQ(image(c & ~Bit(x)), t.Rank(c));
      }
    }
  }
}

TEST(CoreProperties, IsomorphismInvariantUnderRelabeling) {
  Rng rng(106);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 9)(rng);
    const RankTable t = RankTableFromSystem(testing::RandomSystem(
        rng, n, std::uniform_int_distribution<int>(1, 4)(rng), 0.5));
    const RankTable u = Relabel(t, testing::RandomPermutation(rng, n));
    EXPECT_TRUE(IsIsomorphic(t, u));
    EXPECT_EQ(BruteAutomorphismCount(t), BruteAutomorphismCount(u));
  }
}

}  // namespace
}  // namespace latpath
