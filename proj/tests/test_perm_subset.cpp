#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "toric/toric.hpp"

using namespace toric;

namespace {

Perm P(const char* s) { return Perm::parse(s); }

}  // namespace

TEST(Perm, ParsesCompactAndSeparatedForms) {
  EXPECT_EQ(P("3124").word(), (std::vector<int>{3, 1, 2, 4}));
  EXPECT_EQ(P("3,1,12").word(), (std::vector<int>{3, 1, 12}));
  EXPECT_EQ(P("10 2 7").to_string(), "10,2,7");
  EXPECT_TRUE(P("").empty());
}

TEST(Perm, ParseErrorsCarryPosition) {
  try {
    P("31x4");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2);
  }
  EXPECT_THROW(P("3313"), ParseError);
  EXPECT_THROW(P("0,1"), ParseError);
  EXPECT_THROW(Perm({1, 1}), DomainError);
}

TEST(Perm, DescentSets) {
  EXPECT_EQ(des_set(P("3124")), (Subset{1}));
  EXPECT_EQ(des_set(P("1234")), Subset{});
  EXPECT_EQ(des_set(P("4321")), (Subset{1, 2, 3}));
  EXPECT_EQ(des_set(P("1")), Subset{});
  EXPECT_EQ(des_set(Perm{}), Subset{});
}

TEST(Perm, PeakSets) {
  EXPECT_EQ(peak_set(P("3124")), Subset{});
  EXPECT_EQ(peak_set(P("143256")), (Subset{2}));
  EXPECT_EQ(peak_set(P("1234")), Subset{});
  EXPECT_EQ(peak_set(P("1")), Subset{});
}

TEST(Perm, CyclicDescentSets) {
  EXPECT_EQ(cdes_set(P("3124")), (Subset{1, 4}));
  EXPECT_EQ(cdes_set(P("1423")), (Subset{2, 4}));
  EXPECT_EQ(cdes_set(P("1")), Subset{});
}

TEST(Perm, CyclicPeakSets) {
  EXPECT_EQ(cpeak_set(P("3124")), (Subset{4}));
  EXPECT_EQ(cpeak_set(P("1423")), (Subset{2, 4}));
  EXPECT_EQ(cpeak_set(P("1243")), (Subset{3}));
  EXPECT_EQ(cpeak_set(P("1")), Subset{});
}

TEST(Perm, Rotations) {
  EXPECT_EQ(rotations(P("1423")), (std::vector<Perm>{P("1423"), P("4231"), P("2314"), P("3142")}));
  EXPECT_EQ(rotations(P("1")), (std::vector<Perm>{P("1")}));
  EXPECT_EQ(rotations(P("12")), (std::vector<Perm>{P("12"), P("21")}));
  EXPECT_THROW(rotations(Perm{}), EmptyPermutation);
}

TEST(Perm, CyclicClassUsesLeastRotation) {
  const auto c = CyclicClass::of(P("3142"));
  EXPECT_EQ(c.canonical(), P("1423"));
  EXPECT_TRUE(c.contains(P("2314")));
  EXPECT_FALSE(c.contains(P("1324")));
  EXPECT_EQ(c.members().size(), 4u);
}

TEST(Perm, CyclicStatMultisets) {
  const auto c = CyclicClass::of(P("1423"));
  const std::vector<StatSet> expected = {Subset{1, 3}, Subset{1, 3}, Subset{2, 4}, Subset{2, 4}};
  EXPECT_EQ(cyclic_stat_multiset(c, CyclicStat::cdes), expected);
  EXPECT_EQ(cyclic_stat_multiset(c, CyclicStat::cpeak), expected);
  EXPECT_EQ(cyclic_stat_multiset(CyclicClass::of(P("1")), CyclicStat::cdes), std::vector<StatSet>{Subset{}});
}

TEST(Perm, CyclicStatMultisetEqualsShiftForm) {
  for (int n = 1; n <= 6; ++n)
    for (const Perm& w : all_perms(n))
      for (auto stat : {CyclicStat::cdes, CyclicStat::cpeak})
        ASSERT_EQ(cyclic_stat_multiset(CyclicClass::of(w), stat), cyclic_stat_multiset_by_shift(w, stat))
            << w.to_string();
}

TEST(Perm, LinearPeaksAreCyclicPeaks) {
  for (int n = 1; n <= 6; ++n)
    for (const Perm& w : all_perms(n)) {
      ASSERT_TRUE(peak_set(w).is_subset_of(cpeak_set(w))) << w.to_string();
      if (n >= 2) ASSERT_FALSE(cpeak_set(w).empty()) << w.to_string();
    }
}

TEST(Perm, ShuffleSets) {
  EXPECT_EQ(shuffle_set(P("1"), P("2")), (std::vector<Perm>{P("12"), P("21")}));
  EXPECT_EQ(shuffle_set(P("12"), P("3")), (std::vector<Perm>{P("123"), P("132"), P("312")}));
  const auto s = shuffle_set(P("21"), P("34"));
  EXPECT_EQ(s.size(), 6u);
  for (const Perm& t : s) {
    const auto& w = t.word();
    auto pos = [&](int x) { return std::find(w.begin(), w.end(), x) - w.begin(); };
    EXPECT_LT(pos(2), pos(1));
    EXPECT_LT(pos(3), pos(4));
  }
  EXPECT_THROW(shuffle_set(P("12"), P("23")), NotDisjoint);
}

TEST(Perm, ShuffleSizesAreBinomial) {
  for (int total = 0; total <= 8; ++total)
    for (int a = 0; a <= total; ++a) {
      const auto s = shuffle_set(Perm::identity(a), Perm::identity(total - a).shifted(a));
      ASSERT_EQ(Int(s.size()), binomial(total, a));
      ASSERT_TRUE(std::adjacent_find(s.begin(), s.end()) == s.end());
    }
}

TEST(Perm, PeakSetPredicatesMatchExhaustiveSearch) {
  for (int n = 0; n <= 6; ++n) {
    const auto lin = oracle::attained(n, [](const Perm& w) { return peak_set(w); });
    const auto cyc = oracle::attained(n, [](const Perm& w) { return cpeak_set(w); });
    for (Subset s : all_subsets(n)) {
      EXPECT_EQ(is_peak_set(s, n), lin.count(s) == 1) << n << " " << s.to_string();
      EXPECT_EQ(is_cyclic_peak_set(s, n), cyc.count(s) == 1) << n << " " << s.to_string();
    }
  }
}

TEST(Perm, PeakSetExamples) {
  EXPECT_TRUE(is_cyclic_peak_set(Subset{4}, 4));
  EXPECT_FALSE(is_cyclic_peak_set(Subset{1, 2}, 4));
  EXPECT_TRUE(is_cyclic_peak_set(Subset{2, 4}, 4));
  EXPECT_FALSE(is_cyclic_peak_set(Subset{1, 4}, 4));
  EXPECT_FALSE(is_cyclic_peak_set(Subset{}, 3));
  EXPECT_TRUE(is_cyclic_peak_set(Subset{}, 1));
  EXPECT_FALSE(is_cyclic_peak_set(Subset{1}, 1));
  EXPECT_TRUE(is_peak_set(Subset{}, 1));
  EXPECT_FALSE(is_peak_set(Subset{1}, 4));
  EXPECT_EQ(find_cyclic_peak_witness(Subset{3}, 4), P("1243"));
  EXPECT_EQ(find_peak_witness(Subset{2}, 4), P("1324"));
  EXPECT_FALSE(find_peak_witness(Subset{1}, 4).has_value());
}

TEST(Subset, OrderIsCardinalityThenLex) {
  std::vector<Subset> v = {Subset{2, 3}, Subset{1}, Subset{}, Subset{1, 3}, Subset{2}, Subset{1, 2}};
  std::sort(v.begin(), v.end());
  EXPECT_EQ(v, (std::vector<Subset>{Subset{}, Subset{1}, Subset{2}, Subset{1, 2}, Subset{1, 3}, Subset{2, 3}}));
  EXPECT_THROW(Subset{64}, OutOfRange);
  EXPECT_EQ((Subset{1, 3}).to_string(), "{1,3}");
}

TEST(Subset, Shifts) {
  EXPECT_EQ(shift_set(Subset{2, 4}, 1, 4), (Subset{1, 3}));
  EXPECT_EQ(shift_set(Subset{}, 3, 4), Subset{});
  EXPECT_EQ(shift_set(Subset{4}, 1, 4), (Subset{1}));
  EXPECT_EQ(shift_set(Subset{1}, -1, 4), (Subset{4}));
  EXPECT_THROW(shift_set(Subset{5}, 1, 4), OutOfRange);
}

TEST(Subset, Phi) {
  EXPECT_EQ(phi(4, Subset{1, 3}), (Composition{1, 2, 1}));
  EXPECT_EQ(phi(4, Subset{1, 2, 3}), (Composition{1, 1, 1, 1}));
  EXPECT_EQ(phi(5, Subset{}), (Composition{5}));
  EXPECT_THROW(phi(4, Subset{4}), OutOfRange);
  EXPECT_EQ(phi_inv(Composition{1, 2, 1}), (Subset{1, 3}));
}

TEST(Subset, PhiRoundTrips) {
  for (int n = 1; n <= 10; ++n) {
    for (Subset e : all_subsets(n - 1)) ASSERT_EQ(phi_inv(phi(n, e)), e);
    for (const Composition& a : all_compositions(n)) ASSERT_EQ(phi(n, phi_inv(a)), a);
  }
}

TEST(Subset, Psi) {
  EXPECT_EQ(psi(4, Subset{1, 3}), (Composition{2, 2}));
  EXPECT_EQ(psi(4, Subset{1, 2, 3}), (Composition{1, 1, 2}));
  EXPECT_EQ(psi(6, Subset{6}), (Composition{6}));
  EXPECT_THROW(psi(4, Subset{}), DomainError);
}

TEST(Subset, CyclicClasses) {
  EXPECT_EQ(canonical_cyclic(Subset{2, 4}, 4), (Subset{1, 3}));
  EXPECT_EQ(canonical_cyclic(Subset{1, 2, 3}, 4), canonical_cyclic(Subset{2, 3, 4}, 4));
  EXPECT_EQ(psi_class(Subset{2, 4}, 4), (Composition{2, 2}));
  EXPECT_THROW(canonical_cyclic(Subset{}, 4), DomainError);
  EXPECT_TRUE(CyclicSubsetClass::of(Subset{1, 3}, 4).contains(Subset{2, 4}));
}

TEST(Subset, PsiCommutesWithShifts) {
  for (int n = 1; n <= 8; ++n)
    for (Subset e : all_subsets(n)) {
      if (e.empty()) continue;
      const Composition a = canonical_rotation(psi(n, e));
      for (int i = 1; i <= n; ++i) ASSERT_EQ(canonical_rotation(psi(n, shift_set(e, i, n))), a);
    }
}

TEST(Subset, PsiIsABijectionOnClasses) {
  for (int n = 1; n <= 8; ++n) {
    std::set<Composition> images, cyclic_comps;
    for (Subset cls : cyclic_subset_classes(n)) images.insert(psi_class(cls, n));
    for (const Composition& a : all_compositions(n)) cyclic_comps.insert(canonical_rotation(a));
    ASSERT_EQ(images.size(), cyclic_subset_classes(n).size());
    ASSERT_EQ(images, cyclic_comps);
    for (const Composition& a : cyclic_comps) ASSERT_EQ(canonical_rotation(psi(n, psi_preimage(a))), a);
  }
}

TEST(Integer, Binomials) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(multichoose(5, 0), 1);
  EXPECT_EQ(multichoose(3, 2), 6);
  EXPECT_EQ(binomial(100, 50).str(), "100891344545564193334812497256");
}
