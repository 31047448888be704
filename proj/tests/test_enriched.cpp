#include <gtest/gtest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "toric/toric.hpp"
#include "toric/verify.hpp"

using namespace toric;

namespace {

Perm P(const char* s) { return Perm::parse(s); }

Dag d3() { return Dag({1, 2, 3, 4}, {{2, 1}, {2, 4}, {2, 3}, {4, 1}, {4, 3}}); }

QSym M(int n, std::initializer_list<int> e) { return monomial(n, Subset(e)); }

CQSym Mc(std::initializer_list<int> parts) {
  const Composition a(parts);
  return cyclic_monomial(a.total(), psi_preimage(a));
}

Dag relabel(const Dag& d, int offset) {
  std::vector<int> v;
  for (int x : d.vertices()) v.push_back(x + offset);
  std::vector<Arc> a;
  for (const auto& [i, j] : d.arcs()) a.emplace_back(i + offset, j + offset);
  return Dag(v, a);
}

}  // namespace

TEST(SignedInt, Order) {
  EXPECT_LT(SignedInt(-1), SignedInt(1));
  EXPECT_LT(SignedInt(1), SignedInt(-2));
  EXPECT_LT(SignedInt(-2), SignedInt(2));
  EXPECT_THROW(SignedInt(0), DomainError);
  for (int t = 0; t + 1 < 20; ++t) EXPECT_LT(SignedInt::nth(t), SignedInt::nth(t + 1));
  EXPECT_EQ(SignedInt::nth(0).value(), -1);
  EXPECT_EQ(SignedInt::nth(3).value(), 2);
}

TEST(Enriched, Conditions) {
  const Dag w12 = Dag::total_order(P("12"));
  EXPECT_TRUE(is_enriched({{1, 1}, {2, 1}}, w12));
  EXPECT_FALSE(is_enriched({{1, -1}, {2, -1}}, w12));
  EXPECT_TRUE(is_enriched({{1, -1}, {2, -1}}, Dag::total_order(P("21"))));
  EXPECT_FALSE(is_enriched({{1, 2}, {2, 1}}, w12));
  EXPECT_TRUE(is_enriched({{1, 1}, {4, -2}, {3, -4}, {2, -4}, {5, -5}, {6, 5}}, Dag::total_order(P("143256"))));
  EXPECT_THROW(is_enriched({{1, 1}}, w12), DomainError);
}

TEST(Enriched, EnumerationCounts) {
  for (int m = 0; m <= 4; ++m) {
    EXPECT_EQ(enumerate_enriched(Dag::arcless({1}), m).size(), static_cast<std::size_t>(2 * m));
    EXPECT_EQ(enumerate_enriched(Dag::total_order(P("12")), m).size(), static_cast<std::size_t>(2 * m * m));
    EXPECT_EQ(enumerate_enriched_toric(CyclicClass::of(P("1")), m).size(), static_cast<std::size_t>(2 * m));
  }
  EXPECT_EQ(Int(enumerate_enriched(d3(), 1).size()), specialize_ones(delta_dag(d3()), 1));
  EXPECT_EQ(enumerate_enriched_toric(CyclicClass::of(P("12")), 1).size(), 4u);
  EXPECT_EQ(enumerate_enriched(Dag::arcless({}), 3).size(), 1u);
  EXPECT_THROW(enumerate_enriched(d3(), -1), DomainError);
}

TEST(Enriched, EnumerationMatchesIndependentOdometer) {
  for (int k = 1; k <= 3; ++k)
    for (const Dag& d : all_dags(k))
      for (int m = 1; m <= 3; ++m) {
        std::size_t count = 0;
        oracle::for_each_enriched(d.vertices(), d.arcs(), m, [&](const std::vector<int>&) { ++count; });
        ASSERT_EQ(enumerate_enriched(d, m).size(), count) << d.to_string();
      }
}

TEST(Enriched, ParallelEnumerationIsIdentical) {
  EXPECT_EQ(enumerate_enriched(d3(), 3, true), enumerate_enriched(d3(), 3, false));
  EXPECT_EQ(enumerate_enriched_toric(toric_class(d3()), 2, true), enumerate_enriched_toric(toric_class(d3()), 2));
}

TEST(Enriched, ToricOfD3SplitsOverToricExtensions) {
  for (int m = 1; m <= 3; ++m) {
    const auto whole = enumerate_enriched_toric(toric_class(d3()), m);
    std::vector<EnrichedMap> parts;
    for (const CyclicClass& cw : toric_extensions(d3())) {
      auto e = enumerate_enriched_toric(cw, m);
      parts.insert(parts.end(), e.begin(), e.end());
    }
    const std::size_t total = parts.size();
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    EXPECT_EQ(parts.size(), total);
    EXPECT_EQ(parts, whole);
  }
}

TEST(Enriched, FundamentalLemmas) {
  for (int k = 1; k <= 3; ++k)
    for (const Dag& d : all_dags(k))
      for (int m = 1; m <= 2; ++m) {
        ASSERT_TRUE(linear_decomposition_holds(d, m)) << d.to_string();
        ASSERT_TRUE(toric_decomposition_holds(d, m)) << d.to_string();
      }
}

TEST(Enriched, CountsAreSpecialisedEnumerators) {
  for (int k = 1; k <= 3; ++k)
    for (const Dag& d : all_dags(k)) {
      const QSym lin = delta_dag(d);
      const CQSym cyc = delta_toric(toric_class(d));
      for (int m = 1; m <= 3; ++m) {
        ASSERT_EQ(Int(enumerate_enriched(d, m).size()), specialize_ones(lin, m));
        ASSERT_EQ(Int(enumerate_enriched_toric(toric_class(d), m).size()), specialize_ones(cyc, m));
      }
    }
}

TEST(Enriched, WeightEnumeratorMatchesTruncation) {
  for (int k = 1; k <= 3; ++k)
    for (const Dag& d : all_dags(k))
      for (int m = 1; m <= 3; ++m)
        ASSERT_EQ(oracle::weight_enumerator(d.vertices(), d.arcs(), m), to_trunc(delta_dag(d), m)) << d.to_string();
}

TEST(Delta, Permutations) {
  const QSym d2431 = M(4, {1, 2, 3}) * Int(16) + (M(4, {1, 2}) + M(4, {1, 3}) + M(4, {2, 3})) * Int(8) +
                     (M(4, {1}) + M(4, {2})) * Int(4);
  EXPECT_EQ(delta_perm(P("2431")), d2431);
  const QSym d4312 = delta_perm(P("4312"));
  EXPECT_EQ(d4312.coeff(Subset{}), 2);
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(d4312.coeff(Subset{i}), 4);
  EXPECT_EQ(d4312.coeff(Subset{1, 2, 3}), 16);
  EXPECT_EQ(delta_perm(P("1")), M(1, {}) * Int(2));
  EXPECT_EQ(delta_perm(Perm{}), QSym::one());
}

TEST(Delta, Dags) {
  EXPECT_EQ(delta_dag(d3()), delta_perm(P("2431")) + delta_perm(P("2413")));
  EXPECT_EQ(delta_dag(Dag::total_order(P("3142"))), delta_perm(P("3142")));
  EXPECT_EQ(delta_dag(Dag::arcless({1, 2})), delta_perm(P("12")) + delta_perm(P("21")));
}

TEST(Delta, FundamentalExpansion) {
  EXPECT_EQ(delta_fundamental_expansion(P("1")), (Coeffs{{Subset{}, 2}}));
  EXPECT_EQ(delta_fundamental_expansion(P("12")), (Coeffs{{Subset{}, 2}, {Subset{1}, 2}}));
  EXPECT_EQ(delta_fundamental_expansion(P("132")), (Coeffs{{Subset{1}, 4}, {Subset{2}, 4}}));
  for (int n = 1; n <= 6; ++n)
    for (const Perm& w : all_perms(n))
      ASSERT_EQ(delta_fundamental_expansion(w), to_fundamental(delta_perm(w))) << w.to_string();
}

TEST(Delta, DependsOnlyOnPeakSets) {
  for (int n = 1; n <= 6; ++n) {
    std::map<Subset, QSym> lin;
    std::map<Subset, CQSym> cyc;
    for (const Perm& w : all_perms(n)) {
      const QSym d = delta_perm(w);
      auto [it, fresh] = lin.try_emplace(peak_set(w), d);
      ASSERT_TRUE(fresh || it->second == d) << w.to_string();
      const CQSym c = delta_cyc(CyclicClass::of(w));
      auto [jt, cfresh] = cyc.try_emplace(cpeak_set(w), c);
      ASSERT_TRUE(cfresh || jt->second == c) << w.to_string();
      ASSERT_EQ(c, kcyc(cpeak_set(w), n)) << w.to_string();
    }
  }
}

TEST(Peaks, LinearPeakFunctions) {
  EXPECT_EQ(k_peak(Subset{}, 1), M(1, {}) * Int(2));
  EXPECT_EQ(k_peak(Subset{2}, 4), delta_perm(P("1324")));
  EXPECT_THROW(k_peak(Subset{1}, 4), DomainError);
}

TEST(Peaks, CyclicPeakFunctions) {
  const CQSym k3 = Mc({1, 1, 1, 1}) * Int(16) + Mc({2, 1, 1}) * Int(32) + Mc({3, 1}) * Int(12) +
                   Mc({2, 2}) * Int(8) + Mc({4}) * Int(4);
  const CQSym k24 = Mc({1, 1, 1, 1}) * Int(16) + Mc({2, 1, 1}) * Int(32) + Mc({3, 1}) * Int(8) + Mc({2, 2}) * Int(8);
  EXPECT_EQ(kcyc(Subset{3}, 4), k3);
  EXPECT_EQ(kcyc(Subset{2, 4}, 4), k24);
  EXPECT_EQ(kcyc(Subset{3}, 4), delta_cyc(CyclicClass::of(P("1243"))));
  EXPECT_EQ(kcyc(Subset{2, 4}, 4), delta_cyc(CyclicClass::of(P("1324"))));
  EXPECT_THROW(kcyc(Subset{1, 2}, 4), DomainError);
  EXPECT_EQ(kcyc(Subset{}, 0), CQSym::one());
}

TEST(Peaks, DeltaOfToricClasses) {
  const CQSym expected = Mc({1, 1, 1, 1}) * Int(32) + Mc({2, 1, 1}) * Int(64) + Mc({3, 1}) * Int(20) +
                         Mc({2, 2}) * Int(16) + Mc({4}) * Int(4);
  EXPECT_EQ(delta_toric(toric_class(d3())), expected);
  EXPECT_EQ(kcyc(Subset{3}, 4) + kcyc(Subset{2, 4}, 4), expected);
  CQSym by_rotation(4);
  for (const CyclicClass& cw : toric_extensions(d3())) by_rotation += delta_cyc(cw);
  EXPECT_EQ(by_rotation, expected);
  EXPECT_EQ(delta_toric(toric_class(Dag::total_order(P("2413")))), kcyc(cpeak_set(P("2413")), 4));
  EXPECT_EQ(delta_toric(toric_class(Dag::arcless({1}))), cyclic_monomial(1, Subset{1}) * Int(2));
}

TEST(Peaks, CyclicFundamentalExpansion) {
  for (Subset s : {Subset{3}, Subset{2, 4}})
    EXPECT_EQ(from_cyclic_fundamental(4, kcyc_fund_expansion(s, 4)), kcyc(s, 4));
  for (int n = 2; n <= 6; ++n)
    for (Subset s : cyclic_peak_classes(n))
      ASSERT_EQ(from_cyclic_fundamental(n, kcyc_fund_expansion(s, n)), kcyc(s, n)) << n << s.to_string();
  // At n = 1 the only cyclic peak set is empty, and the identity needs the
  // E = {} term alongside E = {1}.
  EXPECT_THROW(kcyc_fund_expansion(Subset{1}, 1), DomainError);
  EXPECT_EQ(kcyc_fund_expansion(Subset{}, 1), (Coeffs{{Subset{}, 1}, {Subset{1}, 1}}));
  EXPECT_EQ(from_cyclic_fundamental(1, kcyc_fund_expansion(Subset{}, 1)), kcyc(Subset{}, 1));
}

TEST(Peaks, Triangularity) {
  const TriangularReport r4 = kcyc_triangular_matrix(4);
  EXPECT_EQ(r4.rows, (std::vector<Subset>{Subset{1}, Subset{1, 3}}));
  EXPECT_TRUE(r4.upper_triangular);
  EXPECT_TRUE(r4.nonzero_diagonal);
  const TriangularReport r2 = kcyc_triangular_matrix(2);
  EXPECT_EQ(r2.rows.size(), 1u);
  EXPECT_NE(r2.matrix[0][0], 0);
  for (int n = 2; n <= 6; ++n) {
    const TriangularReport r = kcyc_triangular_matrix(n);
    EXPECT_TRUE(r.upper_triangular && r.nonzero_diagonal && r.full_rank()) << n;
  }
  EXPECT_THROW(kcyc_triangular_matrix(1), DomainError);
}

TEST(Peaks, SubringClosure) {
  const PeakProductReport r = cyclic_peak_product(Subset{}, 1, Subset{}, 1);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.extensions, std::vector<CyclicClass>{CyclicClass::of(P("12"))});
  for (int mu = 1; mu <= 4; ++mu)
    for (int nt = 1; mu + nt <= 5; ++nt)
      for (Subset u : cyclic_peak_classes(mu))
        for (Subset t : cyclic_peak_classes(nt)) {
          const PeakProductReport p = cyclic_peak_product(u, mu, t, nt);
          ASSERT_TRUE(p.equal) << u.to_string() << "@" << mu << " " << t.to_string() << "@" << nt;
        }
  EXPECT_THROW(cyclic_peak_product(Subset{1, 2}, 4, Subset{}, 1), DomainError);
}

TEST(Peaks, ToricProductRule) {
  std::mt19937 rng(5);
  std::vector<std::vector<Dag>> by_size = {{}, all_dags(1), all_dags(2), all_dags(3)};
  for (int trial = 0; trial < 40; ++trial) {
    const int a = 1 + static_cast<int>(rng() % 3), b = 1 + static_cast<int>(rng() % 3);
    const Dag& d = by_size[static_cast<std::size_t>(a)][rng() % by_size[static_cast<std::size_t>(a)].size()];
    const Dag e = relabel(by_size[static_cast<std::size_t>(b)][rng() % by_size[static_cast<std::size_t>(b)].size()], a);
    const CQSym lhs = delta_toric(toric_class(disjoint_union(d, e)));
    const CQSym rhs = multiply_cyclic(delta_toric(toric_class(d)), delta_toric(toric_class(e)));
    ASSERT_EQ(lhs, rhs) << d.to_string() << " + " << e.to_string();
  }
}

TEST(Peaks, ShuffleIdentity) {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 5; ++b)
      for (const Perm& pi : all_perms(a))
        for (const Perm& s : all_perms(b)) {
          const Perm sigma = s.shifted(a);
          QSym rhs(a + b);
          for (const Perm& tau : shuffle_set(pi, sigma)) rhs += k_peak(peak_set(tau), a + b);
          ASSERT_EQ(multiply(k_peak(peak_set(pi), a), k_peak(peak_set(sigma), b)), rhs)
              << pi.to_string() << " " << sigma.to_string();
        }
}
