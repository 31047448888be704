#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "toric/toric.hpp"

using namespace toric;

namespace {

QSym M(std::initializer_list<int> parts) { return monomial(Composition(parts)); }

// Sum over all i < j <= m of x_i x_j, times c.
TruncPoly strict_pairs(int m, int c) {
  TruncPoly p(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::vector<int> x(static_cast<std::size_t>(m), 0);
      x[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(j)] = 1;
      p.add(x, c);
    }
  return p;
}

}  // namespace

TEST(QSym, Monomials) {
  EXPECT_EQ(monomial(4, Subset{1, 3}), M({1, 2, 1}));
  EXPECT_EQ(monomial(4, Subset{1, 2, 3}), M({1, 1, 1, 1}));
  EXPECT_EQ(monomial(5, Subset{}), M({5}));
  EXPECT_THROW(monomial(4, Subset{4}), OutOfRange);
}

TEST(QSym, Fundamentals) {
  EXPECT_EQ(fundamental(4, Subset{1, 3}), monomial(4, Subset{1, 3}) + monomial(4, Subset{1, 2, 3}));
  EXPECT_EQ(fundamental(4, Subset{1, 2, 3}), monomial(4, Subset{1, 2, 3}));
  EXPECT_EQ(fundamental(5, Subset{}).terms().size(), 16u);
  for (int n = 1; n <= 6; ++n)
    for (Subset e : all_subsets(n - 1)) ASSERT_EQ(fundamental(n, e).terms().size(), std::size_t{1} << (n - 1 - e.size()));
  EXPECT_THROW(fundamental(3, Subset{3}), OutOfRange);
}

TEST(QSym, ToFundamental) {
  const Coeffs f = to_fundamental(monomial(4, Subset{1, 3}));
  EXPECT_EQ(f, (Coeffs{{Subset{1, 3}, 1}, {Subset{1, 2, 3}, -1}}));
  EXPECT_TRUE(to_fundamental(QSym(4)).empty());
  EXPECT_EQ(to_fundamental(fundamental(4, Subset{1, 3})), (Coeffs{{Subset{1, 3}, 1}}));
}

TEST(QSym, FundamentalRoundTripOnRandomElements) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int n = 0; n <= 6; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      QSym a(n);
      for (Subset e : all_subsets(std::max(n - 1, 0))) a.add(e, coeff(rng));
      ASSERT_EQ(from_fundamental(n, to_fundamental(a)), a);
    }
}

TEST(QSym, DegreeMismatchIsRejected) {
  EXPECT_THROW(monomial(2, Subset{}) + monomial(3, Subset{}), DomainError);
  EXPECT_EQ(QSym(3) + monomial(2, Subset{}), monomial(2, Subset{}));
}

TEST(CQSym, CyclicMonomials) {
  EXPECT_EQ(cyclic_monomial_as_qsym(4, Subset{1, 3}), monomial(4, Subset{2}) * Int(2));
  EXPECT_EQ(cyclic_monomial_as_qsym(4, Subset{1, 2, 3}),
            monomial(4, Subset{1, 2}) + monomial(4, Subset{1, 3}) + monomial(4, Subset{2, 3}));
  EXPECT_TRUE(cyclic_monomial(4, Subset{}).is_zero());
  EXPECT_TRUE(cyclic_monomial_as_qsym(4, Subset{}).is_zero());
}

TEST(CQSym, CyclicFundamentalExample) {
  const CQSym f = cyclic_fundamental(4, Subset{1, 3});
  const CQSym expected = cyclic_monomial(4, Subset{1, 3}) + cyclic_monomial(4, Subset{1, 2, 3}) +
                         cyclic_monomial(4, Subset{1, 3, 4}) + cyclic_monomial(4, Subset{1, 2, 3, 4});
  EXPECT_EQ(f, expected);
  EXPECT_EQ(f.coeff(Subset{1, 2, 3}), 2);
  const QSym m = M({2, 2}) * Int(2) + (M({1, 1, 2}) + M({1, 2, 1}) + M({2, 1, 1})) * Int(2) + M({1, 1, 1, 1}) * Int(4);
  EXPECT_EQ(expand(f), m);
  EXPECT_EQ(cyclic_fundamental(4, Subset{2, 4}), f);
  EXPECT_THROW(cyclic_fundamental(4, Subset{}), DomainError);
}

TEST(CQSym, CyclicFundamentalOfFullSet) {
  for (int n = 1; n <= 7; ++n) {
    const Subset full = Subset::interval(1, n);
    EXPECT_EQ(expand(cyclic_fundamental(n, full)), monomial(n, Subset::interval(1, n - 1)) * Int(n));
  }
}

TEST(CQSym, CyclicFundamentalViaRotatedF) {
  EXPECT_EQ(cyclic_fundamental_via_F(4, Subset{1, 3}), expand(cyclic_fundamental(4, Subset{1, 3})));
  for (int k = 1; k <= 6; ++k)
    for (Subset e : all_subsets(k)) {
      if (e.empty()) continue;
      ASSERT_EQ(cyclic_fundamental_via_F(k, e), expand(cyclic_fundamental(k, e))) << k << e.to_string();
    }
  EXPECT_THROW(cyclic_fundamental_via_F(4, Subset{}), DomainError);
}

TEST(CQSym, PairOracle) {
  for (int m = 1; m <= 5; ++m) {
    TruncPoly single(m);
    for (int i = 0; i < m; ++i) {
      std::vector<int> x(static_cast<std::size_t>(m), 0);
      x[static_cast<std::size_t>(i)] = 1;
      single.add(x, 1);
    }
    EXPECT_EQ(fcyc_pair_oracle(1, Subset{1}, m), single);
    EXPECT_EQ(fcyc_pair_oracle(2, Subset{1, 2}, m), strict_pairs(m, 2));
  }
  for (int n = 1; n <= 5; ++n)
    for (Subset e : all_subsets(n)) {
      if (e.empty()) continue;
      for (int m = 1; m <= 5; ++m)
        ASSERT_EQ(fcyc_pair_oracle(n, e, m), to_trunc(cyclic_fundamental(n, e), m)) << n << e.to_string() << m;
    }
}

TEST(CQSym, ShiftInvariance) {
  for (int n = 1; n <= 7; ++n)
    for (Subset e : all_subsets(n)) {
      if (e.empty()) continue;
      const QSym mc = cyclic_monomial_as_qsym(n, e);
      const QSym fc = expand(cyclic_fundamental(n, e));
      for (int i = 1; i < n; ++i) {
        const Subset s = shift_set(e, i, n);
        ASSERT_EQ(cyclic_monomial_as_qsym(n, s), mc);
        ASSERT_EQ(expand(cyclic_fundamental(n, s)), fc);
      }
    }
}

TEST(CQSym, FromQSym) {
  EXPECT_EQ(from_qsym(M({2, 2}) * Int(2)), cyclic_monomial(4, Subset{1, 3}));
  EXPECT_EQ(from_qsym(M({1, 3}) + M({3, 1})), cyclic_monomial(4, psi_preimage(Composition{1, 3})));
  EXPECT_THROW(from_qsym(M({1, 3})), NotCyclic);
  EXPECT_THROW(from_qsym(M({2, 2})), NotCyclic);
  for (int n = 1; n <= 7; ++n)
    for (Subset e : all_subsets(n)) ASSERT_EQ(from_qsym(cyclic_monomial_as_qsym(n, e)), cyclic_monomial(n, e));
}

TEST(CQSym, InclusionExclusion) {
  for (int n = 1; n <= 5; ++n)
    for (Subset e : all_subsets(n)) {
      if (e.empty()) continue;
      CQSym alt(n);
      for (Subset l : supersets_within(e, n)) alt += cyclic_fundamental(n, l) * Int((l - e).size() % 2 ? -1 : 1);
      ASSERT_EQ(alt, cyclic_monomial(n, e));
    }
}

TEST(CQSym, CyclicFundamentalCoordinates) {
  for (int n = 1; n <= 6; ++n)
    for (Subset cls : cyclic_subset_classes(n)) {
      const CQSym m = cyclic_monomial(n, cls);
      ASSERT_EQ(from_cyclic_fundamental(n, to_cyclic_fundamental(m)), m);
      ASSERT_EQ(to_cyclic_fundamental(cyclic_fundamental(n, cls)), (Coeffs{{cls, 1}}));
    }
}

TEST(Multiply, SmallExamples) {
  EXPECT_EQ(multiply(M({1}), M({1})), M({1, 1}) * Int(2) + M({2}));
  EXPECT_EQ(multiply(fundamental(4, Subset{1, 3}), QSym::one()), fundamental(4, Subset{1, 3}));
  EXPECT_EQ(multiply(QSym::one(), M({2, 1})), M({2, 1}));
  EXPECT_TRUE(multiply(M({1}), QSym(2)).is_zero());
}

TEST(Multiply, AgreesWithPolynomialProduct) {
  for (int p = 0; p <= 6; ++p)
    for (int q = 0; p + q <= 6; ++q)
      for (Subset e : all_subsets(std::max(p - 1, 0)))
        for (Subset f : all_subsets(std::max(q - 1, 0))) {
          const QSym a = monomial(p, e), b = monomial(q, f);
          const int vars = p + q;
          ASSERT_EQ(read_monomial_basis(to_trunc(a, vars) * to_trunc(b, vars), vars), multiply(a, b))
              << a.to_string() << " * " << b.to_string();
        }
}

TEST(Multiply, Cyclic) {
  const CQSym one = cyclic_monomial(1, Subset{1});
  const CQSym sq = multiply_cyclic(one, one);
  EXPECT_EQ(sq.degree(), 2);
  EXPECT_EQ(expand(sq), multiply(expand(one), expand(one)));
  EXPECT_EQ(sq, cyclic_monomial(2, Subset{1}) + cyclic_monomial(2, Subset{1, 2}));
  EXPECT_TRUE(multiply_cyclic(one, CQSym(3)).is_zero());
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; p + q <= 6; ++q)
      for (Subset a : cyclic_subset_classes(p))
        for (Subset b : cyclic_subset_classes(q))
          ASSERT_NO_THROW(multiply_cyclic(cyclic_monomial(p, a), cyclic_monomial(q, b)));
}

TEST(Specialize, Ones) {
  EXPECT_EQ(specialize_ones(monomial(4, Subset{1, 3}), 2), 0);
  EXPECT_EQ(specialize_ones(fundamental(4, Subset{1, 3}), 3), 1);
  for (int m = 0; m <= 6; ++m) EXPECT_EQ(specialize_ones(M({1}) * Int(2), m), 2 * m);
  EXPECT_EQ(specialize_ones(QSym::one(), 0), 1);
  // Agrees with evaluating the truncation at all ones.
  for (int n = 1; n <= 5; ++n)
    for (Subset e : all_subsets(n))
      for (int m = 1; m <= 4; ++m) {
        if (e.empty()) continue;
        const TruncPoly p = to_trunc(cyclic_fundamental(n, e), m);
        Int total = 0;
        for (const auto& [x, c] : p.terms()) total += c;
        ASSERT_EQ(specialize_ones(cyclic_fundamental(n, e), m), total);
      }
}
