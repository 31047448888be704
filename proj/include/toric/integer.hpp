#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "toric/error.hpp"

namespace toric {

/// Exact coefficient type. Never overflows.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// binom(n, k), zero outside 0 <= k <= n.
inline Int binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Number of k-element multisets on an a-element set.
inline Int multichoose(long long a, long long k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  return binomial(a + k - 1, k);
}

inline Int pow2(long long e) {
  if (e < 0) throw DomainError("pow2: negative exponent");
  Int r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

inline Int ipow(const Int& base, unsigned e) {
  Int r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

inline std::string to_string(const Int& v) { return v.str(); }

/// Rank over the rationals of a dense integer matrix.
inline std::size_t matrix_rank(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<Rational>> a;
  a.reserve(rows.size());
  for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
  const std::size_t nr = a.size();
  const std::size_t nc = a.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < nc && rank < nr; ++col) {
    std::size_t pivot = rank;
    while (pivot < nr && a[pivot][col] == 0) ++pivot;
    if (pivot == nr) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      Rational factor = a[r][col] / a[rank][col];
      for (std::size_t c = col; c < nc; ++c) a[r][c] -= factor * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace toric
