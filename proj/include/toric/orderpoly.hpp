#pragma once

// Order polynomials of enriched (toric) partitions, their generating
// functions, and the bars-and-marks model for the linear case.

#include <algorithm>
#include <compare>
#include <limits>
#include <string>
#include <vector>

#include "toric/dag.hpp"
#include "toric/enriched.hpp"
#include "toric/error.hpp"
#include "toric/integer.hpp"
#include "toric/perm.hpp"
#include "toric/series.hpp"

namespace toric {

/// Omega(w, m): the number of enriched w-partitions with |f| <= m.
inline Int omega(const Perm& w, long long m) {
  if (w.empty()) throw EmptyPermutation("omega: empty permutation");
  if (m < 0) throw DomainError("omega: negative m");
  const long long n = w.size();
  const long long p = pk(w);
  Int sum = 0;
  for (long long k = 0; k <= m - 1 - p; ++k) sum += multichoose(n + 1, k) * binomial(n - 2 * p - 1, m - 1 - p - k);
  return pow2(2 * p + 1) * sum;
}

inline Int omega_dag(const Dag& d, long long m) { return specialize_ones(delta_dag(d), m); }

/// Omega^cyc([w], m) by the closed formula in n and cpk w.
inline Int omega_cyc(const CyclicClass& cw, long long m) {
  if (cw.size() == 0) throw EmptyPermutation("omega_cyc: empty permutation");
  if (m < 0) throw DomainError("omega_cyc: negative m");
  const long long n = cw.size();
  const long long c = cpk(cw.canonical());
  Int first = 0, second = 0;
  for (long long k = 0; k <= m; ++k) {
    first += multichoose(n + 1, k) * binomial(n - 2 * c - 1, m - 1 - c - k);
    second += multichoose(n + 1, k) * binomial(n - 2 * c + 1, m - c - k);
  }
  return Int(n - 2 * c) * pow2(2 * c + 1) * first + Int(c) * pow2(2 * c) * second;
}

/// Omega^cyc([w], m) as the sum of Omega(v, m) over rotations v.
inline Int omega_cyc_by_rotation(const CyclicClass& cw, long long m) {
  Int sum = 0;
  for (const Perm& v : cw.members()) sum += omega(v, m);
  return sum;
}

inline Int omega_toric(const ToricClass& tc, long long m) {
  Int sum = 0;
  for (const CyclicClass& cw : toric_extensions(tc)) sum += omega_cyc(cw, m);
  return sum;
}

/// 1/2 ((1+t)/(1-t))^{n+1} (4t/(1+t)^2)^{1+pk w}.
inline RationalSeries omega_series(const Perm& w) {
  if (w.empty()) throw EmptyPermutation("omega_series: empty permutation");
  const unsigned n = static_cast<unsigned>(w.size());
  const unsigned p = static_cast<unsigned>(pk(w));
  const IntPoly plus{1, 1}, minus{1, -1};
  IntPoly num = IntPoly::monomial(ipow(4, p + 1), p + 1) * plus.pow(n + 1);
  IntPoly den = IntPoly{2} * minus.pow(n + 1) * plus.pow(2 * p + 2);
  return RationalSeries(std::move(num), std::move(den));
}

/// (4t/(1+t)^2)^c ((1+t)/(1-t))^{n-1} (c + 2nt/(1-t)^2), c = cpk w.
inline RationalSeries omega_cyc_series(const CyclicClass& cw) {
  if (cw.size() == 0) throw EmptyPermutation("omega_cyc_series: empty permutation");
  const unsigned n = static_cast<unsigned>(cw.size());
  const unsigned c = static_cast<unsigned>(cpk(cw.canonical()));
  const IntPoly plus{1, 1}, minus{1, -1};
  const IntPoly last = IntPoly{Int(c)} * minus.pow(2) + IntPoly::monomial(Int(2 * n), 1);
  IntPoly num = IntPoly::monomial(ipow(4, c), c) * plus.pow(n - 1) * last;
  IntPoly den = plus.pow(2 * c) * minus.pow(n + 1);
  return RationalSeries(std::move(num), std::move(den));
}

/// Coefficients of t^0..t^order in sum_m Omega(w, m) t^m.
inline std::vector<Int> gf_omega(const Perm& w, std::size_t order) { return omega_series(w).expand(order); }

inline std::vector<Int> gf_omega_cyc(const CyclicClass& cw, std::size_t order) {
  return omega_cyc_series(cw).expand(order);
}

// ---------------------------------------------------------------------------
// Runs and markings

/// Factorisation of w' = inf w_1 ... w_n inf into alternately decreasing and
/// increasing runs. Positions run over 0..n+1; run j (1-based) is
/// decreasing when j is odd.
struct RunDecomposition {
  Perm w;
  std::vector<std::vector<int>> runs;  // position sets I_1, ..., I_r
  Subset markable;                     // M_w
  std::vector<int> run_of;             // run_of[k] = j with k in I_j, k = 0..n+1

  std::size_t count() const noexcept { return runs.size(); }
};

inline RunDecomposition runs(const Perm& w) {
  if (w.empty()) throw EmptyPermutation("runs: empty permutation");
  const int n = w.size();
  // The sentinel compares above every label.
  auto value = [&](int pos) { return (pos == 0 || pos == n + 1) ? std::numeric_limits<int>::max() : w.at(pos); };
  RunDecomposition r;
  r.w = w;
  r.run_of.assign(static_cast<std::size_t>(n + 2), 0);
  int pos = 0;
  bool decreasing = true;
  while (pos <= n + 1) {
    std::vector<int> run{pos};
    while (pos + 1 <= n + 1) {
      const bool step_ok = decreasing ? value(pos + 1) < value(pos) : value(pos + 1) > value(pos);
      if (!step_ok) break;
      run.push_back(++pos);
    }
    ++pos;
    for (int k : run) r.run_of[static_cast<std::size_t>(k)] = static_cast<int>(r.runs.size()) + 1;
    r.runs.push_back(std::move(run));
    decreasing = !decreasing;
  }
  for (int i = 1; i <= n; ++i)
    if (r.run_of[static_cast<std::size_t>(i)] == r.run_of[static_cast<std::size_t>(i + 1)]) r.markable.insert(i);
  return r;
}

/// A (w,m)-marking: bars[g] bars in gap g (g = 0 before column 1, g = n
/// after column n) and a set of marked columns.
struct Marking {
  Perm w;
  int m = 0;
  std::vector<int> bars;
  Subset marked;

  int bar_count() const {
    int b = 0;
    for (int x : bars) b += x;
    return b;
  }

  std::string to_string() const {
    std::string s;
    for (int g = 0; g <= w.size(); ++g) {
      s += std::string(static_cast<std::size_t>(bars[static_cast<std::size_t>(g)]), '|');
      if (g < w.size()) {
        const int col = g + 1;
        s += marked.contains(col) ? "[" + std::to_string(w.at(col)) + "]" : std::to_string(w.at(col));
        if (g + 1 < w.size()) s += ' ';
      }
    }
    return s;
  }

  friend bool operator==(const Marking&, const Marking&) = default;
  friend auto operator<=>(const Marking&, const Marking&) = default;
};

/// Whether mk satisfies the (w,m)-marking conditions.
inline bool is_valid_marking(const Marking& mk) {
  const int n = mk.w.size();
  if (static_cast<int>(mk.bars.size()) != n + 1) return false;
  if (std::any_of(mk.bars.begin(), mk.bars.end(), [](int b) { return b < 0; })) return false;
  if (!mk.marked.is_subset_of(runs(mk.w).markable)) return false;
  return mk.bar_count() + mk.marked.size() == mk.m - 1 - pk(mk.w);
}

/// All (w,m)-markings, sorted.
inline std::vector<Marking> enumerate_markings(const Perm& w, int m) {
  const int n = w.size();
  const int total = m - 1 - pk(w);
  std::vector<Marking> out;
  if (total < 0) return out;
  const Subset markable = runs(w).markable;
  for (Subset d : supersets_within(Subset{}, n)) {
    if (!d.is_subset_of(markable) || d.size() > total) continue;
    const int b = total - d.size();
    // Weak compositions of b into n+1 gaps.
    std::vector<int> bars(static_cast<std::size_t>(n + 1), 0);
    auto rec = [&](auto& self, std::size_t gap, int left) -> void {
      if (gap == bars.size() - 1) {
        bars[gap] = left;
        out.push_back(Marking{w, m, bars, d});
        return;
      }
      for (int x = 0; x <= left; ++x) {
        bars[gap] = x;
        self(self, gap + 1, left - x);
      }
    };
    rec(rec, 0, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The marking associated with an enriched w-partition f, |f| <= m.
inline Marking partition_to_marking(const EnrichedMap& f, const Perm& w, int m) {
  if (w.empty()) throw EmptyPermutation("partition_to_marking: empty permutation");
  const Dag order = Dag::total_order(w);
  if (!is_enriched(f, order)) throw DomainError("partition_to_marking: " + f.to_string() + " is not an enriched w-partition");
  if (f.max_magnitude() > m) throw DomainError("partition_to_marking: |f| exceeds m");
  const int n = w.size();
  const RunDecomposition rd = runs(w);
  Marking mk{w, m, std::vector<int>(static_cast<std::size_t>(n + 1), 0), Subset{}};
  // before[k]: marks and bars strictly before column k.
  std::vector<int> before(static_cast<std::size_t>(n + 1), 0);
  for (int k = 1; k <= n; ++k) {
    const int i = rd.run_of[static_cast<std::size_t>(k)];
    const SignedInt v = f.at(w.at(k));
    const int delta = (i % 2 == 0 && !v.positive()) ? 1 : 0;
    const int gamma = (i % 2 == 1 && v.positive()) ? 1 : 0;
    before[static_cast<std::size_t>(k)] = v.magnitude() - (i + 1) / 2 - delta;
    if (rd.markable.contains(k) && delta + gamma == 1) mk.marked.insert(k);
  }
  mk.bars[0] = before[1];
  for (int k = 2; k <= n; ++k)
    mk.bars[static_cast<std::size_t>(k - 1)] =
        before[static_cast<std::size_t>(k)] - before[static_cast<std::size_t>(k - 1)] - (mk.marked.contains(k - 1) ? 1 : 0);
  mk.bars[static_cast<std::size_t>(n)] =
      (m - 1 - pk(w)) - (before[static_cast<std::size_t>(n)] + (mk.marked.contains(n) ? 1 : 0));
  if (!is_valid_marking(mk))
    throw InternalError("partition_to_marking: construction for " + f.to_string() + " gave an invalid marking");
  return mk;
}

}  // namespace toric
