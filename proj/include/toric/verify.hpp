#pragma once

// Self-check harness: named suites of identities evaluated exhaustively on
// small instances. Each check counts cases and keeps the first failure.

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "toric/dag.hpp"
#include "toric/enriched.hpp"
#include "toric/orderpoly.hpp"
#include "toric/perm.hpp"
#include "toric/qsym.hpp"

namespace toric {

struct Check {
  std::string suite;
  std::string name;
  long long cases = 0;
  long long failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return failures == 0; }

  template <class Describe>
  void record(bool ok, Describe&& describe) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = describe();
  }
};

/// Size bounds for a suite run. Negative values select the suite default.
struct Bounds {
  int n = -1;
  int m = -1;
  bool parallel = false;
};

/// All DAGs on the vertex set [k].
inline std::vector<Dag> all_dags(int k) {
  std::vector<Arc> pairs;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::vector<int> verts(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) verts[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Dag> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Arc> arcs;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if ((mask >> b) & 1U) arcs.push_back(pairs[b]);
    try {
      out.emplace_back(verts, std::move(arcs));
    } catch (const CycleError&) {
    }
  }
  return out;
}

/// E(d) splits as the disjoint union of E(w) over w in L(d).
inline bool linear_decomposition_holds(const Dag& d, int m, bool parallel = false) {
  const auto whole = enumerate_enriched(d, m, parallel);
  std::vector<EnrichedMap> parts;
  for (const Perm& w : linear_extensions(d)) {
    auto e = enumerate_enriched(Dag::total_order(w), m, parallel);
    parts.insert(parts.end(), e.begin(), e.end());
  }
  std::sort(parts.begin(), parts.end());
  if (std::adjacent_find(parts.begin(), parts.end()) != parts.end()) return false;
  return parts == whole;
}

/// E^tor([d]) splits as the disjoint union of E^tor([w]) over [w] in L^tor([d]).
inline bool toric_decomposition_holds(const Dag& d, int m, bool parallel = false) {
  const ToricClass tc = toric_class(d);
  const auto whole = enumerate_enriched_toric(tc, m, parallel);
  std::vector<EnrichedMap> parts;
  for (const CyclicClass& cw : toric_extensions(tc)) {
    auto e = enumerate_enriched_toric(cw, m, parallel);
    parts.insert(parts.end(), e.begin(), e.end());
  }
  std::sort(parts.begin(), parts.end());
  if (std::adjacent_find(parts.begin(), parts.end()) != parts.end()) return false;
  return parts == whole;
}

/// Cyclic classes of S_n, sorted by canonical representative.
inline std::vector<CyclicClass> all_cyclic_classes(int n) {
  std::set<CyclicClass> out;
  for (const Perm& w : all_perms(n)) out.insert(CyclicClass::of(w));
  return {out.begin(), out.end()};
}

namespace detail {

inline Check make_check(std::string_view suite, std::string_view name) {
  Check c;
  c.suite = suite;
  c.name = name;
  return c;
}

inline int pick(int given, int fallback) { return given < 0 ? fallback : given; }

inline std::vector<Check> suite_table1() {
  // Expected M-basis expansions of M^cyc for the five cyclic compositions of 4.
  struct Row {
    Composition alpha;
    std::vector<std::pair<Subset, int>> m_terms;
  };
  const std::vector<Row> rows = {
      {{4}, {{Subset{}, 1}}},
      {{1, 3}, {{Subset{1}, 1}, {Subset{3}, 1}}},
      {{2, 2}, {{Subset{2}, 2}}},
      {{1, 1, 2}, {{Subset{1, 2}, 1}, {Subset{1, 3}, 1}, {Subset{2, 3}, 1}}},
      {{1, 1, 1, 1}, {{Subset{1, 2, 3}, 4}}},
  };
  Check c = make_check("table1", "cyclic monomials of degree 4");
  for (const Row& r : rows) {
    QSym expected(4);
    for (const auto& [e, k] : r.m_terms) expected.add(e, k);
    const QSym got = cyclic_monomial_as_qsym(4, psi_preimage(r.alpha));
    c.record(got == expected, [&] { return r.alpha.to_string() + ": got " + got.to_string(); });
  }
  Check classes = make_check("table1", "five cyclic classes in degree 4");
  classes.record(cyclic_subset_classes(4).size() == 5, [] { return std::string("wrong class count"); });
  return {c, classes};
}

inline std::vector<Check> suite_cyclic_fundamental(const Bounds& b) {
  const int max_n = pick(b.n, 5), max_m = pick(b.m, 4);
  Check via_f = make_check("cyclic-fundamental", "definition equals sum of rotated F");
  Check oracle = make_check("cyclic-fundamental", "pair enumeration equals truncation");
  Check incl = make_check("cyclic-fundamental", "inclusion-exclusion recovers M^cyc");
  Check shift = make_check("cyclic-fundamental", "invariance under cyclic shift");
  Check round = make_check("cyclic-fundamental", "from_qsym inverts expansion");
  for (int n = 1; n <= max_n; ++n) {
    for (Subset e : all_subsets(n)) {
      if (e.empty()) continue;
      const std::string tag = std::to_string(n) + "," + e.to_string();
      const CQSym fc = cyclic_fundamental(n, e);
      via_f.record(expand(fc) == cyclic_fundamental_via_F(n, e), [&] { return tag; });
      for (int m = 1; m <= max_m; ++m)
        oracle.record(fcyc_pair_oracle(n, e, m) == to_trunc(fc, m), [&] { return tag + " m=" + std::to_string(m); });
      CQSym alt(n);
      for (Subset l : supersets_within(e, n))
        alt += cyclic_fundamental(n, l) * Int((l - e).size() % 2 ? -1 : 1);
      incl.record(alt == cyclic_monomial(n, e), [&] { return tag; });
      for (Subset s : cyclic_orbit(e, n))
        shift.record(cyclic_fundamental(n, s) == fc && cyclic_monomial(n, s) == cyclic_monomial(n, e),
                     [&] { return tag + " vs " + s.to_string(); });
      round.record(from_qsym(cyclic_monomial_as_qsym(n, e)) == cyclic_monomial(n, e), [&] { return tag; });
    }
  }
  return {via_f, oracle, incl, shift, round};
}

inline std::vector<Check> suite_qsym(const Bounds& b) {
  const int max_n = pick(b.n, 5);
  Check mult = make_check("qsym", "quasi-shuffle equals polynomial product");
  Check fund = make_check("qsym", "fundamental basis round trip");
  Check cyc = make_check("qsym", "cyclic fundamental basis round trip");
  for (int p = 0; p <= max_n; ++p)
    for (int q = 0; p + q <= max_n; ++q)
      for (Subset e : all_subsets(std::max(p - 1, 0)))
        for (Subset f : all_subsets(std::max(q - 1, 0))) {
          const QSym a = monomial(p, e), c = monomial(q, f);
          const int vars = p + q;
          const QSym prod = multiply(a, c);
          const bool ok = read_monomial_basis(to_trunc(a, vars) * to_trunc(c, vars), vars) == prod;
          mult.record(ok, [&] { return a.to_string() + " * " + c.to_string(); });
        }
  for (int n = 0; n <= max_n; ++n) {
    for (Subset e : all_subsets(std::max(n - 1, 0))) {
      const QSym f = fundamental(n, e);
      const Coeffs back = to_fundamental(f);
      fund.record(back.size() == 1 && back.begin()->first == e && back.begin()->second == 1,
                  [&] { return f.to_string(); });
    }
    if (n == 0) continue;
    for (Subset cls : cyclic_subset_classes(n)) {
      const Coeffs back = to_cyclic_fundamental(cyclic_fundamental(n, cls));
      cyc.record(back.size() == 1 && back.begin()->first == cls && back.begin()->second == 1,
                 [&] { return std::to_string(n) + "," + cls.to_string(); });
    }
  }
  return {mult, fund, cyc};
}

inline std::vector<Check> suite_dag(const Bounds& b) {
  const int max_n = pick(b.n, 5);
  Check rot = make_check("dag", "toric class of a total order is its rotations");
  Check invol = make_check("dag", "flip is an involution");
  Check inv = make_check("dag", "toric extensions agree across the class");
  Check poset = make_check("dag", "toric transitivity agrees across the class");
  Check shuf = make_check("dag", "extensions of a disjoint union are shuffles");
  for (int n = 1; n <= std::min(max_n, 6); ++n)
    for (const Perm& w : all_perms(n)) {
      const ToricClass tc = toric_class(Dag::total_order(w));
      std::vector<Perm> got;
      for (const Dag& d : tc.members())
        if (auto p = d.as_total_order()) got.push_back(*p);
      auto want = rotations(w);
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      rot.record(tc.size() == static_cast<std::size_t>(n) && got == want, [&] { return w.to_string(); });
    }
  for (int k = 1; k <= std::min(max_n, 4); ++k)
    for (const Dag& d : all_dags(k)) {
      for (int v : d.vertices()) {
        const auto src = sources(d), snk = sinks(d);
        const bool legal = std::binary_search(src.begin(), src.end(), v) || std::binary_search(snk.begin(), snk.end(), v);
        if (!legal) continue;
        invol.record(flip(flip(d, v), v) == d, [&] { return d.to_string() + " at " + std::to_string(v); });
      }
      const ToricClass tc = toric_class(d);
      const auto ext = toric_extensions(tc);
      for (const Dag& member : tc.members())
        inv.record(toric_extensions(member) == ext, [&] { return d.to_string() + " vs " + member.to_string(); });
      bool agree = true;
      try {
        is_toric_poset(tc);
      } catch (const InternalError&) {
        agree = false;
      }
      poset.record(agree, [&] { return d.to_string(); });
    }
  for (int total = 0; total <= std::min(max_n + 1, 7); ++total)
    for (int a = 0; a <= total; ++a) {
      const Perm p = Perm::identity(a);
      const Perm s = Perm::identity(total - a).shifted(a);
      const Dag u = disjoint_union(Dag::total_order(p), Dag::total_order(s));
      shuf.record(linear_extensions(u) == shuffle_set(p, s), [&] { return p.to_string() + " | " + s.to_string(); });
    }
  return {rot, invol, inv, poset, shuf};
}

inline std::vector<Check> suite_fundamental_lemma(const Bounds& b) {
  const int max_n = pick(b.n, 4), max_m = pick(b.m, 3);
  Check lin = make_check("fundamental-lemma", "linear decomposition over L(d)");
  Check tor = make_check("fundamental-lemma", "toric decomposition over L^tor([d])");
  Check counts = make_check("fundamental-lemma", "counts equal specialised enumerators");
  for (int k = 1; k <= max_n; ++k)
    for (const Dag& d : all_dags(k)) {
      const ToricClass tc = toric_class(d);
      const QSym delta = delta_dag(d);
      const CQSym dcyc = delta_toric(tc);
      for (int m = 0; m <= max_m; ++m) {
        const std::string tag = d.to_string() + " m=" + std::to_string(m);
        lin.record(linear_decomposition_holds(d, m, b.parallel), [&] { return tag; });
        tor.record(toric_decomposition_holds(d, m, b.parallel), [&] { return tag; });
        const bool ok = Int(enumerate_enriched(d, m, b.parallel).size()) == specialize_ones(delta, m) &&
                        Int(enumerate_enriched_toric(tc, m, b.parallel).size()) == specialize_ones(dcyc, m);
        counts.record(ok, [&] { return tag; });
      }
    }
  return {lin, tor, counts};
}

inline std::vector<Check> suite_order_poly(const Bounds& b) {
  const int max_n = pick(b.n, 5), max_m = pick(b.m, 3);
  const int series_m = std::max(max_m, 6);
  Check brute = make_check("order-poly", "formula equals brute-force count");
  Check series = make_check("order-poly", "formula equals series coefficient");
  Check cyc = make_check("order-poly", "cyclic formula equals rotation sum and series");
  Check cyc_brute = make_check("order-poly", "cyclic formula equals brute-force count");
  Check rot = make_check("order-poly", "rotations with a lost peak number 2 cpk");
  Check run = make_check("order-poly", "r = 2pk+2 and |M_w| = n-2pk-1");
  Check poly = make_check("order-poly", "interpolation reproduces further values");
  for (int n = 1; n <= max_n; ++n) {
    for (const Perm& w : all_perms(n)) {
      const auto g = gf_omega(w, static_cast<std::size_t>(series_m));
      for (int m = 0; m <= series_m; ++m) {
        const Int f = omega(w, m);
        series.record(f == g[static_cast<std::size_t>(m)], [&] { return w.to_string() + " m=" + std::to_string(m); });
        if (m <= max_m)
          brute.record(f == Int(enumerate_enriched(Dag::total_order(w), m, b.parallel).size()),
                       [&] { return w.to_string() + " m=" + std::to_string(m); });
      }
      const RunDecomposition rd = runs(w);
      run.record(static_cast<int>(rd.count()) == 2 * pk(w) + 2 && rd.markable.size() == n - 2 * pk(w) - 1,
                 [&] { return w.to_string(); });
      // Lagrange interpolation through m = 0..n+1 predicts m = n+2..n+4.
      const int pts = n + 2;
      std::vector<Rational> ys;
      for (int m = 0; m < pts; ++m) ys.emplace_back(omega(w, m));
      for (int x = pts; x < pts + 3; ++x) {
        Rational acc = 0;
        for (int i = 0; i < pts; ++i) {
          Rational term = ys[static_cast<std::size_t>(i)];
          for (int j = 0; j < pts; ++j)
            if (j != i) term *= Rational(x - j) / Rational(i - j);
          acc += term;
        }
        poly.record(acc == Rational(omega(w, x)), [&] { return w.to_string() + " m=" + std::to_string(x); });
      }
      if (n <= 6) {
        const int c = cpk(w);
        int lost = 0;
        bool ok = true;
        for (const Perm& v : rotations(w)) {
          if (pk(v) == c - 1) ++lost;
          else if (pk(v) != c) ok = false;
        }
        rot.record(ok && lost == 2 * c, [&] { return w.to_string(); });
      }
    }
    for (const CyclicClass& cw : all_cyclic_classes(n)) {
      const auto g = gf_omega_cyc(cw, static_cast<std::size_t>(series_m));
      for (int m = 0; m <= series_m; ++m) {
        const Int f = omega_cyc(cw, m);
        cyc.record(f == omega_cyc_by_rotation(cw, m) && f == g[static_cast<std::size_t>(m)],
                   [&] { return cw.canonical().to_string() + " m=" + std::to_string(m); });
        if (m <= max_m)
          cyc_brute.record(f == Int(enumerate_enriched_toric(cw, m, b.parallel).size()),
                           [&] { return cw.canonical().to_string() + " m=" + std::to_string(m); });
      }
    }
  }
  return {brute, series, cyc, cyc_brute, rot, run, poly};
}

inline std::vector<Check> suite_markings(const Bounds& b) {
  const int max_n = pick(b.n, 4), max_m = pick(b.m, 3);
  Check count = make_check("markings", "marking count times 2^(2pk+1) equals omega");
  Check fiber = make_check("markings", "every fibre has size 2^(2pk+1)");
  for (int n = 1; n <= max_n; ++n)
    for (const Perm& w : all_perms(n))
      for (int m = 0; m <= std::max(max_m, 4); ++m) {
        const auto marks = enumerate_markings(w, m);
        const Int expected_fiber = pow2(2 * pk(w) + 1);
        count.record(Int(marks.size()) * expected_fiber == omega(w, m),
                     [&] { return w.to_string() + " m=" + std::to_string(m); });
        if (m > max_m) continue;
        std::map<Marking, long long> sizes;
        bool total = true;
        for (const EnrichedMap& f : enumerate_enriched(Dag::total_order(w), m, b.parallel)) {
          try {
            ++sizes[partition_to_marking(f, w, m)];
          } catch (const Error&) {
            total = false;
          }
        }
        bool ok = total && sizes.size() == marks.size();
        for (const Marking& mk : marks) {
          auto it = sizes.find(mk);
          ok = ok && it != sizes.end() && Int(it->second) == expected_fiber;
        }
        fiber.record(ok, [&] { return w.to_string() + " m=" + std::to_string(m); });
      }
  return {count, fiber};
}

inline std::vector<Check> suite_peaks(const Bounds& b) {
  const int max_n = pick(b.n, 6);
  Check lin = make_check("peaks", "Delta_w depends only on the peak set");
  Check cyc = make_check("peaks", "Delta^cyc depends only on the cyclic peak set");
  Check fexp = make_check("peaks", "F expansion of Delta_w");
  Check kf = make_check("peaks", "F^cyc expansion of K^cyc");
  for (int n = 1; n <= max_n; ++n) {
    for (const Perm& w : all_perms(n)) {
      lin.record(delta_perm(w) == k_peak(peak_set(w), n), [&] { return w.to_string(); });
      fexp.record(delta_fundamental_expansion(w) == to_fundamental(delta_perm(w)), [&] { return w.to_string(); });
      if (n <= 5)
        cyc.record(delta_cyc(CyclicClass::of(w)) == kcyc(cpeak_set(w), n), [&] { return w.to_string(); });
    }
    for (Subset s : cyclic_peak_classes(n))
      kf.record(from_cyclic_fundamental(n, kcyc_fund_expansion(s, n)) == kcyc(s, n),
                [&] { return std::to_string(n) + "," + s.to_string(); });
  }
  return {lin, cyc, fexp, kf};
}

inline std::vector<Check> suite_triangularity(const Bounds& b) {
  const int max_n = pick(b.n, 6);
  Check tri = make_check("triangularity", "K^cyc against M^cyc_f(S) is upper triangular, nonzero diagonal");
  Check rank = make_check("triangularity", "K^cyc has full rank");
  for (int n = 2; n <= max_n; ++n) {
    const TriangularReport r = kcyc_triangular_matrix(n);
    tri.record(r.upper_triangular && r.nonzero_diagonal, [&] { return "n=" + std::to_string(n); });
    rank.record(r.full_rank(), [&] { return "n=" + std::to_string(n); });
  }
  return {tri, rank};
}

inline std::vector<Check> suite_subring(const Bounds& b) {
  const int max_n = pick(b.n, 6);
  Check c = make_check("subring", "K^cyc_U K^cyc_T equals the toric-extension sum");
  for (int mu = 0; mu <= max_n; ++mu)
    for (int nt = 0; mu + nt <= max_n; ++nt)
      for (Subset u : cyclic_peak_classes(mu))
        for (Subset t : cyclic_peak_classes(nt)) {
          const PeakProductReport r = cyclic_peak_product(u, mu, t, nt);
          c.record(r.equal, [&] {
            return u.to_string() + "@" + std::to_string(mu) + " * " + t.to_string() + "@" + std::to_string(nt);
          });
        }
  return {c};
}

inline std::vector<Check> suite_shuffle(const Bounds& b) {
  const int max_n = pick(b.n, 6);
  Check c = make_check("shuffle", "K_Pk(pi) K_Pk(sigma) equals the sum over shuffles");
  std::map<std::pair<Subset, int>, QSym> memo;
  auto k = [&memo](Subset s, int n) -> const QSym& {
    auto it = memo.find({s, n});
    if (it == memo.end()) it = memo.emplace(std::pair{s, n}, k_peak(s, n)).first;
    return it->second;
  };
  for (int total = 0; total <= max_n; ++total)
    for (int a = 0; a <= total; ++a) {
      // Every split of the labels [total] into a first block of size a.
      std::vector<bool> in_first(static_cast<std::size_t>(total), false);
      std::fill(in_first.begin(), in_first.begin() + a, true);
      do {
        std::vector<int> first, second;
        for (int x = 1; x <= total; ++x) (in_first[static_cast<std::size_t>(x - 1)] ? first : second).push_back(x);
        std::vector<int> pw = first, sw = second;
        do {
          do {
            const Perm pi(pw), sigma(sw);
            const QSym lhs = multiply(k(peak_set(pi), a), k(peak_set(sigma), total - a));
            QSym rhs(total);
            for (const Perm& tau : shuffle_set(pi, sigma)) rhs += k(peak_set(tau), total);
            c.record(lhs == rhs, [&] { return pi.to_string() + " * " + sigma.to_string(); });
          } while (std::next_permutation(sw.begin(), sw.end()));
        } while (std::next_permutation(pw.begin(), pw.end()));
      } while (std::prev_permutation(in_first.begin(), in_first.end()));
    }
  return {c};
}

}  // namespace detail

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "table1", "qsym", "cyclic-fundamental", "dag", "fundamental-lemma", "peaks",
      "order-poly", "markings", "triangularity", "subring", "shuffle"};
  return names;
}

/// Runs one suite, or every suite for "all". Unknown names throw DomainError.
inline std::vector<Check> run_suite(std::string_view name, const Bounds& b = {}) {
  if (name == "all") {
    std::vector<Check> out;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s, b);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "table1") return detail::suite_table1();
  if (name == "qsym") return detail::suite_qsym(b);
  if (name == "cyclic-fundamental") return detail::suite_cyclic_fundamental(b);
  if (name == "dag") return detail::suite_dag(b);
  if (name == "fundamental-lemma") return detail::suite_fundamental_lemma(b);
  if (name == "peaks") return detail::suite_peaks(b);
  if (name == "order-poly") return detail::suite_order_poly(b);
  if (name == "markings") return detail::suite_markings(b);
  if (name == "triangularity") return detail::suite_triangularity(b);
  if (name == "subring") return detail::suite_subring(b);
  if (name == "shuffle") return detail::suite_shuffle(b);
  throw DomainError("unknown suite: " + std::string(name));
}

}  // namespace toric
