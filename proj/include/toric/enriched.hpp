#pragma once

// Enriched (toric) partitions of DAGs, their brute-force enumeration, the
// weight enumerators Delta and Delta^cyc, and the peak functions K_S and
// K^cyc_S built from them.

#include <compare>
#include <cstdlib>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toric/dag.hpp"
#include "toric/error.hpp"
#include "toric/integer.hpp"
#include "toric/perm.hpp"
#include "toric/qsym.hpp"
#include "toric/subset.hpp"

namespace toric {

/// A nonzero integer, ordered -1 < 1 < -2 < 2 < -3 < 3 < ...
class SignedInt {
 public:
  constexpr explicit SignedInt(int value) : value_(value) {
    if (value == 0) throw DomainError("SignedInt: zero is not allowed");
  }

  /// The value at position t = 0, 1, 2, ... of the order.
  static constexpr SignedInt nth(int t) { return SignedInt((t / 2 + 1) * (t % 2 ? 1 : -1)); }

  constexpr int value() const noexcept { return value_; }
  constexpr int magnitude() const noexcept { return value_ < 0 ? -value_ : value_; }
  constexpr bool positive() const noexcept { return value_ > 0; }

  friend constexpr bool operator==(SignedInt, SignedInt) = default;
  friend constexpr std::strong_ordering operator<=>(SignedInt a, SignedInt b) {
    if (auto c = a.magnitude() <=> b.magnitude(); c != 0) return c;
    return a.positive() <=> b.positive();
  }

 private:
  int value_;
};

/// A map from vertex labels to signed values, sorted by vertex.
class EnrichedMap {
 public:
  using Entry = std::pair<int, SignedInt>;

  EnrichedMap() = default;
  explicit EnrichedMap(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (std::size_t k = 1; k < entries_.size(); ++k)
      if (entries_[k].first == entries_[k - 1].first)
        throw DomainError("EnrichedMap: vertex " + std::to_string(entries_[k].first) + " assigned twice");
  }
  EnrichedMap(std::initializer_list<std::pair<int, int>> entries) {
    std::vector<Entry> e;
    for (const auto& [v, x] : entries) e.emplace_back(v, SignedInt(x));
    *this = EnrichedMap(std::move(e));
  }

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  std::optional<SignedInt> find(int vertex) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), vertex,
                               [](const Entry& e, int v) { return e.first < v; });
    if (it == entries_.end() || it->first != vertex) return std::nullopt;
    return it->second;
  }
  SignedInt at(int vertex) const {
    if (auto v = find(vertex)) return *v;
    throw DomainError("EnrichedMap: no value at vertex " + std::to_string(vertex));
  }

  int max_magnitude() const {
    int m = 0;
    for (const auto& e : entries_) m = std::max(m, e.second.magnitude());
    return m;
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t k = 0; k < entries_.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(entries_[k].first) + ":" + std::to_string(entries_[k].second.value());
    }
    return s + "}";
  }

  friend bool operator==(const EnrichedMap&, const EnrichedMap&) = default;
  friend std::strong_ordering operator<=>(const EnrichedMap& a, const EnrichedMap& b) {
    return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                                  b.entries_.end());
  }

 private:
  std::vector<Entry> entries_;
};

/// Conditions on every arc i -> j: f(i) <= f(j); equal positive values need
/// i < j; equal negative values need i > j.
inline bool is_enriched(const EnrichedMap& f, const Dag& d) {
  for (int v : d.vertices())
    if (!f.find(v)) throw DomainError("is_enriched: no value at vertex " + std::to_string(v));
  for (const auto& [i, j] : d.arcs()) {
    const SignedInt a = f.at(i), b = f.at(j);
    if (a > b) return false;
    if (a == b && (a.positive() ? i > j : i < j)) return false;
  }
  return true;
}

namespace detail {

// Maps with |f| <= m whose value at the first vertex has order index
// `first`, in sorted order.
inline void enriched_with_first(const Dag& d, int m, int first, std::vector<EnrichedMap>& out) {
  const auto& verts = d.vertices();
  const std::size_t n = verts.size();
  const int k = 2 * m;
  std::vector<int> idx(n, 0);
  idx[0] = first;
  std::vector<EnrichedMap::Entry> entries;
  entries.reserve(n);
  while (true) {
    entries.clear();
    for (std::size_t v = 0; v < n; ++v) entries.emplace_back(verts[v], SignedInt::nth(idx[v]));
    EnrichedMap f(entries);
    if (is_enriched(f, d)) out.push_back(std::move(f));
    std::size_t pos = n;
    while (pos > 1 && idx[pos - 1] == k - 1) idx[--pos] = 0;
    if (pos <= 1) break;
    ++idx[pos - 1];
  }
}

}  // namespace detail

/// All enriched d-partitions with |f(x)| <= m, in sorted order. With
/// parallel set, the candidate space is split over the value of the first
/// vertex.
inline std::vector<EnrichedMap> enumerate_enriched(const Dag& d, int m, bool parallel = false) {
  if (m < 0) throw DomainError("enumerate_enriched: negative bound");
  if (d.size() == 0) return {EnrichedMap{}};
  if (m == 0) return {};
  std::vector<std::vector<EnrichedMap>> chunks(static_cast<std::size_t>(2 * m));
  if (parallel) {
    std::vector<std::future<void>> jobs;
    for (int t = 0; t < 2 * m; ++t)
      jobs.push_back(std::async(std::launch::async, [&, t] {
        detail::enriched_with_first(d, m, t, chunks[static_cast<std::size_t>(t)]);
      }));
    for (auto& j : jobs) j.get();
  } else {
    for (int t = 0; t < 2 * m; ++t) detail::enriched_with_first(d, m, t, chunks[static_cast<std::size_t>(t)]);
  }
  std::vector<EnrichedMap> out;
  for (auto& c : chunks) out.insert(out.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
  return out;
}

/// Enriched toric partitions: maps that are enriched for at least one
/// member of the class. Sorted, without repetition.
inline std::vector<EnrichedMap> enumerate_enriched_toric(const ToricClass& tc, int m, bool parallel = false) {
  std::set<EnrichedMap> out;
  for (const Dag& member : tc.members())
    for (auto& f : enumerate_enriched(member, m, parallel)) out.insert(std::move(f));
  return {out.begin(), out.end()};
}

inline std::vector<EnrichedMap> enumerate_enriched_toric(const CyclicClass& cw, int m, bool parallel = false) {
  return enumerate_enriched_toric(toric_class(Dag::total_order(cw.canonical())), m, parallel);
}

// ---------------------------------------------------------------------------
// Linear weight enumerators and peak functions

namespace detail {
inline Subset plus_one(Subset e) { return Subset(e.bits() << 1); }
}  // namespace detail

/// Delta_w = sum over E in [n-1] with Pk w inside E + (E+1) of
/// 2^{|E|+1} M_{n,E}. The empty word gives the unit.
inline QSym delta_perm(const Perm& w) {
  const int n = w.size();
  if (n == 0) return QSym::one();
  const Subset peaks = peak_set(w);
  QSym q(n);
  for (Subset e : all_subsets(n - 1))
    if (peaks.is_subset_of(e | detail::plus_one(e))) q.add(e, pow2(e.size() + 1));
  return q;
}

/// Delta_d = sum of Delta_w over linear extensions.
inline QSym delta_dag(const Dag& d) {
  QSym q(d.size());
  for_each_linear_extension(d, [&q](const Perm& w) { q += delta_perm(w); });
  return q;
}

/// F-basis coefficients of Delta_w: 2^{pk w + 1} on every D in [n-1] with
/// Pk w inside the symmetric difference of D and D+1.
inline Coeffs delta_fundamental_expansion(const Perm& w) {
  const int n = w.size();
  if (n == 0) return {{Subset{}, Int(1)}};
  const Subset peaks = peak_set(w);
  const Int c = pow2(peaks.size() + 1);
  Coeffs out;
  for (Subset e : all_subsets(n - 1))
    if (peaks.is_subset_of(e ^ detail::plus_one(e))) out.emplace(e, c);
  return out;
}

/// K_S = Delta_w for the lexicographically first w in S_n with Pk w = S.
inline QSym k_peak(StatSet s, int n) {
  if (!is_peak_set(s, n)) throw DomainError("k_peak: " + s.to_string() + " is not a peak set in S_" + std::to_string(n));
  auto w = find_peak_witness(s, n);
  if (!w) throw InternalError("k_peak: no witness for " + s.to_string());
  return delta_perm(*w);
}

// ---------------------------------------------------------------------------
// Cyclic weight enumerators and peak functions

/// K^cyc_S = sum over E in [n] with S inside E + (E+1) of 2^{|E|} M^cyc_{n,E},
/// all shifts taken mod n. Degree 0 gives the unit.
inline CQSym kcyc(StatSet s, int n) {
  if (!is_cyclic_peak_set(s, n))
    throw DomainError("kcyc: " + s.to_string() + " is not a cyclic peak set in S_" + std::to_string(n));
  if (n == 0) return CQSym::one();
  CQSym q(n);
  for (Subset e : all_subsets(n))
    if (s.is_subset_of(e | shift_set(e, 1, n))) q.add(e, pow2(e.size()));
  return q;
}

/// Delta^cyc_{[w]} as the sum of Delta_v over the rotations v of w,
/// regrouped into cyclic monomials.
inline CQSym delta_cyc(const CyclicClass& cw) {
  if (cw.size() == 0) return CQSym::one();
  QSym sum(cw.size());
  for (const Perm& v : cw.members()) sum += delta_perm(v);
  return from_qsym(sum);
}

/// Delta^cyc_{[d]} = sum of K^cyc_{cPk w} over toric extensions [w].
inline CQSym delta_toric(const ToricClass& tc) {
  const int n = tc.vertex_count();
  CQSym q(n);
  for (const CyclicClass& cw : toric_extensions(tc)) q += kcyc(cpeak_set(cw.canonical()), n);
  return q;
}

/// F^cyc-basis coefficients of K^cyc_S: 2^{|S|} for every E in [n] with S
/// inside the symmetric difference of E and E+1, accumulated per class. The
/// empty set is kept as its own key.
inline Coeffs kcyc_fund_expansion(StatSet s, int n) {
  if (!is_cyclic_peak_set(s, n))
    throw DomainError("kcyc_fund_expansion: " + s.to_string() + " is not a cyclic peak set in S_" + std::to_string(n));
  if (n == 0) return {{Subset{}, Int(1)}};
  const Int c = pow2(s.size());
  Coeffs out;
  for (Subset e : all_subsets(n))
    if (s.is_subset_of(e ^ shift_set(e, 1, n))) detail::add_coeff(out, e.empty() ? e : canonical_cyclic(e, n), c);
  return out;
}

/// Canonical cyclic peak sets of S_n, i.e. its K^cyc basis indices, in
/// cardinality-then-lex order.
inline std::vector<Subset> cyclic_peak_classes(int n) {
  std::vector<Subset> out;
  if (n <= 1) return {Subset{}};
  for (Subset e : cyclic_subset_classes(n))
    if (is_cyclic_peak_set(e, n)) out.push_back(e);
  return out;
}

struct TriangularReport {
  int n = 0;
  std::vector<Subset> rows;  // canonical cyclic peak sets S_1 < ... < S_k
  std::vector<Subset> cols;  // f(S_j) = {s_1, s_2 - 1, ..., s_k - 1}
  std::vector<std::vector<Int>> matrix;
  bool upper_triangular = false;
  bool nonzero_diagonal = false;
  std::size_t rank = 0;
  bool full_rank() const { return rank == rows.size(); }
};

/// Coefficient matrix of M^cyc_{n,f(S_j)} in K^cyc_{S_i}.
inline TriangularReport kcyc_triangular_matrix(int n) {
  if (n < 2) throw DomainError("kcyc_triangular_matrix: needs n >= 2");
  TriangularReport r;
  r.n = n;
  r.rows = cyclic_peak_classes(n);
  for (Subset s : r.rows) {
    const auto el = s.elements();
    Subset f;
    f.insert(el.front());
    for (std::size_t k = 1; k < el.size(); ++k) f.insert(el[k] - 1);
    r.cols.push_back(f);
  }
  for (Subset s : r.rows) {
    const CQSym k = kcyc(s, n);
    std::vector<Int> row;
    for (Subset f : r.cols) row.push_back(k.coeff(f));
    r.matrix.push_back(std::move(row));
  }
  r.upper_triangular = true;
  r.nonzero_diagonal = true;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    if (r.matrix[i][i] == 0) r.nonzero_diagonal = false;
    for (std::size_t j = 0; j < i; ++j)
      if (r.matrix[i][j] != 0) r.upper_triangular = false;
  }
  r.rank = matrix_rank(r.matrix);
  return r;
}

struct PeakProductReport {
  CQSym lhs;  // K^cyc_U * K^cyc_T by multiplication in cQSym
  CQSym rhs;  // sum of K^cyc_{cPk sigma} over toric extensions of the union
  Perm pi;
  Perm w;  // witness for T, labels shifted up by mU
  std::vector<CyclicClass> extensions;
  bool equal = false;
};

/// K^cyc_U * K^cyc_T computed twice: as a product in cQSym, and as a sum
/// over toric extensions of the disjoint union of witness total orders.
inline PeakProductReport cyclic_peak_product(StatSet u, int mu, StatSet t, int nt) {
  if (!is_cyclic_peak_set(u, mu)) throw DomainError("cyclic_peak_product: invalid cyclic peak set " + u.to_string());
  if (!is_cyclic_peak_set(t, nt)) throw DomainError("cyclic_peak_product: invalid cyclic peak set " + t.to_string());
  auto pi = find_cyclic_peak_witness(u, mu);
  auto w = find_cyclic_peak_witness(t, nt);
  if (!pi || !w) throw InternalError("cyclic_peak_product: witness search failed");
  PeakProductReport r;
  r.pi = *pi;
  r.w = w->shifted(mu);
  r.lhs = multiply_cyclic(kcyc(u, mu), kcyc(t, nt));
  const Dag joined = disjoint_union(Dag::total_order(r.pi), Dag::total_order(r.w));
  r.extensions = toric_extensions(joined);
  r.rhs = CQSym(mu + nt);
  for (const CyclicClass& sigma : r.extensions) r.rhs += kcyc(cpeak_set(sigma.canonical()), mu + nt);
  r.equal = r.lhs == r.rhs;
  return r;
}

}  // namespace toric
