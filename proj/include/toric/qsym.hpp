#pragma once

// Homogeneous quasi-symmetric and cyclic quasi-symmetric functions with
// exact integer coefficients.
//
// Everything is stored in a monomial basis: QSym keys are subsets E of
// [n-1] standing for M_{n,E} = M_{Phi(E)}; CQSym keys are canonical cyclic
// classes of nonempty subsets E of [n] standing for M^cyc_{n,E}. The
// fundamental bases are constructors and coefficient views on top.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toric/error.hpp"
#include "toric/integer.hpp"
#include "toric/subset.hpp"

namespace toric {

/// Coefficients indexed by subsets, for views onto bases other than the
/// stored monomial one.
using Coeffs = std::map<Subset, Int>;

namespace detail {

inline void add_coeff(Coeffs& terms, Subset key, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace detail

/// A homogeneous element of QSym_n in the monomial basis.
class QSym {
 public:
  QSym() = default;
  explicit QSym(int degree) : degree_(degree) {
    if (degree < 0) throw DomainError("QSym: negative degree");
  }

  /// The unit M_{0,{}}.
  static QSym one() {
    QSym q(0);
    q.add(Subset{}, 1);
    return q;
  }

  int degree() const noexcept { return degree_; }
  const Coeffs& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Int coeff(Subset e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
  }

  /// Adds c * M_{n,E}.
  QSym& add(Subset e, const Int& c) {
    check_key(e);
    detail::add_coeff(terms_, e, c);
    return *this;
  }

  QSym& operator+=(const QSym& o) {
    adopt_degree(o);
    for (const auto& [e, c] : o.terms_) detail::add_coeff(terms_, e, c);
    return *this;
  }
  QSym& operator-=(const QSym& o) {
    adopt_degree(o);
    for (const auto& [e, c] : o.terms_) detail::add_coeff(terms_, e, -c);
    return *this;
  }
  QSym& operator*=(const Int& s) {
    if (s == 0) terms_.clear();
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend QSym operator+(QSym a, const QSym& b) { return a += b; }
  friend QSym operator-(QSym a, const QSym& b) { return a -= b; }
  friend QSym operator*(QSym a, const Int& s) { return a *= s; }
  friend QSym operator*(const Int& s, QSym a) { return a *= s; }

  /// Zero elements compare equal regardless of their nominal degree.
  friend bool operator==(const QSym& a, const QSym& b) {
    if (a.terms_ != b.terms_) return false;
    return a.terms_.empty() || a.degree_ == b.degree_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += c.str() + "*M" + phi(degree_, e).to_string();
    }
    return s;
  }

 private:
  void check_key(Subset e) const {
    if (degree_ == 0 ? !e.empty() : !e.within(1, degree_ - 1))
      throw OutOfRange("QSym: " + e.to_string() + " is not a subset of [" + std::to_string(degree_ - 1) + "]");
  }
  void adopt_degree(const QSym& o) {
    if (o.is_zero()) return;
    if (is_zero()) {
      degree_ = o.degree_;
      return;
    }
    if (o.degree_ != degree_)
      throw DomainError("QSym: degree mismatch " + std::to_string(degree_) + " vs " + std::to_string(o.degree_));
  }

  int degree_ = 0;
  Coeffs terms_;
};

/// A homogeneous element of cQSym_n in the cyclic monomial basis. For n = 0
/// the only basis element is the constant 1, keyed by the empty set.
class CQSym {
 public:
  CQSym() = default;
  explicit CQSym(int degree) : degree_(degree) {
    if (degree < 0) throw DomainError("CQSym: negative degree");
  }

  static CQSym one() {
    CQSym q(0);
    q.add(Subset{}, 1);
    return q;
  }

  int degree() const noexcept { return degree_; }
  const Coeffs& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of the class containing e.
  Int coeff(Subset e) const {
    if (degree_ > 0 && e.empty()) return 0;
    auto it = terms_.find(key_of(e));
    return it == terms_.end() ? Int(0) : it->second;
  }

  /// Adds c * M^cyc_{n,E}; E may be any member of its class. M^cyc_{n,{}}
  /// is zero for n >= 1.
  CQSym& add(Subset e, const Int& c) {
    if (degree_ > 0 && e.empty()) return *this;
    detail::add_coeff(terms_, key_of(e), c);
    return *this;
  }

  CQSym& operator+=(const CQSym& o) {
    adopt_degree(o);
    for (const auto& [e, c] : o.terms_) detail::add_coeff(terms_, e, c);
    return *this;
  }
  CQSym& operator-=(const CQSym& o) {
    adopt_degree(o);
    for (const auto& [e, c] : o.terms_) detail::add_coeff(terms_, e, -c);
    return *this;
  }
  CQSym& operator*=(const Int& s) {
    if (s == 0) terms_.clear();
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend CQSym operator+(CQSym a, const CQSym& b) { return a += b; }
  friend CQSym operator-(CQSym a, const CQSym& b) { return a -= b; }
  friend CQSym operator*(CQSym a, const Int& s) { return a *= s; }
  friend CQSym operator*(const Int& s, CQSym a) { return a *= s; }

  friend bool operator==(const CQSym& a, const CQSym& b) {
    if (a.terms_ != b.terms_) return false;
    return a.terms_.empty() || a.degree_ == b.degree_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += c.str() + "*Mcyc" + (degree_ == 0 ? std::string("()") : canonical_rotation(psi(degree_, e)).to_string());
    }
    return s;
  }

 private:
  Subset key_of(Subset e) const {
    if (degree_ == 0) {
      if (!e.empty()) throw OutOfRange("CQSym: degree 0 admits only the empty key");
      return e;
    }
    if (!e.within(1, degree_))
      throw OutOfRange("CQSym: " + e.to_string() + " is not a subset of [" + std::to_string(degree_) + "]");
    return canonical_cyclic(e, degree_);
  }
  void adopt_degree(const CQSym& o) {
    if (o.is_zero()) return;
    if (is_zero()) {
      degree_ = o.degree_;
      return;
    }
    if (o.degree_ != degree_)
      throw DomainError("CQSym: degree mismatch " + std::to_string(degree_) + " vs " + std::to_string(o.degree_));
  }

  int degree_ = 0;
  Coeffs terms_;
};

// ---------------------------------------------------------------------------
// QSym bases

inline QSym monomial(int n, Subset e) {
  QSym q(n);
  q.add(e, 1);
  return q;
}

inline QSym monomial(const Composition& a) { return monomial(a.total(), phi_inv(a)); }

/// F_{n,E} = sum over L containing E of M_{n,L}.
inline QSym fundamental(int n, Subset e) {
  QSym q(n);
  if (n == 0) return monomial(0, e);
  if (!e.within(1, n - 1)) throw OutOfRange("fundamental: " + e.to_string() + " not inside [" + std::to_string(n - 1) + "]");
  for (Subset l : supersets_within(e, n - 1)) q.add(l, 1);
  return q;
}

/// Coefficients of a in the fundamental basis, by Moebius inversion:
/// M_{n,E} = sum_{L >= E} (-1)^{|L - E|} F_{n,L}.
inline Coeffs to_fundamental(const QSym& a) {
  Coeffs out;
  const int n = a.degree();
  for (const auto& [e, c] : a.terms()) {
    if (n == 0) {
      detail::add_coeff(out, e, c);
      continue;
    }
    for (Subset l : supersets_within(e, n - 1)) detail::add_coeff(out, l, ((l - e).size() % 2) ? Int(-c) : c);
  }
  return out;
}

inline QSym from_fundamental(int n, const Coeffs& f) {
  QSym q(n);
  for (const auto& [l, c] : f) q += fundamental(n, l) * c;
  return q;
}

// ---------------------------------------------------------------------------
// cQSym bases

inline CQSym cyclic_monomial(int n, Subset e) {
  CQSym q(n);
  q.add(e, 1);
  return q;
}

/// Expansion of a cyclic element in the monomial basis of QSym:
/// M^cyc_{n,E} = sum_{e in E} M_{n,(E-e) cap [n-1]}.
inline QSym expand(const CQSym& a) {
  const int n = a.degree();
  QSym q(n);
  if (n == 0) {
    for (const auto& [e, c] : a.terms()) q.add(e, c);
    return q;
  }
  const Subset low = Subset::interval(1, n - 1);
  for (const auto& [e, c] : a.terms())
    for (int x : e.elements()) q.add(shift_set(e, -x, n) & low, c);
  return q;
}

inline QSym cyclic_monomial_as_qsym(int n, Subset e) { return expand(cyclic_monomial(n, e)); }

namespace detail {
// Sum over L containing E, L inside [n], of M^cyc_{n,L}; E may be empty.
inline CQSym cyclic_fundamental_any(int n, Subset e) {
  CQSym q(n);
  for (Subset l : supersets_within(e, n)) q.add(l, 1);
  return q;
}
}  // namespace detail

/// F^cyc_{n,E} = sum over L containing E, L inside [n], of M^cyc_{n,L}.
inline CQSym cyclic_fundamental(int n, Subset e) {
  if (e.empty()) throw DomainError("cyclic_fundamental: empty set");
  if (!e.within(1, n)) throw OutOfRange("cyclic_fundamental: " + e.to_string() + " not inside [" + std::to_string(n) + "]");
  return detail::cyclic_fundamental_any(n, e);
}

/// F^cyc_{n,E} = sum_{i in [n]} F_{n,(E-i) cap [n-1]}.
inline QSym cyclic_fundamental_via_F(int n, Subset e) {
  if (e.empty()) throw DomainError("cyclic_fundamental_via_F: empty set");
  if (!e.within(1, n)) throw OutOfRange("cyclic_fundamental_via_F: " + e.to_string() + " not inside [" + std::to_string(n) + "]");
  const Subset low = Subset::interval(1, n - 1);
  QSym q(n);
  for (int i = 1; i <= n; ++i) q += fundamental(n, shift_set(e, -i, n) & low);
  return q;
}

/// Coefficients in the cyclic fundamental basis, keyed by canonical class.
/// F^cyc_C contributes to M^cyc_D only when |C| <= |D|, and to itself with
/// coefficient 1, so classes are solved in order of increasing cardinality.
inline Coeffs to_cyclic_fundamental(const CQSym& a) {
  const int n = a.degree();
  Coeffs out;
  if (n == 0) return a.terms();
  CQSym rest = a;
  for (Subset cls : cyclic_subset_classes(n)) {
    const Int c = rest.coeff(cls);
    if (c == 0) continue;
    out.emplace(cls, c);
    rest -= detail::cyclic_fundamental_any(n, cls) * c;
  }
  if (!rest.is_zero()) throw InternalError("to_cyclic_fundamental: residual after triangular solve");
  return out;
}

/// Inverse view of to_cyclic_fundamental. An empty key stands for the sum of
/// all M^cyc_{n,L}, which only arises in degree 1.
inline CQSym from_cyclic_fundamental(int n, const Coeffs& f) {
  CQSym q(n);
  for (const auto& [e, c] : f) {
    if (n == 0) {
      q.add(e, c);
      continue;
    }
    if (!e.within(1, n)) throw OutOfRange("from_cyclic_fundamental: " + e.to_string() + " not inside [" + std::to_string(n) + "]");
    q += detail::cyclic_fundamental_any(n, e) * c;
  }
  return q;
}

/// The unique cyclic element whose expansion is a. Throws NotCyclic when a
/// does not lie in cQSym_n.
inline CQSym from_qsym(const QSym& a) {
  const int n = a.degree();
  CQSym out(n);
  if (n == 0) {
    for (const auto& [e, c] : a.terms()) out.add(e, c);
    return out;
  }
  std::set<Subset> seen;
  for (const auto& [l, c] : a.terms()) {
    // M_{n,L} occurs in the expansion of the class of L + {n}.
    Subset member = l;
    member.insert(n);
    const Subset cls = canonical_cyclic(member, n);
    if (!seen.insert(cls).second) continue;
    const Int mult = cyclic_monomial_as_qsym(n, cls).coeff(l);
    if (mult == 0) throw InternalError("from_qsym: class expansion misses its own member");
    if (c % mult != 0)
      throw NotCyclic("from_qsym: coefficient " + c.str() + " of M" + phi(n, l).to_string() +
                      " is not divisible by its class multiplicity " + mult.str());
    out.add(cls, c / mult);
  }
  if (!(expand(out) == a)) throw NotCyclic("from_qsym: coefficients are not constant on cyclic classes");
  return out;
}

// ---------------------------------------------------------------------------
// Products

namespace detail {

using CompTerms = std::map<std::vector<int>, Int>;

// Quasi-shuffle of the suffixes a[i:], b[j:], memoised on (i, j).
inline const CompTerms& quasi_shuffle(const std::vector<int>& a, const std::vector<int>& b, std::size_t i,
                                      std::size_t j, std::vector<std::vector<std::optional<CompTerms>>>& memo) {
  auto& slot = memo[i][j];
  if (slot) return *slot;
  CompTerms out;
  if (i == a.size()) {
    out.emplace(std::vector<int>(b.begin() + static_cast<std::ptrdiff_t>(j), b.end()), 1);
  } else if (j == b.size()) {
    out.emplace(std::vector<int>(a.begin() + static_cast<std::ptrdiff_t>(i), a.end()), 1);
  } else {
    auto prepend = [&out](int head, const CompTerms& tail) {
      for (const auto& [w, c] : tail) {
        std::vector<int> v;
        v.reserve(w.size() + 1);
        v.push_back(head);
        v.insert(v.end(), w.begin(), w.end());
        out[std::move(v)] += c;
      }
    };
    prepend(a[i], quasi_shuffle(a, b, i + 1, j, memo));
    prepend(b[j], quasi_shuffle(a, b, i, j + 1, memo));
    prepend(a[i] + b[j], quasi_shuffle(a, b, i + 1, j + 1, memo));
  }
  slot = std::move(out);
  return *slot;
}

}  // namespace detail

/// M_alpha * M_beta = sum over quasi-shuffles of alpha and beta.
inline QSym multiply(const QSym& a, const QSym& b) {
  const int n = a.degree() + b.degree();
  QSym out(n);
  for (const auto& [ea, ca] : a.terms()) {
    const Composition alpha = phi(a.degree(), ea);
    for (const auto& [eb, cb] : b.terms()) {
      const Composition beta = phi(b.degree(), eb);
      std::vector<std::vector<std::optional<detail::CompTerms>>> memo(
          alpha.length() + 1, std::vector<std::optional<detail::CompTerms>>(beta.length() + 1));
      const auto& prod = detail::quasi_shuffle(alpha.parts(), beta.parts(), 0, 0, memo);
      const Int cc = ca * cb;
      for (const auto& [w, c] : prod) out.add(phi_inv(Composition(w)), c * cc);
    }
  }
  return out;
}

/// Product in cQSym, computed in QSym and converted back. A NotCyclic here
/// means cQSym failed to be closed under the product, i.e. a bug.
inline CQSym multiply_cyclic(const CQSym& a, const CQSym& b) {
  try {
    return from_qsym(multiply(expand(a), expand(b)));
  } catch (const NotCyclic& e) {
    throw InternalError(std::string("multiply_cyclic: product left cQSym: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Specialisation x_1 = ... = x_m = 1, x_k = 0 for k > m

inline Int specialize_ones(const QSym& a, long long m) {
  if (m < 0) throw DomainError("specialize_ones: negative m");
  Int total = 0;
  for (const auto& [e, c] : a.terms()) {
    const long long parts = a.degree() == 0 ? 0 : e.size() + 1;
    total += c * binomial(m, parts);
  }
  return total;
}

inline Int specialize_ones(const CQSym& a, long long m) { return specialize_ones(expand(a), m); }

// ---------------------------------------------------------------------------
// Polynomials in finitely many variables: the independent oracle

/// A polynomial in x_1..x_m with integer coefficients, keyed by exponent
/// vectors of length m.
class TruncPoly {
 public:
  using Exponents = std::vector<int>;

  TruncPoly() = default;
  explicit TruncPoly(int vars) : vars_(vars) {
    if (vars < 0) throw DomainError("TruncPoly: negative variable count");
  }

  int vars() const noexcept { return vars_; }
  const std::map<Exponents, Int>& terms() const noexcept { return terms_; }

  Int coeff(const Exponents& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? Int(0) : it->second;
  }

  TruncPoly& add(const Exponents& x, const Int& c) {
    if (static_cast<int>(x.size()) != vars_) throw DomainError("TruncPoly: exponent vector has wrong length");
    if (c == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(x, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
    if (a.vars_ != b.vars_) throw DomainError("TruncPoly: variable count mismatch");
    TruncPoly out(a.vars_);
    for (const auto& [xa, ca] : a.terms_)
      for (const auto& [xb, cb] : b.terms_) {
        Exponents x(xa);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += xb[i];
        out.add(x, ca * cb);
      }
    return out;
  }

  friend bool operator==(const TruncPoly&, const TruncPoly&) = default;

 private:
  int vars_ = 0;
  std::map<Exponents, Int> terms_;
};

/// Restriction of a to the variables x_1..x_m.
inline TruncPoly to_trunc(const QSym& a, int m) {
  TruncPoly p(m);
  for (const auto& [e, c] : a.terms()) {
    const Composition alpha = phi(a.degree(), e);
    const int s = static_cast<int>(alpha.length());
    if (s > m) continue;
    // Choose the s variables i_1 < ... < i_s.
    std::vector<bool> pick(static_cast<std::size_t>(m), false);
    std::fill(pick.begin(), pick.begin() + s, true);
    do {
      TruncPoly::Exponents x(static_cast<std::size_t>(m), 0);
      std::size_t part = 0;
      for (int v = 0; v < m; ++v)
        if (pick[static_cast<std::size_t>(v)]) x[static_cast<std::size_t>(v)] = alpha.parts()[part++];
      p.add(x, c);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return p;
}

inline TruncPoly to_trunc(const CQSym& a, int m) { return to_trunc(expand(a), m); }

/// Reads the M-basis coefficients of a degree-n quasi-symmetric polynomial
/// off the monomials x_1^{a_1} ... x_s^{a_s}. Needs m >= n.
inline QSym read_monomial_basis(const TruncPoly& p, int n) {
  if (p.vars() < n) throw DomainError("read_monomial_basis: need at least n variables");
  QSym q(n);
  for (const Composition& alpha : all_compositions(n)) {
    TruncPoly::Exponents x(static_cast<std::size_t>(p.vars()), 0);
    for (std::size_t i = 0; i < alpha.length(); ++i) x[i] = alpha.parts()[i];
    q.add(phi_inv(alpha), p.coeff(x));
  }
  return q;
}

/// Sum of x_{w_1} ... x_{w_n} over pairs (w, k), w in [m]^n, k in [n], with
/// w cyclically weakly increasing from k and w_i < w_{i+1} for every
/// i in E other than k-1 (indices mod n).
inline TruncPoly fcyc_pair_oracle(int n, Subset e, int m) {
  if (m < 1) throw DomainError("fcyc_pair_oracle: m must be positive");
  if (n < 1) throw DomainError("fcyc_pair_oracle: n must be positive");
  if (!e.within(1, n)) throw OutOfRange("fcyc_pair_oracle: E not inside [n]");
  TruncPoly p(m);
  std::vector<int> w(static_cast<std::size_t>(n), 1);
  auto at = [&](int i) { return w[static_cast<std::size_t>(((i - 1) % n + n) % n)]; };
  while (true) {
    for (int k = 1; k <= n; ++k) {
      bool ok = true;
      for (int t = 0; t + 1 < n && ok; ++t) ok = at(k + t) <= at(k + t + 1);
      const int before = k == 1 ? n : k - 1;
      for (int i : e.elements()) {
        if (!ok) break;
        if (i != before) ok = at(i) < at(i + 1);
      }
      if (!ok) continue;
      TruncPoly::Exponents x(static_cast<std::size_t>(m), 0);
      for (int v : w) ++x[static_cast<std::size_t>(v - 1)];
      p.add(x, 1);
    }
    int pos = 0;
    while (pos < n && w[static_cast<std::size_t>(pos)] == m) w[static_cast<std::size_t>(pos++)] = 1;
    if (pos == n) break;
    ++w[static_cast<std::size_t>(pos)];
  }
  return p;
}

}  // namespace toric
