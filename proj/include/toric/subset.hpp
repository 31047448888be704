#pragma once

// Finite subsets of [n] stored as bitmasks, compositions, cyclic shifts and
// the bijections between subsets and compositions.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "toric/error.hpp"

namespace toric {

/// A subset of {1, ..., 63}. Element i occupies bit i-1.
///
/// The ambient size n is not stored; operations that depend on it take it as
/// an argument. Ordering is by cardinality first, then lexicographically on
/// the sorted element lists, so that e.g. {} < {1} < {2} < {1,2} < {1,3}.
class Subset {
 public:
  static constexpr int kMaxElement = 63;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {
    if (bits_ >> kMaxElement) throw OutOfRange("Subset: bit 64 is not addressable");
  }
  Subset(std::initializer_list<int> elems) {
    for (int e : elems) insert(e);
  }

  static Subset from_elements(std::span<const int> elems) {
    Subset s;
    for (int e : elems) s.insert(e);
    return s;
  }

  /// [lo, hi]; empty when lo > hi.
  static Subset interval(int lo, int hi) {
    Subset s;
    for (int i = std::max(lo, 1); i <= hi; ++i) s.insert(i);
    return s;
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int size() const noexcept { return std::popcount(bits_); }

  constexpr bool contains(int i) const noexcept {
    return i >= 1 && i <= kMaxElement && ((bits_ >> (i - 1)) & 1U);
  }

  /// Largest element, 0 for the empty set.
  constexpr int max() const noexcept { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }
  /// Smallest element, 0 for the empty set.
  constexpr int min() const noexcept { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

  Subset& insert(int i) {
    if (i < 1 || i > kMaxElement)
      throw OutOfRange("Subset: element " + std::to_string(i) + " outside [1," +
                       std::to_string(kMaxElement) + "]");
    bits_ |= std::uint64_t{1} << (i - 1);
    return *this;
  }
  Subset& erase(int i) {
    if (contains(i)) bits_ &= ~(std::uint64_t{1} << (i - 1));
    return *this;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  constexpr bool is_subset_of(Subset other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  /// True iff every element lies in [lo, hi].
  bool within(int lo, int hi) const { return is_subset_of(interval(lo, hi)); }

  friend constexpr Subset operator|(Subset a, Subset b) noexcept { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) noexcept { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator^(Subset a, Subset b) noexcept { return Subset(a.bits_ ^ b.bits_); }
  /// Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) noexcept { return Subset(a.bits_ & ~b.bits_); }

  friend constexpr bool operator==(Subset a, Subset b) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(Subset a, Subset b) noexcept {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    if (a.bits_ == b.bits_) return std::strong_ordering::equal;
    // With equal cardinality, the sorted lists first differ at the lowest
    // element of the symmetric difference; whoever owns it is smaller.
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    const std::uint64_t low = diff & (~diff + 1);
    return (a.bits_ & low) ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ',';
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic comparison of the sorted element lists, ignoring
/// cardinality. Used where all sets compared have the same size anyway.
inline bool lex_less(Subset a, Subset b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

/// All subsets of [n] in cardinality-then-lex order.
inline std::vector<Subset> all_subsets(int n) {
  if (n < 0) return {};
  if (n > Subset::kMaxElement) throw OutOfRange("all_subsets: n too large");
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.emplace_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

/// Supersets L of e with L contained in [n].
inline std::vector<Subset> supersets_within(Subset e, int n) {
  const Subset free = Subset::interval(1, n) - e;
  std::vector<Subset> out;
  // Standard submask walk over the free positions.
  std::uint64_t sub = free.bits();
  while (true) {
    out.push_back(Subset(e.bits() | sub));
    if (sub == 0) break;
    sub = (sub - 1) & free.bits();
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// i + E = {i + e mod n}, residues taken in [n] (0 is stored as n).
inline Subset shift_set(Subset e, long long i, int n) {
  if (e.empty()) return e;
  if (n < 1) throw DomainError("shift_set: ambient size must be positive");
  if (e.max() > n) throw OutOfRange("shift_set: " + e.to_string() + " not inside [" + std::to_string(n) + "]");
  const long long r = ((i % n) + n) % n;
  Subset out;
  for (int x : e.elements()) out.insert(static_cast<int>((x - 1 + r) % n) + 1);
  return out;
}

/// A composition: a finite list of positive parts.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 1) throw DomainError("Composition: parts must be positive");
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// (a_k, ..., a_m, a_1, ..., a_{k-1}) for k = offset + 1.
  Composition rotated(std::size_t offset) const {
    if (parts_.empty()) return *this;
    std::vector<int> out(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i) out[i] = parts_[(i + offset) % parts_.size()];
    return Composition(std::move(out));
  }

  friend bool operator==(const Composition&, const Composition&) = default;
  /// Length first, then lexicographic.
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
    if (auto c = a.parts_.size() <=> b.parts_.size(); c != 0) return c;
    return a.parts_ <=> b.parts_;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> parts_;
};

/// All compositions of n, ordered by length then lexicographically.
inline std::vector<Composition> all_compositions(int n);

/// Phi: subsets of [n-1] to compositions of n.
inline Composition phi(int n, Subset e) {
  if (n < 0) throw DomainError("phi: negative size");
  if (n == 0) {
    if (!e.empty()) throw OutOfRange("phi: nonempty subset for n = 0");
    return {};
  }
  if (!e.within(1, n - 1))
    throw OutOfRange("phi: " + e.to_string() + " not inside [" + std::to_string(n - 1) + "]");
  std::vector<int> parts;
  int prev = 0;
  for (int x : e.elements()) {
    parts.push_back(x - prev);
    prev = x;
  }
  parts.push_back(n - prev);
  return Composition(std::move(parts));
}

/// Inverse of phi: partial sums, excluding the full total.
inline Subset phi_inv(const Composition& a) {
  Subset s;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < a.length(); ++i) {
    acc += a.parts()[i];
    s.insert(acc);
  }
  return s;
}

/// psi: nonempty subsets of [n] to compositions of n with |E| parts.
inline Composition psi(int n, Subset e) {
  if (e.empty()) throw DomainError("psi: empty set");
  if (!e.within(1, n))
    throw OutOfRange("psi: " + e.to_string() + " not inside [" + std::to_string(n) + "]");
  const auto el = e.elements();
  std::vector<int> parts;
  parts.reserve(el.size());
  for (std::size_t i = 1; i < el.size(); ++i) parts.push_back(el[i] - el[i - 1]);
  parts.push_back(el.front() - el.back() + n);
  return Composition(std::move(parts));
}

/// Distinct cyclic shifts of e in [n], sorted.
inline std::vector<Subset> cyclic_orbit(Subset e, int n) {
  std::vector<Subset> out;
  for (int i = 0; i < std::max(n, 1); ++i) out.push_back(shift_set(e, i, n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Lexicographically least cyclic shift of a nonempty subset of [n].
inline Subset canonical_cyclic(Subset e, int n) {
  if (e.empty()) throw DomainError("canonical_cyclic: empty set");
  return cyclic_orbit(e, n).front();
}

/// A cyclic-shift class of nonempty subsets of [n].
struct CyclicSubsetClass {
  int n = 0;
  Subset canonical;

  static CyclicSubsetClass of(Subset e, int n) { return {n, canonical_cyclic(e, n)}; }
  bool contains(Subset e) const { return !e.empty() && canonical_cyclic(e, n) == canonical; }
  friend bool operator==(const CyclicSubsetClass&, const CyclicSubsetClass&) = default;
  friend auto operator<=>(const CyclicSubsetClass&, const CyclicSubsetClass&) = default;
};

/// Least rotation of a composition.
inline Composition canonical_rotation(const Composition& a) {
  Composition best = a;
  for (std::size_t k = 1; k < a.length(); ++k) best = std::min(best, a.rotated(k));
  return best;
}

/// Psi on classes: the canonical cyclic composition of the class of e.
inline Composition psi_class(Subset e, int n) { return canonical_rotation(psi(n, canonical_cyclic(e, n))); }

/// A subset E of [n] with psi(E) = a and 1 in E.
inline Subset psi_preimage(const Composition& a) {
  if (a.length() == 0) throw DomainError("psi_preimage: empty composition");
  Subset s;
  int pos = 1;
  for (std::size_t i = 0; i < a.length(); ++i) {
    s.insert(pos);
    pos += a.parts()[i];
  }
  return s;
}

inline std::vector<Composition> all_compositions(int n) {
  std::vector<Composition> out;
  if (n < 0) return out;
  if (n == 0) return {Composition{}};
  for (Subset e : all_subsets(n - 1)) out.push_back(phi(n, e));
  std::sort(out.begin(), out.end());
  return out;
}

/// Canonical representatives of the cyclic classes of nonempty subsets of
/// [n], in cardinality-then-lex order.
inline std::vector<Subset> cyclic_subset_classes(int n) {
  std::vector<Subset> out;
  for (Subset e : all_subsets(n))
    if (!e.empty() && canonical_cyclic(e, n) == e) out.push_back(e);
  return out;
}

}  // namespace toric
