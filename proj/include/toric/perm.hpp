#pragma once

// Linear and cyclic permutations on finite label sets, and the descent and
// peak statistics (linear and cyclic). Statistics are sets of positions.

#include <algorithm>
#include <cctype>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toric/error.hpp"
#include "toric/subset.hpp"

namespace toric {

/// A set of positions produced by a statistic. The ambient size is the
/// length of the permutation it came from.
using StatSet = Subset;

/// A word w_1 ... w_n using distinct positive labels, each exactly once.
class Perm {
 public:
  Perm() = default;
  Perm(std::initializer_list<int> word) : Perm(std::vector<int>(word)) {}
  explicit Perm(std::vector<int> word) : word_(std::move(word)) {
    std::vector<int> sorted = word_;
    std::sort(sorted.begin(), sorted.end());
    if (!sorted.empty() && sorted.front() < 1) throw DomainError("Perm: labels must be positive");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DomainError("Perm: repeated label");
  }

  static Perm identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    return Perm(std::move(w));
  }

  /// One-line notation. Either a run of digits ("3124", one label per digit)
  /// or integers separated by commas and/or spaces ("3,1,12").
  static Perm parse(std::string_view text) {
    std::vector<int> word;
    const bool separated = text.find_first_of(", ") != std::string_view::npos;
    std::size_t i = 0;
    while (i < text.size()) {
      const char c = text[i];
      if (c == ',' || c == ' ') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError(std::string("unexpected character '") + c + "' in permutation", static_cast<long>(i));
      if (!separated) {
        word.push_back(c - '0');
        ++i;
        continue;
      }
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1'000'000) throw ParseError("label too large", static_cast<long>(i));
        ++i;
      }
      word.push_back(v);
    }
    try {
      return Perm(std::move(word));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }

  int size() const noexcept { return static_cast<int>(word_.size()); }
  bool empty() const noexcept { return word_.empty(); }
  const std::vector<int>& word() const noexcept { return word_; }
  /// 1-based access: at(1) is w_1.
  int at(int i) const { return word_.at(static_cast<std::size_t>(i - 1)); }
  /// Cyclic 1-based access: indices read modulo n.
  int cyc(int i) const {
    const int n = size();
    return word_[static_cast<std::size_t>(((i - 1) % n + n) % n)];
  }

  std::vector<int> labels() const {
    std::vector<int> l = word_;
    std::sort(l.begin(), l.end());
    return l;
  }

  /// w_i + offset for every i.
  Perm shifted(int offset) const {
    std::vector<int> w = word_;
    for (int& x : w) x += offset;
    return Perm(std::move(w));
  }

  /// w_{k+1} ... w_n w_1 ... w_k.
  Perm rotated(int k) const {
    if (word_.empty()) return *this;
    std::vector<int> w(word_.size());
    const std::size_t n = word_.size();
    for (std::size_t i = 0; i < n; ++i) w[i] = word_[(i + static_cast<std::size_t>(k)) % n];
    return Perm(std::move(w));
  }

  std::string to_string() const {
    const bool compact = std::all_of(word_.begin(), word_.end(), [](int x) { return x < 10; });
    std::string s;
    for (std::size_t i = 0; i < word_.size(); ++i) {
      if (!compact && i) s += ',';
      s += std::to_string(word_[i]);
    }
    return s;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.word_ <=> b.word_; }

 private:
  std::vector<int> word_;
};

/// All permutations of [n] in lexicographic order.
inline std::vector<Perm> all_perms(int n) {
  std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Perm> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline StatSet des_set(const Perm& w) {
  StatSet s;
  for (int i = 1; i < w.size(); ++i)
    if (w.at(i) > w.at(i + 1)) s.insert(i);
  return s;
}

inline StatSet peak_set(const Perm& w) {
  StatSet s;
  for (int i = 2; i < w.size(); ++i)
    if (w.at(i - 1) < w.at(i) && w.at(i) > w.at(i + 1)) s.insert(i);
  return s;
}

inline StatSet cdes_set(const Perm& w) {
  StatSet s;
  for (int i = 1; i <= w.size(); ++i)
    if (w.cyc(i) > w.cyc(i + 1)) s.insert(i);
  return s;
}

inline StatSet cpeak_set(const Perm& w) {
  StatSet s;
  for (int i = 1; i <= w.size(); ++i)
    if (w.cyc(i - 1) < w.cyc(i) && w.cyc(i) > w.cyc(i + 1)) s.insert(i);
  return s;
}

inline int des(const Perm& w) { return des_set(w).size(); }
inline int pk(const Perm& w) { return peak_set(w).size(); }
inline int cpk(const Perm& w) { return cpeak_set(w).size(); }

/// The n rotations of w, starting with w itself.
inline std::vector<Perm> rotations(const Perm& w) {
  if (w.empty()) throw EmptyPermutation("rotations: empty permutation");
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(w.size()));
  for (int k = 0; k < w.size(); ++k) out.push_back(w.rotated(k));
  return out;
}

/// A rotation class [w], keyed by its lexicographically least rotation.
class CyclicClass {
 public:
  CyclicClass() = default;
  static CyclicClass of(const Perm& w) {
    CyclicClass c;
    if (!w.empty()) {
      const auto rots = rotations(w);
      c.canonical_ = *std::min_element(rots.begin(), rots.end());
    }
    return c;
  }

  const Perm& canonical() const noexcept { return canonical_; }
  int size() const noexcept { return canonical_.size(); }
  std::vector<Perm> members() const { return rotations(canonical_); }
  bool contains(const Perm& w) const { return of(w).canonical_ == canonical_; }

  friend bool operator==(const CyclicClass&, const CyclicClass&) = default;
  friend auto operator<=>(const CyclicClass&, const CyclicClass&) = default;

 private:
  Perm canonical_;
};

enum class CyclicStat { cdes, cpeak };

inline StatSet cyclic_stat(const Perm& w, CyclicStat stat) {
  return stat == CyclicStat::cdes ? cdes_set(w) : cpeak_set(w);
}

/// {{ stat(v) : v in [w] }}, as a sorted multiset.
inline std::vector<StatSet> cyclic_stat_multiset(const CyclicClass& cw, CyclicStat stat) {
  std::vector<StatSet> out;
  for (const Perm& v : cw.members()) out.push_back(cyclic_stat(v, stat));
  std::sort(out.begin(), out.end());
  return out;
}

/// The same multiset computed as {{ i + stat(w) : i in [n] }}.
inline std::vector<StatSet> cyclic_stat_multiset_by_shift(const Perm& w, CyclicStat stat) {
  if (w.empty()) throw EmptyPermutation("cyclic_stat_multiset_by_shift: empty permutation");
  const StatSet base = cyclic_stat(w, stat);
  std::vector<StatSet> out;
  for (int i = 1; i <= w.size(); ++i) out.push_back(shift_set(base, i, w.size()));
  std::sort(out.begin(), out.end());
  return out;
}

/// All interleavings of p and s, sorted.
inline std::vector<Perm> shuffle_set(const Perm& p, const Perm& s) {
  const auto lp = p.labels();
  const auto ls = s.labels();
  std::vector<int> common;
  std::set_intersection(lp.begin(), lp.end(), ls.begin(), ls.end(), std::back_inserter(common));
  if (!common.empty()) throw NotDisjoint("shuffle_set: label " + std::to_string(common.front()) + " is shared");

  const std::size_t a = p.word().size();
  const std::size_t b = s.word().size();
  // Choose which positions of the result come from p.
  std::vector<bool> from_p(a + b, false);
  std::fill(from_p.begin(), from_p.begin() + static_cast<std::ptrdiff_t>(a), true);
  std::vector<Perm> out;
  do {
    std::vector<int> w;
    w.reserve(a + b);
    std::size_t i = 0, j = 0;
    for (bool bit : from_p) w.push_back(bit ? p.word()[i++] : s.word()[j++]);
    out.emplace_back(std::move(w));
  } while (std::prev_permutation(from_p.begin(), from_p.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Whether S is the peak set of some permutation in S_n: S inside [2, n-1]
/// with no two consecutive elements.
inline bool is_peak_set(StatSet s, int n) {
  if (n < 0) return false;
  if (s.empty()) return true;
  if (!s.within(2, n - 1)) return false;
  return (s.bits() & (s.bits() >> 1)) == 0;
}

/// Whether S is the cyclic peak set of some permutation in S_n. For n <= 1
/// only the empty set qualifies; for n >= 2, S must be a nonempty subset of
/// [n] without two cyclically adjacent elements.
inline bool is_cyclic_peak_set(StatSet s, int n) {
  if (n < 0) return false;
  if (n <= 1) return s.empty();
  if (s.empty() || !s.within(1, n)) return false;
  if ((s.bits() & (s.bits() >> 1)) != 0) return false;
  return !(s.contains(1) && s.contains(n));
}

namespace detail {
template <class Stat>
std::optional<Perm> first_perm_with(StatSet s, int n, Stat stat) {
  if (n < 0) return std::nullopt;
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  do {
    Perm p(w);
    if (stat(p) == s) return p;
  } while (std::next_permutation(w.begin(), w.end()));
  return std::nullopt;
}
}  // namespace detail

/// Lexicographically first w in S_n with Pk w = s.
inline std::optional<Perm> find_peak_witness(StatSet s, int n) {
  return detail::first_perm_with(s, n, [](const Perm& p) { return peak_set(p); });
}

/// Lexicographically first w in S_n with cPk w = s.
inline std::optional<Perm> find_cyclic_peak_witness(StatSet s, int n) {
  return detail::first_perm_with(s, n, [](const Perm& p) { return cpeak_set(p); });
}

}  // namespace toric
