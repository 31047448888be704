#pragma once

// Directed acyclic graphs on positive integer labels, flips at sources and
// sinks, toric equivalence classes, and linear and toric extensions.

#include <algorithm>
#include <compare>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toric/error.hpp"
#include "toric/perm.hpp"

namespace toric {

using Arc = std::pair<int, int>;

/// A DAG with explicit vertex set. Vertices and arcs are kept sorted, so
/// structural equality is value equality.
class Dag {
 public:
  Dag() = default;
  Dag(std::vector<int> vertices, std::vector<Arc> arcs) : vertices_(std::move(vertices)), arcs_(std::move(arcs)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (!vertices_.empty() && vertices_.front() < 1) throw DomainError("Dag: labels must be positive");
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
      throw DomainError("Dag: repeated vertex");
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
    for (const auto& [i, j] : arcs_) {
      if (i == j) throw DomainError("Dag: loop at " + std::to_string(i));
      if (!has_vertex(i) || !has_vertex(j))
        throw DomainError("Dag: arc " + std::to_string(i) + "->" + std::to_string(j) + " leaves the vertex set");
    }
    if (!acyclic()) throw CycleError("Dag: directed cycle");
  }

  /// The arcless graph on the given labels.
  static Dag arcless(std::vector<int> vertices) { return Dag(std::move(vertices), {}); }

  /// The total order w_1 < w_2 < ... < w_n, with every arc w_i -> w_j, i < j.
  static Dag total_order(const Perm& w) {
    std::vector<Arc> arcs;
    const auto& v = w.word();
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j) arcs.emplace_back(v[i], v[j]);
    return Dag(v, std::move(arcs));
  }

  const std::vector<int>& vertices() const noexcept { return vertices_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  int size() const noexcept { return static_cast<int>(vertices_.size()); }

  bool has_vertex(int v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }
  bool has_arc(int i, int j) const { return std::binary_search(arcs_.begin(), arcs_.end(), Arc{i, j}); }

  /// Position of label v in vertices().
  std::size_t index(int v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) throw DomainError("Dag: no vertex " + std::to_string(v));
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  /// Out-neighbour indices for each vertex index.
  std::vector<std::vector<std::size_t>> successors() const {
    std::vector<std::vector<std::size_t>> out(vertices_.size());
    for (const auto& [i, j] : arcs_) out[index(i)].push_back(index(j));
    return out;
  }

  std::vector<int> in_degrees() const {
    std::vector<int> deg(vertices_.size(), 0);
    for (const auto& a : arcs_) ++deg[index(a.second)];
    return deg;
  }

  /// The permutation w when this DAG is a total order, i.e. every pair of
  /// vertices is joined by an arc.
  std::optional<Perm> as_total_order() const {
    const std::size_t n = vertices_.size();
    if (arcs_.size() != n * (n - (n > 0 ? 1 : 0)) / 2) return std::nullopt;
    // In a transitive tournament the in-degrees are 0, 1, ..., n-1.
    std::vector<int> word(n);
    std::vector<bool> used(n, false);
    const auto deg = in_degrees();
    for (std::size_t v = 0; v < n; ++v) {
      const auto d = static_cast<std::size_t>(deg[v]);
      if (used[d]) return std::nullopt;
      used[d] = true;
      word[d] = vertices_[v];
    }
    return Perm(std::move(word));
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t k = 0; k < arcs_.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(arcs_[k].first) + "->" + std::to_string(arcs_[k].second);
    }
    return s + "}";
  }

  friend bool operator==(const Dag&, const Dag&) = default;
  friend auto operator<=>(const Dag&, const Dag&) = default;

 private:
  bool acyclic() const {
    auto deg = in_degrees();
    const auto succ = successors();
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < deg.size(); ++v)
      if (deg[v] == 0) ready.push_back(v);
    std::size_t seen = 0;
    while (!ready.empty()) {
      const std::size_t v = ready.back();
      ready.pop_back();
      ++seen;
      for (std::size_t u : succ[v])
        if (--deg[u] == 0) ready.push_back(u);
    }
    return seen == vertices_.size();
  }

  std::vector<int> vertices_;
  std::vector<Arc> arcs_;
};

/// reach[a][b] iff there is a directed path of length >= 1 from vertex
/// index a to vertex index b.
inline std::vector<std::vector<bool>> reachability(const Dag& d) {
  const std::size_t n = d.vertices().size();
  const auto succ = d.successors();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack(succ[s].begin(), succ[s].end());
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      if (reach[s][v]) continue;
      reach[s][v] = true;
      for (std::size_t u : succ[v]) stack.push_back(u);
    }
  }
  return reach;
}

inline Dag transitive_closure(const Dag& d) {
  const auto reach = reachability(d);
  const auto& v = d.vertices();
  std::vector<Arc> arcs;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = 0; b < v.size(); ++b)
      if (reach[a][b]) arcs.emplace_back(v[a], v[b]);
  return Dag(v, std::move(arcs));
}

inline std::vector<int> sources(const Dag& d) {
  const auto deg = d.in_degrees();
  std::vector<int> out;
  for (std::size_t k = 0; k < deg.size(); ++k)
    if (deg[k] == 0) out.push_back(d.vertices()[k]);
  return out;
}

inline std::vector<int> sinks(const Dag& d) {
  std::vector<int> out;
  for (int v : d.vertices()) {
    const bool has_out = std::any_of(d.arcs().begin(), d.arcs().end(), [v](const Arc& a) { return a.first == v; });
    if (!has_out) out.push_back(v);
  }
  return out;
}

/// Reverses every arc at v. Only legal when v is a source or a sink.
inline Dag flip(const Dag& d, int v) {
  if (!d.has_vertex(v)) throw IllegalFlip("flip: no vertex " + std::to_string(v));
  bool has_in = false, has_out = false;
  for (const auto& [i, j] : d.arcs()) {
    has_out |= i == v;
    has_in |= j == v;
  }
  if (has_in && has_out) throw IllegalFlip("flip: vertex " + std::to_string(v) + " is neither a source nor a sink");
  std::vector<Arc> arcs = d.arcs();
  for (auto& a : arcs)
    if (a.first == v || a.second == v) std::swap(a.first, a.second);
  return Dag(d.vertices(), std::move(arcs));
}

/// The set of DAGs reachable from a given one by flips. Members are sorted,
/// and the canonical member is the one with the least sorted arc list.
class ToricClass {
 public:
  ToricClass() = default;
  explicit ToricClass(std::vector<Dag> members) : members_(std::move(members)) {
    if (members_.empty()) throw DomainError("ToricClass: no members");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  const Dag& canonical() const { return members_.front(); }
  const std::vector<Dag>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  int vertex_count() const { return members_.empty() ? 0 : members_.front().size(); }
  bool contains(const Dag& d) const { return std::binary_search(members_.begin(), members_.end(), d); }

  friend bool operator==(const ToricClass&, const ToricClass&) = default;

 private:
  std::vector<Dag> members_;
};

inline ToricClass toric_class(const Dag& d) {
  std::set<Dag> seen{d};
  std::deque<Dag> queue{d};
  while (!queue.empty()) {
    const Dag cur = std::move(queue.front());
    queue.pop_front();
    const auto src = sources(cur);
    const auto snk = sinks(cur);
    std::vector<int> flippable;
    std::set_union(src.begin(), src.end(), snk.begin(), snk.end(), std::back_inserter(flippable));
    for (int v : flippable) {
      Dag next = flip(cur, v);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return ToricClass(std::vector<Dag>(seen.begin(), seen.end()));
}

/// Calls fn(w) for every linear extension w of d, in lexicographic order.
template <class Fn>
void for_each_linear_extension(const Dag& d, Fn&& fn) {
  const std::size_t n = d.vertices().size();
  const auto succ = d.successors();
  auto deg = d.in_degrees();
  std::vector<bool> placed(n, false);
  std::vector<int> word;
  word.reserve(n);
  auto rec = [&](auto& self) -> void {
    if (word.size() == n) {
      fn(Perm(word));
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v] || deg[v] != 0) continue;
      placed[v] = true;
      for (std::size_t u : succ[v]) --deg[u];
      word.push_back(d.vertices()[v]);
      self(self);
      word.pop_back();
      for (std::size_t u : succ[v]) ++deg[u];
      placed[v] = false;
    }
  };
  rec(rec);
}

/// L(d): all linear extensions, in lexicographic order.
inline std::vector<Perm> linear_extensions(const Dag& d) {
  std::vector<Perm> out;
  for_each_linear_extension(d, [&out](Perm w) { out.push_back(std::move(w)); });
  return out;
}

/// L^tor([d]): cyclic classes of linear extensions of all members, sorted.
inline std::vector<CyclicClass> toric_extensions(const ToricClass& tc) {
  std::set<CyclicClass> out;
  for (const Dag& member : tc.members())
    for_each_linear_extension(member, [&out](const Perm& w) { out.insert(CyclicClass::of(w)); });
  return {out.begin(), out.end()};
}

inline std::vector<CyclicClass> toric_extensions(const Dag& d) { return toric_extensions(toric_class(d)); }

/// Whether every directed path i_1 -> ... -> i_k closed by an arc i_1 -> i_k
/// has all arcs i_a -> i_b, a < b. Works per arc u -> v: any two vertices
/// x, y lying between u and v with y reachable from x sit on a common
/// u-v path, so x -> y must be an arc.
inline bool is_toric_transitive(const Dag& d) {
  const auto reach = reachability(d);
  const std::size_t n = d.vertices().size();
  for (const auto& [ul, vl] : d.arcs()) {
    const std::size_t u = d.index(ul), v = d.index(vl);
    std::vector<std::size_t> between{u, v};
    for (std::size_t x = 0; x < n; ++x)
      if (reach[u][x] && reach[x][v]) between.push_back(x);
    for (std::size_t x : between)
      for (std::size_t y : between)
        if (x != y && reach[x][y] && !d.has_arc(d.vertices()[x], d.vertices()[y])) return false;
  }
  return true;
}

/// Whether [d] is a toric poset. Every member is checked, and a
/// disagreement between members is reported as an internal error.
inline bool is_toric_poset(const ToricClass& tc) {
  const bool first = is_toric_transitive(tc.canonical());
  for (const Dag& member : tc.members())
    if (is_toric_transitive(member) != first)
      throw InternalError("is_toric_poset: members " + tc.canonical().to_string() + " and " + member.to_string() +
                          " disagree on toric transitivity");
  return first;
}

inline Dag disjoint_union(const Dag& d, const Dag& e) {
  std::vector<int> common;
  std::set_intersection(d.vertices().begin(), d.vertices().end(), e.vertices().begin(), e.vertices().end(),
                        std::back_inserter(common));
  if (!common.empty()) throw NotDisjoint("disjoint_union: vertex " + std::to_string(common.front()) + " is shared");
  std::vector<int> v = d.vertices();
  v.insert(v.end(), e.vertices().begin(), e.vertices().end());
  std::vector<Arc> a = d.arcs();
  a.insert(a.end(), e.arcs().begin(), e.arcs().end());
  return Dag(std::move(v), std::move(a));
}

}  // namespace toric
