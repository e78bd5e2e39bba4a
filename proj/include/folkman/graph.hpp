#pragma once

// Simple undirected graphs with bitset adjacency rows, clique search and
// G(n,p) sampling.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace folkman {

/// Subset of [n] stored as a packed bitmask.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<std::size_t> members) : VertexSet(universe) {
    for (auto v : members) insert(v);
  }
  VertexSet(std::size_t universe, std::span<const std::size_t> members) : VertexSet(universe) {
    for (auto v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }

  void insert(std::size_t v) {
    check(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(std::size_t v) {
    check(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  bool contains(std::size_t v) const {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u);
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  /// Smallest member >= from, or universe() if none.
  std::size_t next(std::size_t from) const {
    if (from >= universe_) return universe_;
    std::size_t w = from >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (bits) return std::min(universe_, (w << 6) + static_cast<std::size_t>(std::countr_zero(bits)));
      if (++w >= words_.size()) return universe_;
      bits = words_[w];
    }
  }
  std::size_t first() const { return next(0); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f((w << 6) + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

  std::size_t intersection_size(const VertexSet& o) const {
    same_universe(o);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  bool is_subset_of(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members() <=> b.members(); }

 private:
  void check(std::size_t v) const {
    if (v >= universe_) throw std::out_of_range("VertexSet: vertex outside universe");
  }
  void same_universe(const VertexSet& o) const {
    if (o.universe_ != universe_) throw std::invalid_argument("VertexSet: universe mismatch");
  }
  void trim() {
    if (universe_ & 63) words_.back() &= (std::uint64_t{1} << (universe_ & 63)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : rows_(n, VertexSet(n)) {}

  static Graph complete(std::size_t n) {
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
  }

  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& e : edges) g.add_edge(e.u, e.v);
    return g;
  }

  std::size_t order() const { return rows_.size(); }

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
    if (u >= order() || v >= order()) throw std::out_of_range("Graph: vertex out of range");
    if (!rows_[u].contains(v)) ++edges_;
    rows_[u].insert(v);
    rows_[v].insert(u);
  }

  void remove_edge(std::size_t u, std::size_t v) {
    if (u == v) return;
    if (rows_.at(u).contains(v)) --edges_;
    rows_.at(u).erase(v);
    rows_.at(v).erase(u);
  }

  bool adjacent(std::size_t u, std::size_t v) const { return rows_.at(u).contains(v); }
  const VertexSet& neighbours(std::size_t v) const { return rows_.at(v); }
  std::size_t degree(std::size_t v) const { return rows_.at(v).size(); }
  std::size_t edge_count() const { return edges_; }

  /// Edges as (u, v) with u < v in lexicographic order: the canonical edge order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (std::size_t u = 0; u < order(); ++u) {
      rows_[u].for_each([&](std::size_t v) {
        if (v > u) out.push_back({u, v});
      });
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<VertexSet> rows_;
  std::size_t edges_ = 0;
};

inline Graph complete_graph(std::size_t n) { return Graph::complete(n); }

inline Graph cycle_graph(std::size_t n) {
  Graph g(n);
  if (n >= 3) {
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  }
  return g;
}

inline std::size_t edge_count(const Graph& g) { return g.edge_count(); }
inline std::size_t degree(const Graph& g, std::size_t v) { return g.degree(v); }

/// Maps unordered pairs to canonical edge indices (-1 when absent).
class EdgeIndex {
 public:
  explicit EdgeIndex(const Graph& g) : n_(g.order()), index_(n_ * n_, -1) {
    std::int64_t i = 0;
    for (const auto& e : g.edges()) {
      index_[e.u * n_ + e.v] = i;
      index_[e.v * n_ + e.u] = i;
      ++i;
    }
  }
  std::int64_t operator()(std::size_t u, std::size_t v) const { return index_[u * n_ + v]; }

 private:
  std::size_t n_;
  std::vector<std::int64_t> index_;
};

namespace detail {

// Extends `chosen` by vertices from `candidates` in increasing order.
template <typename F>
bool extend_cliques(const Graph& g, std::size_t target, std::vector<std::size_t>& chosen,
                    const VertexSet& candidates, F& visit) {
  if (chosen.size() == target) return visit(std::span<const std::size_t>(chosen));
  const std::size_t need = target - chosen.size();
  if (candidates.size() < need) return true;
  for (std::size_t v = candidates.first(); v < g.order(); v = candidates.next(v + 1)) {
    VertexSet next = candidates & g.neighbours(v);
    // Only vertices after v keep the output in lexicographic order.
    for (std::size_t w = next.first(); w <= v && w < g.order(); w = next.next(w + 1)) next.erase(w);
    chosen.push_back(v);
    const bool go_on = extend_cliques(g, target, chosen, next, visit);
    chosen.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace detail

/// Visits every t-clique as a sorted vertex list in lexicographic order.
/// The visitor returns false to stop early.
template <typename F>
void for_each_clique(const Graph& g, std::size_t t, F&& visit) {
  if (t == 0) throw std::invalid_argument("clique size must be >= 1");
  std::vector<std::size_t> chosen;
  chosen.reserve(t);
  auto cb = [&](std::span<const std::size_t> c) -> bool { return visit(c); };
  detail::extend_cliques(g, t, chosen, VertexSet::full(g.order()), cb);
}

inline std::vector<VertexSet> enumerate_cliques(const Graph& g, std::size_t k) {
  std::vector<VertexSet> out;
  for_each_clique(g, k, [&](std::span<const std::size_t> c) {
    out.emplace_back(g.order(), c);
    return true;
  });
  return out;
}

inline std::size_t count_cliques(const Graph& g, std::size_t k) {
  std::size_t count = 0;
  for_each_clique(g, k, [&](std::span<const std::size_t>) {
    ++count;
    return true;
  });
  return count;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
  const auto m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!g.adjacent(m[i], m[j])) return false;
    }
  }
  return true;
}

/// First t-clique in lexicographic order, if any.
inline std::optional<VertexSet> find_clique(const Graph& g, std::size_t t) {
  std::optional<VertexSet> found;
  for_each_clique(g, t, [&](std::span<const std::size_t> c) {
    found.emplace(g.order(), c);
    return false;
  });
  return found;
}

inline bool has_clique(const Graph& g, std::size_t t) { return find_clique(g, t).has_value(); }

inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw std::invalid_argument("induced_subgraph: universe mismatch");
  const auto m = s.members();
  Graph h(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (g.adjacent(m[i], m[j])) h.add_edge(i, j);
    }
  }
  return h;
}

/// Counter-based generator: the SplitMix64 output at stream position
/// `counter` for a given seed.  Position-addressable, so edge i of G(n,p)
/// always draws the same word regardless of evaluation order.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double unit_double(std::uint64_t word) { return static_cast<double>(word >> 11) * 0x1.0p-53; }

inline Graph sample_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_gnp: p must lie in [0, 1]");
  Graph g(n);
  std::uint64_t idx = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v, ++idx) {
      if (unit_double(splitmix64_at(seed, idx)) < p) g.add_edge(u, v);
    }
  }
  return g;
}

/// Vertices ordered by repeatedly removing a minimum-degree vertex (lowest
/// index on ties), reversed so the densest core comes first.
inline std::vector<std::size_t> degeneracy_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  std::vector<bool> removed(n, false);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!removed[v] && (best == n || deg[v] < deg[best])) best = v;
    }
    removed[best] = true;
    order.push_back(best);
    g.neighbours(best).for_each([&](std::size_t w) {
      if (!removed[w]) --deg[w];
    });
  }
  std::reverse(order.begin(), order.end());
  return order;
}

}  // namespace folkman
