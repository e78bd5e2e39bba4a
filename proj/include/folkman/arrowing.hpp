#pragma once

// Exact decision of G -> (K_k)_r.
//
// All K_k copies are listed up front.  Edges that lie in some copy are
// coloured in a static order derived from a degeneracy ordering of the
// vertices.  After each assignment every clique through the edge is updated:
// a clique whose edges all share one colour is a conflict, and a clique with
// all but one edge in colour c removes c from the last edge's domain (unit
// propagation; a singleton domain is assigned immediately).  Colours are
// broken by first occurrence along the static order, so the first decision
// is always colour 1.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman {

/// Total colouring of E(G) in canonical edge order, colours 1..r.
struct EdgeColoring {
  std::vector<std::uint8_t> colors;
  unsigned r = 2;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

inline void validate_coloring(const Graph& g, const EdgeColoring& c) {
  if (c.colors.size() != g.edge_count()) {
    throw std::invalid_argument("coloring domain mismatch: expected " + std::to_string(g.edge_count()) +
                                " edge colours, got " + std::to_string(c.colors.size()));
  }
  for (auto col : c.colors) {
    if (col < 1 || col > c.r) throw std::invalid_argument("coloring domain mismatch: colour outside 1..r");
  }
}

/// Relabels colours so that first occurrences along canonical edge order are
/// 1, 2, 3, ...  Properness is invariant under this.
inline EdgeColoring normalize_colors(EdgeColoring c) {
  std::vector<std::uint8_t> map(c.r + 1, 0);
  std::uint8_t next = 1;
  for (auto& col : c.colors) {
    if (map[col] == 0) map[col] = next++;
    col = map[col];
  }
  return c;
}

struct MonochromaticClique {
  unsigned color = 0;
  VertexSet vertices;
};

/// The subgraph formed by edges of one colour.
inline Graph color_class(const Graph& g, const EdgeColoring& c, unsigned color) {
  Graph h(g.order());
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (c.colors[i] == color) h.add_edge(edges[i].u, edges[i].v);
  }
  return h;
}

/// Some monochromatic K_k (lowest colour, then lexicographically first), or
/// nothing when the colouring is proper.
inline std::optional<MonochromaticClique> verify_coloring(const Graph& g, const EdgeColoring& c, std::size_t k) {
  validate_coloring(g, c);
  if (k < 2) throw std::invalid_argument("verify_coloring: k must be >= 2");
  for (unsigned color = 1; color <= c.r; ++color) {
    if (auto clique = find_clique(color_class(g, c, color), k)) return MonochromaticClique{color, *clique};
  }
  return std::nullopt;
}

enum class ArrowVerdict { Arrows, NonArrowing, Indeterminate };

inline std::string_view to_string(ArrowVerdict v) {
  switch (v) {
    case ArrowVerdict::Arrows: return "Arrows";
    case ArrowVerdict::NonArrowing: return "NonArrowing";
    case ArrowVerdict::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

enum class SearchMode { Deterministic, Parallel };

struct ArrowOptions {
  SearchMode mode = SearchMode::Deterministic;
  std::uint64_t node_budget = 0;  // 0: unlimited
  double time_budget_ms = 0;      // 0: unlimited
  unsigned threads = 0;           // parallel mode; 0: hardware concurrency
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t cliques = 0;
  std::uint64_t search_edges = 0;
  double wall_ms = 0;
  bool exhausted = false;  // the symmetry-reduced colouring space was fully explored
  unsigned threads = 1;
};

struct ArrowCertificate {
  ArrowVerdict verdict = ArrowVerdict::Indeterminate;
  std::optional<EdgeColoring> witness;  // present iff NonArrowing
  SearchStats stats;
  std::size_t k = 0;
  unsigned r = 0;
};

namespace detail {

// Immutable problem description shared by all workers.
struct SearchModel {
  unsigned r = 0;
  std::size_t h = 0;                           // edges per clique
  std::size_t m = 0;                           // search positions
  std::vector<std::int64_t> pos_of;            // canonical edge -> search position or -1
  std::vector<std::uint32_t> clique_edges;     // flattened, h per clique, in positions
  std::vector<std::vector<std::uint32_t>> edge_cliques;
  std::size_t clique_count = 0;
  std::size_t canonical_edges = 0;

  SearchModel(const Graph& g, std::size_t k, unsigned colors) : r(colors), h(k * (k - 1) / 2) {
    const EdgeIndex index(g);
    canonical_edges = g.edge_count();
    std::vector<std::vector<std::size_t>> cliques;
    std::vector<bool> relevant(canonical_edges, false);
    for_each_clique(g, k, [&](std::span<const std::size_t> c) {
      std::vector<std::size_t> ids;
      ids.reserve(h);
      for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) {
          const auto e = static_cast<std::size_t>(index(c[i], c[j]));
          ids.push_back(e);
          relevant[e] = true;
        }
      }
      cliques.push_back(std::move(ids));
      return true;
    });
    clique_count = cliques.size();

    const auto vorder = degeneracy_order(g);
    std::vector<std::size_t> rank(g.order());
    for (std::size_t i = 0; i < vorder.size(); ++i) rank[vorder[i]] = i;
    const auto edges = g.edges();
    std::vector<std::size_t> order;
    for (std::size_t e = 0; e < canonical_edges; ++e) {
      if (relevant[e]) order.push_back(e);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const auto ka = std::pair(std::max(rank[edges[a].u], rank[edges[a].v]), std::min(rank[edges[a].u], rank[edges[a].v]));
      const auto kb = std::pair(std::max(rank[edges[b].u], rank[edges[b].v]), std::min(rank[edges[b].u], rank[edges[b].v]));
      return ka < kb;
    });
    m = order.size();
    pos_of.assign(canonical_edges, -1);
    for (std::size_t p = 0; p < m; ++p) pos_of[order[p]] = static_cast<std::int64_t>(p);

    clique_edges.reserve(clique_count * h);
    edge_cliques.assign(m, {});
    for (std::size_t q = 0; q < clique_count; ++q) {
      for (auto e : cliques[q]) {
        const auto p = static_cast<std::uint32_t>(pos_of[e]);
        clique_edges.push_back(p);
        edge_cliques[p].push_back(static_cast<std::uint32_t>(q));
      }
    }
  }
};

enum class Outcome { Found, Exhausted, Aborted };

struct SharedControl {
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> nodes{0};
  std::uint64_t node_budget = 0;
  double time_budget_ms = 0;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::atomic<bool> budget_hit{false};
};

class SearchState {
 public:
  SearchState(const SearchModel& model, SharedControl& control)
      : model_(model), control_(control), full_domain_(model.r >= 32 ? ~0u : ((1u << model.r) - 1)) {
    reset();
  }

  void reset() {
    color_.assign(model_.m, 0);
    domain_.assign(model_.m, full_domain_);
    cnt_.assign(model_.clique_count * model_.r, 0);
    unc_.assign(model_.clique_count, static_cast<std::uint32_t>(model_.h));
    trail_.clear();
    dom_trail_.clear();
    path_.clear();
  }

  // Replays `script` for the first decisions; when collect_depth is set,
  // stops branching at that decision depth and records each path instead.
  Outcome run(const std::vector<std::uint8_t>* script, std::optional<std::size_t> collect_depth,
              std::vector<std::vector<std::uint8_t>>* collected) {
    script_ = script;
    collect_depth_ = collect_depth;
    collected_ = collected;
    return dfs(0, 0, 0);
  }

  const std::vector<std::uint8_t>& colors() const { return found_; }
  std::uint64_t local_nodes() const { return local_nodes_; }

 private:
  Outcome dfs(std::size_t pos, unsigned prefix_max, std::size_t depth) {
    while (pos < model_.m && color_[pos] != 0) {
      if (color_[pos] > prefix_max + 1) return Outcome::Exhausted;  // breaks colour-order symmetry
      prefix_max = std::max<unsigned>(prefix_max, color_[pos]);
      ++pos;
    }
    if (pos == model_.m) {
      found_ = color_;
      return Outcome::Found;
    }
    if (collect_depth_ && depth == *collect_depth_) {
      collected_->push_back(path_);
      return Outcome::Exhausted;
    }
    if (!tick()) return Outcome::Aborted;

    const unsigned limit = std::min(model_.r, prefix_max + 1);
    for (unsigned c = 1; c <= limit; ++c) {
      if (!(domain_[pos] & (1u << (c - 1)))) continue;
      if (script_ && depth < script_->size() && (*script_)[depth] != c) continue;
      const std::size_t tmark = trail_.size();
      const std::size_t dmark = dom_trail_.size();
      path_.push_back(static_cast<std::uint8_t>(c));
      Outcome res = Outcome::Exhausted;
      if (assign(static_cast<std::uint32_t>(pos), static_cast<std::uint8_t>(c))) {
        res = dfs(pos + 1, std::max(prefix_max, c), depth + 1);
      }
      path_.pop_back();
      undo(tmark, dmark);
      if (res != Outcome::Exhausted) return res;
    }
    return Outcome::Exhausted;
  }

  bool tick() {
    ++local_nodes_;
    if (control_.stop.load(std::memory_order_relaxed)) return false;
    const auto total = control_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (control_.node_budget && total > control_.node_budget) {
      control_.budget_hit = true;
      return false;
    }
    if (control_.time_budget_ms > 0 && (local_nodes_ & 1023) == 0) {
      const std::chrono::duration<double, std::milli> el = std::chrono::steady_clock::now() - control_.start;
      if (el.count() > control_.time_budget_ms) {
        control_.budget_hit = true;
        return false;
      }
    }
    return true;
  }

  bool assign(std::uint32_t pos, std::uint8_t c) {
    queue_.clear();
    queue_.emplace_back(pos, c);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const auto [p, col] = queue_[qi];
      if (color_[p] != 0) {
        if (color_[p] != col) return false;
        continue;
      }
      if (!(domain_[p] & (1u << (col - 1)))) return false;
      color_[p] = col;
      trail_.push_back(p);
      bool conflict = false;
      for (auto q : model_.edge_cliques[p]) {
        auto& count = cnt_[q * model_.r + (col - 1)];
        ++count;
        --unc_[q];
        if (count == model_.h) {
          conflict = true;
        } else if (std::size_t{count} + 1 == model_.h && unc_[q] == 1 && !conflict) {
          const std::uint32_t* e = &model_.clique_edges[q * model_.h];
          for (std::size_t i = 0; i < model_.h; ++i) {
            const auto f = e[i];
            if (color_[f] != 0) continue;
            const std::uint32_t bit = 1u << (col - 1);
            if (domain_[f] & bit) {
              dom_trail_.emplace_back(f, domain_[f]);
              domain_[f] &= ~bit;
              if (domain_[f] == 0) {
                conflict = true;
              } else if ((domain_[f] & (domain_[f] - 1)) == 0) {
                queue_.emplace_back(f, static_cast<std::uint8_t>(std::countr_zero(domain_[f]) + 1));
              }
            }
            break;
          }
        }
      }
      if (conflict) return false;
    }
    return true;
  }

  void undo(std::size_t tmark, std::size_t dmark) {
    while (trail_.size() > tmark) {
      const auto p = trail_.back();
      trail_.pop_back();
      const auto col = color_[p];
      for (auto q : model_.edge_cliques[p]) {
        --cnt_[q * model_.r + (col - 1)];
        ++unc_[q];
      }
      color_[p] = 0;
    }
    while (dom_trail_.size() > dmark) {
      const auto [f, d] = dom_trail_.back();
      dom_trail_.pop_back();
      domain_[f] = d;
    }
  }

  const SearchModel& model_;
  SharedControl& control_;
  std::uint32_t full_domain_;
  std::vector<std::uint8_t> color_;
  std::vector<std::uint32_t> domain_;
  std::vector<std::uint8_t> cnt_;
  std::vector<std::uint32_t> unc_;
  std::vector<std::uint32_t> trail_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> dom_trail_;
  std::vector<std::pair<std::uint32_t, std::uint8_t>> queue_;
  std::vector<std::uint8_t> path_;
  std::vector<std::uint8_t> found_;
  const std::vector<std::uint8_t>* script_ = nullptr;
  std::optional<std::size_t> collect_depth_;
  std::vector<std::vector<std::uint8_t>>* collected_ = nullptr;
  std::uint64_t local_nodes_ = 0;
};

inline EdgeColoring to_canonical(const SearchModel& model, const std::vector<std::uint8_t>& by_pos) {
  EdgeColoring c;
  c.r = model.r;
  c.colors.assign(model.canonical_edges, 1);
  for (std::size_t e = 0; e < model.canonical_edges; ++e) {
    if (model.pos_of[e] >= 0) c.colors[e] = by_pos[static_cast<std::size_t>(model.pos_of[e])];
  }
  return normalize_colors(std::move(c));
}

}  // namespace detail

/// Decides G -> (K_k)_r.  NonArrowing carries a proper colouring in canonical
/// edge order with colours normalised by first occurrence; a budget overrun
/// yields Indeterminate.
inline ArrowCertificate arrows(const Graph& g, std::size_t k, unsigned r, const ArrowOptions& opts = {}) {
  if (k < 2) throw std::invalid_argument("arrows: k must be >= 2");
  if (r < 1 || r > 32) throw std::invalid_argument("arrows: r must lie in 1..32");
  if (k * (k - 1) / 2 > 255) throw std::invalid_argument("arrows: k too large");
  const auto t0 = std::chrono::steady_clock::now();
  const detail::SearchModel model(g, k, r);

  ArrowCertificate cert;
  cert.k = k;
  cert.r = r;
  cert.stats.cliques = model.clique_count;
  cert.stats.search_edges = model.m;

  detail::SharedControl control;
  control.node_budget = opts.node_budget;
  control.time_budget_ms = opts.time_budget_ms;
  control.start = t0;

  auto finish = [&](detail::Outcome outcome, std::optional<EdgeColoring> witness) {
    if (outcome == detail::Outcome::Found) {
      cert.verdict = ArrowVerdict::NonArrowing;
      cert.witness = std::move(witness);
    } else if (outcome == detail::Outcome::Exhausted) {
      cert.verdict = ArrowVerdict::Arrows;
      cert.stats.exhausted = true;
    } else {
      cert.verdict = ArrowVerdict::Indeterminate;
    }
    cert.stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return cert;
  };

  if (opts.mode == SearchMode::Deterministic) {
    detail::SearchState state(model, control);
    const auto outcome = state.run(nullptr, std::nullopt, nullptr);
    cert.stats.nodes = state.local_nodes();
    std::optional<EdgeColoring> w;
    if (outcome == detail::Outcome::Found) w = detail::to_canonical(model, state.colors());
    return finish(outcome, std::move(w));
  }

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  cert.stats.threads = threads;
  std::size_t depth = 1;
  while ((std::size_t{1} << depth) < 8 * static_cast<std::size_t>(threads) && depth < 16) ++depth;

  std::vector<std::vector<std::uint8_t>> tasks;
  {
    detail::SearchState splitter(model, control);
    const auto outcome = splitter.run(nullptr, depth, &tasks);
    cert.stats.nodes += splitter.local_nodes();
    if (outcome == detail::Outcome::Found) {
      return finish(outcome, detail::to_canonical(model, splitter.colors()));
    }
    if (outcome == detail::Outcome::Aborted) return finish(outcome, std::nullopt);
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> nodes{0};
  std::mutex mu;
  std::optional<std::size_t> found_task;
  std::vector<std::uint8_t> found_colors;
  auto worker = [&] {
    detail::SearchState state(model, control);
    while (!control.stop.load()) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) break;
      state.reset();
      const auto outcome = state.run(&tasks[t], std::nullopt, nullptr);
      if (outcome == detail::Outcome::Found) {
        std::lock_guard lock(mu);
        if (!found_task || t < *found_task) {
          found_task = t;
          found_colors = state.colors();
        }
        control.stop = true;
      } else if (outcome == detail::Outcome::Aborted) {
        control.stop = true;
      }
    }
    nodes += state.local_nodes();
  };
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  pool.clear();  // joins
  cert.stats.nodes += nodes.load();

  if (found_task) return finish(detail::Outcome::Found, detail::to_canonical(model, found_colors));
  if (control.budget_hit) return finish(detail::Outcome::Aborted, std::nullopt);
  return finish(detail::Outcome::Exhausted, std::nullopt);
}

enum class FolkmanVerdict { Folkman, NotFolkman, Indeterminate };

inline std::string_view to_string(FolkmanVerdict v) {
  switch (v) {
    case FolkmanVerdict::Folkman: return "Folkman";
    case FolkmanVerdict::NotFolkman: return "NotFolkman";
    case FolkmanVerdict::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

struct CliqueCertificate {
  std::size_t size = 0;
  std::optional<VertexSet> witness;  // a clique of `size` vertices, when present
  bool present() const { return witness.has_value(); }
};

struct FolkmanBundle {
  FolkmanVerdict verdict = FolkmanVerdict::Indeterminate;
  ArrowCertificate arrowing;
  CliqueCertificate forbidden_clique;
  std::size_t l = 0;
  bool is_folkman() const { return verdict == FolkmanVerdict::Folkman; }
};

/// G -> (K_k)_r and G contains no K_l.
inline FolkmanBundle is_folkman(const Graph& g, std::size_t k, unsigned r, std::size_t l,
                                const ArrowOptions& opts = {}) {
  if (l < k + 1) throw std::invalid_argument("is_folkman: l must be >= k + 1");
  FolkmanBundle b;
  b.l = l;
  b.forbidden_clique.size = l;
  b.forbidden_clique.witness = find_clique(g, l);
  b.arrowing = arrows(g, k, r, opts);
  if (b.arrowing.verdict == ArrowVerdict::Indeterminate) {
    b.verdict = b.forbidden_clique.present() ? FolkmanVerdict::NotFolkman : FolkmanVerdict::Indeterminate;
  } else {
    b.verdict = (b.arrowing.verdict == ArrowVerdict::Arrows && !b.forbidden_clique.present())
                    ? FolkmanVerdict::Folkman
                    : FolkmanVerdict::NotFolkman;
  }
  return b;
}

}  // namespace folkman
