#pragma once

// Brute-force references for small instances.  Nothing here shares code with
// the search or clique-extension paths it is used to check: subsets are
// walked with plain combination counters and colourings with base-r odometers.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "folkman/graph.hpp"

namespace folkman::brute_force {

/// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::vector<std::vector<std::size_t>> cliques(const Graph& g, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for_each_subset(g.order(), k, [&](const std::vector<std::size_t>& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (!g.adjacent(s[i], s[j])) return;
      }
    }
    out.push_back(s);
  });
  return out;
}

/// For every k-clique, the bitmask of its edges in canonical edge order.
/// Requires at most 64 edges.
inline std::vector<std::uint64_t> clique_edge_masks(const Graph& g, std::size_t k) {
  if (g.edge_count() > 64) throw std::invalid_argument("brute_force: more than 64 edges");
  const auto edges = g.edges();
  auto index_of = [&](std::size_t u, std::size_t v) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].u == u && edges[i].v == v) return i;
    }
    throw std::logic_error("brute_force: missing edge");
  };
  std::vector<std::uint64_t> masks;
  for (const auto& c : cliques(g, k)) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) m |= std::uint64_t{1} << index_of(c[i], c[j]);
    }
    masks.push_back(m);
  }
  return masks;
}

/// Number of proper 2-colourings among all 2^|E|, plus the first one found
/// (bit i set = colour 2 on canonical edge i).
struct TwoColorCensus {
  std::uint64_t total = 0;
  std::uint64_t proper = 0;
  std::optional<std::uint64_t> first_proper;
};

inline TwoColorCensus two_color_census(const Graph& g, std::size_t k) {
  const std::size_t m = g.edge_count();
  if (m > 30) throw std::invalid_argument("brute_force: too many edges for full enumeration");
  const auto masks = clique_edge_masks(g, k);
  TwoColorCensus out;
  out.total = std::uint64_t{1} << m;
  for (std::uint64_t x = 0; x < out.total; ++x) {
    bool proper = true;
    for (auto mask : masks) {
      const auto sel = x & mask;
      if (sel == 0 || sel == mask) {
        proper = false;
        break;
      }
    }
    if (proper) {
      ++out.proper;
      if (!out.first_proper) out.first_proper = x;
    }
  }
  return out;
}

/// True iff every r-colouring has a monochromatic K_k (odometer over r^|E|).
inline bool arrows(const Graph& g, std::size_t k, unsigned r) {
  const auto edges = g.edges();
  const auto cl = cliques(g, k);
  std::vector<std::vector<std::size_t>> clique_edges;
  for (const auto& c : cl) {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        for (std::size_t e = 0; e < edges.size(); ++e) {
          if (edges[e].u == c[i] && edges[e].v == c[j]) ids.push_back(e);
        }
      }
    }
    clique_edges.push_back(std::move(ids));
  }
  std::vector<unsigned> col(edges.size(), 0);
  while (true) {
    bool proper = true;
    for (const auto& ids : clique_edges) {
      bool mono = true;
      for (auto e : ids) mono = mono && col[e] == col[ids[0]];
      if (mono) {
        proper = false;
        break;
      }
    }
    if (proper) return false;
    std::size_t i = 0;
    while (i < col.size() && ++col[i] == r) col[i++] = 0;
    if (i == col.size()) return true;
  }
}

}  // namespace folkman::brute_force
