#pragma once

// The clique hypergraph H(n,k) and the co-degree function of uniform
// hypergraphs.
//
// H(n,k) has the edges of K_n as vertices (canonical lexicographic edge
// order) and one hyperedge per K_k copy.  A vertex subset is independent
// exactly when the graph with that edge set is K_k-free.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "folkman/graph.hpp"
#include "folkman/graph_io.hpp"
#include "folkman/log_interval.hpp"

namespace folkman {

inline std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
  if (acc >> 64) throw std::overflow_error("choose: result exceeds 64 bits");
  return static_cast<std::uint64_t>(acc);
}

/// Smallest l with j <= binom(l, 2).
inline std::uint64_t ell(std::uint64_t j) {
  if (j < 1) throw std::invalid_argument("ell: j must be >= 1");
  std::uint64_t l = 2;
  while (l * (l - 1) / 2 < j) ++l;
  return l;
}

class GenericHypergraph {
 public:
  GenericHypergraph() = default;

  GenericHypergraph(std::size_t vertex_count, std::size_t uniformity, std::vector<std::vector<std::size_t>> edges)
      : n_(vertex_count), h_(uniformity), edges_(std::move(edges)) {
    for (auto& e : edges_) {
      std::sort(e.begin(), e.end());
      if (e.size() != h_) throw std::invalid_argument("hypergraph: hyperedge size differs from uniformity");
      if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw std::invalid_argument("hypergraph: repeated vertex");
      if (!e.empty() && e.back() >= n_) throw std::invalid_argument("hypergraph: vertex out of range");
    }
    incidence_.assign(n_, VertexSet(edges_.size()));
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      for (auto v : edges_[i]) incidence_[v].insert(i);
    }
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t uniformity() const { return h_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::vector<std::size_t>>& edges() const { return edges_; }

  std::size_t degree(std::size_t v) const { return incidence_.at(v).size(); }

  /// Number of hyperedges containing every vertex of J.
  std::size_t codegree(std::span<const std::size_t> J) const {
    if (J.empty()) return edges_.size();
    VertexSet acc = incidence_.at(J[0]);
    for (std::size_t i = 1; i < J.size(); ++i) acc &= incidence_.at(J[i]);
    return acc.size();
  }

  const VertexSet& incident(std::size_t v) const { return incidence_.at(v); }

 private:
  std::size_t n_ = 0;
  std::size_t h_ = 0;
  std::vector<std::vector<std::size_t>> edges_;
  std::vector<VertexSet> incidence_;  // vertex -> hyperedge ids
};

/// H(n,k), materialised for n <= 12.
class CliqueHypergraph {
 public:
  static constexpr std::size_t kMaxOrder = 12;

  CliqueHypergraph(std::size_t n, std::size_t k) : n_(n), k_(k) {
    if (k < 2 || k > n) throw std::invalid_argument("clique hypergraph: need 2 <= k <= n");
    if (n > kMaxOrder) throw std::invalid_argument("clique hypergraph: materialisation is capped at n <= 12");
    const Graph kn = Graph::complete(n);
    const EdgeIndex index(kn);
    std::vector<std::vector<std::size_t>> edges;
    for_each_clique(kn, k, [&](std::span<const std::size_t> c) {
      std::vector<std::size_t> e;
      for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) e.push_back(static_cast<std::size_t>(index(c[i], c[j])));
      }
      edges.push_back(std::move(e));
      return true;
    });
    h_ = GenericHypergraph(n * (n - 1) / 2, k * (k - 1) / 2, std::move(edges));
  }

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  const GenericHypergraph& hypergraph() const { return h_; }

  /// The graph on [n] whose edge set is the given vertex subset of H.
  Graph graph_of(const VertexSet& s) const {
    const auto kn_edges = Graph::complete(n_).edges();
    Graph g(n_);
    s.for_each([&](std::size_t i) { g.add_edge(kn_edges[i].u, kn_edges[i].v); });
    return g;
  }

  VertexSet vertices_of(const Graph& g) const {
    if (g.order() != n_) throw std::invalid_argument("clique hypergraph: graph order mismatch");
    const EdgeIndex index(Graph::complete(n_));
    VertexSet s(h_.vertex_count());
    for (const auto& e : g.edges()) s.insert(static_cast<std::size_t>(index(e.u, e.v)));
    return s;
  }

 private:
  std::size_t n_;
  std::size_t k_;
  GenericHypergraph h_;
};

inline CliqueHypergraph build_clique_hypergraph(std::size_t n, std::size_t k) { return {n, k}; }

/// d_j(v): the largest number of hyperedges through a j-set J containing v.
/// Only J inside some hyperedge through v can have nonzero degree, so those
/// are the only ones enumerated.
inline std::size_t max_j_degree(const GenericHypergraph& h, std::size_t v, std::size_t j) {
  if (j < 2 || j > h.uniformity()) throw std::invalid_argument("max_j_degree: need 2 <= j <= h");
  if (v >= h.vertex_count()) throw std::out_of_range("max_j_degree: vertex out of range");
  std::size_t best = 0;
  std::vector<std::size_t> J(j);
  h.incident(v).for_each([&](std::size_t e) {
    std::vector<std::size_t> others;
    for (auto w : h.edges()[e]) {
      if (w != v) others.push_back(w);
    }
    // (j-1)-subsets of `others`, via a combination counter.
    const std::size_t t = j - 1;
    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    while (true) {
      J[0] = v;
      for (std::size_t i = 0; i < t; ++i) J[i + 1] = others[idx[i]];
      best = std::max(best, h.codegree(J));
      std::size_t i = t;
      while (i > 0 && idx[i - 1] == others.size() - t + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t q = i; q < t; ++q) idx[q] = idx[q - 1] + 1;
    }
  });
  return best;
}

enum class CodegreeForm {
  Exact,         // with the 2^binom(j-1,2) divisor
  DroppedPowers  // divisor removed, as in the upper bound for H(n,k)
};

namespace detail {

// (2^(binom(h,2)-1) / (n d)) * sum_j S_j / (2^binom(j-1,2) tau^(j-1)),
// with S_j = sum_v d_j(v) supplied by the caller and n d = h |E|.
template <typename SumOfMaxDegrees>
LogInterval codegree_sum(std::size_t h, std::uint64_t degree_total, const LogInterval& tau, CodegreeForm form,
                         SumOfMaxDegrees&& sum_dj) {
  if (degree_total == 0) throw std::domain_error("codegree function: hypergraph has no edges");
  if (tau.is_zero() || tau.is_infinite()) throw std::domain_error("codegree function: tau must be positive and finite");
  LogInterval total = LogInterval::zero();
  for (std::size_t j = 2; j <= h; ++j) {
    LogInterval term = sum_dj(j) / pow(tau, static_cast<real>(j - 1));
    if (form == CodegreeForm::Exact) {
      term = term / LogInterval::exp2(static_cast<real>((j - 1) * (j - 2) / 2));
    }
    total = total + term;
  }
  const LogInterval prefactor =
      LogInterval::exp2(static_cast<real>(h * (h - 1) / 2) - 1) / LogInterval::from_integer(degree_total);
  return prefactor * total;
}

}  // namespace detail

/// delta(H, tau) evaluated exactly from the hypergraph's co-degrees.
inline LogInterval codegree_function(const GenericHypergraph& h, const LogInterval& tau,
                                     CodegreeForm form = CodegreeForm::Exact) {
  std::uint64_t degree_total = 0;
  for (std::size_t v = 0; v < h.vertex_count(); ++v) degree_total += h.degree(v);
  return detail::codegree_sum(h.uniformity(), degree_total, tau, form, [&](std::size_t j) {
    std::uint64_t s = 0;
    for (std::size_t v = 0; v < h.vertex_count(); ++v) s += max_j_degree(h, v, j);
    return LogInterval::from_integer(s);
  });
}

inline LogInterval codegree_function(const GenericHypergraph& h, real tau, CodegreeForm form = CodegreeForm::Exact) {
  return codegree_function(h, LogInterval::from_value(tau), form);
}

/// delta(H(n,k), tau) from the closed-form degrees d_j(v) = binom(n - l_j, k - l_j);
/// works for any n since nothing is materialised.
inline LogInterval codegree_clique_closed_form(std::uint64_t n, std::uint64_t k, const LogInterval& tau,
                                               CodegreeForm form = CodegreeForm::Exact) {
  if (k < 2 || k > n) throw std::invalid_argument("codegree: need 2 <= k <= n");
  const std::uint64_t h = k * (k - 1) / 2;
  const LogInterval vertices = binomial(n, 2);
  const LogInterval degree_total = vertices * binomial(n - 2, k - 2);
  if (h < 2) throw std::domain_error("codegree: uniformity below 2 has no co-degree terms");
  LogInterval total = LogInterval::zero();
  for (std::uint64_t j = 2; j <= h; ++j) {
    const std::uint64_t l = ell(j);
    LogInterval term = vertices * binomial(n - l, k - l) / pow(tau, static_cast<real>(j - 1));
    if (form == CodegreeForm::Exact) term = term / LogInterval::exp2(static_cast<real>((j - 1) * (j - 2) / 2));
    total = total + term;
  }
  return LogInterval::exp2(static_cast<real>(h * (h - 1) / 2) - 1) / degree_total * total;
}

/// delta(n,k,tau) = sum_{j=2}^{binom(k,2)} 2^(k^4) k^(k-2) / (tau^(j-1) n^(l_j - 2)).
inline LogInterval delta_nk(const LogInterval& n, std::uint64_t k, const LogInterval& tau) {
  if (k < 3) throw std::invalid_argument("delta_nk: k must be >= 3");
  if (tau.is_zero() || n.is_zero()) throw std::domain_error("delta_nk: n and tau must be positive");
  const LogInterval numerator =
      LogInterval::exp2(static_cast<real>(k * k * k * k)) * pow(LogInterval::from_integer(k), static_cast<real>(k - 2));
  LogInterval total = LogInterval::zero();
  for (std::uint64_t j = 2; j <= k * (k - 1) / 2; ++j) {
    const LogInterval denom = pow(tau, static_cast<real>(j - 1)) * pow(n, static_cast<real>(ell(j) - 2));
    total = total + numerator / denom;
  }
  return total;
}

inline LogInterval delta_nk(std::uint64_t n, std::uint64_t k, real tau) {
  return delta_nk(LogInterval::from_integer(n), k, LogInterval::from_value(tau));
}

struct DeltaDeltaReport {
  std::size_t n = 0;
  std::size_t k = 0;
  real tau = 0;
  LogInterval exact;        // delta(H(n,k), tau)
  LogInterval closed_form;  // delta(n,k,tau)
  Verdict verdict = Verdict::Indeterminate;
  bool holds() const { return verdict == Verdict::CertifiedTrue; }
};

/// Certifies delta(H(n,k), tau) <= delta(n,k,tau) on the materialised H(n,k).
inline DeltaDeltaReport check_claim_deltadelta(std::size_t n, std::size_t k, real tau,
                                               CodegreeForm form = CodegreeForm::Exact) {
  DeltaDeltaReport r;
  r.n = n;
  r.k = k;
  r.tau = tau;
  const auto H = build_clique_hypergraph(n, k);
  const auto t = LogInterval::from_value(tau);
  r.exact = codegree_function(H.hypergraph(), t, form);
  r.closed_form = delta_nk(LogInterval::from_integer(n), k, t);
  r.verdict = certify_le(r.exact, r.closed_form);
  return r;
}

inline bool is_independent(const GenericHypergraph& h, const VertexSet& s) {
  if (s.universe() != h.vertex_count()) throw std::invalid_argument("is_independent: universe mismatch");
  for (const auto& e : h.edges()) {
    bool inside = true;
    for (auto v : e) {
      if (!s.contains(v)) {
        inside = false;
        break;
      }
    }
    if (inside) return false;
  }
  return true;
}

/// Text form: "n h", then one hyperedge per line.
inline std::string to_text(const GenericHypergraph& h) {
  std::ostringstream os;
  os << h.vertex_count() << ' ' << h.uniformity() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
    os << '\n';
  }
  return os.str();
}

inline GenericHypergraph hypergraph_from_text(std::istream& in) {
  std::string line;
  std::size_t n = 0;
  std::size_t h = 0;
  if (!std::getline(in, line)) throw FormatError("hypergraph: missing header line");
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> h) || (hs >> extra)) throw FormatError("hypergraph: header must be \"n h\"");
  }
  std::vector<std::vector<std::size_t>> edges;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::size_t> e;
    std::size_t v = 0;
    while (ls >> v) e.push_back(v);
    if (!ls.eof()) throw FormatError("hypergraph: non-numeric token");
    if (e.empty()) continue;
    edges.push_back(std::move(e));
  }
  try {
    return GenericHypergraph(n, h, std::move(edges));
  } catch (const std::invalid_argument& ex) {
    throw FormatError(ex.what());
  }
}

}  // namespace folkman
