#pragma once

// (rho,d)-dense graphs, canonical sequences in 2-coloured graphs, the
// counting dichotomy for (r+1)-colourings of K_n, and the parameters of the
// random construction for relaxed Folkman numbers.

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "folkman/arrowing.hpp"
#include "folkman/graph.hpp"
#include "folkman/hypergraph.hpp"
#include "folkman/log_interval.hpp"

namespace folkman {

/// Exact nonnegative rational, kept in lowest terms.
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Fraction() = default;
  Fraction(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
    if (d == 0) throw std::invalid_argument("fraction: zero denominator");
    const auto g = std::gcd(n, d);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  /// Accepts "p/q", a decimal such as "0.9", or an integer.
  static Fraction parse(std::string_view s) {
    auto read = [&](std::string_view t) {
      std::uint64_t v = 0;
      auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc() || end != t.data() + t.size() || t.empty()) {
        throw std::invalid_argument("fraction: cannot parse \"" + std::string(s) + "\"");
      }
      return v;
    };
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
      return {read(s.substr(0, slash)), read(s.substr(slash + 1))};
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      const auto whole = s.substr(0, dot);
      const auto frac = s.substr(dot + 1);
      if (frac.size() > 18) throw std::invalid_argument("fraction: too many decimal digits");
      std::uint64_t den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      const std::uint64_t w = whole.empty() ? 0 : read(whole);
      const std::uint64_t f = frac.empty() ? 0 : read(frac);
      return {w * den + f, den};
    }
    return {read(s), 1};
  }

  long double value() const { return static_cast<long double>(num) / static_cast<long double>(den); }
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Fraction& a, const Fraction& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return static_cast<unsigned __int128>(a.num) * b.den < static_cast<unsigned __int128>(b.num) * a.den;
  }
  friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
};

struct DensityParams {
  Fraction rho;
  Fraction d;

  DensityParams(Fraction rho_, Fraction d_) : rho(rho_), d(d_) {
    const Fraction zero(0, 1);
    const Fraction one(1, 1);
    if (!(zero < rho) || !(rho <= one) || !(zero < d) || !(d <= one)) {
      throw std::invalid_argument("density params: need 0 < rho, d <= 1");
    }
  }

  /// ceil(rho n).
  std::size_t m(std::size_t n) const {
    const auto top = static_cast<unsigned __int128>(rho.num) * n;
    return static_cast<std::size_t>((top + rho.den - 1) / rho.den);
  }

  /// e >= d m^2 / 2, exactly.
  bool enough_edges(std::size_t e, std::size_t m) const {
    return static_cast<unsigned __int128>(2 * e) * d.den >= static_cast<unsigned __int128>(d.num) * m * m;
  }
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DensityMode {
  enum Kind { Exhaustive, Sampled } kind = Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;

  static DensityMode exhaustive() { return {}; }
  static DensityMode sampled(std::uint64_t seed, std::uint64_t trials) { return {Sampled, seed, trials}; }
};

struct DensityResult {
  bool dense = true;  // sampled mode: true means no violation was found
  bool definitive = true;
  std::size_t m = 0;
  std::uint64_t subsets_checked = 0;
  std::optional<VertexSet> violation;
  std::size_t violation_edges = 0;
};

inline constexpr std::uint64_t kDensityExhaustiveCap = 10'000'000;

namespace detail {

inline std::size_t edges_within(const Graph& g, const std::vector<std::size_t>& s) {
  std::size_t e = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) e += g.adjacent(s[i], s[j]) ? 1 : 0;
  }
  return e;
}

}  // namespace detail

/// Checks every induced subgraph on m = ceil(rho n) vertices.  Larger
/// subsets need no check: an m'-set whose m-subsets all carry d m^2/2 edges
/// carries at least d m'^2/2 by averaging.
inline DensityResult check_rho_d_dense(const Graph& g, const DensityParams& dp,
                                       DensityMode mode = DensityMode::exhaustive()) {
  const std::size_t n = g.order();
  DensityResult out;
  out.m = dp.m(n);
  if (n == 0) return out;
  const std::size_t m = out.m;
  if (mode.kind == DensityMode::Exhaustive) {
    std::uint64_t total = 0;
    try {
      total = choose(n, m);
    } catch (const std::overflow_error&) {
      total = kDensityExhaustiveCap + 1;
    }
    if (total > kDensityExhaustiveCap) {
      throw BudgetExceeded("is_rho_d_dense: binom(" + std::to_string(n) + "," + std::to_string(m) +
                           ") subsets exceed the exhaustive budget of 10^7");
    }
    std::vector<std::size_t> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      ++out.subsets_checked;
      const auto e = detail::edges_within(g, idx);
      if (!dp.enough_edges(e, m)) {
        out.dense = false;
        out.violation = VertexSet(n, std::span<const std::size_t>(idx));
        out.violation_edges = e;
        return out;
      }
      std::size_t i = m;
      while (i > 0 && idx[i - 1] == n - m + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
  }
  out.definitive = false;
  std::vector<std::size_t> perm(n);
  for (std::uint64_t t = 0; t < mode.trials; ++t) {
    // Partial Fisher-Yates driven by the counter-based generator.
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      const auto w = splitmix64_at(splitmix64_at(mode.seed, t), i);
      std::swap(perm[i], perm[i + w % (n - i)]);
    }
    std::vector<std::size_t> s(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(m));
    std::sort(s.begin(), s.end());
    ++out.subsets_checked;
    const auto e = detail::edges_within(g, s);
    if (!dp.enough_edges(e, m)) {
      out.dense = false;
      out.definitive = true;
      out.violation = VertexSet(n, std::span<const std::size_t>(s));
      out.violation_edges = e;
      return out;
    }
  }
  return out;
}

inline bool is_rho_d_dense(const Graph& g, const DensityParams& dp, DensityMode mode = DensityMode::exhaustive()) {
  return check_rho_d_dense(g, dp, mode).dense;
}

struct CanonicalSequence {
  std::vector<std::size_t> vertices;
  std::vector<std::uint8_t> forward_colors;  // one per position except the last
};

struct CanonicalLevel {
  std::size_t level = 0;  // 1-based position being chosen
  std::size_t set_size = 0;
  std::size_t vertex = 0;
  std::size_t degree = 0;
  std::size_t majority = 0;
};

struct CanonicalOutcome {
  std::optional<CanonicalSequence> sequence;
  std::vector<CanonicalLevel> levels;
  std::string failure;  // empty on success
  std::optional<std::size_t> failed_level;
};

/// Checks the canonical-sequence invariant against a colouring.
inline bool is_canonical(const Graph& g, const EdgeColoring& c, const CanonicalSequence& seq) {
  const auto& v = seq.vertices;
  if (v.empty() || seq.forward_colors.size() + 1 != v.size()) return false;
  const EdgeIndex index(g);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] >= g.order() || v[j] >= g.order() || v[i] == v[j]) return false;
      const auto e = index(v[i], v[j]);
      if (e < 0 || c.colors[static_cast<std::size_t>(e)] != seq.forward_colors[i]) return false;
    }
  }
  return true;
}

/// Greedy construction along the inductive proof: at each level take the
/// vertex of maximum degree in the current induced subgraph (lowest index on
/// ties), require degree >= d |S|, and recurse into its majority colour class
/// (colour 1 on ties).  The last vertex is the smallest one left.
inline CanonicalOutcome canonical_sequence(const Graph& g, const EdgeColoring& c, std::size_t ell, Fraction d) {
  validate_coloring(g, c);
  if (c.r != 2) throw std::invalid_argument("canonical_sequence: a 2-colouring is required");
  if (ell < 2) throw std::invalid_argument("canonical_sequence: length must be >= 2");
  const EdgeIndex index(g);
  CanonicalOutcome out;
  CanonicalSequence seq;
  VertexSet s = VertexSet::full(g.order());
  for (std::size_t level = 1; level < ell; ++level) {
    CanonicalLevel info;
    info.level = level;
    info.set_size = s.size();
    std::size_t best = g.order();
    std::size_t best_deg = 0;
    s.for_each([&](std::size_t v) {
      const auto deg = g.neighbours(v).intersection_size(s);
      if (best == g.order() || deg > best_deg) {
        best = v;
        best_deg = deg;
      }
    });
    info.vertex = best;
    info.degree = best_deg;
    const bool degree_ok =
        best != g.order() && best_deg > 0 &&
        static_cast<unsigned __int128>(best_deg) * d.den >= static_cast<unsigned __int128>(d.num) * s.size();
    if (!degree_ok) {
      out.levels.push_back(info);
      out.failed_level = level;
      out.failure = "level " + std::to_string(level) + ": maximum degree " + std::to_string(best_deg) +
                    " in the current set of " + std::to_string(s.size()) + " vertices is below d|S| = " +
                    std::to_string(static_cast<double>(d.value() * static_cast<long double>(s.size())));
      return out;
    }
    std::array<VertexSet, 2> cls{VertexSet(g.order()), VertexSet(g.order())};
    (g.neighbours(best) & s).for_each([&](std::size_t w) {
      cls[c.colors[static_cast<std::size_t>(index(best, w))] - 1].insert(w);
    });
    const std::uint8_t color = cls[1].size() > cls[0].size() ? 2 : 1;
    info.majority = cls[color - 1].size();
    out.levels.push_back(info);
    seq.vertices.push_back(best);
    seq.forward_colors.push_back(color);
    s = cls[color - 1];
  }
  seq.vertices.push_back(s.first());
  out.sequence = std::move(seq);
  return out;
}

/// Pigeonhole on the first 2k-3 forward colours: the most frequent colour
/// (colour 1 on ties) owns at least k-1 positions; its first k-1 vertices and
/// the last vertex span a monochromatic K_k.
inline MonochromaticClique mono_clique_from_canonical(const Graph& g, const EdgeColoring& c,
                                                      const CanonicalSequence& seq, std::size_t k) {
  if (k < 2) throw std::invalid_argument("mono_clique_from_canonical: k must be >= 2");
  if (seq.vertices.size() != 2 * k - 2) {
    throw std::invalid_argument("mono_clique_from_canonical: sequence length must be 2k-2");
  }
  if (!is_canonical(g, c, seq)) throw std::invalid_argument("mono_clique_from_canonical: malformed canonical sequence");
  std::array<std::size_t, 3> freq{};
  for (auto col : seq.forward_colors) {
    if (col < 1 || col > 2) throw std::invalid_argument("mono_clique_from_canonical: colour outside 1..2");
    ++freq[col];
  }
  const std::uint8_t color = freq[2] > freq[1] ? 2 : 1;
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < seq.forward_colors.size() && members.size() < k - 1; ++i) {
    if (seq.forward_colors[i] == color) members.push_back(seq.vertices[i]);
  }
  members.push_back(seq.vertices.back());
  return {color, VertexSet(g.order(), std::span<const std::size_t>(members))};
}

enum class DichotomySide { First, Second, Both, Neither };

inline std::string_view to_string(DichotomySide s) {
  switch (s) {
    case DichotomySide::First: return "First";
    case DichotomySide::Second: return "Second";
    case DichotomySide::Both: return "Both";
    case DichotomySide::Neither: return "Neither";
  }
  return "Neither";
}

struct DichotomyResult {
  std::uint64_t mono_count = 0;
  std::uint64_t last_color_edges = 0;
  DichotomySide side = DichotomySide::Neither;
};

/// Thresholds of the dichotomy with alpha = 1/binom(R,k), compared exactly:
/// first side  2 mono binom(R,k) > binom(n,k);
/// second side last R^2 > binom(n,2).
struct DichotomyThresholds {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  unsigned r = 0;
  std::uint64_t R = 0;
  std::uint64_t binom_Rk = 0;
  std::uint64_t binom_nk = 0;
  std::uint64_t binom_n2 = 0;

  DichotomyThresholds(std::uint64_t n_, std::uint64_t k_, unsigned r_, std::uint64_t R_)
      : n(n_), k(k_), r(r_), R(R_) {
    if (k < 2 || r < 1) throw std::invalid_argument("dichotomy: need k >= 2, r >= 1");
    if (n < R) throw std::invalid_argument("dichotomy: n must be >= R");
    if (R < k) throw std::invalid_argument("dichotomy: R must be >= k");
    binom_Rk = choose(R, k);
    binom_nk = choose(n, k);
    binom_n2 = choose(n, 2);
  }

  bool first(std::uint64_t mono) const {
    return static_cast<unsigned __int128>(2 * mono) * binom_Rk > binom_nk;
  }
  bool second(std::uint64_t last) const {
    return static_cast<unsigned __int128>(last) * R * R > binom_n2;
  }
  DichotomySide side(std::uint64_t mono, std::uint64_t last) const {
    const bool a = first(mono);
    const bool b = second(last);
    return a && b ? DichotomySide::Both : a ? DichotomySide::First : b ? DichotomySide::Second : DichotomySide::Neither;
  }
};

inline DichotomyResult dichotomy_check(std::uint64_t n, std::uint64_t k, unsigned r, std::uint64_t R,
                                       const EdgeColoring& c) {
  const DichotomyThresholds th(n, k, r, R);
  const Graph kn = Graph::complete(n);
  if (c.r != r + 1) throw std::invalid_argument("dichotomy: colouring must use r+1 colours");
  validate_coloring(kn, c);
  const EdgeIndex index(kn);
  DichotomyResult out;
  for (auto col : c.colors) out.last_color_edges += col == r + 1 ? 1 : 0;
  for_each_clique(kn, k, [&](std::span<const std::size_t> q) {
    const auto first = c.colors[static_cast<std::size_t>(index(q[0], q[1]))];
    if (first == r + 1) return true;
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = i + 1; j < q.size(); ++j) {
        if (c.colors[static_cast<std::size_t>(index(q[i], q[j]))] != first) return true;
      }
    }
    ++out.mono_count;
    return true;
  });
  out.side = th.side(out.mono_count, out.last_color_edges);
  return out;
}

struct DichotomySurvey {
  std::uint64_t colorings = 0;
  std::uint64_t first_only = 0;
  std::uint64_t second_only = 0;
  std::uint64_t both = 0;
  std::uint64_t neither = 0;
  std::optional<EdgeColoring> counterexample;
  bool exhaustive = false;
};

inline constexpr std::uint64_t kDichotomyExhaustiveCap = 14'348'907;  // 3^15

namespace detail {

// Depth-first enumeration of all colourings of K_n in canonical edge order.
// Every clique is checked once, when its last edge (in that order) is set.
class DichotomyEnumerator {
 public:
  explicit DichotomyEnumerator(const DichotomyThresholds& th) : th_(th), colors_(static_cast<unsigned>(th.r + 1)) {
    const Graph kn = Graph::complete(th.n);
    const EdgeIndex index(kn);
    m_ = kn.edge_count();
    closing_.assign(m_, {});
    for_each_clique(kn, th.k, [&](std::span<const std::size_t> q) {
      std::vector<std::uint32_t> ids;
      for (std::size_t i = 0; i < q.size(); ++i) {
        for (std::size_t j = i + 1; j < q.size(); ++j) ids.push_back(static_cast<std::uint32_t>(index(q[i], q[j])));
      }
      const auto last = *std::max_element(ids.begin(), ids.end());
      closing_[last].push_back(static_cast<std::uint32_t>(clique_edges_.size()));
      clique_edges_.push_back(std::move(ids));
      return true;
    });
  }

  std::size_t edges() const { return m_; }

  // Enumerates all completions of the given prefix.
  void run(const std::vector<std::uint8_t>& prefix, DichotomySurvey& out) {
    col_.assign(m_, 0);
    std::uint64_t mono = 0;
    std::uint64_t last = 0;
    for (std::size_t e = 0; e < prefix.size(); ++e) {
      col_[e] = prefix[e];
      last += prefix[e] == colors_ ? 1 : 0;
      mono += closed_mono(e);
    }
    dfs(prefix.size(), mono, last, out);
  }

 private:
  std::uint64_t closed_mono(std::size_t e) const {
    std::uint64_t add = 0;
    for (auto q : closing_[e]) {
      const auto& ids = clique_edges_[q];
      const auto c0 = col_[ids[0]];
      if (c0 == colors_) continue;
      bool mono = true;
      for (auto f : ids) {
        if (col_[f] != c0) {
          mono = false;
          break;
        }
      }
      add += mono ? 1 : 0;
    }
    return add;
  }

  void dfs(std::size_t e, std::uint64_t mono, std::uint64_t last, DichotomySurvey& out) {
    if (e == m_) {
      ++out.colorings;
      switch (th_.side(mono, last)) {
        case DichotomySide::First: ++out.first_only; break;
        case DichotomySide::Second: ++out.second_only; break;
        case DichotomySide::Both: ++out.both; break;
        case DichotomySide::Neither:
          ++out.neither;
          if (!out.counterexample) out.counterexample = EdgeColoring{col_, colors_};
          break;
      }
      return;
    }
    for (std::uint8_t c = 1; c <= colors_; ++c) {
      col_[e] = c;
      dfs(e + 1, mono + closed_mono(e), last + (c == colors_ ? 1 : 0), out);
    }
    col_[e] = 0;
  }

  const DichotomyThresholds& th_;
  std::uint8_t colors_;
  std::size_t m_ = 0;
  std::vector<std::vector<std::uint32_t>> clique_edges_;
  std::vector<std::vector<std::uint32_t>> closing_;
  std::vector<std::uint8_t> col_;
};

inline void merge(DichotomySurvey& into, const DichotomySurvey& part) {
  into.colorings += part.colorings;
  into.first_only += part.first_only;
  into.second_only += part.second_only;
  into.both += part.both;
  into.neither += part.neither;
  if (!into.counterexample && part.counterexample) into.counterexample = part.counterexample;
}

}  // namespace detail

/// All (r+1)^binom(n,2) colourings of K_n, split by the colour of the first
/// edge into independent jobs.  Counts do not depend on `threads`.
inline DichotomySurvey dichotomy_exhaustive(std::uint64_t n, std::uint64_t k, unsigned r, std::uint64_t R,
                                            unsigned threads = 1) {
  const DichotomyThresholds th(n, k, r, R);
  const std::uint64_t m = n * (n - 1) / 2;
  long double total = std::pow(static_cast<long double>(r + 1), static_cast<long double>(m));
  if (total > static_cast<long double>(kDichotomyExhaustiveCap)) {
    throw BudgetExceeded("dichotomy: exhaustive enumeration is capped at 3^15 colourings");
  }
  DichotomySurvey out;
  out.exhaustive = true;
  if (m == 0) {
    detail::DichotomyEnumerator en(th);
    en.run({}, out);
    return out;
  }
  std::vector<DichotomySurvey> parts(r + 1);
  auto job = [&](unsigned c) {
    detail::DichotomyEnumerator en(th);
    en.run({static_cast<std::uint8_t>(c + 1)}, parts[c]);
  };
  if (threads <= 1) {
    for (unsigned c = 0; c <= r; ++c) job(c);
  } else {
    std::atomic<unsigned> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min(threads, r + 1); ++t) {
      pool.emplace_back([&] {
        for (unsigned c; (c = next.fetch_add(1)) <= r;) job(c);
      });
    }
    for (auto& t : pool) t.join();
  }
  for (const auto& p : parts) detail::merge(out, p);
  return out;
}

/// Uniformly random colourings; edge e of trial t takes its colour from
/// splitmix64_at(splitmix64_at(seed, t), e).  A counterexample is definitive,
/// its absence is not.
inline DichotomySurvey dichotomy_sampled(std::uint64_t n, std::uint64_t k, unsigned r, std::uint64_t R,
                                         std::uint64_t samples, std::uint64_t seed) {
  const DichotomyThresholds th(n, k, r, R);
  const std::size_t m = n * (n - 1) / 2;
  DichotomySurvey out;
  EdgeColoring c{std::vector<std::uint8_t>(m), r + 1};
  for (std::uint64_t t = 0; t < samples; ++t) {
    const auto trial_seed = splitmix64_at(seed, t);
    for (std::size_t e = 0; e < m; ++e) c.colors[e] = static_cast<std::uint8_t>(1 + splitmix64_at(trial_seed, e) % (r + 1));
    const auto res = dichotomy_check(n, k, r, R, c);
    ++out.colorings;
    switch (res.side) {
      case DichotomySide::First: ++out.first_only; break;
      case DichotomySide::Second: ++out.second_only; break;
      case DichotomySide::Both: ++out.both; break;
      case DichotomySide::Neither:
        ++out.neither;
        if (!out.counterexample) out.counterexample = c;
        break;
    }
  }
  return out;
}

/// Parameters of the G(n,p) construction for f(k,l): n = 2^(4k/(1-4a)),
/// p = 2 n^(-(7+4a)/(16k)), rho = ln^2 n / n, eps = ln(n)^(-1/3), d = (1-eps) p.
/// Natural logarithms throughout; p does not depend on n once k and a are fixed.
class KLConstruction {
 public:
  KLConstruction(std::uint64_t k, Interval alpha) : k_(k), alpha_(alpha) {
    if (k < 3) throw std::invalid_argument("kl_construction_params: k must be >= 3");
    if (!(alpha.lo() > 0 && alpha.hi() < 0.25L)) throw std::invalid_argument("kl_construction_params: alpha must lie in (0, 1/4)");
    const Interval one = Interval::point(1);
    const Interval four = Interval::point(4);
    const Interval K = Interval::point(static_cast<real>(k));
    log2_n_ = four * K / (one - four * alpha);
    n_ = LogInterval::from_log2(log2_n_);
    // Direct substitution, and the simplified closed form.
    log2_p_ = one - log2_n_ * (Interval::point(7) + four * alpha) / (Interval::point(16) * K);
    log2_p_closed_ = -(Interval::point(20) * alpha + Interval::point(3)) / (four * (one - four * alpha));
    p_ = LogInterval::from_log2(log2_p_);
    ln_n_ = LogInterval::from_value_range(rounding::div_down(log2_n_.lo(), log2_e().hi()),
                                          rounding::div_up(log2_n_.hi(), log2_e().lo()));
    rho_ = pow(ln_n_, 2) / n_;
    eps_ = pow(ln_n_, -Interval::quotient(1, 3));
    d_ = (LogInterval::one() - eps_) * p_;
  }

  std::uint64_t k() const { return k_; }
  const Interval& alpha() const { return alpha_; }
  const Interval& log2_n() const { return log2_n_; }
  const LogInterval& n() const { return n_; }
  const Interval& log2_p() const { return log2_p_; }
  const Interval& log2_p_closed_form() const { return log2_p_closed_; }
  const LogInterval& p() const { return p_; }
  const LogInterval& rho() const { return rho_; }
  const LogInterval& eps() const { return eps_; }
  const LogInterval& d() const { return d_; }
  const LogInterval& ln_n() const { return ln_n_; }

  /// (e n / l * p^((l-1)/2))^l, the bound on the expected number of K_l.
  LogInterval expected_cliques(std::uint64_t l) const {
    if (l < 2) throw std::invalid_argument("expected_cliques: l must be >= 2");
    const LogInterval e = LogInterval::from_log2(Interval(rounding::log2_down(std::numbers::e_v<real>),
                                                          rounding::log2_up(std::numbers::e_v<real>)));
    const auto base = e * n_ / LogInterval::from_integer(l) * pow(p_, Interval::quotient(static_cast<real>(l - 1), 2));
    return pow(base, static_cast<real>(l));
  }

  /// exp(-eps^2/24 p t^2).
  LogInterval chernoff_bound(const LogInterval& t, const LogInterval& eps) const {
    return exp_neg(pow(eps, 2) / LogInterval::from_integer(24) * p_ * pow(t, 2));
  }

  /// 16k/(20a+3) = log n / log(1/p).
  Interval clique_threshold() const {
    return Interval::point(16) * Interval::point(static_cast<real>(k_)) /
           (Interval::point(20) * alpha_ + Interval::point(3));
  }

  /// (l-1)/2 >= 16k/(20a+3), the size needed to kill l-cliques.
  Verdict clique_size_suffices(std::uint64_t l) const {
    const Interval lhs = Interval::quotient(static_cast<real>(l - 1), 2);
    const Interval rhs = clique_threshold();
    if (lhs.lo() >= rhs.hi()) return Verdict::CertifiedTrue;
    if (lhs.hi() < rhs.lo()) return Verdict::CertifiedFalse;
    return Verdict::Indeterminate;
  }

  /// k >= 2/(3(1-4a)).
  Verdict k_condition() const {
    const Interval rhs = Interval::point(2) / (Interval::point(3) * (Interval::point(1) - Interval::point(4) * alpha_));
    const real K = static_cast<real>(k_);
    if (K >= rhs.hi()) return Verdict::CertifiedTrue;
    if (K < rhs.lo()) return Verdict::CertifiedFalse;
    return Verdict::Indeterminate;
  }

  struct Hypotheses {
    Verdict order = Verdict::Indeterminate;    // n >= (2/d)^e
    Verdict density = Verdict::Indeterminate;  // rho <= (d/2)^e
  };

  /// The two size hypotheses of the density-Ramsey statement with exponent
  /// 2k-4 (exact) or 2k (simplified).
  Hypotheses hypotheses(bool simplified) const {
    const real e = static_cast<real>(simplified ? 2 * k_ : 2 * k_ - 4);
    const auto two = LogInterval::from_integer(2);
    Hypotheses h;
    h.order = certify_ge(n_, pow(two / d_, e));
    h.density = certify_le(rho_, pow(d_ / two, e));
    return h;
  }

 private:
  std::uint64_t k_;
  Interval alpha_;
  Interval log2_n_;
  LogInterval n_;
  Interval log2_p_;
  Interval log2_p_closed_;
  LogInterval p_;
  LogInterval ln_n_;
  LogInterval rho_;
  LogInterval eps_;
  LogInterval d_;
};

inline KLConstruction kl_construction_params(std::uint64_t k, real alpha) {
  return KLConstruction(k, Interval::point(alpha));
}

}  // namespace folkman
