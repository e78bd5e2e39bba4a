#pragma once

// The named acceptance experiments.  Each one is deterministic under its
// seed and reports a pass flag, a runtime and a JSON record.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "folkman/arrowing.hpp"
#include "folkman/bounds.hpp"
#include "folkman/brute_force.hpp"
#include "folkman/dense.hpp"
#include "folkman/graph.hpp"
#include "folkman/hypergraph.hpp"
#include "folkman/montecarlo.hpp"
#include "folkman/report.hpp"

namespace folkman {

struct ExperimentResult {
  std::string name;
  int criterion = 0;
  Json params = Json::object();
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;   // independent checks performed
  std::uint64_t passed = 0;   // checks that came out as required
  double estimate = 0;        // passed / trials, or the Monte Carlo frequency
  WilsonInterval ci95;
  double runtime_ms = 0;
  double limit_ms = 0;
  bool correct = false;
  std::string summary;
  Json details = Json::object();

  bool within_limit() const { return runtime_ms < limit_ms; }
  bool pass() const { return correct && within_limit(); }
};

inline Json to_json(const ExperimentResult& e) {
  Json j;
  j["experiment"] = e.name;
  j["criterion"] = e.criterion;
  j["params"] = e.params;
  j["seed"] = e.seed;
  j["trials"] = e.trials;
  j["estimate"] = e.estimate;
  j["ci95"] = {e.ci95.lo, e.ci95.hi};
  j["runtime_ms"] = e.runtime_ms;
  j["limit_ms"] = e.limit_ms;
  j["pass"] = e.pass();
  j["summary"] = e.summary;
  j["details"] = e.details;
  return j;
}

/// K8 minus the 5-cycle 0-1-2-3-4-0.
inline Graph graham_graph() {
  Graph g = Graph::complete(8);
  for (std::size_t i = 0; i < 5; ++i) g.remove_edge(i, (i + 1) % 5);
  return g;
}

/// Smallest n >= (2/d)^(2k-4) for which K_n is (rho,d)-dense with
/// rho = (d/2)^(2k-4).  Every m-subset of K_n spans m(m-1)/2 edges, so the
/// density test reduces to one comparison at m = ceil(rho n).
inline std::size_t complete_host_order(std::size_t k, Fraction d) {
  const std::size_t e = 2 * k - 4;
  unsigned __int128 dn = 1;
  unsigned __int128 dd = 1;
  for (std::size_t i = 0; i < e; ++i) {
    dn *= d.num;
    dd *= d.den;
  }
  const unsigned __int128 two_e = static_cast<unsigned __int128>(1) << e;
  // rho = dn / (dd 2^e)
  if (dn > std::numeric_limits<std::uint64_t>::max() || dd * two_e > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("complete_host_order: parameters too large");
  }
  const DensityParams dp(Fraction(static_cast<std::uint64_t>(dn), static_cast<std::uint64_t>(dd * two_e)), d);
  for (std::size_t n = 2;; ++n) {
    const bool big_enough = static_cast<unsigned __int128>(n) * dn >= two_e * dd;
    const std::size_t m = dp.m(n);
    if (big_enough && dp.enough_edges(m * (m - 1) / 2, m)) return n;
  }
}

namespace detail {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void finish(ExperimentResult& r, const Stopwatch& sw) {
  r.runtime_ms = sw.ms();
  if (r.estimate == 0 && r.trials > 0) r.estimate = static_cast<double>(r.passed) / static_cast<double>(r.trials);
  if (r.ci95.lo == 0 && r.ci95.hi == 1) r.ci95 = wilson95(r.passed, r.trials);
}

}  // namespace detail

inline ExperimentResult experiment_arrowing_ground_truth(std::uint64_t seed) {
  detail::Stopwatch sw;
  ExperimentResult r;
  r.name = "arrowing-ground-truth";
  r.criterion = 1;
  r.seed = seed;
  r.limit_ms = 2000;
  r.params = {{"k", 3}, {"r", 2}, {"hosts", {"K6", "K5"}}};

  const auto k6 = Graph::complete(6);
  const auto k5 = Graph::complete(5);
  const auto c6 = arrows(k6, 3, 2);
  const auto c5 = arrows(k5, 3, 2);
  const auto census6 = brute_force::two_color_census(k6, 3);
  const auto census5 = brute_force::two_color_census(k5, 3);
  const bool k6_ok = c6.verdict == ArrowVerdict::Arrows && census6.proper == 0;
  const bool witness_ok = c5.witness && !verify_coloring(k5, *c5.witness, 3);
  const bool k5_ok = c5.verdict == ArrowVerdict::NonArrowing && witness_ok && census5.proper > 0;
  r.trials = 2;
  r.passed = (k6_ok ? 1 : 0) + (k5_ok ? 1 : 0);
  r.correct = r.passed == r.trials;
  r.details["K6"] = {{"verdict", to_string(c6.verdict)},
                     {"proper_colorings", census6.proper},
                     {"colorings", census6.total},
                     {"nodes", c6.stats.nodes}};
  r.details["K5"] = {{"verdict", to_string(c5.verdict)},
                     {"witness", c5.witness ? Json(c5.witness->colors) : Json(nullptr)},
                     {"witness_verified", witness_ok},
                     {"proper_colorings", census5.proper},
                     {"colorings", census5.total}};
  r.summary = "K6 " + std::string(to_string(c6.verdict)) + " (0 of 2^15 proper: " + (census6.proper == 0 ? "yes" : "no") +
              "), K5 " + std::string(to_string(c5.verdict)) + " (" + std::to_string(census5.proper) + " proper of 2^10)";
  detail::finish(r, sw);
  return r;
}

inline ExperimentResult experiment_graham_folkman(std::uint64_t seed) {
  detail::Stopwatch sw;
  ExperimentResult r;
  r.name = "graham-folkman";
  r.criterion = 2;
  r.seed = seed;
  r.limit_ms = 60000;
  const Graph g = graham_graph();
  r.params = {{"host", to_graph6(g)}, {"k", 3}, {"r", 2}, {"l", 6}};
  const auto b = is_folkman(g, 3, 2, 6);
  r.trials = 1;
  r.passed = b.is_folkman() ? 1 : 0;
  r.correct = b.is_folkman();
  r.details = to_json(g, b);
  r.summary = "K8 - C5: " + std::string(to_string(b.arrowing.verdict)) + ", K6-free " +
              (b.forbidden_clique.present() ? "no" : "yes") + ", " + std::to_string(b.arrowing.stats.nodes) +
              " search nodes";
  detail::finish(r, sw);
  return r;
}

inline ExperimentResult experiment_dichotomy_exhaustive(std::uint64_t seed) {
  detail::Stopwatch sw;
  ExperimentResult r;
  r.name = "dichotomy-exhaustive";
  r.criterion = 3;
  r.seed = seed;
  r.limit_ms = 600000;
  r.params = {{"n", 6}, {"k", 3}, {"r", 2}, {"R", 6}};
  const auto s = dichotomy_exhaustive(6, 3, 2, 6);
  r.trials = s.colorings;
  r.passed = s.colorings - s.neither;
  r.correct = s.neither == 0 && s.colorings == 14348907;
  r.details = to_json(s);
  r.summary = std::to_string(s.colorings) + " colourings, " + std::to_string(s.neither) + " on neither side";
  detail::finish(r, sw);
  return r;
}

inline ExperimentResult experiment_codegree_claim(std::uint64_t seed) {
  detail::Stopwatch sw;
  ExperimentResult r;
  r.name = "codegree-claim";
  r.criterion = 4;
  r.seed = seed;
  r.limit_ms = 60000;
  const std::vector<real> taus{1.0L, 0.5L, 0.1L, 0.01L};
  r.params = {{"n", {5, 9}}, {"k", {3, 4}}, {"tau", {1.0, 0.5, 0.1, 0.01}}};
  Json cells = Json::array();
  for (std::size_t n = 5; n <= 9; ++n) {
    for (std::size_t k : {3u, 4u}) {
      for (real tau : taus) {
        const auto rep = check_claim_deltadelta(n, k, tau);
        ++r.trials;
        r.passed += rep.holds() ? 1 : 0;
        cells.push_back(to_json(rep));
      }
    }
  }
  r.correct = r.passed == r.trials;
  r.details["cells"] = std::move(cells);
  r.summary = std::to_string(r.passed) + "/" + std::to_string(r.trials) + " cells certify delta(H(n,k),tau) <= delta(n,k,tau)";
  detail::finish(r, sw);
  return r;
}

inline ExperimentResult experiment_chain_grid(std::uint64_t seed) {
  detail::Stopwatch sw;
  ExperimentResult r;
  r.name = "chain-grid";
  r.criterion = 5;
  r.seed = seed;
  r.limit_ms = 10000;
  r.params = {{"k", {3, 4, 5, 6}}, {"r", {2, 3, 4}}, {"R", "r^(rk)"}, {"n", "k^(400k^4) R^(40k^2)"}};
  Json cells = Json::array();
  for (std::uint64_t k = 3; k <= 6; ++k) {
    for (std::uint64_t c = 2; c <= 4; ++c) {
      const auto rep = check_chain(derive_params(k, c, ramsey_upper_skolem(k, c)));
      ++r.trials;
      r.passed += rep.all_true() ? 1 : 0;
      cells.push_back({{"k", k}, {"r", c}, {"log2_n", to_json(rep.n)}, {"overall", to_string(rep.overall())},
                       {"items", rep.items.size()}});
    }
  }
  const auto base = check_chain(derive_params(3, 2, LogInterval::from_integer(6)));
  const auto log2_nmin = base.n.log2();
  const bool nmin_ok = log2_nmin.lo() >= 52282.4L && log2_nmin.hi() <= 52284.4L;
  ++r.trials;
  r.passed += (base.all_true() && nmin_ok) ? 1 : 0;
  r.correct = r.passed == r.trials;
  r.details["cells"] = std::move(cells);
  r.details["k3_r2_R6"] = {{"log2_n_min", to_json(log2_nmin)}, {"overall", to_string(base.overall())}};
  r.summary = std::to_string(r.passed) + "/" + std::to_string(r.trials) + " cells all CertifiedTrue; log2 n_min(3,2,R=6) = " +
              std::to_string(static_cast<double>(log2_nmin.mid()));
  detail::finish(r, sw);
  return r;
}

inline ExperimentResult experiment_fkg_montecarlo(std::uint64_t seed, std::uint64_t trials = 10000) {
  detail::Stopwatch sw;
  ExperimentResult r;
  r.name = "fkg-montecarlo";
  r.criterion = 6;
  r.seed = seed;
  r.limit_ms = 120000;
  const std::size_t n = 40;
  const std::size_t k = 3;
  const double p = 0.1;
  r.params = {{"n", n}, {"k", k}, {"p", p}};
  const auto N = LogInterval::from_integer(n);
  const auto C = LogInterval::from_value(0.1L) * sqrt(N);
  const auto bound = fkg_lower_bound(N, k, C);
  const auto mc = mc_estimate(KFreeness{n, p, k}, trials, seed);
  r.trials = mc.trials;
  r.passed = mc.successes;
  r.estimate = mc.estimate;
  r.ci95 = mc.ci95;
  const double bound_hi = static_cast<double>(bound.value().hi());
  r.correct = mc.ci95.lo > bound_hi && mc.estimate > bound_hi;
  r.details = {{"C", static_cast<double>(C.value().mid())},
               {"fkg_bound", {static_cast<double>(bound.value().lo()), bound_hi}},
               {"monte_carlo", to_json(mc)}};
  r.summary = "P(no K4) ~ " + std::to_string(mc.estimate) + " (Wilson lower " + std::to_string(mc.ci95.lo) +
              ") vs FKG bound " + std::to_string(bound_hi);
  detail::finish(r, sw);
  return r;
}

inline ExperimentResult experiment_canonical_sequence(std::uint64_t seed, std::uint64_t trials = 500) {
  detail::Stopwatch sw;
  ExperimentResult r;
  r.name = "canonical-sequence";
  r.criterion = 7;
  r.seed = seed;
  r.limit_ms = 120000;
  const Fraction d(9, 10);
  Json hosts = Json::array();
  std::uint64_t failures = 0;
  for (std::size_t k : {3u, 4u}) {
    const std::size_t n = complete_host_order(k, d);
    const Graph g = Graph::complete(n);
    hosts.push_back({{"k", k}, {"n", n}, {"ell", 2 * k - 2}});
    EdgeColoring c{std::vector<std::uint8_t>(g.edge_count()), 2};
    for (std::uint64_t t = 0; t < trials; ++t) {
      const auto ts = splitmix64_at(seed + k, t);
      for (std::size_t e = 0; e < c.colors.size(); ++e) {
        c.colors[e] = static_cast<std::uint8_t>(1 + (splitmix64_at(ts, e) >> 63));
      }
      ++r.trials;
      const auto out = canonical_sequence(g, c, 2 * k - 2, d);
      bool ok = out.sequence.has_value() && is_canonical(g, c, *out.sequence);
      if (ok) {
        const auto mono = mono_clique_from_canonical(g, c, *out.sequence, k);
        ok = mono.vertices.size() == k && is_clique(color_class(g, c, mono.color), mono.vertices);
      }
      if (ok) {
        ++r.passed;
      } else if (failures++ == 0) {
        r.details["first_failure"] = {{"k", k}, {"trial", t}, {"reason", out.failure}};
      }
    }
  }
  r.params = {{"d", d.str()}, {"hosts", hosts}, {"trials_per_k", trials}};
  r.correct = failures == 0;
  r.summary = std::to_string(r.passed) + "/" + std::to_string(r.trials) + " colourings yield a verified monochromatic K_k";
  detail::finish(r, sw);
  return r;
}

inline ExperimentResult experiment_container_bijection(std::uint64_t seed) {
  detail::Stopwatch sw;
  ExperimentResult r;
  r.name = "container-bijection";
  r.criterion = 8;
  r.seed = seed;
  r.limit_ms = 60000;
  r.params = {{"n", 6}, {"k", 3}};
  const CliqueHypergraph H(6, 3);
  const std::size_t N = H.hypergraph().vertex_count();
  std::uint64_t independent = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask) {
    VertexSet s(N);
    for (std::size_t i = 0; i < N; ++i) {
      if ((mask >> i) & 1) s.insert(i);
    }
    const bool ind = is_independent(H.hypergraph(), s);
    const bool free = brute_force::cliques(H.graph_of(s), 3).empty();
    ++r.trials;
    r.passed += ind == free ? 1 : 0;
    independent += ind ? 1 : 0;
  }
  r.correct = r.passed == r.trials;
  r.details = {{"subsets", r.trials}, {"independent", independent}, {"agreements", r.passed}};
  r.summary = std::to_string(r.passed) + "/" + std::to_string(r.trials) + " subsets agree; " +
              std::to_string(independent) + " triangle-free graphs on 6 labelled vertices";
  detail::finish(r, sw);
  return r;
}

namespace detail {

// A random graph with at most 16 edges; a third of them are built around K6
// so that arrowing hosts actually occur.
struct OracleCase {
  Graph g;
  std::size_t k = 3;
  unsigned r = 2;
};

inline OracleCase oracle_case(std::uint64_t ts) {
  auto word = [&](std::uint64_t i) { return splitmix64_at(ts, 1000 + i); };
  OracleCase c;
  switch (ts % 3) {
    case 0: {
      const std::size_t n = 3 + word(0) % 6;
      c.g = sample_gnp(n, 0.3 + 0.6 * unit_double(word(1)), ts);
      c.k = 2 + word(2) % 3;
      break;
    }
    case 1: {
      const std::size_t n = 6 + word(0) % 2;
      c.g = Graph(n);
      const auto k6 = Graph::complete(6).edges();
      for (const auto& e : k6) c.g.add_edge(e.u, e.v);
      for (std::uint64_t i = 0; i < word(1) % 3; ++i) {
        const auto& e = k6[word(2 + i) % k6.size()];
        c.g.remove_edge(e.u, e.v);
      }
      if (n == 7 && word(5) % 2) c.g.add_edge(word(6) % 6, 6);
      break;
    }
    default: {
      const std::size_t n = 4 + word(0) % 3;
      c.g = sample_gnp(n, 0.6, ts);
      c.r = 3;
      break;
    }
  }
  const std::size_t cap = c.r == 3 ? 9 : 16;
  auto edges = c.g.edges();
  for (std::size_t i = 0; edges.size() > cap; ++i) {
    const auto& e = edges[word(10 + i) % edges.size()];
    c.g.remove_edge(e.u, e.v);
    edges = c.g.edges();
  }
  return c;
}

}  // namespace detail

inline ExperimentResult experiment_oracle_equivalence(std::uint64_t seed, std::uint64_t trials = 1000) {
  detail::Stopwatch sw;
  ExperimentResult r;
  r.name = "oracle-equivalence";
  r.criterion = 9;
  r.seed = seed;
  r.limit_ms = 300000;
  r.params = {{"graphs", trials}, {"max_edges", 16}, {"clique_oracle_max_n", 10}};
  std::uint64_t arrowing_hosts = 0;
  std::uint64_t mismatches = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto ts = splitmix64_at(seed, t);
    const auto oc = detail::oracle_case(ts);
    ArrowOptions opts;
    if (t % 10 == 0) {
      opts.mode = SearchMode::Parallel;
      opts.threads = 2;
    }
    const auto cert = arrows(oc.g, oc.k, oc.r, opts);
    const bool truth = brute_force::arrows(oc.g, oc.k, oc.r);
    arrowing_hosts += truth ? 1 : 0;
    bool ok = cert.verdict == (truth ? ArrowVerdict::Arrows : ArrowVerdict::NonArrowing);
    if (ok && cert.witness) ok = !verify_coloring(oc.g, *cert.witness, oc.k);

    // Clique listing against the subset oracle.
    const std::size_t n = 1 + splitmix64_at(ts, 1) % 10;
    const Graph h = sample_gnp(n, 0.5, splitmix64_at(ts, 2));
    for (std::size_t s = 1; s <= n && ok; ++s) {
      std::vector<std::vector<std::size_t>> fast;
      for (const auto& c : enumerate_cliques(h, s)) fast.push_back(c.members());
      ok = fast == brute_force::cliques(h, s);
    }
    ++r.trials;
    if (ok) {
      ++r.passed;
    } else if (mismatches++ == 0) {
      r.details["first_mismatch"] = {{"trial", t}, {"host", to_graph6(oc.g)}, {"k", oc.k}, {"r", oc.r}};
    }
  }
  r.correct = mismatches == 0;
  r.details["arrowing_hosts"] = arrowing_hosts;
  r.summary = std::to_string(r.passed) + "/" + std::to_string(r.trials) + " graphs agree with both oracles (" +
              std::to_string(arrowing_hosts) + " arrowing hosts)";
  detail::finish(r, sw);
  return r;
}

using ExperimentFn = std::function<ExperimentResult(std::uint64_t)>;

inline const std::map<std::string, ExperimentFn>& experiment_registry() {
  static const std::map<std::string, ExperimentFn> reg{
      {"arrowing-ground-truth", experiment_arrowing_ground_truth},
      {"graham-folkman", experiment_graham_folkman},
      {"dichotomy-exhaustive", experiment_dichotomy_exhaustive},
      {"codegree-claim", experiment_codegree_claim},
      {"chain-grid", experiment_chain_grid},
      {"fkg-montecarlo", [](std::uint64_t s) { return experiment_fkg_montecarlo(s); }},
      {"canonical-sequence", [](std::uint64_t s) { return experiment_canonical_sequence(s); }},
      {"container-bijection", experiment_container_bijection},
      {"oracle-equivalence", [](std::uint64_t s) { return experiment_oracle_equivalence(s); }},
  };
  return reg;
}

/// Registry names in criterion order.
inline std::vector<std::string> experiment_names() {
  return {"arrowing-ground-truth", "graham-folkman",      "dichotomy-exhaustive",
          "codegree-claim",        "chain-grid",          "fkg-montecarlo",
          "canonical-sequence",    "container-bijection", "oracle-equivalence"};
}

}  // namespace folkman
