#pragma once

// JSON forms of certificates and reports, and re-verification of stored
// certificates.  Graphs travel as graph6; log2 enclosures as [lo, hi] pairs
// rounded outward to double.

#include <cmath>
#include <string>
#include <vector>

#include "json.hpp"

#include "folkman/arrowing.hpp"
#include "folkman/bounds.hpp"
#include "folkman/dense.hpp"
#include "folkman/graph_io.hpp"
#include "folkman/hypergraph.hpp"
#include "folkman/log_interval.hpp"
#include "folkman/montecarlo.hpp"

namespace folkman {

using Json = nlohmann::ordered_json;

namespace detail {

inline double round_down(real x) {
  const double d = static_cast<double>(x);
  return static_cast<real>(d) > x ? std::nextafter(d, -HUGE_VAL) : d;
}

inline double round_up(real x) {
  const double d = static_cast<double>(x);
  return static_cast<real>(d) < x ? std::nextafter(d, HUGE_VAL) : d;
}

inline Json bound_json(real x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

}  // namespace detail

inline Json to_json(const Interval& x) {
  return Json::array({detail::bound_json(detail::round_down(x.lo())), detail::bound_json(detail::round_up(x.hi()))});
}

/// The log2 enclosure of a LogInterval.
inline Json to_json(const LogInterval& x) { return to_json(x.log2()); }

inline Json to_json(const VertexSet& s) { return s.members(); }

inline Json to_json(const SearchStats& s) {
  return {{"nodes", s.nodes},   {"cliques", s.cliques}, {"search_edges", s.search_edges},
          {"wall_ms", s.wall_ms}, {"exhausted", s.exhausted}, {"threads", s.threads}};
}

inline Json to_json(const Graph& host, const ArrowCertificate& c) {
  Json j;
  j["type"] = "arrowing";
  j["host"] = to_graph6(host);
  j["k"] = c.k;
  j["r"] = c.r;
  j["verdict"] = to_string(c.verdict);
  if (c.witness) {
    j["witness"] = c.witness->colors;
  } else {
    j["witness"] = nullptr;
  }
  j["stats"] = to_json(c.stats);
  return j;
}

inline Json to_json(const Graph& host, const FolkmanBundle& b) {
  Json j;
  j["type"] = "folkman";
  j["host"] = to_graph6(host);
  j["k"] = b.arrowing.k;
  j["r"] = b.arrowing.r;
  j["l"] = b.l;
  j["verdict"] = to_string(b.verdict);
  j["arrowing"] = to_json(host, b.arrowing);
  Json clique;
  clique["size"] = b.forbidden_clique.size;
  clique["present"] = b.forbidden_clique.present();
  if (b.forbidden_clique.witness) {
    clique["witness"] = to_json(*b.forbidden_clique.witness);
  } else {
    clique["witness"] = nullptr;
  }
  j["forbidden_clique"] = clique;
  return j;
}

inline Json to_json(const ChainReport& rep) {
  Json j;
  j["type"] = "chain";
  j["k"] = rep.k;
  j["r"] = rep.r;
  j["log2_R"] = to_json(rep.R);
  j["log2_n"] = to_json(rep.n);
  j["overall"] = to_string(rep.overall());
  Json items = Json::array();
  for (const auto& it : rep.items) {
    Json e;
    e["id"] = it.id;
    e["statement"] = it.statement;
    e["relation"] = it.relation == Relation::LessEq ? "<=" : ">=";
    e["lhs_log2"] = it.lhs ? to_json(*it.lhs) : Json(nullptr);
    e["rhs_log2"] = it.rhs ? to_json(*it.rhs) : Json(nullptr);
    e["verdict"] = to_string(it.verdict);
    e["margin"] = it.lhs ? Json(detail::round_down(it.margin)) : Json(nullptr);
    if (!it.note.empty()) e["note"] = it.note;
    items.push_back(std::move(e));
  }
  j["items"] = std::move(items);
  return j;
}

inline Json to_json(const DeltaDeltaReport& r) {
  return {{"type", "codegree"},
          {"n", r.n},
          {"k", r.k},
          {"tau", static_cast<double>(r.tau)},
          {"delta_exact_log2", to_json(r.exact)},
          {"delta_closed_form_log2", to_json(r.closed_form)},
          {"verdict", to_string(r.verdict)}};
}

inline Json to_json(const EdgeColoring& c) { return {{"r", c.r}, {"colors", c.colors}}; }

inline Json to_json(const DichotomySurvey& s) {
  Json j{{"colorings", s.colorings}, {"first_only", s.first_only}, {"second_only", s.second_only},
         {"both", s.both},           {"neither", s.neither},       {"exhaustive", s.exhaustive}};
  j["counterexample"] = s.counterexample ? to_json(*s.counterexample) : Json(nullptr);
  return j;
}

inline Json to_json(const CanonicalSequence& s) {
  return {{"vertices", s.vertices}, {"forward_colors", s.forward_colors}};
}

inline Json to_json(const MonteCarloResult& m) {
  return {{"trials", m.trials},
          {"successes", m.successes},
          {"undecided", m.undecided},
          {"estimate", m.estimate},
          {"ci95", {m.ci95.lo, m.ci95.hi}},
          {"partial", m.partial}};
}

/// Parses a colouring file: {"r": R, "colors": [...]} or a bare colour array
/// (then r is the largest colour used, at least 2).
inline EdgeColoring coloring_from_json(const Json& j) {
  EdgeColoring c;
  const Json& arr = j.is_array() ? j : j.at("colors");
  c.colors = arr.get<std::vector<std::uint8_t>>();
  if (j.is_object() && j.contains("r")) {
    c.r = j.at("r").get<unsigned>();
  } else {
    unsigned hi = 2;
    for (auto col : c.colors) hi = std::max<unsigned>(hi, col);
    c.r = hi;
  }
  return c;
}

struct VerifyResult {
  bool ok = false;
  bool search_claim_unchecked = false;  // an Arrows claim has no witness to re-check
  std::string message;
};

/// Re-checks the witnesses stored in an arrowing certificate or a Folkman
/// bundle.  No search is run.
inline VerifyResult verify_certificate(const Json& j) {
  VerifyResult out;
  const std::string type = j.value("type", std::string("arrowing"));
  if (type == "folkman") {
    const Graph g = from_graph6(j.at("host").get<std::string>());
    const auto l = j.at("l").get<std::size_t>();
    const Json& fc = j.at("forbidden_clique");
    const bool present = fc.at("present").get<bool>();
    if (present) {
      const auto members = fc.at("witness").get<std::vector<std::size_t>>();
      for (auto v : members) {
        if (v >= g.order()) {
          out.message = "forbidden-clique witness has a vertex outside the host";
          return out;
        }
      }
      const VertexSet s(g.order(), std::span<const std::size_t>(members));
      if (s.size() != l || !is_clique(g, s)) {
        out.message = "forbidden-clique witness is not a K_" + std::to_string(l);
        return out;
      }
    } else if (has_clique(g, l)) {
      out.message = "host contains a K_" + std::to_string(l) + " although the bundle claims otherwise";
      return out;
    }
    auto inner = verify_certificate(j.at("arrowing"));
    if (!inner.ok) return inner;
    const std::string verdict = j.at("verdict").get<std::string>();
    const std::string av = j.at("arrowing").at("verdict").get<std::string>();
    const std::string expected = (av == "Arrows" && !present) ? "Folkman"
                                 : (av == "Indeterminate" && !present) ? "Indeterminate"
                                                                       : "NotFolkman";
    if (verdict != expected) {
      out.message = "bundle verdict " + verdict + " is inconsistent with its parts (expected " + expected + ")";
      return out;
    }
    out.ok = true;
    out.search_claim_unchecked = inner.search_claim_unchecked;
    out.message = present ? "forbidden clique re-checked" : "host re-checked to be K_" + std::to_string(l) + "-free";
    if (inner.search_claim_unchecked) out.message += "; arrowing claim carries no witness";
    return out;
  }
  if (type != "arrowing") {
    out.message = "unknown certificate type " + type;
    return out;
  }
  const Graph g = from_graph6(j.at("host").get<std::string>());
  const auto k = j.at("k").get<std::size_t>();
  const auto r = j.at("r").get<unsigned>();
  const std::string verdict = j.at("verdict").get<std::string>();
  if (verdict == "NonArrowing") {
    if (!j.contains("witness") || j.at("witness").is_null()) {
      out.message = "NonArrowing certificate without a witness";
      return out;
    }
    EdgeColoring c{j.at("witness").get<std::vector<std::uint8_t>>(), r};
    try {
      validate_coloring(g, c);
    } catch (const std::invalid_argument& e) {
      out.message = e.what();
      return out;
    }
    if (auto mono = verify_coloring(g, c, k)) {
      out.message = "witness has a monochromatic K_" + std::to_string(k) + " in colour " + std::to_string(mono->color);
      return out;
    }
    out.ok = true;
    out.message = "witness is a proper colouring";
    return out;
  }
  if (verdict == "Arrows" || verdict == "Indeterminate") {
    if (j.contains("witness") && !j.at("witness").is_null()) {
      out.message = verdict + " certificate must not carry a witness";
      return out;
    }
    out.ok = true;
    out.search_claim_unchecked = verdict == "Arrows";
    out.message = verdict == "Arrows" ? "exhaustive-search claim; no witness to re-check" : "no claim to check";
    return out;
  }
  out.message = "unknown verdict " + verdict;
  return out;
}

}  // namespace folkman
