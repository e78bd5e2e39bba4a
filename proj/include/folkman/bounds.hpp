#pragma once

// Parameter derivation and certified verification of the inequality chain
// behind the exponential Folkman bound, carried out in log2 space.
//
// Notation follows the construction: R bounds the r-colour Ramsey number of
// K_k, n is the host order (default k^(400k^4) R^(40k^2)), and
//   b = 1/(2R^2),  C = 2^(5 sqrt(log n log k)) R^16,  p = C n^(-2/(k+1)),
//   C0 = 2^(4 sqrt(log n)) R^(10/k),  tau = C0 n^(-2/(k+1)),
//   alpha = 1/binom(R,k),  eps = alpha/(2r).
// All logarithms are binary.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "folkman/hypergraph.hpp"
#include "folkman/log_interval.hpp"

namespace folkman {

/// r^(rk), Skolem's upper bound on R(k;r).
inline LogInterval ramsey_upper_skolem(std::uint64_t k, std::uint64_t r) {
  if (k < 3 || r < 2) throw std::invalid_argument("ramsey_upper_skolem: need k >= 3, r >= 2");
  return pow(LogInterval::from_integer(r), static_cast<real>(r * k));
}

/// Trusted lower bounds R(k;s) >= value, keyed by colour count s.
using RamseyBaseValues = std::map<unsigned, std::uint64_t>;

/// Best lower bound on R(k;r) from repeated use of
/// R(k;s+t) >= (R(k;s)-1)(R(k;t)-1)+1, seeded by the base values and the
/// exact R(k;1) = k.
inline LogInterval ramsey_lower_product(std::uint64_t k, unsigned r, const RamseyBaseValues& base) {
  if (r < 1) throw std::invalid_argument("ramsey_lower_product: r must be >= 1");
  if (base.empty()) throw std::invalid_argument("ramsey_lower_product: missing base value");
  const LogInterval one = LogInterval::one();
  std::vector<std::optional<LogInterval>> best(r + 1);
  best[1] = LogInterval::from_integer(k);
  auto improve = [](std::optional<LogInterval>& slot, const LogInterval& cand) {
    if (!slot || cand.log2_lo() > slot->log2_lo()) slot = cand;
  };
  for (const auto& [s, value] : base) {
    if (s >= 1 && s <= r) improve(best[s], LogInterval::from_integer(value));
  }
  for (unsigned t = 2; t <= r; ++t) {
    for (unsigned s = 1; s <= t / 2; ++s) {
      if (best[s] && best[t - s]) improve(best[t], (*best[s] - one) * (*best[t - s] - one) + one);
    }
  }
  if (!best[r]) throw std::invalid_argument("ramsey_lower_product: missing base value");
  return *best[r];
}

/// k^(400k^4) R^(40k^2).
inline LogInterval min_order(std::uint64_t k, const LogInterval& R) {
  const auto K = LogInterval::from_integer(k);
  return pow(K, static_cast<real>(400 * k * k * k * k)) * pow(R, static_cast<real>(40 * k * k));
}

struct ParamSet {
  std::uint64_t k = 0;
  std::uint64_t r = 0;
  LogInterval R;
  LogInterval n;
  LogInterval b;
  LogInterval C;
  LogInterval C0;
  LogInterval tau;
  LogInterval eps;
  LogInterval alpha;
  LogInterval p;
  bool n_is_threshold = false;
};

inline ParamSet derive_params(std::uint64_t k, std::uint64_t r, const LogInterval& R,
                              std::optional<LogInterval> n = std::nullopt) {
  if (k < 3 || r < 2) throw std::invalid_argument("derive_params: need k >= 3, r >= 2");
  if (certify_ge(R, LogInterval::from_integer(2 * r + 1)) != Verdict::CertifiedTrue) {
    throw std::invalid_argument("derive_params: R must satisfy R > 2r");
  }
  ParamSet ps;
  ps.k = k;
  ps.r = r;
  ps.R = R;
  ps.n_is_threshold = !n.has_value();
  ps.n = n ? *n : min_order(k, R);
  if (!(ps.n.log2_lo() > 0)) throw std::invalid_argument("derive_params: n must exceed 1");

  const auto log_n = log2_magnitude(ps.n);
  const auto log_k = log2_magnitude(LogInterval::from_integer(k));
  const Interval shrink = -Interval::quotient(2, static_cast<real>(k + 1));  // exponent -2/(k+1)

  ps.b = LogInterval::one() / (LogInterval::from_integer(2) * pow(R, 2));
  ps.C = exp2(LogInterval::from_integer(5) * sqrt(log_n * log_k)) * pow(R, 16);
  ps.p = ps.C * pow(ps.n, shrink);
  ps.C0 = exp2(LogInterval::from_integer(4) * sqrt(log_n)) * pow(R, Interval::quotient(10, static_cast<real>(k)));
  ps.tau = ps.C0 * pow(ps.n, shrink);
  ps.alpha = LogInterval::one() / binomial(R, k);
  ps.eps = ps.alpha / LogInterval::from_integer(2 * r);
  return ps;
}

enum class Relation { LessEq, GreaterEq };

struct ChainItem {
  std::string id;
  std::string statement;
  Relation relation = Relation::GreaterEq;
  std::optional<LogInterval> lhs;
  std::optional<LogInterval> rhs;
  Verdict verdict = Verdict::Indeterminate;
  real margin = 0;  // certified log2 slack in the stated direction (negative when violated)
  std::string note;
};

struct ChainReport {
  std::uint64_t k = 0;
  std::uint64_t r = 0;
  LogInterval R;
  LogInterval n;
  std::vector<ChainItem> items;

  bool all_true() const {
    for (const auto& it : items) {
      if (it.verdict != Verdict::CertifiedTrue) return false;
    }
    return !items.empty();
  }
  Verdict overall() const {
    Verdict v = Verdict::CertifiedTrue;
    for (const auto& it : items) v = verdict_and(v, it.verdict);
    return v;
  }
  const ChainItem* find(std::string_view id) const {
    for (const auto& it : items) {
      if (it.id == id) return &it;
    }
    return nullptr;
  }
};

namespace detail {

inline ChainItem make_item(std::string id, std::string statement, Relation rel, const LogInterval& lhs,
                           const LogInterval& rhs) {
  ChainItem it;
  it.id = std::move(id);
  it.statement = std::move(statement);
  it.relation = rel;
  it.lhs = lhs;
  it.rhs = rhs;
  if (rel == Relation::LessEq) {
    it.verdict = certify_le(lhs, rhs);
    it.margin = rounding::sub_down(rhs.log2_lo(), lhs.log2_hi());
  } else {
    it.verdict = certify_ge(lhs, rhs);
    it.margin = rounding::sub_down(lhs.log2_lo(), rhs.log2_hi());
  }
  return it;
}

template <typename F>
ChainItem guarded_item(std::string id, std::string statement, Relation rel, F&& compute) {
  try {
    auto [lhs, rhs] = compute();
    return make_item(std::move(id), std::move(statement), rel, lhs, rhs);
  } catch (const std::domain_error& e) {
    ChainItem it;
    it.id = std::move(id);
    it.statement = std::move(statement);
    it.relation = rel;
    it.verdict = Verdict::Indeterminate;
    it.note = e.what();
    return it;
  }
}

}  // namespace detail

/// ln|C| bound for the container family of K_k-free subgraphs of K_n:
/// (2k^2)! log(1/eps) tau log(1/tau) binom(n,2).
inline LogInterval container_count_bound(std::uint64_t k, const LogInterval& eps, const LogInterval& tau,
                                         const LogInterval& n) {
  if (certify_lt(eps, LogInterval::from_rational(1, 2)) != Verdict::CertifiedTrue || eps.is_zero()) {
    throw std::domain_error("container_count_bound: need 0 < eps < 1/2");
  }
  if (certify_lt(tau, LogInterval::one()) != Verdict::CertifiedTrue || tau.is_zero()) {
    throw std::domain_error("container_count_bound: need 0 < tau < 1");
  }
  const auto one = LogInterval::one();
  return factorial(2 * k * k) * log2_magnitude(one / eps) * tau * log2_magnitude(one / tau) * binomial(n, 2);
}

/// ln(|C|^r) bound: r times container_count_bound.
inline LogInterval container_count_bound_power(std::uint64_t k, std::uint64_t r, const LogInterval& eps,
                                               const LogInterval& tau, const LogInterval& n) {
  return LogInterval::from_integer(r) * container_count_bound(k, eps, tau, n);
}

/// c = 800 (h!)^3 h for an h-uniform hypergraph.
inline LogInterval container_constant(std::uint64_t h) {
  return LogInterval::from_integer(800) * pow(factorial(h), 3) * LogInterval::from_integer(h);
}

/// c log(1/eps) tau log(1/tau) N for an h-uniform hypergraph on N vertices.
inline LogInterval generic_container_count_bound(std::uint64_t h, const LogInterval& eps, const LogInterval& tau,
                                                 const LogInterval& vertices) {
  const auto one = LogInterval::one();
  return container_constant(h) * log2_magnitude(one / eps) * tau * log2_magnitude(one / tau) * vertices;
}

/// Machine check of every inequality the construction needs at the given
/// parameters.  Each entry is certified independently.
inline ChainReport check_chain(const ParamSet& ps) {
  using detail::guarded_item;
  const std::uint64_t k = ps.k;
  const auto K = LogInterval::from_integer(k);
  const auto one = LogInterval::one();
  const auto two = LogInterval::from_integer(2);
  const auto& n = ps.n;
  const auto& R = ps.R;
  const auto& C = ps.C;

  ChainReport rep;
  rep.k = k;
  rep.r = ps.r;
  rep.R = R;
  rep.n = n;

  rep.items.push_back(guarded_item("i", "n >= (2C)^((k+1)/2)  [p <= 1/2]", Relation::GreaterEq, [&] {
    return std::pair(n, pow(two * C, Interval::quotient(static_cast<real>(k + 1), 2)));
  }));

  rep.items.push_back(guarded_item("ii", "n >= (3/b)^((k+1)/(k-1)) C^binom(k+2,2)", Relation::GreaterEq, [&] {
    const auto three_over_b = LogInterval::from_integer(3) / ps.b;
    return std::pair(n, pow(three_over_b, Interval::quotient(static_cast<real>(k + 1), static_cast<real>(k - 1))) *
                            pow(C, static_cast<real>((k + 2) * (k + 1) / 2)));
  }));

  rep.items.push_back(guarded_item("iii", "n >= 2^(10k^2 sqrt(log n log k)) R^(20k^2)", Relation::GreaterEq, [&] {
    const auto s = sqrt(log2_magnitude(n) * log2_magnitude(K));
    return std::pair(n, exp2(LogInterval::from_integer(10 * k * k) * s) * pow(R, static_cast<real>(20 * k * k)));
  }));

  const auto kk_fact = factorial(k * k);
  rep.items.push_back(guarded_item("iv", "tau <= ((k^2)!)^-2", Relation::LessEq, [&] {
    return std::pair(ps.tau, one / pow(kk_fact, 2));
  }));

  rep.items.push_back(guarded_item("v", "delta(n,k,tau) <= eps/(k^2)!", Relation::LessEq, [&] {
    return std::pair(delta_nk(n, k, ps.tau), ps.eps / kk_fact);
  }));

  const auto per_j_floor = LogInterval::exp2(static_cast<real>(16 * k * k * k * k)) * pow(R, static_cast<real>(2 * k));
  for (std::uint64_t j = 2; j <= k * (k - 1) / 2; ++j) {
    rep.items.push_back(guarded_item("vi.j" + std::to_string(j),
                                     "tau^(j-1) n^(l_j-2) >= 2^(16k^4) R^(2k) at j=" + std::to_string(j),
                                     Relation::GreaterEq, [&] {
                                       const auto lhs = pow(ps.tau, static_cast<real>(j - 1)) *
                                                        pow(n, static_cast<real>(ell(j) - 2));
                                       return std::pair(lhs, per_j_floor);
                                     }));
  }
  rep.items.push_back(guarded_item("vi.C0", "C0 >= 2^(80k^2) R^(10/k)", Relation::GreaterEq, [&] {
    return std::pair(ps.C0, LogInterval::exp2(static_cast<real>(80 * k * k)) *
                                pow(R, Interval::quotient(10, static_cast<real>(k))));
  }));

  rep.items.push_back(guarded_item("vii.toshow", "r (2k^2)! log(1/eps) C0 log(1/tau) <= C/(2R^2)", Relation::LessEq,
                                   [&] {
                                     const auto lhs = LogInterval::from_integer(ps.r) * factorial(2 * k * k) *
                                                      log2_magnitude(one / ps.eps) * ps.C0 *
                                                      log2_magnitude(one / ps.tau);
                                     return std::pair(lhs, C / (two * pow(R, 2)));
                                   }));

  rep.items.push_back(guarded_item("vii.last", "2R^3 log R (2k)^(4k^2) log n <= C/C0", Relation::LessEq, [&] {
    const auto lhs = two * pow(R, 3) * log2_magnitude(R) *
                     pow(LogInterval::from_integer(2 * k), static_cast<real>(4 * k * k)) * log2_magnitude(n);
    return std::pair(lhs, C / ps.C0);
  }));

  rep.items.push_back(guarded_item("viii", "(b/3) C n^(1+(k-1)/(k+1)) >= C^binom(k+1,2) n", Relation::GreaterEq, [&] {
    const Interval e = Interval::point(1) + Interval::quotient(static_cast<real>(k - 1), static_cast<real>(k + 1));
    const auto lhs = ps.b / LogInterval::from_integer(3) * C * pow(n, e);
    return std::pair(lhs, pow(C, static_cast<real>((k + 1) * k / 2)) * n);
  }));

  return rep;
}

/// exp(-C^binom(k+1,2) n), a lower bound on P(G(n,p) has no K_{k+1}) when
/// p = C n^(-2/(k+1)) <= 1/2.
inline LogInterval fkg_exponent(const LogInterval& n, std::uint64_t k, const LogInterval& C) {
  return pow(C, static_cast<real>((k + 1) * k / 2)) * n;
}

inline LogInterval fkg_edge_probability(const LogInterval& n, std::uint64_t k, const LogInterval& C) {
  return C * pow(n, -Interval::quotient(2, static_cast<real>(k + 1)));
}

inline LogInterval fkg_lower_bound(const LogInterval& n, std::uint64_t k, const LogInterval& C) {
  if (k < 2) throw std::invalid_argument("fkg_lower_bound: k must be >= 2");
  const auto p = fkg_edge_probability(n, k, C);
  if (certify_le(p, LogInterval::from_rational(1, 2)) != Verdict::CertifiedTrue) {
    throw std::domain_error("fkg_lower_bound: precondition p = C n^(-2/(k+1)) <= 1/2 not certified");
  }
  return exp_neg(fkg_exponent(n, k, C));
}

/// The union bound |C|^r exp(-p binom(n,2)/R^2), held as exponents since the
/// value itself underflows any floating format at threshold sizes.
struct UnionBound {
  LogInterval container_exponent;  // upper bound on ln(|C|^r)
  LogInterval decay_exponent;      // p binom(n,2) / R^2
  LogInterval target_exponent;      // b p binom(n,2)
  std::optional<LogInterval> net_exponent;  // decay - container, when certifiably positive
  Verdict meets_target = Verdict::Indeterminate;  // bound <= exp(-b p binom(n,2))

  /// exp(-net_exponent); degrades to a zero-inclusive enclosure when the
  /// exponent is too large to be held as a value.
  LogInterval value() const {
    if (container_exponent.is_zero()) return exp_neg(decay_exponent);
    if (!net_exponent) throw std::domain_error("UnionBound: exponent not certified positive");
    return exp_neg(*net_exponent);
  }
};

inline UnionBound nonramsey_probability_bound(const ParamSet& ps, const LogInterval& container_exponent) {
  UnionBound u;
  const auto pairs = ps.p * binomial(ps.n, 2);
  u.container_exponent = container_exponent;
  u.decay_exponent = pairs / pow(ps.R, 2);
  u.target_exponent = ps.b * pairs;
  if (container_exponent.is_zero()) {
    u.net_exponent = u.decay_exponent;
  } else if (container_exponent.log2_hi() < u.decay_exponent.log2_lo()) {
    u.net_exponent = u.decay_exponent - container_exponent;
  }
  u.meets_target = certify_le(u.container_exponent + u.target_exponent, u.decay_exponent);
  return u;
}

inline UnionBound nonramsey_probability_bound(const ParamSet& ps) {
  return nonramsey_probability_bound(ps, container_count_bound_power(ps.k, ps.r, ps.eps, ps.tau, ps.n));
}

}  // namespace folkman
