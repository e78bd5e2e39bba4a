#pragma once

// LogInterval: a certified enclosure of a nonnegative real x stored as
// log2(x) in [lo, hi].  Exact zero is lo = hi = -inf, +infinity is
// lo = hi = +inf.  Every operation rounds lo down and hi up.

#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include "folkman/interval.hpp"

namespace folkman {

enum class Verdict { CertifiedTrue, CertifiedFalse, Indeterminate };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedTrue: return "CertifiedTrue";
    case Verdict::CertifiedFalse: return "CertifiedFalse";
    case Verdict::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

inline Verdict verdict_and(Verdict a, Verdict b) {
  if (a == Verdict::CertifiedFalse || b == Verdict::CertifiedFalse) return Verdict::CertifiedFalse;
  if (a == Verdict::Indeterminate || b == Verdict::Indeterminate) return Verdict::Indeterminate;
  return Verdict::CertifiedTrue;
}

class LogInterval {
 public:
  LogInterval() : log2_(Interval::point(-rounding::kInf)) {}

  static LogInterval zero() { return LogInterval(); }
  static LogInterval infinity() { return from_log2(Interval::point(rounding::kInf)); }
  static LogInterval one() { return from_log2(Interval::point(0)); }

  static LogInterval from_log2(Interval l) {
    LogInterval x;
    x.log2_ = l;
    return x;
  }
  static LogInterval from_log2(real lo, real hi) { return from_log2(Interval(lo, hi)); }
  static LogInterval exp2(real e) { return from_log2(Interval::point(e)); }

  static LogInterval from_value(real v) {
    if (v < 0 || std::isnan(v)) throw std::domain_error("LogInterval: negative value");
    return from_log2(Interval(rounding::log2_down(v), rounding::log2_up(v)));
  }

  // Encloses a real known only to lie in [lo, hi], lo >= 0.
  static LogInterval from_value_range(real lo, real hi) {
    if (lo < 0 || lo > hi) throw std::domain_error("LogInterval: invalid value range");
    return from_log2(Interval(rounding::log2_down(lo), rounding::log2_up(hi)));
  }

  static LogInterval from_integer(std::uint64_t v) {
    return from_value(static_cast<real>(v));  // exact: 64-bit significand
  }

  static LogInterval from_rational(std::uint64_t num, std::uint64_t den);

  const Interval& log2() const { return log2_; }
  real log2_lo() const { return log2_.lo(); }
  real log2_hi() const { return log2_.hi(); }
  real log2_width() const { return log2_.width(); }

  bool is_zero() const { return log2_.hi() == -rounding::kInf; }
  bool is_infinite() const { return log2_.lo() == rounding::kInf; }
  bool contains_value(real v) const {
    if (v == 0) return log2_.lo() == -rounding::kInf;
    return log2_.lo() <= rounding::log2_up(v) && rounding::log2_down(v) <= log2_.hi();
  }

  // Enclosure of the represented value itself (may overflow to +inf).
  Interval value() const {
    return {rounding::exp2_down(log2_.lo()), rounding::exp2_up(log2_.hi())};
  }
  double approx() const { return static_cast<double>(std::exp2(log2_.mid())); }

  friend LogInterval operator*(const LogInterval& a, const LogInterval& b) {
    if (a.is_zero() || b.is_zero()) {
      if (a.is_infinite() || b.is_infinite()) throw std::domain_error("LogInterval: 0 * inf");
      return zero();
    }
    return from_log2(a.log2_ + b.log2_);
  }

  friend LogInterval operator/(const LogInterval& a, const LogInterval& b) {
    if (b.log2_.lo() == -rounding::kInf) throw std::domain_error("LogInterval: division by zero");
    if (a.is_zero()) return zero();
    return from_log2(a.log2_ - b.log2_);
  }

  friend LogInterval operator+(const LogInterval& a, const LogInterval& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return from_log2(log_sum_down(a.log2_.lo(), b.log2_.lo()),
                     log_sum_up(a.log2_.hi(), b.log2_.hi()));
  }

  // a - b; requires the difference to be certifiably positive (or both exact
  // and equal, giving zero).
  friend LogInterval operator-(const LogInterval& a, const LogInterval& b) {
    if (b.is_zero()) return a;
    if (a.log2_.is_point() && a.log2_ == b.log2_) return zero();
    if (!(b.log2_.hi() < a.log2_.lo())) {
      throw std::domain_error("LogInterval: difference not certified positive");
    }
    return from_log2(log_diff_down(a.log2_.lo(), b.log2_.hi()),
                     log_diff_up(a.log2_.hi(), b.log2_.lo()));
  }

  friend bool operator==(const LogInterval&, const LogInterval&) = default;

  friend std::ostream& operator<<(std::ostream& os, const LogInterval& x) {
    return os << "2^" << x.log2_;
  }

 private:
  // log2(2^a + 2^b), rounded down / up.
  static real log_sum_down(real a, real b) {
    if (a == -rounding::kInf) return b;
    if (b == -rounding::kInf) return a;
    const real m = std::max(a, b);
    const real d = rounding::sub_down(std::min(a, b), m);  // <= 0
    return rounding::add_down(m, rounding::log2_1p_down(rounding::exp2_down(d)));
  }

  static real log_sum_up(real a, real b) {
    if (a == rounding::kInf || b == rounding::kInf) return rounding::kInf;
    if (a == -rounding::kInf) return b;
    if (b == -rounding::kInf) return a;
    const real m = std::max(a, b);
    const real d = rounding::sub_up(std::min(a, b), m);
    return rounding::add_up(m, rounding::log2_1p_up(rounding::exp2_up(d)));
  }

  // log2(2^a - 2^b), a > b, rounded down: a + log2(1 - 2^(b-a)).
  static real log_diff_down(real a, real b) {
    if (b == -rounding::kInf) return a;
    const real d = rounding::sub_up(b, a);  // < 0
    const real t = rounding::exp2_up(d);    // overestimate of the subtrahend
    const real one_minus = rounding::sub_down(1, t);
    if (!(one_minus > 0)) return -rounding::kInf;
    return rounding::add_down(a, rounding::log2_down(one_minus));
  }

  static real log_diff_up(real a, real b) {
    if (b == -rounding::kInf) return a;
    const real d = rounding::sub_down(b, a);
    const real t = rounding::exp2_down(d);
    const real one_minus = rounding::sub_up(1, t);
    return rounding::add_up(a, rounding::log2_up(one_minus));
  }

  Interval log2_;
};

inline LogInterval LogInterval::from_rational(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::domain_error("LogInterval: zero denominator");
  return from_integer(num) / from_integer(den);
}

// x^e for a real exponent enclosure e.
inline LogInterval pow(const LogInterval& x, const Interval& e) {
  if (x.is_zero()) {
    if (e.lo() <= 0) throw std::domain_error("LogInterval: 0^e with e <= 0");
    return LogInterval::zero();
  }
  return LogInterval::from_log2(x.log2() * e);
}

inline LogInterval pow(const LogInterval& x, real e) { return pow(x, Interval::point(e)); }

inline LogInterval sqrt(const LogInterval& x) {
  if (x.is_zero()) return x;
  // Halving is exact in binary floating point.
  return LogInterval::from_log2(x.log2_lo() / 2, x.log2_hi() / 2);
}

// log2(x) as a positive magnitude; requires x > 1.
inline LogInterval log2_magnitude(const LogInterval& x) {
  if (!(x.log2_lo() > 0)) throw std::domain_error("LogInterval: log2 of a value <= 1");
  return LogInterval::from_value_range(x.log2_lo(), x.log2_hi());
}

// 2^v for a nonnegative magnitude v.
inline LogInterval exp2(const LogInterval& v) {
  const Interval val = v.value();
  if (!std::isfinite(val.lo())) throw std::overflow_error("LogInterval: exponent out of range");
  return LogInterval::from_log2(val);
}

// exp(-y) for a nonnegative magnitude y.  When y is too large for its value
// to be held, the lower endpoint degrades soundly to -inf.
inline LogInterval exp_neg(const LogInterval& y) {
  const Interval val = y.value();
  if (!std::isfinite(val.lo())) throw std::overflow_error("LogInterval: exponent out of range");
  const Interval l = -(val * log2_e());
  return LogInterval::from_log2(l);
}

// Verdict for a <= b: certified only when the enclosures do not overlap.
inline Verdict certify_le(const LogInterval& a, const LogInterval& b) {
  if (a.log2_hi() <= b.log2_lo()) return Verdict::CertifiedTrue;
  if (a.log2_lo() > b.log2_hi()) return Verdict::CertifiedFalse;
  return Verdict::Indeterminate;
}

inline Verdict certify_ge(const LogInterval& a, const LogInterval& b) { return certify_le(b, a); }

inline Verdict certify_lt(const LogInterval& a, const LogInterval& b) {
  if (a.log2_hi() < b.log2_lo()) return Verdict::CertifiedTrue;
  if (a.log2_lo() >= b.log2_hi()) return Verdict::CertifiedFalse;
  return Verdict::Indeterminate;
}

// log2(n!) enclosure.  Exact 64-bit chunk products up to a cutoff, Stirling
// with Robbins' two-sided remainder above it.
inline Interval log2_factorial(std::uint64_t n) {
  using namespace rounding;
  if (n <= 1) return Interval::point(0);
  constexpr std::uint64_t kCutoff = 1u << 20;
  if (n <= kCutoff) {
    Interval sum = Interval::point(0);
    unsigned __int128 chunk = 1;
    for (std::uint64_t i = 2; i <= n; ++i) {
      const unsigned __int128 next = chunk * i;
      if (next >> 64) {
        const real c = static_cast<real>(static_cast<std::uint64_t>(chunk));
        sum = sum + Interval(log2_down(c), log2_up(c));
        chunk = i;
      } else {
        chunk = next;
      }
    }
    const real c = static_cast<real>(static_cast<std::uint64_t>(chunk));
    return sum + Interval(log2_down(c), log2_up(c));
  }
  // ln n! = n ln n - n + ln(2 pi n)/2 + theta, 1/(12n+1) < theta < 1/(12n).
  const real nr = static_cast<real>(n);
  const Interval N = Interval::point(nr);
  const Interval log2n(log2_down(nr), log2_up(nr));
  const real two_pi = 2 * std::numbers::pi_v<real>;
  const Interval log2_2pi(log2_down(next_down(two_pi)), log2_up(next_up(two_pi)));
  const Interval main = N * log2n - N * log2_e() + (log2_2pi + log2n) / Interval::point(2);
  const Interval theta(div_down(1, add_up(mul_up(12, nr), 1)), div_up(1, mul_down(12, nr)));
  return main + theta * log2_e();
}

inline LogInterval factorial(std::uint64_t n) { return LogInterval::from_log2(log2_factorial(n)); }

inline LogInterval binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return LogInterval::zero();
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  bool exact = true;
  for (std::uint64_t i = 0; i < k; ++i) {
    const unsigned __int128 next = acc * (n - i);
    if (next / (n - i) != acc || (next >> 120)) {
      exact = false;
      break;
    }
    acc = next / (i + 1);
  }
  if (exact && !(acc >> 64)) return LogInterval::from_integer(static_cast<std::uint64_t>(acc));
  return LogInterval::from_log2(log2_factorial(n) - log2_factorial(k) - log2_factorial(n - k));
}

// binom(x, k) = x (x-1) ... (x-k+1) / k! for a real x >= k - 1.
inline LogInterval binomial(const LogInterval& x, std::uint64_t k) {
  LogInterval prod = LogInterval::one();
  for (std::uint64_t i = 0; i < k; ++i) prod = prod * (x - LogInterval::from_integer(i));
  return prod / factorial(k);
}

}  // namespace folkman
