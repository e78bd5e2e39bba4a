#pragma once

// Closed real intervals over x87 extended precision with outward (directed)
// rounding.  Field operations use error-free transformations (TwoSum, FMA
// residuals) so an endpoint is only moved when the rounded result is actually
// inexact.  Library transcendentals are widened by a fixed ulp allowance.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace folkman {

using real = long double;

namespace rounding {

inline constexpr real kInf = std::numeric_limits<real>::infinity();

// glibc documents <= 1 ulp for log2l/exp2l/log1pl on x86-64; allow 3.
inline constexpr int kTranscendentalUlps = 3;

inline real next_down(real x, int ulps = 1) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, -kInf);
  return x;
}

inline real next_up(real x, int ulps = 1) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, kInf);
  return x;
}

// Sign of (a + b) - fl(a + b), via Knuth's TwoSum.
inline int add_error_sign(real a, real b, real s) {
  if (!std::isfinite(s) || !std::isfinite(a) || !std::isfinite(b)) return 0;
  const real bb = s - a;
  const real err = (a - (s - bb)) + (b - bb);
  return (err > 0) - (err < 0);
}

inline real add_down(real a, real b) {
  const real s = a + b;
  return add_error_sign(a, b, s) < 0 ? next_down(s) : s;
}

inline real add_up(real a, real b) {
  const real s = a + b;
  return add_error_sign(a, b, s) > 0 ? next_up(s) : s;
}

inline real sub_down(real a, real b) { return add_down(a, -b); }
inline real sub_up(real a, real b) { return add_up(a, -b); }

inline int mul_error_sign(real a, real b, real p) {
  if (!std::isfinite(p) || p == 0) return 0;
  const real err = std::fma(a, b, -p);
  return (err > 0) - (err < 0);
}

inline real mul_down(real a, real b) {
  if (a == 0 || b == 0) return 0;
  const real p = a * b;
  return mul_error_sign(a, b, p) < 0 ? next_down(p) : p;
}

inline real mul_up(real a, real b) {
  if (a == 0 || b == 0) return 0;
  const real p = a * b;
  return mul_error_sign(a, b, p) > 0 ? next_up(p) : p;
}

// Sign of a/b - fl(a/b).  The residual a - q*b is exact under FMA.
inline int div_error_sign(real a, real b, real q) {
  if (!std::isfinite(q) || !std::isfinite(b) || q == 0) return 0;
  const real residual = std::fma(-q, b, a);
  const int rs = (residual > 0) - (residual < 0);
  return b > 0 ? rs : -rs;
}

inline real div_down(real a, real b) {
  const real q = a / b;
  return div_error_sign(a, b, q) < 0 ? next_down(q) : q;
}

inline real div_up(real a, real b) {
  const real q = a / b;
  return div_error_sign(a, b, q) > 0 ? next_up(q) : q;
}

inline real sqrt_down(real x) {
  if (x <= 0) return 0;
  const real s = std::sqrt(x);
  if (!std::isfinite(s)) return s;
  return std::fma(-s, s, x) < 0 ? next_down(s) : s;
}

inline real sqrt_up(real x) {
  if (x <= 0) return 0;
  const real s = std::sqrt(x);
  if (!std::isfinite(s)) return s;
  return std::fma(-s, s, x) > 0 ? next_up(s) : s;
}

inline bool is_power_of_two(real x) {
  if (!(x > 0) || !std::isfinite(x)) return false;
  int e = 0;
  return std::frexp(x, &e) == 0.5L;
}

inline real log2_down(real x) {
  if (x == 0) return -kInf;
  if (x == kInf) return kInf;
  if (is_power_of_two(x)) return std::log2(x);
  return next_down(std::log2(x), kTranscendentalUlps);
}

inline real log2_up(real x) {
  if (x == 0) return -kInf;
  if (x == kInf) return kInf;
  if (is_power_of_two(x)) return std::log2(x);
  return next_up(std::log2(x), kTranscendentalUlps);
}

inline real exp2_down(real x) {
  if (x == -kInf) return 0;
  if (x == std::nearbyint(x) && std::fabs(x) < 16000) return std::exp2(x);
  return std::max<real>(0, next_down(std::exp2(x), kTranscendentalUlps));
}

inline real exp2_up(real x) {
  if (x == -kInf) return 0;
  if (x == std::nearbyint(x) && std::fabs(x) < 16000) return std::exp2(x);
  return next_up(std::exp2(x), kTranscendentalUlps);
}

// log2(1 + x) for x >= 0.
inline real log2_1p_down(real x) {
  if (x == 0) return 0;
  const real v = std::log1p(x) / std::numbers::ln2_v<real>;
  return std::max<real>(0, next_down(v, kTranscendentalUlps + 2));
}

inline real log2_1p_up(real x) {
  if (x == 0) return 0;
  const real v = std::log1p(x) / std::numbers::ln2_v<real>;
  return next_up(v, kTranscendentalUlps + 2);
}

}  // namespace rounding

class Interval {
 public:
  constexpr Interval() = default;

  Interval(real lo, real hi) : lo_(lo), hi_(hi) {
    if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
      throw std::domain_error("Interval: invalid bounds");
    }
  }

  static Interval point(real x) { return {x, x}; }

  // Encloses the rational num/den.
  static Interval quotient(real num, real den) {
    return {rounding::div_down(num, den), rounding::div_up(num, den)};
  }

  static Interval hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_)};
  }

  real lo() const { return lo_; }
  real hi() const { return hi_; }
  real mid() const { return lo_ / 2 + hi_ / 2; }
  real width() const { return hi_ - lo_; }
  bool contains(real x) const { return lo_ <= x && x <= hi_; }
  bool is_point() const { return lo_ == hi_; }

  Interval operator-() const { return {-hi_, -lo_}; }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return {rounding::add_down(a.lo_, b.lo_), rounding::add_up(a.hi_, b.hi_)};
  }

  friend Interval operator-(const Interval& a, const Interval& b) {
    return {rounding::sub_down(a.lo_, b.hi_), rounding::sub_up(a.hi_, b.lo_)};
  }

  friend Interval operator*(const Interval& a, const Interval& b) {
    using namespace rounding;
    const real lo = std::min({mul_down(a.lo_, b.lo_), mul_down(a.lo_, b.hi_),
                              mul_down(a.hi_, b.lo_), mul_down(a.hi_, b.hi_)});
    const real hi = std::max({mul_up(a.lo_, b.lo_), mul_up(a.lo_, b.hi_),
                              mul_up(a.hi_, b.lo_), mul_up(a.hi_, b.hi_)});
    return {lo, hi};
  }

  friend Interval operator/(const Interval& a, const Interval& b) {
    using namespace rounding;
    if (b.contains(0)) throw std::domain_error("Interval: division by an interval containing 0");
    const real lo = std::min({div_down(a.lo_, b.lo_), div_down(a.lo_, b.hi_),
                              div_down(a.hi_, b.lo_), div_down(a.hi_, b.hi_)});
    const real hi = std::max({div_up(a.lo_, b.lo_), div_up(a.lo_, b.hi_),
                              div_up(a.hi_, b.lo_), div_up(a.hi_, b.hi_)});
    return {lo, hi};
  }

  friend Interval sqrt(const Interval& a) {
    if (a.lo_ < 0) throw std::domain_error("Interval: sqrt of negative values");
    return {rounding::sqrt_down(a.lo_), rounding::sqrt_up(a.hi_)};
  }

  friend Interval max(const Interval& a, const Interval& b) {
    return {std::max(a.lo_, b.lo_), std::max(a.hi_, b.hi_)};
  }

  friend Interval min(const Interval& a, const Interval& b) {
    return {std::min(a.lo_, b.lo_), std::min(a.hi_, b.hi_)};
  }

  friend bool operator==(const Interval&, const Interval&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Interval& x) {
    return os << '[' << static_cast<double>(x.lo_) << ", " << static_cast<double>(x.hi_) << ']';
  }

 private:
  real lo_ = 0;
  real hi_ = 0;
};

// Certified enclosure of log2(e) = 1 / ln 2.
inline Interval log2_e() {
  const real v = std::numbers::log2e_v<real>;
  return {rounding::next_down(v), rounding::next_up(v)};
}

}  // namespace folkman
