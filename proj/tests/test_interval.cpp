#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <random>

#include "folkman/interval.hpp"
#include "folkman/log_interval.hpp"

namespace {

using namespace folkman;
using Big = boost::multiprecision::cpp_bin_float_100;

Big big(real x) { return Big(x); }

std::vector<real> sample_reals(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-60, 60);
  std::vector<real> out;
  for (std::size_t i = 0; i < count; ++i) {
    real m = static_cast<real>(mant(gen)) + static_cast<real>(mant(gen)) * 0x1p-40L;
    out.push_back(std::ldexp(m, expo(gen)));
  }
  return out;
}

// The directed result must bracket the exact value and be the nearest
// representable neighbour on its side.
void expect_tight(real down, real up, const Big& exact) {
  EXPECT_LE(big(down), exact);
  EXPECT_GE(big(up), exact);
  EXPECT_LE(up, std::nextafter(down, rounding::kInf));
}

TEST(Rounding, ArithmeticBracketsExactResult) {
  const auto xs = sample_reals(1, 400);
  for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
    const real a = xs[i];
    const real b = xs[i + 1];
    expect_tight(rounding::add_down(a, b), rounding::add_up(a, b), big(a) + big(b));
    expect_tight(rounding::sub_down(a, b), rounding::sub_up(a, b), big(a) - big(b));
    expect_tight(rounding::mul_down(a, b), rounding::mul_up(a, b), big(a) * big(b));
    expect_tight(rounding::div_down(a, b), rounding::div_up(a, b), big(a) / big(b));
    const real pa = std::fabs(a);
    expect_tight(rounding::sqrt_down(pa), rounding::sqrt_up(pa), boost::multiprecision::sqrt(big(pa)));
  }
}

TEST(Rounding, ExactOperationsStayPoints) {
  EXPECT_EQ(rounding::add_down(1.5L, 2.25L), 3.75L);
  EXPECT_EQ(rounding::add_up(1.5L, 2.25L), 3.75L);
  EXPECT_EQ(rounding::mul_down(3, 7), 21);
  EXPECT_EQ(rounding::div_up(1, 4), 0.25L);
  EXPECT_EQ(rounding::sqrt_down(49), 7);
  EXPECT_EQ(rounding::log2_down(1024), 10);
  EXPECT_EQ(rounding::log2_up(1024), 10);
}

TEST(Rounding, TranscendentalsEnclose) {
  for (real x : sample_reals(2, 200)) {
    const real v = std::fabs(x);
    if (v == 0) continue;
    const Big exact = boost::multiprecision::log(big(v)) / boost::multiprecision::log(Big(2));
    EXPECT_LE(big(rounding::log2_down(v)), exact);
    EXPECT_GE(big(rounding::log2_up(v)), exact);
  }
  for (real e : {-30.25L, -1.5L, 0.3L, 7.125L, 100.001L}) {
    const Big exact = boost::multiprecision::pow(Big(2), big(e));
    EXPECT_LE(big(rounding::exp2_down(e)), exact);
    EXPECT_GE(big(rounding::exp2_up(e)), exact);
  }
}

TEST(IntervalOps, ContainmentUnderArithmetic) {
  const Interval a(1, 2);
  const Interval b(-3, 0.5L);
  const auto p = a * b;
  EXPECT_EQ(p.lo(), -6);
  EXPECT_EQ(p.hi(), 1);
  const auto q = Interval::quotient(1, 3);
  EXPECT_TRUE(big(q.lo()) <= Big(1) / 3 && Big(1) / 3 <= big(q.hi()));
  EXPECT_THROW(a / b, std::domain_error);
}

TEST(LogIntervalValues, PowerOfThree) {
  // log2 3^32400 = 51352.785...
  const auto x = pow(LogInterval::from_integer(3), 32400);
  EXPECT_LE(x.log2_lo(), 51352.78502336546L + 1e-9L);
  EXPECT_GE(x.log2_hi(), 51352.78502336546L - 1e-9L);
  EXPECT_LT(x.log2_width(), 1e-9L);
}

TEST(LogIntervalValues, FactorialsMatchReference) {
  // log2 n! from lgamma at 60 digits.
  const std::vector<std::pair<std::uint64_t, long double>> ref{
      {10, 21.7910611147169535L},         {20, 61.0773839209062214L},
      {1000, 8529.39800420477357L},       {1048581, 19458855.9305736316L},
      {10000000, 218108029.185722139L},   {1000000000000ull, 38420442097780.6420837L}};
  for (const auto& [n, v] : ref) {
    const auto f = log2_factorial(n);
    EXPECT_LE(f.lo(), v * (1 + 1e-17L) + 1e-12L) << n;
    EXPECT_GE(f.hi(), v * (1 - 1e-17L) - 1e-12L) << n;
    EXPECT_LT(f.width(), std::max(1e-9L, v * 1e-15L)) << n;
  }
  EXPECT_EQ(log2_factorial(0).lo(), 0);
  EXPECT_EQ(log2_factorial(1).hi(), 0);
}

TEST(LogIntervalValues, Binomials) {
  EXPECT_TRUE(binomial(10, 3).contains_value(120));
  EXPECT_TRUE(binomial(6, 0).contains_value(1));
  EXPECT_TRUE(binomial(3, 5).is_zero());
  const auto b = binomial(1000000, 3);
  EXPECT_LE(b.log2_lo(), 57.20973887916264L + 1e-12L);
  EXPECT_GE(b.log2_hi(), 57.20973887916264L - 1e-12L);
  // binomial of an enclosure: binom(x, 2) at x = 10 is 45.
  EXPECT_TRUE(binomial(LogInterval::from_integer(10), 2).contains_value(45));
}

TEST(LogIntervalOps, SumDifferenceAndZero) {
  const auto three = LogInterval::from_integer(3);
  const auto five = LogInterval::from_integer(5);
  EXPECT_TRUE((three + five).contains_value(8));
  EXPECT_TRUE((five - three).contains_value(2));
  EXPECT_TRUE((three * five).contains_value(15));
  EXPECT_TRUE((five / three).contains_value(5.0L / 3));
  EXPECT_TRUE((LogInterval::zero() + three).contains_value(3));
  const auto four = LogInterval::from_integer(4);
  EXPECT_TRUE((four - four).is_zero());
  // 3 is held only as an enclosure, so 3 - 3 is not certifiably zero.
  EXPECT_THROW(three - three, std::domain_error);
  EXPECT_THROW(three - five, std::domain_error);
  EXPECT_TRUE((LogInterval::zero() * three).is_zero());
}

TEST(LogIntervalOps, RandomisedContainmentAgainstMultiprecision) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(0.01, 1000);
  for (int i = 0; i < 300; ++i) {
    const real a = u(gen);
    const real b = u(gen);
    const auto A = LogInterval::from_value(a);
    const auto B = LogInterval::from_value(b);
    const Big ba = big(a);
    const Big bb = big(b);
    auto inside = [](const LogInterval& x, const Big& v) {
      const Big l = boost::multiprecision::log(v) / boost::multiprecision::log(Big(2));
      return big(x.log2_lo()) <= l && l <= big(x.log2_hi());
    };
    EXPECT_TRUE(inside(A * B, ba * bb));
    EXPECT_TRUE(inside(A / B, ba / bb));
    EXPECT_TRUE(inside(A + B, ba + bb));
    if (a > b * 1.001) {
      EXPECT_TRUE(inside(A - B, ba - bb));
    }
    EXPECT_TRUE(inside(pow(A, 3.5L), boost::multiprecision::pow(ba, Big(3.5))));
    EXPECT_TRUE(inside(sqrt(A), boost::multiprecision::sqrt(ba)));
  }
}

TEST(LogIntervalOps, ExpNegAndMagnitude) {
  const auto y = exp_neg(LogInterval::from_value(0.15625L)).value();
  EXPECT_LE(y.lo(), 0.8553453273074225L + 1e-16L);
  EXPECT_GE(y.hi(), 0.8553453273074225L - 1e-16L);
  EXPECT_LT(y.width(), 1e-15L);
  EXPECT_TRUE(log2_magnitude(LogInterval::from_integer(1024)).contains_value(10));
  EXPECT_THROW(log2_magnitude(LogInterval::from_rational(1, 2)), std::domain_error);
  EXPECT_TRUE(exp2(LogInterval::from_integer(10)).contains_value(1024));
}

TEST(Certify, ThreeWayVerdicts) {
  const auto a = LogInterval::from_integer(3);
  const auto b = LogInterval::from_integer(4);
  EXPECT_EQ(certify_le(a, b), Verdict::CertifiedTrue);
  EXPECT_EQ(certify_le(b, a), Verdict::CertifiedFalse);
  EXPECT_EQ(certify_le(LogInterval::from_log2(1, 3), LogInterval::from_log2(2, 4)), Verdict::Indeterminate);
  // 4 is held exactly, 3 only as an enclosure.
  EXPECT_EQ(certify_le(b, b), Verdict::CertifiedTrue);
  EXPECT_EQ(certify_lt(b, b), Verdict::CertifiedFalse);
  EXPECT_EQ(certify_le(a, a), Verdict::Indeterminate);
  EXPECT_EQ(verdict_and(Verdict::CertifiedTrue, Verdict::Indeterminate), Verdict::Indeterminate);
  EXPECT_EQ(verdict_and(Verdict::Indeterminate, Verdict::CertifiedFalse), Verdict::CertifiedFalse);
}

}  // namespace
