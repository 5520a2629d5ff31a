#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ramsey {

using BigInt = mpz_class;
using Rational = mpq_class;

// Input that violates an operation's documented domain.
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A combinatorial search exceeded its node budget.  Callers must treat the
// result as unknown, never as an approximation.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text input that does not conform to a file format.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Exact nonnegative scalar  mantissa * 2^exp2  with a rational mantissa and a
// big-integer exponent.  The mantissa is kept with odd numerator and odd
// denominator so the representation is unique; zero is the special state
// (mantissa 0, exp2 0).
//
// Multiplication, division, integer powers and comparison are always exact,
// regardless of the exponent magnitude.  Addition must materialize the
// exponent gap and therefore only accepts moderate gaps (it throws beyond
// kMaxShiftBits); that is sufficient for every probability-scale sum in this
// code base, while the ledger-scale values never meet '+'.
class ExactScalar {
 public:
  ExactScalar() : mantissa_(1), exp2_(0) {}  // value 1

  static ExactScalar zero();
  static ExactScalar one() { return ExactScalar(); }
  static ExactScalar from_rational(const Rational& v);
  static ExactScalar from_int(long v);
  static ExactScalar from_bigint(const BigInt& v);
  // mantissa * 2^e, mantissa >= 0
  static ExactScalar make(const Rational& mantissa, const BigInt& e);
  // 2^e
  static ExactScalar pow2(const BigInt& e);

  bool is_zero() const { return sgn(mantissa_) == 0; }
  bool is_pow2() const { return mantissa_ == 1; }
  const Rational& mantissa() const { return mantissa_; }
  const BigInt& exp2() const { return exp2_; }

  ExactScalar operator*(const ExactScalar& o) const;
  ExactScalar operator/(const ExactScalar& o) const;
  ExactScalar operator+(const ExactScalar& o) const;
  // value * 2^e
  ExactScalar mul_pow2(const BigInt& e) const;
  // Integer power; negative exponents invert.  0^0 = 1.  Exponents larger
  // than kMantissaPowLimit require a power-of-two base (the mantissa power
  // would not fit in memory otherwise).
  ExactScalar pow(long e) const;

  // Exact total order.  Decided by exponent intervals when the gap exceeds
  // the mantissa bit lengths, otherwise by cross-multiplication after a
  // bounded shift.
  int cmp(const ExactScalar& o) const;
  bool operator<(const ExactScalar& o) const { return cmp(o) < 0; }
  bool operator<=(const ExactScalar& o) const { return cmp(o) <= 0; }
  bool operator>(const ExactScalar& o) const { return cmp(o) > 0; }
  bool operator>=(const ExactScalar& o) const { return cmp(o) >= 0; }
  bool operator==(const ExactScalar& o) const {
    return mantissa_ == o.mantissa_ && exp2_ == o.exp2_;
  }
  bool operator!=(const ExactScalar& o) const { return !(*this == o); }

  // Exact rational value; throws domain_error when |exp2| exceeds
  // kMaxShiftBits (the digits would not be representable).
  Rational to_rational() const;
  // Clamped to +/-HUGE_VAL outside double range; display only.
  double to_double_approx() const;
  // "num*2^e" or "num/den*2^e"; exponent in decimal.
  std::string to_string() const;

  static constexpr unsigned long kMaxShiftBits = 1ul << 24;
  static constexpr long kMantissaPowLimit = 1l << 20;

 private:
  ExactScalar(Rational m, BigInt e) : mantissa_(std::move(m)), exp2_(std::move(e)) {
    normalize();
  }
  void normalize();

  Rational mantissa_;
  BigInt exp2_;
};

// Parses "7", "3/4" or "0.25" into an exact rational.
Rational parse_rational(const std::string& text);
// Exact decimal expansion when the denominator is 2^a*5^b, else "num/den".
std::string format_rational(const Rational& v);

}  // namespace ramsey
