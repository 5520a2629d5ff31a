#include "ramsey/exact.hpp"

#include <cmath>
#include <cstdlib>

namespace ramsey {

namespace {

// Open bounds on log2 of a positive rational from operand bit lengths:
// log2(num/den) lies in (bits(num)-bits(den)-1, bits(num)-bits(den)+1).
long log2_center(const Rational& m) {
  long nb = static_cast<long>(mpz_sizeinbase(m.get_num_mpz_t(), 2));
  long db = static_cast<long>(mpz_sizeinbase(m.get_den_mpz_t(), 2));
  return nb - db;
}

}  // namespace

void ExactScalar::normalize() {
  if (sgn(mantissa_) == 0) {
    exp2_ = 0;
    return;
  }
  if (sgn(mantissa_) < 0) throw domain_error("ExactScalar must be nonnegative");
  mantissa_.canonicalize();
  mpz_class num = mantissa_.get_num();
  mpz_class den = mantissa_.get_den();
  unsigned long a = mpz_scan1(num.get_mpz_t(), 0);
  if (a > 0) {
    mpz_tdiv_q_2exp(num.get_mpz_t(), num.get_mpz_t(), a);
    exp2_ += static_cast<long>(a);
  }
  unsigned long b = mpz_scan1(den.get_mpz_t(), 0);
  if (b > 0) {
    mpz_tdiv_q_2exp(den.get_mpz_t(), den.get_mpz_t(), b);
    exp2_ -= static_cast<long>(b);
  }
  mantissa_ = Rational(num, den);
  mantissa_.canonicalize();
}

ExactScalar ExactScalar::zero() { return ExactScalar(Rational(0), BigInt(0)); }

ExactScalar ExactScalar::from_rational(const Rational& v) {
  return ExactScalar(v, BigInt(0));
}

ExactScalar ExactScalar::from_int(long v) {
  return ExactScalar(Rational(v), BigInt(0));
}

ExactScalar ExactScalar::from_bigint(const BigInt& v) {
  return ExactScalar(Rational(v), BigInt(0));
}

ExactScalar ExactScalar::make(const Rational& mantissa, const BigInt& e) {
  return ExactScalar(mantissa, e);
}

ExactScalar ExactScalar::pow2(const BigInt& e) {
  return ExactScalar(Rational(1), e);
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
  if (is_zero() || o.is_zero()) return zero();
  return ExactScalar(mantissa_ * o.mantissa_, exp2_ + o.exp2_);
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
  if (o.is_zero()) throw domain_error("ExactScalar division by zero");
  if (is_zero()) return zero();
  return ExactScalar(mantissa_ / o.mantissa_, exp2_ - o.exp2_);
}

ExactScalar ExactScalar::mul_pow2(const BigInt& e) const {
  if (is_zero()) return zero();
  return ExactScalar(mantissa_, exp2_ + e);
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  BigInt gap = exp2_ - o.exp2_;
  BigInt agap = abs(gap);
  if (agap > kMaxShiftBits)
    throw domain_error("ExactScalar addition: exponent gap too large (" +
                       agap.get_str() + " bits)");
  unsigned long shift = agap.get_ui();
  Rational two_shift(BigInt(1) << shift);
  if (gap >= 0) {
    return ExactScalar(mantissa_ * two_shift + o.mantissa_, o.exp2_);
  }
  return ExactScalar(mantissa_ + o.mantissa_ * two_shift, exp2_);
}

ExactScalar ExactScalar::pow(long e) const {
  if (e == 0) return one();
  if (is_zero()) {
    if (e < 0) throw domain_error("ExactScalar: 0 to a negative power");
    return zero();
  }
  unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
  if (mantissa_ != 1 && static_cast<long>(ae) > kMantissaPowLimit)
    throw domain_error("ExactScalar::pow: exponent too large for a non-power-of-two base");
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), mantissa_.get_num_mpz_t(), ae);
  mpz_pow_ui(den.get_mpz_t(), mantissa_.get_den_mpz_t(), ae);
  BigInt ex = exp2_ * static_cast<long>(ae);
  if (e < 0) return ExactScalar(Rational(den, num), -ex);
  return ExactScalar(Rational(num, den), ex);
}

int ExactScalar::cmp(const ExactScalar& o) const {
  bool za = is_zero(), zb = o.is_zero();
  if (za && zb) return 0;
  if (za) return -1;
  if (zb) return 1;
  if (exp2_ == o.exp2_) return ::cmp(mantissa_, o.mantissa_);
  long ca = log2_center(mantissa_);
  long cb = log2_center(o.mantissa_);
  // log2(value) lies in (exp2 + c - 1, exp2 + c + 1)
  BigInt lo_a = exp2_ + (ca - 1), hi_a = exp2_ + (ca + 1);
  BigInt lo_b = o.exp2_ + (cb - 1), hi_b = o.exp2_ + (cb + 1);
  if (lo_a >= hi_b) return 1;
  if (hi_a <= lo_b) return -1;
  // Overlapping intervals: the exponent gap is bounded by the mantissa bit
  // lengths, so a shifted cross-multiplication is affordable and exact.
  BigInt gap = exp2_ - o.exp2_;
  BigInt lhs = BigInt(mantissa_.get_num()) * o.mantissa_.get_den();
  BigInt rhs = BigInt(o.mantissa_.get_num()) * mantissa_.get_den();
  if (!gap.fits_slong_p())
    throw domain_error("ExactScalar::cmp: unexpected exponent gap");
  long g = gap.get_si();
  if (g >= 0)
    lhs <<= static_cast<unsigned long>(g);
  else
    rhs <<= static_cast<unsigned long>(-g);
  return ::cmp(lhs, rhs);
}

Rational ExactScalar::to_rational() const {
  if (is_zero()) return Rational(0);
  BigInt agap = abs(exp2_);
  if (agap > kMaxShiftBits)
    throw domain_error("ExactScalar::to_rational: exponent too large");
  unsigned long shift = agap.get_ui();
  Rational two_shift(BigInt(1) << shift);
  if (exp2_ >= 0) return mantissa_ * two_shift;
  return mantissa_ / two_shift;
}

double ExactScalar::to_double_approx() const {
  if (is_zero()) return 0.0;
  if (!exp2_.fits_slong_p()) return sgn(exp2_) > 0 ? HUGE_VAL : 0.0;
  long e = exp2_.get_si();
  double m = mantissa_.get_d();
  if (e > 4000) return HUGE_VAL;
  if (e < -4000) return 0.0;
  return std::ldexp(m, static_cast<int>(e));
}

std::string ExactScalar::to_string() const {
  if (is_zero()) return "0";
  std::string s = mantissa_.get_num().get_str();
  if (mantissa_.get_den() != 1) s += "/" + mantissa_.get_den().get_str();
  s += "*2^" + exp2_.get_str();
  return s;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw domain_error("empty rational literal");
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac_len = text.size() - dot - 1;
    if (digits.empty() || frac_len == 0)
      throw domain_error("bad rational literal: " + text);
    BigInt num;
    if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
      throw domain_error("bad rational literal: " + text);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0 || sgn(r.get_den()) <= 0)
    throw domain_error("bad rational literal: " + text);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& v) {
  BigInt den = v.get_den();
  // factor den = 2^a * 5^b * rest
  unsigned long a = mpz_scan1(den.get_mpz_t(), 0);
  BigInt rest;
  mpz_tdiv_q_2exp(rest.get_mpz_t(), den.get_mpz_t(), a);
  unsigned long b = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 5)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), 5);
    ++b;
  }
  if (rest != 1) return v.get_num().get_str() + "/" + den.get_str();
  // scale to 10^max(a,b)
  unsigned long digits = std::max(a, b);
  BigInt scale_num = v.get_num();
  if (a < digits) scale_num <<= (digits - a);
  BigInt five;
  mpz_ui_pow_ui(five.get_mpz_t(), 5, digits - b);
  scale_num *= five;
  bool neg = sgn(scale_num) < 0;
  std::string s = abs(BigInt(scale_num)).get_str();
  if (digits == 0) return (neg ? "-" : "") + s;
  if (s.size() <= digits) s.insert(0, digits - s.size() + 1, '0');
  s.insert(s.size() - digits, ".");
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return (neg ? "-" : "") + s;
}

}  // namespace ramsey
