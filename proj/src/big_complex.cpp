#include "dehn/big_complex.hpp"

#include <algorithm>
#include <string>

#include "dehn/error.hpp"

namespace dehn {

namespace {

int clamp_precision(int bits) { return std::max(bits, static_cast<int>(MPFR_PREC_MIN)); }

int max_prec(const BigReal& a, const BigReal& b) {
  return std::max(a.precision_bits(), b.precision_bits());
}

// Raises the precision of `x` in place (rounding is exact when growing).
void widen(BigReal& x, int bits) {
  if (x.precision_bits() < bits) x = x.with_precision(bits);
}

}  // namespace

BigReal::BigReal(int precision_bits) {
  mpfr_init2(v_, clamp_precision(precision_bits));
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(double value, int precision_bits) {
  mpfr_init2(v_, clamp_precision(precision_bits));
  mpfr_set_d(v_, value, MPFR_RNDN);
}

BigReal::BigReal(long value, int precision_bits) {
  mpfr_init2(v_, clamp_precision(precision_bits));
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(std::string_view decimal, int precision_bits) {
  mpfr_init2(v_, clamp_precision(precision_bits));
  std::string s(decimal);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '_'; }), s.end());
  char* end = nullptr;
  bool ok = !s.empty();
  if (ok) {
    mpfr_strtofr(v_, s.c_str(), &end, 10, MPFR_RNDN);
    ok = *end == '\0';
  }
  if (!ok) {
    mpfr_clear(v_);
    throw Error(ErrorKind::Parse, "not a decimal number: '" + std::string(decimal) + "'");
  }
  if (!mpfr_number_p(v_)) {
    mpfr_clear(v_);
    throw Error(ErrorKind::Parse, "non-finite number: '" + std::string(decimal) + "'");
  }
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::pi(int precision_bits) {
  BigReal r(precision_bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigReal BigReal::pow2(long exponent, int precision_bits) {
  BigReal r(1L, precision_bits);
  mpfr_mul_2si(r.v_, r.v_, exponent, MPFR_RNDN);
  return r;
}

BigReal BigReal::with_precision(int precision_bits) const {
  BigReal r(precision_bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

long BigReal::exponent2() const {
  if (is_zero()) return -(1L << 40);
  return static_cast<long>(mpfr_get_exp(v_)) - 1;
}

std::string BigReal::to_string(int digits) const {
  digits = std::max(digits, 2);
  if (is_zero()) return "0";
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string BigReal::to_string() const { return to_string(precision_bits() / 3 + 2); }

BigReal BigReal::operator-() const {
  BigReal r(precision_bits());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  widen(*this, rhs.precision_bits());
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  widen(*this, rhs.precision_bits());
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  widen(*this, rhs.precision_bits());
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::Singular, "division by zero");
  widen(*this, rhs.precision_bits());
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal operator*(BigReal lhs, long rhs) {
  mpfr_mul_si(lhs.v_, lhs.v_, rhs, MPFR_RNDN);
  return lhs;
}

BigReal operator/(BigReal lhs, long rhs) {
  if (rhs == 0) throw Error(ErrorKind::Singular, "division by zero");
  mpfr_div_si(lhs.v_, lhs.v_, rhs, MPFR_RNDN);
  return lhs;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigReal abs(BigReal x) {
  mpfr_abs(x.v_, x.v_, MPFR_RNDN);
  return x;
}

BigReal sqrt(BigReal x) {
  if (x.sign() < 0) throw Error(ErrorKind::Singular, "square root of a negative number");
  mpfr_sqrt(x.v_, x.v_, MPFR_RNDN);
  return x;
}

BigReal exp(BigReal x) {
  mpfr_exp(x.v_, x.v_, MPFR_RNDN);
  if (!x.is_finite()) throw Error(ErrorKind::Singular, "exponential overflow");
  return x;
}

BigReal log(BigReal x) {
  if (x.sign() <= 0) throw Error(ErrorKind::Singular, "logarithm of a non-positive number");
  mpfr_log(x.v_, x.v_, MPFR_RNDN);
  return x;
}

BigReal sin(BigReal x) {
  mpfr_sin(x.v_, x.v_, MPFR_RNDN);
  return x;
}

BigReal cos(BigReal x) {
  mpfr_cos(x.v_, x.v_, MPFR_RNDN);
  return x;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(max_prec(x, y));
  mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
  return r;
}

BigReal floor(BigReal x) {
  mpfr_floor(x.v_, x.v_);
  return x;
}

BigReal round(BigReal x) {
  mpfr_round(x.v_, x.v_);
  return x;
}

BigReal hypot(const BigReal& x, const BigReal& y) {
  BigReal r(max_prec(x, y));
  mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
  return r;
}

BigComplex::BigComplex(int precision_bits) : re_(precision_bits), im_(precision_bits) {}

BigComplex::BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {
  int bits = max_prec(re_, im_);
  widen(re_, bits);
  widen(im_, bits);
}

BigComplex::BigComplex(double re, double im, int precision_bits)
    : re_(re, precision_bits), im_(im, precision_bits) {}

BigComplex::BigComplex(std::string_view re, std::string_view im, int precision_bits)
    : re_(re, precision_bits), im_(im, precision_bits) {}

BigComplex BigComplex::with_precision(int precision_bits) const {
  return {re_.with_precision(precision_bits), im_.with_precision(precision_bits)};
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
  BigReal re = re_ * rhs.re_ - im_ * rhs.im_;
  BigReal im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
  BigReal den = norm(rhs);
  if (den.is_zero()) throw Error(ErrorKind::Singular, "complex division by zero");
  BigReal re = (re_ * rhs.re_ + im_ * rhs.im_) / den;
  BigReal im = (im_ * rhs.re_ - re_ * rhs.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigReal& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

BigComplex operator*(BigComplex a, long b) {
  a.re_ = std::move(a.re_) * b;
  a.im_ = std::move(a.im_) * b;
  return a;
}

BigReal abs(const BigComplex& z) { return hypot(z.re_, z.im_); }

BigReal norm(const BigComplex& z) { return z.re_ * z.re_ + z.im_ * z.im_; }

BigReal arg(const BigComplex& z) { return atan2(z.im_, z.re_); }

BigComplex exp(const BigComplex& z) {
  BigReal m = exp(z.re_);
  return {m * cos(z.im_), m * sin(z.im_)};
}

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw Error(ErrorKind::Singular, "logarithm of zero");
  return {log(abs(z)), arg(z)};
}

BigComplex pow(const BigComplex& z, long n) {
  BigComplex result(BigReal(1L, z.precision_bits()), BigReal(z.precision_bits()));
  if (n == 0) return result;
  BigComplex base = n < 0 ? BigComplex(BigReal(1L, z.precision_bits()), BigReal(z.precision_bits())) / z : z;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  while (e) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

}  // namespace dehn
