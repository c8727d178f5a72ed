#pragma once

#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace dehn {

inline constexpr int kMinPrecisionBits = 64;
inline constexpr int kDefaultPrecisionBits = 256;

// Arbitrary-precision real backed by MPFR. Binary operations produce a value
// at the larger of the two operand precisions, rounded to nearest.
class BigReal {
 public:
  explicit BigReal(int precision_bits = kDefaultPrecisionBits);
  BigReal(double value, int precision_bits);
  BigReal(long value, int precision_bits);
  BigReal(int value, int precision_bits) : BigReal(static_cast<long>(value), precision_bits) {}
  BigReal(std::string_view decimal, int precision_bits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  static BigReal pi(int precision_bits);
  static BigReal pow2(long exponent, int precision_bits);

  int precision_bits() const { return static_cast<int>(mpfr_get_prec(v_)); }
  // Copy rounded to a different precision.
  BigReal with_precision(int precision_bits) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // log2 of |x| (floor of binary exponent for nonzero values); -inf style
  // sentinel for zero.
  long exponent2() const;

  // Scientific notation with the requested number of significant digits.
  std::string to_string(int digits) const;
  // Digit count that round-trips at this precision (>= precision/3).
  std::string to_string() const;

  BigReal operator-() const;
  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);

  friend BigReal operator+(BigReal lhs, const BigReal& rhs) { return lhs += rhs; }
  friend BigReal operator-(BigReal lhs, const BigReal& rhs) { return lhs -= rhs; }
  friend BigReal operator*(BigReal lhs, const BigReal& rhs) { return lhs *= rhs; }
  friend BigReal operator/(BigReal lhs, const BigReal& rhs) { return lhs /= rhs; }

  friend BigReal operator*(BigReal lhs, long rhs);
  friend BigReal operator*(long lhs, BigReal rhs) { return std::move(rhs) * lhs; }
  friend BigReal operator/(BigReal lhs, long rhs);

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

  friend BigReal abs(BigReal x);
  friend BigReal sqrt(BigReal x);
  friend BigReal exp(BigReal x);
  friend BigReal log(BigReal x);
  friend BigReal sin(BigReal x);
  friend BigReal cos(BigReal x);
  friend BigReal atan2(const BigReal& y, const BigReal& x);
  friend BigReal floor(BigReal x);
  friend BigReal round(BigReal x);
  friend BigReal hypot(const BigReal& x, const BigReal& y);

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
};

// Complex number with BigReal parts. Both parts always share one precision.
class BigComplex {
 public:
  explicit BigComplex(int precision_bits = kDefaultPrecisionBits);
  BigComplex(BigReal re, BigReal im);
  BigComplex(double re, double im, int precision_bits);
  BigComplex(std::string_view re, std::string_view im, int precision_bits);

  static BigComplex i(int precision_bits) { return BigComplex(0.0, 1.0, precision_bits); }

  const BigReal& re() const { return re_; }
  const BigReal& im() const { return im_; }
  int precision_bits() const { return re_.precision_bits(); }
  BigComplex with_precision(int precision_bits) const;

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

  BigComplex operator-() const { return {-re_, -im_}; }
  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator/=(const BigComplex& rhs);
  BigComplex& operator*=(const BigReal& rhs);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, const BigReal& b) { return a *= b; }
  friend BigComplex operator*(const BigReal& b, BigComplex a) { return a *= b; }
  friend BigComplex operator*(BigComplex a, long b);
  friend BigComplex operator*(long b, BigComplex a) { return std::move(a) * b; }

  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  friend BigComplex conj(const BigComplex& z) { return {z.re_, -z.im_}; }
  friend BigReal abs(const BigComplex& z);
  friend BigReal norm(const BigComplex& z);  // |z|^2
  friend BigReal arg(const BigComplex& z);   // in (-pi, pi]
  friend BigComplex exp(const BigComplex& z);
  friend BigComplex log(const BigComplex& z);  // principal branch
  friend BigComplex pow(const BigComplex& z, long n);

 private:
  BigReal re_;
  BigReal im_;
};

}  // namespace dehn
