#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "dehn/big_complex.hpp"

namespace dehn {

using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
// Accepts "p", "p/q", "-p/q" (whitespace ignored).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& x);
BigReal to_big_real(const Rational& x, int precision_bits);

// Largest d' with d = s^2 d' squarefree; returns {d', s}.
std::pair<long, long> squarefree_split(long d);

// a + b*sqrt(-d) with d positive and squarefree. A rational number is stored
// with b = 0 and any d (d = 1 by convention).
struct QuadraticNumber {
  Rational a;
  Rational b;
  long d = 1;

  QuadraticNumber() = default;
  QuadraticNumber(Rational a_, Rational b_, long d_);
  static QuadraticNumber rational(Rational a) { return {std::move(a), Rational(0), 1}; }

  bool is_rational() const { return b == 0; }
  BigComplex to_complex(int precision_bits) const;
  QuadraticNumber conj() const { return {a, -b, d}; }
  // a^2 + d b^2.
  Rational norm() const { return a * a + b * b * d; }
  std::string to_string() const;

  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (x.b == 0 && y.b == 0) return x.a == y.a;
    return x.a == y.a && x.b == y.b && x.d == y.d;
  }
};

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
QuadraticNumber operator-(const QuadraticNumber& x);
QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y);
QuadraticNumber pow(const QuadraticNumber& x, long n);

// Grammar: "a/b + c/d √-D" (whitespace optional, "sqrt(-D)" also accepted,
// either part may be omitted) or "i" for sqrt(-1).
QuadraticNumber parse_quadratic(std::string_view text);

// 2x2 matrix over Q, row-major [[a, b], [c, d]].
struct Matrix2 {
  Rational a{0}, b{0}, c{0}, d{0};

  static Matrix2 identity() { return {Rational(1), Rational(0), Rational(0), Rational(1)}; }
  static Matrix2 zero() { return {}; }
  static Matrix2 of(long a, long b, long c, long d) {
    return {Rational(a), Rational(b), Rational(c), Rational(d)};
  }

  Rational det() const { return a * d - b * c; }
  Matrix2 inverse() const;
  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  std::string to_string() const;

  friend bool operator==(const Matrix2& x, const Matrix2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

Matrix2 operator*(const Matrix2& x, const Matrix2& y);
Matrix2 operator*(const Rational& k, const Matrix2& x);
Matrix2 operator+(const Matrix2& x, const Matrix2& y);
Matrix2 operator-(const Matrix2& x, const Matrix2& y);
Matrix2 operator-(const Matrix2& x);
Matrix2 pow(const Matrix2& x, long n);

// Row vector over Q.
struct Row2 {
  Rational x{0}, y{0};
  friend bool operator==(const Row2&, const Row2&) = default;
};
Row2 operator*(const Row2& v, const Matrix2& m);

// Projective slope p/q with gcd(p, q) = 1, q >= 0, and p > 0 when q = 0.
struct Slope {
  long p = 1;
  long q = 0;
  friend bool operator==(const Slope&, const Slope&) = default;
  friend auto operator<=>(const Slope&, const Slope&) = default;
};

// Canonical representative; throws BadSlope for non-coprime input or (0, 0).
Slope make_slope(long p, long q);
// Canonical representative of the line through (x, y); scales away common
// factors and denominators. Throws DegenerateImage for (0, 0).
Slope slope_from_row(const Row2& row);
Slope parse_slope(std::string_view text);
std::string to_string(const Slope& s);
long slope_norm(const Slope& s);

// A slope together with a completion (r, s) satisfying p*s - q*r = 1.
struct FillingSlope {
  long p = 1;
  long q = 0;
  long r = 0;
  long s = 1;
  Slope slope() const { return {p, q}; }
  friend bool operator==(const FillingSlope&, const FillingSlope&) = default;
};

// Deterministic completion: 0 <= r < |p| when p != 0, and (r, s) = (-1, 0)
// for the slope 0/1.
FillingSlope complete_slope(const Slope& s);
// Validates coprimality and the completion identity.
FillingSlope make_filling_slope(long p, long q, long r, long s);

}  // namespace dehn
