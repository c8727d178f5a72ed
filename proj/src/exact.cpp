#include "dehn/exact.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "dehn/error.hpp"

namespace dehn {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  return s;
}

void require_same_field(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.b != 0 && y.b != 0 && x.d != y.d) {
    throw Error(ErrorKind::FieldMismatch,
                "Q(sqrt(-" + std::to_string(x.d) + ")) vs Q(sqrt(-" + std::to_string(y.d) + "))");
  }
}

long field_of(const QuadraticNumber& x, const QuadraticNumber& y) { return x.b != 0 ? x.d : y.d; }

long to_long(const Integer& z, const char* what) {
  if (!z.fits_slong_p()) throw Error(ErrorKind::BadSlope, std::string(what) + " overflows a machine integer");
  return z.get_si();
}

}  // namespace

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw Error(ErrorKind::Parse, "empty rational");
  if (s.front() == '+') s.erase(0, 1);
  auto valid = [](const std::string& part) {
    std::size_t i = (!part.empty() && part[0] == '-') ? 1 : 0;
    if (i == part.size()) return false;
    return std::all_of(part.begin() + static_cast<long>(i), part.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den)) throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  Rational r{Integer(num), Integer(den)};
  if (r.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

BigReal to_big_real(const Rational& x, int precision_bits) {
  BigReal r(precision_bits);
  mpfr_set_q(r.raw(), x.get_mpq_t(), MPFR_RNDN);
  return r;
}

std::pair<long, long> squarefree_split(long d) {
  if (d <= 0) throw Error(ErrorKind::Parse, "radicand must be positive");
  long s = 1;
  for (long f = 2; f * f <= d; ++f) {
    while (d % (f * f) == 0) {
      d /= f * f;
      s *= f;
    }
  }
  return {d, s};
}

QuadraticNumber::QuadraticNumber(Rational a_, Rational b_, long d_) : a(std::move(a_)), b(std::move(b_)), d(d_) {
  a.canonicalize();
  b.canonicalize();
  auto [core, s] = squarefree_split(d);
  d = core;
  b *= s;
  if (b == 0) d = 1;
}

BigComplex QuadraticNumber::to_complex(int precision_bits) const {
  BigReal root = sqrt(BigReal(d, precision_bits));
  return {to_big_real(a, precision_bits), to_big_real(b, precision_bits) * root};
}

std::string QuadraticNumber::to_string() const {
  if (b == 0) return dehn::to_string(a);
  std::string out;
  if (a != 0) out = dehn::to_string(a) + (b < 0 ? "-" : "+");
  else if (b < 0) out = "-";
  Rational mag = abs(b);
  if (mag != 1) out += dehn::to_string(mag);
  out += "√-" + std::to_string(d);
  return out;
}

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
  require_same_field(x, y);
  return {x.a + y.a, x.b + y.b, field_of(x, y)};
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
  require_same_field(x, y);
  return {x.a - y.a, x.b - y.b, field_of(x, y)};
}

QuadraticNumber operator-(const QuadraticNumber& x) { return {-x.a, -x.b, x.d}; }

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
  require_same_field(x, y);
  long d = field_of(x, y);
  return {x.a * y.a - x.b * y.b * d, x.a * y.b + x.b * y.a, d};
}

QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
  require_same_field(x, y);
  Rational n = y.norm();
  if (n == 0) throw Error(ErrorKind::Singular, "division by zero in quadratic field");
  QuadraticNumber num = x * y.conj();
  return {num.a / n, num.b / n, num.d};
}

QuadraticNumber pow(const QuadraticNumber& x, long n) {
  QuadraticNumber result = QuadraticNumber::rational(Rational(1));
  QuadraticNumber base = n < 0 ? QuadraticNumber::rational(Rational(1)) / x : x;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  while (e) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

QuadraticNumber parse_quadratic(std::string_view text) {
  std::string s = strip_spaces(text);
  if (s == "i" || s == "+i") return {Rational(0), Rational(1), 1};
  if (s == "-i") return {Rational(0), Rational(-1), 1};
  s.erase(std::remove(s.begin(), s.end(), '*'), s.end());
  const std::string root_utf8 = "\xE2\x88\x9A-";
  std::size_t pos = s.find(root_utf8);
  std::size_t radicand_begin = 0;
  std::size_t radicand_end = 0;
  if (pos != std::string::npos) {
    radicand_begin = pos + root_utf8.size();
    radicand_end = s.size();
  } else if ((pos = s.find("sqrt(-")) != std::string::npos) {
    radicand_begin = pos + 6;
    radicand_end = s.find(')', radicand_begin);
    if (radicand_end == std::string::npos || radicand_end + 1 != s.size()) {
      throw Error(ErrorKind::Parse, "malformed radical in '" + std::string(text) + "'");
    }
  } else if ((pos = s.find("sqrt-")) != std::string::npos) {
    radicand_begin = pos + 5;
    radicand_end = s.size();
  }
  if (pos == std::string::npos) return QuadraticNumber::rational(parse_rational(s));

  std::string radicand = s.substr(radicand_begin, radicand_end - radicand_begin);
  if (radicand.empty() || !std::all_of(radicand.begin(), radicand.end(),
                                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
    throw Error(ErrorKind::Parse, "malformed radicand in '" + std::string(text) + "'");
  }
  long d = std::stol(radicand);
  if (d <= 0) throw Error(ErrorKind::Parse, "radicand must be positive");

  std::string prefix = s.substr(0, pos);
  std::size_t split = std::string::npos;
  for (std::size_t k = prefix.size(); k-- > 1;) {
    if (prefix[k] == '+' || prefix[k] == '-') {
      split = k;
      break;
    }
  }
  std::string real_part = split == std::string::npos ? "" : prefix.substr(0, split);
  std::string coeff = split == std::string::npos ? prefix : prefix.substr(split);
  Rational a = real_part.empty() ? Rational(0) : parse_rational(real_part);
  Rational b;
  if (coeff.empty() || coeff == "+") b = 1;
  else if (coeff == "-") b = -1;
  else b = parse_rational(coeff);
  return {a, b, d};
}

Matrix2 Matrix2::inverse() const {
  Rational det_ = det();
  if (det_ == 0) throw Error(ErrorKind::Singular, "matrix " + to_string() + " is singular");
  return {d / det_, -b / det_, -c / det_, a / det_};
}

std::string Matrix2::to_string() const {
  return "[[" + dehn::to_string(a) + "," + dehn::to_string(b) + "],[" + dehn::to_string(c) + "," +
         dehn::to_string(d) + "]]";
}

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Matrix2 operator*(const Rational& k, const Matrix2& x) { return {k * x.a, k * x.b, k * x.c, k * x.d}; }

Matrix2 operator+(const Matrix2& x, const Matrix2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }

Matrix2 operator-(const Matrix2& x, const Matrix2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }

Matrix2 operator-(const Matrix2& x) { return {-x.a, -x.b, -x.c, -x.d}; }

Matrix2 pow(const Matrix2& x, long n) {
  Matrix2 result = Matrix2::identity();
  Matrix2 base = n < 0 ? x.inverse() : x;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  while (e) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Row2 operator*(const Row2& v, const Matrix2& m) { return {v.x * m.a + v.y * m.c, v.x * m.b + v.y * m.d}; }

Slope make_slope(long p, long q) {
  if (p == 0 && q == 0) throw Error(ErrorKind::BadSlope, "slope 0/0");
  if (std::gcd(p, q) != 1) {
    throw Error(ErrorKind::BadSlope, std::to_string(p) + "/" + std::to_string(q) + " is not coprime");
  }
  if (q < 0 || (q == 0 && p < 0)) return {-p, -q};
  return {p, q};
}

Slope slope_from_row(const Row2& row) {
  if (row.x == 0 && row.y == 0) throw Error(ErrorKind::DegenerateImage, "slope image is (0, 0)");
  Integer l;
  mpz_lcm(l.get_mpz_t(), row.x.get_den_mpz_t(), row.y.get_den_mpz_t());
  Integer p = row.x.get_num() * (l / row.x.get_den());
  Integer q = row.y.get_num() * (l / row.y.get_den());
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return {to_long(p, "slope numerator"), to_long(q, "slope denominator")};
}

Slope parse_slope(std::string_view text) {
  std::string s = strip_spaces(text);
  auto slash = s.find('/');
  try {
    std::size_t used = 0;
    long p = std::stol(s.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? s.size() : slash)) throw std::invalid_argument("trailing");
    long q = 1;
    if (slash != std::string::npos) {
      std::string den = s.substr(slash + 1);
      q = std::stol(den, &used);
      if (used != den.size()) throw std::invalid_argument("trailing");
    }
    return make_slope(p, q);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::Parse, "malformed slope '" + std::string(text) + "'");
  }
}

std::string to_string(const Slope& s) { return std::to_string(s.p) + "/" + std::to_string(s.q); }

long slope_norm(const Slope& s) { return std::labs(s.p) + std::labs(s.q); }

FillingSlope complete_slope(const Slope& in) {
  Slope s = make_slope(in.p, in.q);
  if (s.p == 0) return {0, 1, -1, 0};
  const long m = std::labs(s.p);
  // Solve -q r = 1 (mod |p|) for r in [0, |p|).
  Integer inv;
  Integer mq = Integer(-s.q) % m;
  if (mq < 0) mq += m;
  long r = 0;
  if (m > 1) {
    if (mpz_invert(inv.get_mpz_t(), mq.get_mpz_t(), Integer(m).get_mpz_t()) == 0) {
      throw Error(ErrorKind::BadSlope, "slope is not coprime");
    }
    r = inv.get_si();
  }
  Integer num = Integer(1) + Integer(s.q) * r;
  long sv = to_long(num / s.p, "completion");
  return make_filling_slope(s.p, s.q, r, sv);
}

FillingSlope make_filling_slope(long p, long q, long r, long s) {
  if (std::gcd(p, q) != 1) {
    throw Error(ErrorKind::BadSlope, std::to_string(p) + "/" + std::to_string(q) + " is not coprime");
  }
  if (Integer(p) * s - Integer(q) * r != 1) {
    throw Error(ErrorKind::BadSlope, "completion violates p*s - q*r = 1");
  }
  return {p, q, r, s};
}

}  // namespace dehn
