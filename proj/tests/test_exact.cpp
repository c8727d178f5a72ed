#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const dehn::Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Parse;
}

QuadraticNumber random_quadratic(Gen& g, long d) { return {g.rational(), g.rational(), d}; }

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == make_rational(1, 2));
  CHECK(parse_rational("-4") == make_rational(-4));
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(kind_of([] { parse_rational("1/0"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_rational("x"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { make_rational(1, 0); }) == ErrorKind::Parse);
}

TEST_CASE("quadratic numbers") {
  QuadraticNumber q(0, 2, 8);
  CHECK(q.d == 2);
  CHECK(q.b == 4);
  CHECK(QuadraticNumber(3, 0, 7) == QuadraticNumber::rational(3));

  QuadraticNumber i = parse_quadratic("i");
  CHECK(i * i == QuadraticNumber::rational(-1));
  CHECK(pow(i, 5) == i);
  CHECK(parse_quadratic("1/2+1/2√-3") == QuadraticNumber(make_rational(1, 2), make_rational(1, 2), 3));
  CHECK(parse_quadratic("0+1√-2") == QuadraticNumber(0, 1, 2));
  CHECK(parse_quadratic("-sqrt(-5)") == QuadraticNumber(0, -1, 5));
  CHECK(parse_quadratic("2") == QuadraticNumber::rational(2));
  CHECK(kind_of([] { parse_quadratic("1+√-"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_quadratic("sqrt(-2"); }) == ErrorKind::Parse);

  QuadraticNumber w = parse_quadratic("1/2+1/2√-3");
  CHECK(pow(w, 6) == QuadraticNumber::rational(1));
  CHECK(pow(w, 3) == QuadraticNumber::rational(-1));

  CHECK(kind_of([] { (void)(parse_quadratic("i") + parse_quadratic("√-2")); }) == ErrorKind::FieldMismatch);
  CHECK(kind_of([] { (void)(QuadraticNumber::rational(1) / QuadraticNumber::rational(0)); }) == ErrorKind::Singular);

  BigComplex z = parse_quadratic("1+2√-2").to_complex(256);
  CHECK(abs(z - BigComplex(BigReal(1L, 256), BigReal(2L, 256) * sqrt(BigReal(2L, 256)))) < BigReal::pow2(-250, 256));
}

TEST_CASE("property: quadratic field arithmetic") {
  Gen g(201);
  for (int trial = 0; trial < 200; ++trial) {
    const long d = std::vector<long>{1, 2, 3, 5, 7}[g.integer(0, 4)];
    QuadraticNumber x = random_quadratic(g, d), y = random_quadratic(g, d), z = random_quadratic(g, d);
    CHECK((x + y) * z == x * z + y * z);
    CHECK(x * y == y * x);
    CHECK((x * x.conj()).is_rational());
    CHECK((x * x.conj()).a == x.norm());
    if (!(y == QuadraticNumber::rational(0))) CHECK((x / y) * y == x);
    CHECK(parse_quadratic(x.to_string()) == x);
  }
}

TEST_CASE("matrices and rows") {
  Matrix2 s = Matrix2::of(0, 1, -1, 0);
  CHECK(s * s == -Matrix2::identity());
  CHECK(pow(s, 4) == Matrix2::identity());
  CHECK(pow(s, -1) == s.inverse());
  CHECK(s.inverse() * s == Matrix2::identity());
  CHECK(kind_of([] { Matrix2::of(1, 2, 2, 4).inverse(); }) == ErrorKind::Singular);
  CHECK((Row2{3, 2} * s) == Row2{-2, 3});
  CHECK(Matrix2::zero().is_zero());
}

TEST_CASE("property: matrix inverse") {
  Gen g(202);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix2 m{g.rational(), g.rational(), g.rational(), g.rational()};
    if (m.det() == 0) continue;
    CHECK(m * m.inverse() == Matrix2::identity());
    CHECK((m * m).det() == m.det() * m.det());
  }
}

TEST_CASE("slopes") {
  CHECK(make_slope(-3, -2) == Slope{3, 2});
  CHECK(make_slope(-1, 0) == Slope{1, 0});
  CHECK(parse_slope("5") == Slope{5, 1});
  CHECK(parse_slope(" -2/3 ") == Slope{-2, 3});
  CHECK(kind_of([] { make_slope(2, 4); }) == ErrorKind::BadSlope);
  CHECK(kind_of([] { make_slope(0, 0); }) == ErrorKind::BadSlope);
  CHECK(kind_of([] { parse_slope("2/x"); }) == ErrorKind::Parse);
  CHECK(slope_from_row(Row2{make_rational(1, 2), make_rational(-1, 3)}) == Slope{-3, 2});
  CHECK(kind_of([] { slope_from_row(Row2{}); }) == ErrorKind::DegenerateImage);
  CHECK(slope_norm(Slope{-2, 5}) == 7);
}

TEST_CASE("slope completion") {
  CHECK(complete_slope({2, 1}) == FillingSlope{2, 1, 1, 1});
  CHECK(complete_slope({0, 1}) == FillingSlope{0, 1, -1, 0});
  CHECK(complete_slope({1, 0}) == FillingSlope{1, 0, 0, 1});
  CHECK(complete_slope({100, 1}) == FillingSlope{100, 1, 99, 1});
  CHECK(kind_of([] { make_filling_slope(2, 1, 0, 0); }) == ErrorKind::BadSlope);
  Gen g(203);
  for (int trial = 0; trial < 300; ++trial) {
    Slope s = g.slope(1, 200, true);
    FillingSlope f = complete_slope(s);
    CHECK(f.p * f.s - f.q * f.r == 1);
    if (f.p != 0) {
      CHECK(f.r >= 0);
      CHECK(f.r < std::labs(f.p));
    }
  }
}
