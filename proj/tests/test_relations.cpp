#include <doctest.h>

#include <numeric>

#include "dehn/lattice.hpp"
#include "support.hpp"

using namespace testing;

namespace {

constexpr int P = 256;

BigComplex polar(double r, double turns) {
  BigReal th = BigReal::pi(P) * BigReal(2 * turns, P);
  return BigComplex(BigReal(r, P) * cos(th), BigReal(r, P) * sin(th));
}

// exp(2 pi i k / m) with the angle formed at full precision.
BigComplex unity(long k, long m) {
  BigReal th = BigReal::pi(P) * BigReal(2 * k, P) / BigReal(m, P);
  return BigComplex(cos(th), sin(th));
}

bool proportional(const std::vector<long>& e, const std::vector<long>& want) {
  return e == want || e == std::vector<long>{-want[0], -want[1]};
}

// Brute force over the box: true when some nonzero exponent pair gives a
// product of modulus 1 within a loose float tolerance.
bool dependent_by_brute_force(double l1, double l2, int bound) {
  for (int a = -bound; a <= bound; ++a) {
    for (int b = -bound; b <= bound; ++b) {
      if ((a != 0 || b != 0) && std::fabs(a * l1 + b * l2) < 1e-9) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("detection examples") {
  auto rel = detect_dependence({cx(2, 0, P), cx(8, 0, P)}, 20, P);
  REQUIRE(rel);
  CHECK(proportional(rel->exponents, {3, -1}));
  CHECK(rel->unity_order == 1);

  auto rot = detect_dependence({unity(1, 6) * cx(2, 0, P), unity(1, 3) * cx(4, 0, P)}, 20, P);
  REQUIRE(rot);
  CHECK(proportional(rot->exponents, {2, -1}));
  CHECK(rot->unity_order == 1);

  CHECK_FALSE(detect_dependence({cx(2, 0, P), cx(3, 0, P)}, 20, P));
  CHECK_FALSE(dependent_by_brute_force(std::log(2.0), std::log(3.0), 20));

  auto neg = detect_dependence({cx(0, 2, P), cx(4, 0, P)}, 20, P);
  REQUIRE(neg);
  CHECK(proportional(neg->exponents, {2, -1}));
  CHECK(neg->unity_order == 2);
}

TEST_CASE("detection errors") {
  try {
    detect_dependence({cx(2, 0, P), cx(8, 0, P)}, 20, 96);
    FAIL("expected PrecisionTooLow");
  } catch (const dehn::Error& e) {
    CHECK(e.kind() == ErrorKind::PrecisionTooLow);
  }
  CHECK(detect_dependence({cx(2, 0, 96), cx(8, 0, 96)}, 10, 96));
  CHECK_THROWS_AS(detect_dependence({cx(0.5, 0, P), cx(8, 0, P)}, 10, P), dehn::Error);
}

TEST_CASE("verification examples") {
  std::vector<BigComplex> t = {cx(2, 0, P), cx(8, 0, P)};
  RelationCheck ok = verify_relation(t, {{3, -1}, 1, BigReal(P)});
  CHECK(ok.pass);
  CHECK(ok.residual.is_zero());
  CHECK_FALSE(verify_relation(t, {{1, 1}, std::nullopt, BigReal(P)}).pass);
  RelationCheck neg = verify_relation({cx(0, 2, P), cx(4, 0, P)}, {{2, -1}, std::nullopt, BigReal(P)});
  CHECK(neg.pass);
  CHECK(neg.unity_order == 2);
  CHECK(relation_threshold(P) == BigReal::pow2(64 - P, P));
}

TEST_CASE("property: planted relations are recovered") {
  Gen g(501);
  const std::vector<int> orders = {1, 2, 3, 4, 6};
  for (int trial = 0; trial < 50; ++trial) {
    const long a = g.integer(1, 20), b = g.integer(1, 20);
    const double r = g.real(1.1, 4.0);
    BigComplex t1 = polar(r, g.real(-0.5, 0.5));
    const int m = orders[g.integer(0, 4)];
    BigComplex zeta = unity(g.integer(0, m - 1), m);
    BigComplex t2 = zeta * exp(log(t1) * BigComplex(BigReal(a, P) / BigReal(b, P), BigReal(0L, P)));
    auto rel = detect_dependence({t1, t2}, 20, P);
    INFO("a=", a, " b=", b, " m=", m, " r=", r);
    REQUIRE(rel);
    const long gcd = std::gcd(a, b);
    CHECK(proportional(rel->exponents, {a / gcd, -b / gcd}));
    RelationCheck check = verify_relation({t1, t2}, *rel);
    CHECK(check.pass);
    CHECK(check.residual < BigReal(1e-40, P));
  }
}

TEST_CASE("property: no false positives") {
  Gen g(502);
  int tested = 0;
  while (tested < 50) {
    const double r1 = g.real(1.1, 4.0), r2 = g.real(1.1, 4.0);
    const double a1 = g.real(-0.5, 0.5), a2 = g.real(-0.5, 0.5);
    if (dependent_by_brute_force(std::log(r1), std::log(r2), 20)) continue;
    ++tested;
    CHECK_FALSE(detect_dependence({polar(r1, a1), polar(r2, a2)}, 20, P));
  }
}

TEST_CASE("lattice reduction") {
  std::vector<IntVector> basis = {{Integer(1), Integer(1), Integer(1)},
                                  {Integer(-1), Integer(0), Integer(2)},
                                  {Integer(3), Integer(5), Integer(6)}};
  auto reduced = lll_reduce(basis);
  CHECK(reduced.size() == 3);
  CHECK(dot(reduced[0], reduced[0]) <= 3);
  CHECK_THROWS_AS(lll_reduce({{Integer(1), Integer(2)}, {Integer(2), Integer(4)}}), dehn::Error);

  Gen g(503);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<IntVector> b(3, IntVector(3));
    for (auto& row : b) {
      for (auto& x : row) x = g.integer(-50, 50);
    }
    Integer det = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                  b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                  b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    if (det == 0) continue;
    auto r = lll_reduce(b);
    Integer det2 = r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) -
                   r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
                   r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
    CHECK(abs(det) == abs(det2));
    CHECK(dot(r[0], r[0]) <= dot(b[0], b[0]) * 4);
  }
}
