#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

constexpr int P = 256;

MultiSeries var(int n, int k, int order) { return MultiSeries::variable(n, k, order, P); }
MultiSeries cst(int n, int order, double re, double im = 0) {
  return MultiSeries::constant(n, order, cx(re, im, P));
}

// Coefficients are small dyadic rationals, so ring operations are exact at
// 256 bits and equality can be tested exactly.
MultiSeries random_series(Gen& g, int n, int order, bool zero_constant = false) {
  MultiSeries s(n, order, P);
  const int terms = static_cast<int>(g.integer(0, 6));
  for (int t = 0; t < terms; ++t) {
    Exponent e(n, 0);
    int budget = static_cast<int>(g.integer(zero_constant ? 1 : 0, order));
    for (int used = 0; used < budget; ++used) e[g.integer(0, n - 1)] += 1;
    if (zero_constant && total_degree(e) == 0) continue;
    s.add_term(e, cx(g.integer(-16, 16) / 8.0, g.integer(-16, 16) / 8.0, P));
  }
  return s;
}

}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK(var(2, 0, 3) + var(2, 1, 3) == series_add(var(2, 0, 3), var(2, 1, 3)));
  MultiSeries sum = var(2, 0, 3) + var(2, 1, 3);
  CHECK(sum.terms().size() == 2);
  CHECK(sum.coefficient({1, 0}) == cx(1, 0, P));

  MultiSeries prod = (cst(1, 3, 1) + var(1, 0, 3)) * (cst(1, 3, 1) - var(1, 0, 3));
  MultiSeries expected = cst(1, 3, 1);
  expected.add_term({2}, cx(-1, 0, P));
  CHECK(prod == expected);

  MultiSeries sq = (var(2, 0, 2) + var(2, 1, 2)) * (var(2, 0, 2) + var(2, 1, 2));
  CHECK(sq.coefficient({2, 0}) == cx(1, 0, P));
  CHECK(sq.coefficient({1, 1}) == cx(2, 0, P));
  CHECK(sq.coefficient({0, 2}) == cx(1, 0, P));
  CHECK(sq.terms().size() == 3);
}

TEST_CASE("truncation and canonical form") {
  MultiSeries u = var(1, 0, 3);
  MultiSeries u4 = u * u * u * u;
  CHECK(u4.empty());
  MultiSeries s(1, 3, P);
  s.add_term({1}, cx(1, 0, P));
  s.add_term({1}, cx(-1, 0, P));
  CHECK(s.empty());
}

TEST_CASE("arithmetic errors") {
  CHECK_THROWS_AS(var(1, 0, 3) + var(2, 0, 3), dehn::Error);
  try {
    (void)(var(1, 0, 3) * var(1, 0, 4));
    FAIL("expected OrderMismatch");
  } catch (const dehn::Error& e) {
    CHECK(e.kind() == ErrorKind::OrderMismatch);
  }
  try {
    (void)(var(1, 0, 3) + var(2, 0, 3));
  } catch (const dehn::Error& e) {
    CHECK(e.kind() == ErrorKind::VarCountMismatch);
  }
}

TEST_CASE("partial derivative examples") {
  MultiSeries phi(2, 4, P);
  phi.add_term({2, 0}, cx(0, 1, P));
  phi.add_term({0, 2}, cx(0, 2, P));
  MultiSeries d1 = series_partial(phi, 0);
  CHECK(d1.terms().size() == 1);
  CHECK(d1.coefficient({1, 0}) == cx(0, 2, P));

  MultiSeries m(2, 4, P);
  m.add_term({2, 2}, cx(1, 0, P));
  MultiSeries d2 = series_partial(m, 1);
  CHECK(d2.coefficient({2, 1}) == cx(2, 0, P));

  CHECK(series_partial(cst(2, 4, 3), 0).empty());
  try {
    series_partial(m, 2);
    FAIL("expected BadIndex");
  } catch (const dehn::Error& e) {
    CHECK(e.kind() == ErrorKind::BadIndex);
  }
}

TEST_CASE("composition examples") {
  MultiSeries s(1, 5, P);
  s.add_term({1}, cx(1, 0, P));
  s.add_term({3}, cx(1, 0, P));
  MultiSeries iu = var(1, 0, 5).scaled(cx(0, 1, P));
  MultiSeries c = series_compose(s, {iu});
  CHECK(c.coefficient({1}) == cx(0, 1, P));
  CHECK(c.coefficient({3}) == cx(0, -1, P));

  MultiSeries t(2, 4, P);
  t.add_term({1, 1}, cx(1, 0, P));
  t.add_term({2, 0}, cx(1, 0, P));
  MultiSeries zero(2, 4, P);
  MultiSeries r = series_compose(t, {var(2, 0, 4), zero});
  CHECK(r.terms().size() == 1);
  CHECK(r.coefficient({2, 0}) == cx(1, 0, P));

  MultiSeries sq(1, 4, P);
  sq.add_term({2}, cx(1, 0, P));
  MultiSeries sub = var(1, 0, 4);
  sub.add_term({3}, cx(1, 0, P));
  MultiSeries out = series_compose(sq, {sub});
  CHECK(out.coefficient({2}) == cx(1, 0, P));
  CHECK(out.coefficient({4}) == cx(2, 0, P));
  CHECK(out.terms().size() == 2);

  try {
    series_compose(sq, {cst(1, 4, 1) + var(1, 0, 4)});
    FAIL("expected NonzeroConstantTerm");
  } catch (const dehn::Error& e) {
    CHECK(e.kind() == ErrorKind::NonzeroConstantTerm);
  }
  try {
    series_compose(t, {var(1, 0, 4)});
    FAIL("expected VarCountMismatch");
  } catch (const dehn::Error& e) {
    CHECK(e.kind() == ErrorKind::VarCountMismatch);
  }
}

TEST_CASE("evaluation examples") {
  MultiSeries s(2, 3, P);
  s.add_term({2, 0}, cx(1, 0, P));
  s.add_term({0, 1}, cx(1, 0, P));
  CHECK(series_eval(s, {cx(2, 0, P), cx(3, 0, P)}) == cx(7, 0, P));
  CHECK(series_eval(MultiSeries(2, 3, P), {cx(0.3, 0, P), cx(1, 1, P)}).is_zero());

  MultiSeries c(1, 3, P);
  c.add_term({1}, cx(0, 1, P));
  c.add_term({3}, cx(1, 0, P));
  BigComplex val = series_eval(c, {BigComplex("0.1", "0", P)});
  BigComplex want = BigComplex("0.001", "0.1", P);
  CHECK(abs(val - want) < BigReal::pow2(-250, P));
  CHECK_THROWS_AS(series_eval(c, {cx(1, 0, P), cx(1, 0, P)}), dehn::Error);
}

TEST_CASE("property: ring axioms on random series") {
  Gen g(101);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = static_cast<int>(g.integer(1, 3));
    const int order = static_cast<int>(g.integer(2, 6));
    MultiSeries a = random_series(g, n, order), b = random_series(g, n, order), c = random_series(g, n, order);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).empty());
  }
}

TEST_CASE("property: mixed partials commute") {
  Gen g(102);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(g.integer(1, 3));
    MultiSeries s = random_series(g, n, 6);
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l) CHECK(series_partial(series_partial(s, k), l) == series_partial(series_partial(s, l), k));
    }
  }
}

TEST_CASE("property: evaluation commutes with composition up to truncation") {
  Gen g(103);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(g.integer(1, 2));
    const int m = static_cast<int>(g.integer(1, 2));
    const int order = static_cast<int>(g.integer(9, 11));
    MultiSeries s = random_series(g, n, order);
    std::vector<MultiSeries> subs;
    for (int k = 0; k < n; ++k) subs.push_back(random_series(g, m, order, true));
    std::vector<BigComplex> point;
    for (int k = 0; k < m; ++k) point.push_back(g.complex(0.1, P));
    BigComplex lhs = series_eval(series_compose(s, subs), point);
    std::vector<BigComplex> inner;
    for (const auto& t : subs) inner.push_back(series_eval(t, point));
    BigComplex rhs = series_eval(s, inner);
    // Only the terms dropped above the order separate the two sides.
    BigReal scale = abs(rhs) + BigReal(1L, P);
    CHECK(abs(lhs - rhs) <= scale * BigReal(1e-8, P));
  }
}

TEST_CASE("property: exact composition when no truncation occurs") {
  Gen g(104);
  const BigReal rel = BigReal::pow2(16 - P, P);
  for (int trial = 0; trial < 100; ++trial) {
    // Degrees small enough that the composite fits inside order N = 9.
    MultiSeries s = random_series(g, 2, 3);
    std::vector<MultiSeries> subs = {random_series(g, 2, 3, true), random_series(g, 2, 3, true)};
    MultiSeries s9 = s.with_order(9);
    std::vector<MultiSeries> subs9 = {subs[0].with_order(9), subs[1].with_order(9)};
    std::vector<BigComplex> point = {g.complex(0.1, P), g.complex(0.1, P)};
    BigComplex lhs = series_eval(series_compose(s9, subs9), point);
    BigComplex rhs = series_eval(s9, {series_eval(subs9[0], point), series_eval(subs9[1], point)});
    CHECK(abs(lhs - rhs) <= rel * (abs(rhs) + BigReal(1L, P)));
  }
}

TEST_CASE("order changes") {
  MultiSeries s(1, 6, P);
  s.add_term({2}, cx(1, 0, P));
  s.add_term({5}, cx(0, 1, P));
  CHECK(s.max_degree() == 5);
  MultiSeries t = s.with_order(3);
  CHECK(t.terms().size() == 1);
  CHECK(t.truncation_order() == 3);
  CHECK(t.with_order(6) != s);
  CHECK(MultiSeries(2, 4, P).max_degree() == -1);
  CHECK_THROWS_AS(MultiSeries(0, 3, P), dehn::Error);
}
