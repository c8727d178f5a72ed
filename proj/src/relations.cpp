#include "dehn/relations.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "dehn/error.hpp"
#include "dehn/lattice.hpp"

namespace dehn {

namespace {

Integer to_integer(const BigReal& x) {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), round(x).raw(), MPFR_RNDN);
  return z;
}

// lcm(1, ..., 24): any root of unity of order <= 24 has argument / 2pi in
// (1/M) Z.
long unity_lcm() {
  long l = 1;
  for (long m = 2; m <= kMaxUnityOrder; ++m) l = std::lcm(l, m);
  return l;
}

int working_precision(const std::vector<BigComplex>& t) {
  int prec = kMinPrecisionBits;
  for (const auto& x : t) prec = std::max(prec, x.precision_bits());
  return prec;
}

BigComplex product(const std::vector<BigComplex>& t, const std::vector<long>& e, int prec) {
  BigComplex p(BigReal(1L, prec), BigReal(prec));
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (e[i] != 0) p *= pow(t[i].with_precision(prec), e[i]);
  }
  return p;
}

double euclid(const std::vector<long>& e) {
  double s = 0;
  for (long x : e) s += static_cast<double>(x) * static_cast<double>(x);
  return s;
}

std::vector<long> primitive(std::vector<long> e) {
  long g = 0;
  for (long x : e) g = std::gcd(g, std::labs(x));
  if (g > 1) {
    for (long& x : e) x /= g;
  }
  return e;
}

// First nonzero entry positive.
std::vector<long> sign_normalized(std::vector<long> e) {
  for (long x : e) {
    if (x == 0) continue;
    if (x < 0) {
      for (long& y : e) y = -y;
    }
    break;
  }
  return e;
}

}  // namespace

BigReal relation_threshold(int precision_bits) { return BigReal::pow2(64 - precision_bits, precision_bits); }

RelationCheck verify_relation(const std::vector<BigComplex>& t, const DependenceRelation& rel) {
  if (t.size() != rel.exponents.size()) {
    throw Error(ErrorKind::VarCountMismatch, "relation has " + std::to_string(rel.exponents.size()) +
                                                 " exponents for " + std::to_string(t.size()) + " values");
  }
  const int prec = working_precision(t);
  const BigReal thr = relation_threshold(prec);
  const BigReal one(1L, prec);
  const BigComplex cone(one, BigReal(prec));
  BigComplex p = product(t, rel.exponents, prec);
  RelationCheck out;
  out.residual = abs(abs(p) - one);
  bool modulus_ok = out.residual <= thr;
  BigComplex power = cone;
  for (int m = 1; m <= kMaxUnityOrder; ++m) {
    power *= p;
    BigReal dev = abs(power - cone) / static_cast<long>(m);
    if (dev <= thr) {
      out.unity_order = m;
      break;
    }
  }
  out.pass = modulus_ok;
  if (rel.unity_order) {
    BigReal dev = abs(pow(p, *rel.unity_order) - cone) / static_cast<long>(*rel.unity_order);
    if (dev > out.residual) out.residual = dev;
    out.pass = out.pass && dev <= thr;
  } else if (out.unity_order) {
    BigReal dev = abs(pow(p, *out.unity_order) - cone) / static_cast<long>(*out.unity_order);
    if (dev > out.residual) out.residual = dev;
  }
  return out;
}

std::optional<DependenceRelation> detect_dependence(const std::vector<BigComplex>& t, int exponent_bound,
                                                    int precision_bits) {
  if (exponent_bound < 1) throw Error(ErrorKind::BadIndex, "exponent bound must be at least 1");
  if (precision_bits < 128 && exponent_bound > 10) {
    throw Error(ErrorKind::PrecisionTooLow, "exponent bound " + std::to_string(exponent_bound) + " needs at least 128 bits");
  }
  if (t.empty()) return std::nullopt;
  const int prec = precision_bits;
  const std::size_t n = t.size();
  for (const auto& x : t) {
    if (!(abs(x) > BigReal(1L, prec))) throw Error(ErrorKind::Singular, "holonomy values must have modulus > 1");
  }
  const BigReal scale = BigReal::pow2(prec / 2, prec);
  const BigReal two_pi = BigReal::pi(prec) * 2L;
  const long m_lcm = unity_lcm();

  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < n; ++i) {
    BigComplex x = t[i].with_precision(prec);
    IntVector row(n + 2, Integer(0));
    row[i] = 1;
    row[n] = to_integer(log(abs(x)) * scale);
    row[n + 1] = to_integer(arg(x) / two_pi * m_lcm * scale);
    basis.push_back(std::move(row));
  }
  IntVector wrap(n + 2, Integer(0));
  wrap[n + 1] = to_integer(scale);
  basis.push_back(std::move(wrap));
  std::vector<IntVector> reduced = lll_reduce(std::move(basis));

  // Candidates: reduced vectors and their pairwise sums and differences.
  std::vector<IntVector> candidates = reduced;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    for (std::size_t j = i + 1; j < reduced.size(); ++j) {
      IntVector s(n + 2), d(n + 2);
      for (std::size_t c = 0; c < n + 2; ++c) {
        s[c] = reduced[i][c] + reduced[j][c];
        d[c] = reduced[i][c] - reduced[j][c];
      }
      candidates.push_back(std::move(s));
      candidates.push_back(std::move(d));
    }
  }

  // A genuine relation leaves only rounding noise in the two scaled
  // coordinates; anything larger cannot pass verification.
  const Integer noise = Integer(1) << (prec / 4);
  std::set<std::vector<long>> tried;
  std::optional<DependenceRelation> best;
  for (const auto& v : candidates) {
    if (abs(v[n]) > noise || abs(v[n + 1]) > noise) continue;
    std::vector<long> e(n);
    bool in_box = true;
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (abs(v[i]) > exponent_bound) {
        in_box = false;
        break;
      }
      e[i] = v[i].get_si();
      nonzero = nonzero || e[i] != 0;
    }
    if (!in_box || !nonzero) continue;
    // Prefer the primitive vector; fall back to the reduced one if dividing
    // out the common factor breaks the root-of-unity test.
    std::vector<long> signed_e = sign_normalized(e);
    for (const auto& attempt : {primitive(signed_e), signed_e}) {
      if (!tried.insert(attempt).second) continue;
      DependenceRelation rel{attempt, std::nullopt, BigReal(prec)};
      RelationCheck chk = verify_relation(t, rel);
      if (!chk.pass || !chk.unity_order) continue;
      rel.unity_order = chk.unity_order;
      rel.residual = chk.residual;
      if (!best || euclid(rel.exponents) < euclid(best->exponents) ||
          (euclid(rel.exponents) == euclid(best->exponents) && rel.exponents > best->exponents)) {
        best = std::move(rel);
      }
      break;
    }
  }
  return best;
}

}  // namespace dehn
