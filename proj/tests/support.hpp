#pragma once

// Fixtures and hand-rolled random generators shared by the test binaries.

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "dehn/classify.hpp"
#include "dehn/error.hpp"
#include "dehn/filling.hpp"
#include "dehn/manifold.hpp"
#include "dehn/relations.hpp"
#include "dehn/search.hpp"

namespace testing {

using namespace dehn;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  long nonzero(long bound) {
    long x = integer(1, bound);
    return coin() ? x : -x;
  }

  Rational rational(long num_bound = 9, long den_bound = 6) {
    Rational r(integer(-num_bound, num_bound), integer(1, den_bound));
    r.canonicalize();
    return r;
  }
  Rational positive_rational(long num_bound = 9, long den_bound = 6) {
    Rational r(integer(1, num_bound), integer(1, den_bound));
    r.canonicalize();
    return r;
  }

  // Canonical coprime slope with both entries nonzero and norm in [lo, hi].
  Slope slope(long lo, long hi, bool allow_zero = false) {
    for (;;) {
      long p = integer(-hi, hi), q = integer(0, hi);
      long n = std::labs(p) + q;
      if (n < lo || n > hi || std::gcd(p, q) != 1) continue;
      if (!allow_zero && (p == 0 || q == 0)) continue;
      return make_slope(p, q);
    }
  }

  BigComplex complex(double radius, int prec) {
    double r = radius * std::sqrt(real(0, 1)), th = real(-3.14159, 3.14159);
    return BigComplex(r * std::cos(th), r * std::sin(th), prec);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline BigComplex cx(double re, double im, int prec = kDefaultPrecisionBits) { return BigComplex(re, im, prec); }

// Phi = i u^2 + u^4 / 2, so v = i u + u^3.
inline NZPotential cubic_curve(int prec = kDefaultPrecisionBits, int order = kDefaultTruncationOrder) {
  MultiSeries phi(1, order, prec);
  phi.add_term({2}, cx(0, 1, prec));
  phi.add_term({4}, cx(0.5, 0, prec));
  return make_potential("cubic", phi, {QuadraticNumber(0, 1, 1)});
}

// Generic 1-cusp curve with shape sqrt(-2) and a few small coefficients.
inline NZPotential root2_curve(int prec = kDefaultPrecisionBits, int order = kDefaultTruncationOrder) {
  MultiSeries phi(1, order, prec);
  phi.add_term({2}, BigComplex(BigReal(0L, prec), sqrt(BigReal(2L, prec))));
  phi.add_term({4}, cx(0.3, -0.2, prec));
  phi.add_term({6}, cx(-0.1, 0.05, prec));
  phi.add_term({8}, cx(0.02, 0.03, prec));
  return make_potential("root2", phi, {QuadraticNumber(0, 1, 2)});
}

inline SlopeTuple tuple(std::initializer_list<Slope> slopes) {
  SlopeTuple out;
  for (const auto& s : slopes) out.push_back(complete_slope(s));
  return out;
}

inline double to_d(const BigReal& x) { return x.to_double(); }

}  // namespace testing
