#include "dehn/lattice.hpp"

#include "dehn/error.hpp"

namespace dehn {

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Integral LLL: d[i] are the Gram determinants and lam[k][j] = d[j] mu[k][j],
// all integers, so no rational arithmetic is needed. Indices are 1-based
// with d[0] = 1.
std::vector<IntVector> lll_reduce(std::vector<IntVector> basis, const Rational& delta) {
  const std::size_t n = basis.size();
  if (n < 2) return basis;
  const Integer dp = delta.get_num(), dq = delta.get_den();
  std::vector<IntVector> b(n + 1);
  for (std::size_t i = 0; i < n; ++i) b[i + 1] = std::move(basis[i]);
  std::vector<Integer> d(n + 1, Integer(0));
  std::vector<std::vector<Integer>> lam(n + 1, std::vector<Integer>(n + 1, Integer(0)));
  d[0] = 1;
  d[1] = dot(b[1], b[1]);
  if (d[1] == 0) throw Error(ErrorKind::Singular, "lattice basis is linearly dependent");

  auto red = [&](std::size_t k, std::size_t l) {
    Integer twice = 2 * lam[k][l];
    if (abs(twice) <= d[l]) return;
    Integer q;
    Integer num = twice + d[l], den = 2 * d[l];
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= q * b[l][c];
    lam[k][l] -= q * d[l];
    for (std::size_t i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };

  std::size_t k = 2, kmax = 1;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        Integer u = dot(b[k], b[j]);
        for (std::size_t i = 1; i < j; ++i) u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
        if (j < k) {
          lam[k][j] = u;
        } else {
          if (u == 0) throw Error(ErrorKind::Singular, "lattice basis is linearly dependent");
          d[k] = u;
        }
      }
    }
    red(k, k - 1);
    const Integer& l = lam[k][k - 1];
    if (dq * (d[k] * d[k - 2] + l * l) < dp * d[k - 1] * d[k - 1]) {
      std::swap(b[k], b[k - 1]);
      for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
      const Integer lk = lam[k][k - 1];
      const Integer B = (d[k - 2] * d[k] + lk * lk) / d[k - 1];
      for (std::size_t i = k + 1; i <= kmax; ++i) {
        const Integer t = lam[i][k];
        lam[i][k] = (d[k] * lam[i][k - 1] - lk * t) / d[k - 1];
        lam[i][k - 1] = (B * t + lk * lam[i][k]) / d[k];
      }
      d[k - 1] = B;
      if (k > 2) --k;
    } else {
      for (std::size_t l2 = k - 1; l2-- > 1;) red(k, l2);
      ++k;
    }
  }
  for (std::size_t i = 0; i < n; ++i) basis[i] = std::move(b[i + 1]);
  return basis;
}

}  // namespace dehn
