#pragma once

// Composite Gauss-Legendre quadrature of sum_k (u_k dv_k - v_k du_k) for a
// polynomial potential, with v_k = (1/2) dPhi/du_k differentiated term by term.
// Everything here is Boost multiprecision and shares no code with the library.

#include <boost/multiprecision/cpp_complex.hpp>

#include <utility>
#include <vector>

namespace oracle {

using C50 = boost::multiprecision::cpp_complex_50;
using R50 = boost::multiprecision::cpp_bin_float_50;

struct PolyTerm {
  std::vector<int> exp;
  C50 coeff;
};

struct PolyPotential {
  int n = 1;
  std::vector<PolyTerm> terms;

  C50 monomial(const std::vector<int>& e, const std::vector<C50>& u) const {
    C50 m(1);
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < e[k]; ++j) m *= u[k];
    }
    return m;
  }

  C50 phi(const std::vector<C50>& u) const {
    C50 s(0);
    for (const auto& t : terms) s += t.coeff * monomial(t.exp, u);
    return s;
  }

  // v_k and dv_k/du_l.
  void v_and_jacobian(const std::vector<C50>& u, std::vector<C50>& v, std::vector<std::vector<C50>>& jac) const {
    v.assign(n, C50(0));
    jac.assign(n, std::vector<C50>(n, C50(0)));
    for (const auto& t : terms) {
      for (int k = 0; k < n; ++k) {
        if (t.exp[k] == 0) continue;
        std::vector<int> ek = t.exp;
        ek[k] -= 1;
        const C50 ck = t.coeff * R50(t.exp[k]) / R50(2);
        v[k] += ck * monomial(ek, u);
        for (int l = 0; l < n; ++l) {
          if (ek[l] == 0) continue;
          std::vector<int> ekl = ek;
          ekl[l] -= 1;
          jac[k][l] += ck * R50(ek[l]) * monomial(ekl, u);
        }
      }
    }
  }
};

// Nodes and weights on [0, 1].
inline std::vector<std::pair<R50, R50>> gauss_legendre(int m) {
  const R50 pi = boost::math::constants::pi<R50>();
  std::vector<std::pair<R50, R50>> out;
  for (int i = 1; i <= m; ++i) {
    R50 x = cos(pi * (R50(i) - R50(0.25)) / (R50(m) + R50(0.5)));
    R50 dp;
    for (int it = 0; it < 100; ++it) {
      R50 p0 = 1, p1 = x;
      for (int k = 2; k <= m; ++k) {
        R50 p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1);
      R50 dx = p1 / dp;
      x -= dx;
      if (abs(dx) < R50("1e-48")) break;
    }
    out.emplace_back((1 - x) / 2, R50(1) / ((1 - x * x) * dp * dp));
  }
  return out;
}

// Integral along the segment a -> b.
inline C50 segment_integral(const PolyPotential& P, const std::vector<C50>& a, const std::vector<C50>& b,
                            int panels = 8, int nodes = 20) {
  const auto rule = gauss_legendre(nodes);
  std::vector<C50> d(P.n);
  for (int k = 0; k < P.n; ++k) d[k] = b[k] - a[k];
  C50 total(0);
  std::vector<C50> v;
  std::vector<std::vector<C50>> jac;
  for (int p = 0; p < panels; ++p) {
    for (const auto& [x, w] : rule) {
      const R50 t = (R50(p) + x) / R50(panels);
      std::vector<C50> u(P.n);
      for (int k = 0; k < P.n; ++k) u[k] = a[k] + t * d[k];
      P.v_and_jacobian(u, v, jac);
      C50 f(0);
      for (int k = 0; k < P.n; ++k) {
        C50 dv(0);
        for (int l = 0; l < P.n; ++l) dv += jac[k][l] * d[l];
        f += u[k] * dv - v[k] * d[k];
      }
      total += f * (w / R50(panels));
    }
  }
  return total;
}

}  // namespace oracle
