#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dehn/big_complex.hpp"
#include "dehn/exact.hpp"
#include "dehn/series.hpp"

namespace dehn {

struct CuspShape {
  std::optional<QuadraticNumber> exact;
  BigComplex approx;

  static CuspShape from_exact(const QuadraticNumber& tau, int precision_bits) {
    return {tau, tau.to_complex(precision_bits)};
  }
};

// Analytic model of a cusped manifold: the Neumann-Zagier potential Phi,
// truncated, together with its cusp shapes and base complex volume.
struct NZPotential {
  std::string label;
  int n_cusps = 1;
  MultiSeries phi{1, kDefaultTruncationOrder};
  std::vector<CuspShape> cusp_shapes;
  BigComplex base_cvol;
  bool sgi = false;

  int precision_bits() const { return phi.precision_bits(); }
  int truncation_order() const { return phi.truncation_order(); }
};

struct Violation {
  std::string code;  // NotEven, NonzeroConstantTerm, CuspShapeLowerHalfPlane, ...
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport potential_validate(const NZPotential& m);

// Builds a potential whose cusp shapes are read off the u_k^2 coefficients;
// `exact` optionally supplies exact shapes per cusp.
NZPotential make_potential(std::string label, MultiSeries phi,
                           const std::vector<std::optional<QuadraticNumber>>& exact = {},
                           std::optional<BigComplex> base_cvol = std::nullopt, bool sgi = false);

// v_k = (1/2) dPhi/du_k together with the Jacobian series dv_k/du_l.
struct LongitudeSeries {
  std::vector<MultiSeries> v;
  std::vector<std::vector<MultiSeries>> jacobian;  // jacobian[k][l] = dv_k/du_l
};

LongitudeSeries derive_longitudes(const NZPotential& m);

// Two-cusp potential phi1(u1) + phi2(u2).
NZPotential make_sgi(const MultiSeries& phi1, const MultiSeries& phi2,
                     std::optional<BigComplex> base_cvol = std::nullopt,
                     const std::optional<QuadraticNumber>& tau1 = std::nullopt,
                     const std::optional<QuadraticNumber>& tau2 = std::nullopt);

struct SymmetricCurve {
  NZPotential manifold;
  MultiSeries v;                      // tau u + sum m_k u^k through order N
  std::vector<int> resonant_orders;   // orders with a free coefficient
};

// Univariate curve v with v(a u + b v(u)) = c u + d v(u) through order N for
// sigma = [[a, b], [c, d]]. The potential has order N + 1 so that its
// derivative reproduces v through order N.
SymmetricCurve make_symmetric_curve(const QuadraticNumber& tau, const Matrix2& sigma,
                                    const std::map<int, BigComplex>& seed_coeffs, int truncation_order,
                                    int precision_bits = kDefaultPrecisionBits);

// Coefficient-wise residual of v(a u + b v(u)) - c u - d v(u) through the
// curve's order; used by tests and diagnostics.
MultiSeries symmetry_defect(const MultiSeries& v, const Matrix2& sigma);

// Univariate potential from curve coefficients: v = sum c_k u^k gives
// phi = sum 2 c_k u^(k+1) / (k + 1).
MultiSeries potential_from_curve(const MultiSeries& v);

}  // namespace dehn
