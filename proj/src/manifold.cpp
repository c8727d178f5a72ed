#include "dehn/manifold.hpp"

#include <algorithm>

#include "dehn/error.hpp"

namespace dehn {

namespace {

BigComplex to_complex(const Rational& x, int prec) { return {to_big_real(x, prec), BigReal(prec)}; }

std::string cusp_name(int k) { return "cusp " + std::to_string(k + 1); }

bool is_univariate(const MultiSeries& s) { return s.n_vars() == 1; }

}  // namespace

ValidationReport potential_validate(const NZPotential& m) {
  ValidationReport report;
  auto flag = [&](std::string code, std::string detail) {
    report.violations.push_back({std::move(code), std::move(detail)});
  };
  const int prec = m.precision_bits();
  if (m.n_cusps != m.phi.n_vars()) {
    flag("CuspCountMismatch", "n_cusps = " + std::to_string(m.n_cusps) + " but phi has " +
                                  std::to_string(m.phi.n_vars()) + " variables");
    return report;
  }
  if (static_cast<int>(m.cusp_shapes.size()) != m.n_cusps) {
    flag("CuspCountMismatch", std::to_string(m.cusp_shapes.size()) + " cusp shapes for " +
                                  std::to_string(m.n_cusps) + " cusps");
    return report;
  }
  for (const auto& [e, c] : m.phi.terms()) {
    if (total_degree(e) == 0) flag("NonzeroConstantTerm", "phi(0) must vanish");
    if (std::any_of(e.begin(), e.end(), [](int x) { return x % 2 != 0; })) {
      std::string tuple;
      for (int x : e) tuple += (tuple.empty() ? "" : ",") + std::to_string(x);
      flag("NotEven", "term with exponent (" + tuple + ")");
    }
  }
  const BigReal tol = BigReal::pow2(8 - prec, prec);
  for (int k = 0; k < m.n_cusps; ++k) {
    const CuspShape& shape = m.cusp_shapes[k];
    if (!(shape.approx.im().sign() > 0)) flag("CuspShapeLowerHalfPlane", cusp_name(k) + " has Im(tau) <= 0");
    if (shape.exact) {
      if (!(shape.exact->b > 0)) {
        flag("CuspShapeLowerHalfPlane", cusp_name(k) + " exact shape not in upper half-plane");
      }
      BigReal gap = abs(shape.approx - shape.exact->to_complex(prec));
      if (gap > tol) flag("ExactApproxMismatch", cusp_name(k) + " approx differs from exact value");
    }
    Exponent sq(m.n_cusps, 0);
    sq[k] = 2;
    BigComplex quad = m.phi.coefficient(sq);
    BigReal scale = std::max(BigReal(1L, prec), abs(shape.approx));
    if (abs(quad - shape.approx) > tol * scale) {
      flag("QuadraticCoefficientMismatch", cusp_name(k) + " u^2 coefficient differs from its cusp shape");
    }
  }
  if (m.sgi) {
    for (const auto& [e, c] : m.phi.terms()) {
      if (std::count_if(e.begin(), e.end(), [](int x) { return x > 0; }) > 1) {
        flag("NotSplit", "SGI potential has a mixed term");
        break;
      }
    }
  }
  return report;
}

NZPotential make_potential(std::string label, MultiSeries phi,
                           const std::vector<std::optional<QuadraticNumber>>& exact,
                           std::optional<BigComplex> base_cvol, bool sgi) {
  NZPotential m;
  m.label = std::move(label);
  m.n_cusps = phi.n_vars();
  const int prec = phi.precision_bits();
  for (int k = 0; k < m.n_cusps; ++k) {
    Exponent sq(m.n_cusps, 0);
    sq[k] = 2;
    CuspShape shape{std::nullopt, phi.coefficient(sq)};
    if (k < static_cast<int>(exact.size()) && exact[k]) {
      shape.exact = exact[k];
      shape.approx = exact[k]->to_complex(prec);
    }
    m.cusp_shapes.push_back(std::move(shape));
  }
  m.phi = std::move(phi);
  m.base_cvol = base_cvol ? base_cvol->with_precision(prec) : BigComplex(prec);
  m.sgi = sgi;
  return m;
}

LongitudeSeries derive_longitudes(const NZPotential& m) {
  ValidationReport report = potential_validate(m);
  if (!report.ok()) {
    throw Error(ErrorKind::InvalidPotential,
                report.violations.front().code + ": " + report.violations.front().detail);
  }
  const int prec = m.precision_bits();
  const BigComplex half(0.5, 0.0, prec);
  LongitudeSeries out;
  for (int k = 0; k < m.n_cusps; ++k) out.v.push_back(series_partial(m.phi, k).scaled(half));
  for (int k = 0; k < m.n_cusps; ++k) {
    std::vector<MultiSeries> row;
    for (int l = 0; l < m.n_cusps; ++l) row.push_back(series_partial(out.v[k], l));
    out.jacobian.push_back(std::move(row));
  }
  return out;
}

NZPotential make_sgi(const MultiSeries& phi1, const MultiSeries& phi2, std::optional<BigComplex> base_cvol,
                     const std::optional<QuadraticNumber>& tau1, const std::optional<QuadraticNumber>& tau2) {
  const MultiSeries* curves[2] = {&phi1, &phi2};
  for (int k = 0; k < 2; ++k) {
    const MultiSeries& c = *curves[k];
    const std::string who = "curve " + std::to_string(k + 1);
    if (!is_univariate(c)) throw Error(ErrorKind::BadCurve, who + " is not univariate");
    if (!c.constant_term().is_zero()) throw Error(ErrorKind::BadCurve, who + " has a constant term");
    for (const auto& [e, coeff] : c.terms()) {
      if (e[0] % 2 != 0) throw Error(ErrorKind::BadCurve, who + " is not even");
    }
    if (!(c.coefficient({2}).im().sign() > 0)) {
      throw Error(ErrorKind::BadCurve, who + " has quadratic coefficient outside the upper half-plane");
    }
  }
  if (phi1.truncation_order() != phi2.truncation_order()) {
    throw Error(ErrorKind::BadCurve, "curves have different truncation orders");
  }
  const int order = phi1.truncation_order();
  const int prec = std::max(phi1.precision_bits(), phi2.precision_bits());
  MultiSeries phi(2, order, prec);
  for (const auto& [e, c] : phi1.terms()) phi.add_term({e[0], 0}, c);
  for (const auto& [e, c] : phi2.terms()) phi.add_term({0, e[0]}, c);
  return make_potential("sgi", std::move(phi), {tau1, tau2}, std::move(base_cvol), true);
}

MultiSeries potential_from_curve(const MultiSeries& v) {
  if (!is_univariate(v)) throw Error(ErrorKind::BadCurve, "curve must be univariate");
  const int prec = v.precision_bits();
  MultiSeries phi(1, v.truncation_order() + 1, prec);
  for (const auto& [e, c] : v.terms()) {
    phi.add_term({e[0] + 1}, c * BigComplex(BigReal(2L, prec) / static_cast<long>(e[0] + 1), BigReal(prec)));
  }
  return phi;
}

MultiSeries symmetry_defect(const MultiSeries& v, const Matrix2& sigma) {
  const int prec = v.precision_bits();
  const int order = v.truncation_order();
  MultiSeries u = MultiSeries::variable(1, 0, order, prec);
  MultiSeries w = u.scaled(to_complex(sigma.a, prec)) + v.scaled(to_complex(sigma.b, prec));
  MultiSeries lhs = series_compose(v, {w});
  MultiSeries rhs = u.scaled(to_complex(sigma.c, prec)) + v.scaled(to_complex(sigma.d, prec));
  return lhs - rhs;
}

SymmetricCurve make_symmetric_curve(const QuadraticNumber& tau, const Matrix2& sigma,
                                    const std::map<int, BigComplex>& seed_coeffs, int truncation_order,
                                    int precision_bits) {
  if (!(tau.b > 0)) throw Error(ErrorKind::NotUpperHalfPlane, "cusp shape " + tau.to_string());
  const auto q = [](const Rational& x) { return QuadraticNumber::rational(x); };
  if (!(tau * (q(sigma.a) + q(sigma.b) * tau) == q(sigma.c) + q(sigma.d) * tau)) {
    throw Error(ErrorKind::BadCurve, "matrix " + sigma.to_string() + " does not fix " + tau.to_string());
  }
  if (truncation_order < 1) throw Error(ErrorKind::OrderMismatch, "truncation order must be positive");
  for (const auto& [k, c] : seed_coeffs) {
    if (k < 2 || k > truncation_order) {
      throw Error(ErrorKind::InadmissibleSeedOrder,
                  "seed order " + std::to_string(k) + " outside 2.." + std::to_string(truncation_order));
    }
  }
  const int prec = precision_bits;
  const QuadraticNumber lambda = q(sigma.a) + q(sigma.b) * tau;
  const QuadraticNumber mu = q(sigma.d) - q(sigma.b) * tau;
  const BigComplex a = to_complex(sigma.a, prec);
  const BigComplex b = to_complex(sigma.b, prec);

  SymmetricCurve out{NZPotential(), MultiSeries(1, truncation_order, prec), {}};
  MultiSeries& v = out.v;
  v.set_term({1}, tau.to_complex(prec));
  BigReal coeff_scale(1L, prec);
  for (int k = 2; k <= truncation_order; ++k) {
    // With m_k = 0 the order-k coefficient of v(a u + b v(u)) - d v(u) is the
    // inhomogeneous part R_k; the full equation reads D_k m_k + R_k = 0.
    MultiSeries vk = v.with_order(k);
    MultiSeries u = MultiSeries::variable(1, 0, k, prec);
    MultiSeries w = u.scaled(a) + vk.scaled(b);
    BigComplex r_k = series_compose(vk, {w}).coefficient({k});
    const QuadraticNumber d_k = pow(lambda, k) - mu;
    auto seed = seed_coeffs.find(k);
    if (d_k == QuadraticNumber::rational(Rational(0))) {
      out.resonant_orders.push_back(k);
      BigReal tol = BigReal::pow2(24 - prec, prec);
      for (int j = 0; j < k; ++j) tol *= coeff_scale;
      if (abs(r_k) > tol) {
        throw Error(ErrorKind::NoInvariantExtension,
                    "order " + std::to_string(k) + " is resonant but its matching equation is inconsistent");
      }
      if (seed != seed_coeffs.end()) v.set_term({k}, seed->second.with_precision(prec));
    } else {
      if (seed != seed_coeffs.end()) {
        throw Error(ErrorKind::InadmissibleSeedOrder,
                    "order " + std::to_string(k) + " is not resonant for " + sigma.to_string());
      }
      v.set_term({k}, -r_k / d_k.to_complex(prec));
    }
    BigReal mag = abs(v.coefficient({k}));
    if (mag > BigReal(0L, prec)) {
      // Geometric bound on coefficient growth for the consistency tolerance.
      BigReal root = exp(log(mag) / static_cast<long>(k));
      if (root > coeff_scale) coeff_scale = root;
    }
  }
  MultiSeries phi = potential_from_curve(v);
  out.manifold = make_potential("symmetric-curve", std::move(phi), {tau});
  return out;
}

}  // namespace dehn
