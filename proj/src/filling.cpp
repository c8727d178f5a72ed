#include "dehn/filling.hpp"

#include <algorithm>

#include "dehn/error.hpp"

namespace dehn {

namespace {

BigComplex two_pi_i(int prec) { return {BigReal(prec), BigReal::pi(prec) * 2L}; }

BigComplex cplx(long x, int prec) { return {BigReal(x, prec), BigReal(prec)}; }

BigReal max_abs(const std::vector<BigComplex>& xs, int prec) {
  BigReal m(prec);
  for (const auto& x : xs) {
    BigReal a = abs(x);
    if (a > m) m = a;
  }
  return m;
}

// Gaussian elimination with partial pivoting; n is tiny (number of cusps).
std::vector<BigComplex> solve_linear(std::vector<std::vector<BigComplex>> a, std::vector<BigComplex> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (abs(a[r][col]) > abs(a[pivot][col])) pivot = r;
    }
    if (a[pivot][col].is_zero()) throw Error(ErrorKind::Singular, "singular Newton Jacobian");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      BigComplex f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<BigComplex> x(n, BigComplex(b[0].precision_bits()));
  for (std::size_t i = n; i-- > 0;) {
    BigComplex s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

}  // namespace

BigReal convergence_radius(const MultiSeries& v_k, const BigComplex& tau) {
  const int prec = v_k.precision_bits();
  const BigReal cap(0.5, prec);
  const BigReal floor_(0.05, prec);
  BigReal best = cap;
  const BigReal tau_abs = abs(tau);
  for (const auto& [e, c] : v_k.terms()) {
    const int deg = total_degree(e);
    if (deg < 2) continue;
    BigReal ratio = tau_abs / abs(c);
    BigReal r = exp(log(ratio) / static_cast<long>(deg - 1)) * BigReal(0.5, prec);
    if (r < best) best = r;
  }
  return best < floor_ ? floor_ : best;
}

FillingModel::FillingModel(NZPotential m) : m_(std::move(m)), lon_(derive_longitudes(m_)) {
  for (int k = 0; k < m_.n_cusps; ++k) radius_.push_back(convergence_radius(lon_.v[k], m_.cusp_shapes[k].approx));
}

std::vector<BigComplex> FillingModel::eval_v(const std::vector<BigComplex>& u) const {
  std::vector<BigComplex> v;
  for (const auto& s : lon_.v) v.push_back(series_eval(s, u));
  return v;
}

FillingSolution solve_filling(const FillingModel& model, const std::vector<FillingSlope>& slopes,
                              int precision_bits) {
  const int n = model.n_cusps();
  if (static_cast<int>(slopes.size()) != n) {
    throw Error(ErrorKind::VarCountMismatch, std::to_string(slopes.size()) + " slopes for " +
                                                 std::to_string(n) + " cusps");
  }
  if (precision_bits < kMinPrecisionBits) {
    throw Error(ErrorKind::PrecisionTooLow, "precision must be at least " + std::to_string(kMinPrecisionBits));
  }
  const int prec = precision_bits;
  const BigComplex tpi = two_pi_i(prec);
  std::vector<BigComplex> u;
  for (int k = 0; k < n; ++k) {
    const FillingSlope& s = slopes[k];
    make_filling_slope(s.p, s.q, s.r, s.s);
    BigComplex denom = cplx(s.p, prec) + model.manifold().cusp_shapes[k].approx.with_precision(prec) * s.q;
    BigComplex seed = -tpi / denom;
    if (abs(seed) > model.disk_radius(k)) {
      throw Error(ErrorKind::OutsideNeighborhood,
                  "slope " + to_string(s.slope()) + " seeds at |u| = " + abs(seed).to_string(6) +
                      " beyond the disk radius " + model.disk_radius(k).to_string(6));
    }
    u.push_back(std::move(seed));
  }

  auto residual_of = [&](const std::vector<BigComplex>& point) {
    std::vector<BigComplex> f;
    std::vector<BigComplex> v = model.eval_v(point);
    for (int k = 0; k < n; ++k) f.push_back(point[k] * slopes[k].p + v[k] * slopes[k].q + tpi);
    return f;
  };

  const BigReal tol = BigReal::pow2(32 - prec, prec);
  std::vector<BigComplex> f = residual_of(u);
  BigReal res = max_abs(f, prec);
  int iter = 0;
  for (; iter < 64 && res > tol; ++iter) {
    std::vector<std::vector<BigComplex>> jac(n, std::vector<BigComplex>(n, BigComplex(prec)));
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l) {
        jac[k][l] = series_eval(model.longitudes().jacobian[k][l], u) * slopes[k].q;
        if (k == l) jac[k][l] += cplx(slopes[k].p, prec);
      }
    }
    std::vector<BigComplex> step = solve_linear(jac, f);
    BigReal damping(1L, prec);
    bool improved = false;
    for (int halving = 0; halving < 40; ++halving) {
      std::vector<BigComplex> trial = u;
      for (int k = 0; k < n; ++k) trial[k] -= step[k] * damping;
      std::vector<BigComplex> ft = residual_of(trial);
      BigReal rt = max_abs(ft, prec);
      if (rt < res) {
        u = std::move(trial);
        f = std::move(ft);
        res = std::move(rt);
        improved = true;
        break;
      }
      damping = damping / 2L;
    }
    if (!improved) break;
  }
  if (res > tol) {
    throw Error(ErrorKind::OutsideNeighborhood, "Newton did not contract (residual " + res.to_string(6) + ")");
  }
  FillingSolution sol;
  sol.slopes = slopes;
  sol.v = model.eval_v(u);
  sol.u = std::move(u);
  sol.residual = std::move(res);
  sol.precision_bits = prec;
  sol.iterations = iter;
  return sol;
}

FillingSolution solve_filling(const NZPotential& m, const std::vector<FillingSlope>& slopes, int precision_bits) {
  return solve_filling(FillingModel(m), slopes, precision_bits);
}

BigComplex normalize_length(const BigComplex& w) {
  const int prec = w.precision_bits();
  const BigReal pi = BigReal::pi(prec);
  const BigReal two_pi = pi * 2L;
  BigReal k = floor((pi - w.im()) / two_pi);
  return {w.re(), w.im() + k * two_pi};
}

BigComplex mod_reduce(const BigComplex& z) {
  const int prec = z.precision_bits();
  const BigReal pi = BigReal::pi(prec);
  const BigReal pi2 = pi * pi;
  BigReal k = floor(z.im() / pi2);
  BigReal im = z.im() - k * pi2;
  if (!(im < pi2)) im -= pi2;
  return {z.re(), im};
}

BigReal cylinder_distance(const BigComplex& a, const BigComplex& b) {
  const int prec = std::max(a.precision_bits(), b.precision_bits());
  const BigReal pi = BigReal::pi(prec);
  const BigReal pi2 = pi * pi;
  BigReal d_re = a.re() - b.re();
  BigReal d_im = a.im() - b.im();
  d_im -= floor(d_im / pi2) * pi2;
  BigReal alt = pi2 - d_im;
  if (alt < d_im) d_im = alt;
  return hypot(d_re, d_im);
}

BigComplex volume_correction(const FillingModel& model, const std::vector<BigComplex>& u) {
  std::vector<BigComplex> v = model.eval_v(u);
  BigComplex c = -series_eval(model.manifold().phi, u);
  for (std::size_t k = 0; k < u.size(); ++k) c += u[k] * v[k];
  return c;
}

FillingInvariants filling_invariants(const FillingModel& model, const FillingSolution& sol) {
  const int prec = sol.precision_bits;
  const BigReal boundary = BigReal::pow2(32 - prec, prec);
  FillingInvariants out;
  BigComplex sum(prec);
  for (std::size_t k = 0; k < sol.u.size(); ++k) {
    const FillingSlope& s = sol.slopes[k];
    BigComplex w = sol.u[k] * s.r + sol.v[k] * s.s;
    if (abs(exp(w.re()) - BigReal(1L, prec)) <= boundary) {
      throw Error(ErrorKind::BoundaryCase, "core holonomy of cusp " + std::to_string(k + 1) + " has modulus 1");
    }
    BigComplex lambda = normalize_length(w.re().sign() > 0 ? w : -w);
    out.t.push_back(exp(lambda));
    sum += lambda;
    out.lambda.push_back(std::move(lambda));
  }
  const BigComplex half_pi(BigReal::pi(prec) / 2L, BigReal(prec));
  out.pvol = mod_reduce(model.manifold().base_cvol.with_precision(prec) - half_pi * sum);
  out.cvol = mod_reduce(out.pvol + volume_correction(model, sol.u));
  return out;
}

BigComplex complex_volume(const FillingModel& model, const FillingSolution& sol) {
  return filling_invariants(model, sol).cvol;
}

}  // namespace dehn
