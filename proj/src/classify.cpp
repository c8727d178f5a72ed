#include "dehn/classify.hpp"

#include <cstdlib>

#include "dehn/error.hpp"
#include "dehn/relations.hpp"

namespace dehn {

namespace {

QuadraticNumber qrat(const Rational& x) { return QuadraticNumber::rational(x); }

bool is_special_field(const QuadraticNumber& tau) { return tau.b != 0 && (tau.d == 1 || tau.d == 3); }

Row2 row_of(const Slope& s) { return {Rational(s.p), Rational(s.q)}; }

Row2 row_of(const FillingSlope& s) { return {Rational(s.p), Rational(s.q)}; }

bool rows_parallel(const Row2& x, const Row2& y) { return x.x * y.y == x.y * y.x; }

Matrix2 filling_matrix(const FillingSlope& s) { return Matrix2::of(s.p, s.q, s.r, s.s); }

void require_upper(const QuadraticNumber& tau) {
  if (!(tau.b > 0)) throw Error(ErrorKind::NotUpperHalfPlane, "shape " + tau.to_string());
}

// Smallest power in [1, limit) carrying `from` to `to` under sigma_act.
std::optional<int> orbit_power(const Matrix2& sigma, const Slope& from, const Slope& to, int limit) {
  Slope cur = from;
  for (int i = 1; i < limit; ++i) {
    cur = sigma_act(sigma, cur);
    if (cur == to) return i;
  }
  return std::nullopt;
}

// Powers in [0, limit) carrying `from` to `to`, smallest first.
std::optional<int> orbit_power0(const Matrix2& sigma, const Slope& from, const Slope& to, int limit) {
  if (from == to) return 0;
  return orbit_power(sigma, from, to, limit);
}

// Elements of the biquadratic compositum Q(sqrt(-d1), sqrt(-d2)) in the basis
// 1, sqrt(-d1), sqrt(-d2), sqrt(-d1) sqrt(-d2).
struct Biquadratic {
  std::array<Rational, 4> c{Rational(0), Rational(0), Rational(0), Rational(0)};
};

// Product of x in Q(sqrt(-d1)) and y in Q(sqrt(-d2)) with d1 != d2.
Biquadratic mixed_product(const QuadraticNumber& x, const QuadraticNumber& y) {
  Biquadratic r;
  r.c[0] = x.a * y.a;
  r.c[1] = x.b * y.a;
  r.c[2] = x.a * y.b;
  r.c[3] = x.b * y.b;
  return r;
}

}  // namespace

std::vector<Matrix2> symmetry_matrices(const QuadraticNumber& tau) {
  require_upper(tau);
  QuadraticNumber zeta;
  if (tau.d == 1) zeta = QuadraticNumber(Rational(0), Rational(1), 1);
  else if (tau.d == 3) zeta = QuadraticNumber(Rational(1, 2), Rational(1, 2), 3);
  else return {};
  Matrix2 s;
  s.b = zeta.b / tau.b;
  s.a = zeta.a - s.b * tau.a;
  s.d = 2 * zeta.a - s.a;
  s.c = (s.a * s.d - 1) / s.b;
  s.a.canonicalize();
  s.b.canonicalize();
  s.c.canonicalize();
  s.d.canonicalize();
  return {s};
}

std::optional<int> sigma_order(const Matrix2& sigma) {
  if (sigma.det() == 0) throw Error(ErrorKind::Singular, "matrix " + sigma.to_string() + " is singular");
  Matrix2 p = sigma;
  for (int m = 1; m <= 12; ++m) {
    if (p == Matrix2::identity()) return m;
    p = p * sigma;
  }
  return std::nullopt;
}

Slope apply_slope(const Matrix2& sigma, const Slope& s) {
  Rational num = sigma.a * s.p + sigma.b * s.q;
  Rational den = sigma.c * s.p + sigma.d * s.q;
  if (num == 0 && den == 0) {
    throw Error(ErrorKind::DegenerateImage, sigma.to_string() + " sends " + to_string(s) + " to 0/0");
  }
  return slope_from_row({num, den});
}

Slope slope_transfer(const Matrix2& a1, const Matrix2& a2, const Slope& s) {
  if (a1.det() == 0 || a2.det() == 0) throw Error(ErrorKind::Singular, "slope transfer needs invertible blocks");
  return slope_from_row(row_of(s) * (a1.inverse() * a2));
}

Slope sigma_act(const Matrix2& sigma, const Slope& s, int power) {
  Matrix2 m = pow(sigma, -power);
  return slope_from_row(row_of(s) * m);
}

std::optional<Matrix2> relatively_dependent(const QuadraticNumber& tau1, const QuadraticNumber& tau2) {
  require_upper(tau1);
  require_upper(tau2);
  if (tau1.d != tau2.d) return std::nullopt;
  // tau1 (c tau2 + d) = a tau2 + b: the imaginary part fixes a and the real
  // part fixes b, both linear in the free pair (c, d).
  const QuadraticNumber prod = tau1 * tau2;
  const Rational pr = prod.a;
  const Rational ps = prod.b;
  auto solve = [&](long c, long d) {
    Rational a = (Rational(c) * ps + Rational(d) * tau1.b) / tau2.b;
    Rational b = Rational(c) * pr + Rational(d) * tau1.a - a * tau2.a;
    a.canonicalize();
    b.canonicalize();
    return std::pair{a, b};
  };
  std::optional<Matrix2> best;
  Integer best_norm = 0;
  auto better = [&](const Matrix2& m, const Integer& norm) {
    if (!best) return true;
    if (norm != best_norm) return norm < best_norm;
    if (abs(m.c) != abs(best->c)) return abs(m.c) < abs(best->c);
    if (abs(m.d) != abs(best->d)) return abs(m.d) < abs(best->d);
    if (m.a != best->a) return m.a > best->a;
    return m.b > best->b;
  };
  const long cap = 400;
  for (long total = 1; total <= cap; ++total) {
    if (best && Integer(total) > best_norm) break;
    for (long c = 0; c <= total; ++c) {
      for (long sign : {1L, -1L}) {
        long d = sign * (total - c);
        if (c == 0 && d <= 0) continue;
        if (d == 0 && sign < 0) continue;
        auto [a, b] = solve(c, d);
        if (a.get_den() != 1 || b.get_den() != 1) continue;
        Matrix2 m{a, b, Rational(c), Rational(d)};
        Integer norm = abs(a.get_num()) + abs(b.get_num()) + std::labs(c) + std::labs(d);
        if (better(m, norm)) {
          best = m;
          best_norm = norm;
        }
      }
    }
  }
  return best;
}

std::string verdict_kind_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Identity: return "Identity";
    case VerdictKind::SwapRho: return "SwapRho";
    case VerdictKind::SigmaOrbit: return "SigmaOrbit";
    case VerdictKind::SigmaPhiOrbit: return "SigmaPhiOrbit";
    case VerdictKind::Unrelated: return "Unrelated";
    case VerdictKind::Undetermined: return "Undetermined";
  }
  return "Unknown";
}

std::string to_string(const Verdict& v) {
  std::string out = verdict_kind_name(v.kind);
  switch (v.kind) {
    case VerdictKind::SwapRho: return out + "(" + v.rho.to_string() + ")";
    case VerdictKind::SigmaOrbit:
      return out + "(" + v.sigma.to_string() + ", " + std::to_string(v.power) + ", cusp " +
             std::to_string(v.coordinate) + ")";
    case VerdictKind::SigmaPhiOrbit:
      return out + "(" + v.sigma.to_string() + ", " + std::to_string(v.power) + ", " + v.phi.to_string() + ", " +
             std::to_string(v.phi_power) + ")";
    case VerdictKind::Undetermined: return out + "(" + v.reason + ")";
    default: return out;
  }
}

Verdict classify_single(const std::optional<QuadraticNumber>& tau, const Slope& s, const Slope& s_prime) {
  if (!tau) throw Error(ErrorKind::NeedExactShapes, "cusp shape has no exact representation");
  require_upper(*tau);
  Verdict v;
  if (s == s_prime) {
    v.kind = VerdictKind::Identity;
    return v;
  }
  if (!is_special_field(*tau)) return v;
  Matrix2 sigma = symmetry_matrices(*tau).front();
  int order = sigma_order(sigma).value_or(1);
  if (auto i = orbit_power(sigma, s, s_prime, order)) {
    v.kind = VerdictKind::SigmaOrbit;
    v.sigma = sigma;
    v.power = *i;
  }
  return v;
}

Verdict classify_pair(const std::optional<QuadraticNumber>& tau1, const std::optional<QuadraticNumber>& tau2,
                      const SlopePairTuple& s, const SlopePairTuple& sp) {
  if (!tau1 || !tau2) throw Error(ErrorKind::NeedExactShapes, "both cusp shapes must be exact");
  require_upper(*tau1);
  require_upper(*tau2);
  Verdict v;
  if (s == sp) {
    v.kind = VerdictKind::Identity;
    return v;
  }
  const bool special1 = is_special_field(*tau1);
  const bool special2 = is_special_field(*tau2);
  if (tau1->d == tau2->d) {
    if (special1) {
      v.kind = VerdictKind::Undetermined;
      v.reason = "both shapes in Q(sqrt(-" + std::to_string(tau1->d) + ")); orbit set not effective";
      return v;
    }
    Matrix2 rho = *relatively_dependent(*tau1, *tau2);
    for (const Matrix2& r : {rho, rho.inverse()}) {
      Matrix2 ri = r.inverse();
      if (apply_slope(ri, s[1]) == sp[0] && apply_slope(r, s[0]) == sp[1]) {
        v.kind = VerdictKind::SwapRho;
        v.rho = r;
        return v;
      }
    }
    return v;
  }
  if (!special1 && !special2) return v;
  if (special1 && special2) {
    // One shape in Q(sqrt(-1)), the other in Q(sqrt(-3)).
    const int gauss = tau1->d == 1 ? 0 : 1;
    const int eis = 1 - gauss;
    Matrix2 sigma = symmetry_matrices(gauss == 0 ? *tau1 : *tau2).front();
    Matrix2 phi = symmetry_matrices(eis == 0 ? *tau1 : *tau2).front();
    auto i = orbit_power0(sigma, s[gauss], sp[gauss], sigma_order(sigma).value_or(1));
    auto j = orbit_power0(phi, s[eis], sp[eis], sigma_order(phi).value_or(1));
    if (i && j) {
      v.kind = VerdictKind::SigmaPhiOrbit;
      v.sigma = sigma;
      v.power = *i;
      v.coordinate = gauss + 1;
      v.phi = phi;
      v.phi_power = *j;
    }
    return v;
  }
  const int c = special1 ? 0 : 1;
  const int other = 1 - c;
  if (s[other] != sp[other]) return v;
  Matrix2 sigma = symmetry_matrices(c == 0 ? *tau1 : *tau2).front();
  if (auto i = orbit_power(sigma, s[c], sp[c], sigma_order(sigma).value_or(1))) {
    v.kind = VerdictKind::SigmaOrbit;
    v.sigma = sigma;
    v.power = *i;
    v.coordinate = c + 1;
  }
  return v;
}

std::string spec_shape_name(SpecShape shape) {
  switch (shape) {
    case SpecShape::Coupled: return "coupled";
    case SpecShape::Cross: return "cross";
    case SpecShape::HolonomyDependent: return "holonomy-dependent";
  }
  return "coupled";
}

SpecShape parse_spec_shape(const std::string& name) {
  if (name == "coupled") return SpecShape::Coupled;
  if (name == "cross") return SpecShape::Cross;
  if (name == "holonomy-dependent") return SpecShape::HolonomyDependent;
  throw Error(ErrorKind::Parse, "unknown subgroup shape '" + name + "'");
}

bool RelationWitness::all_pass() const {
  for (const auto& [name, ok] : checks) {
    if (!ok) return false;
  }
  return !checks.empty();
}

int det_trichotomy_case(const std::array<Matrix2, 4>& a) {
  const Rational d1 = a[0].det(), d2 = a[1].det(), d3 = a[2].det(), d4 = a[3].det();
  if (a[0].is_zero() && a[3].is_zero() && d2 == 1 && d3 == 1) return 1;
  if (a[1].is_zero() && a[2].is_zero() && d1 == 1 && d4 == 1) return 2;
  if (d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0 && d1 == d4 && d2 == d3 && d1 + d3 == 1 &&
      d1 * (a[0].inverse() * a[1]) == -(d3 * (a[2].inverse() * a[3]))) {
    return 3;
  }
  return 0;
}

std::array<QuadraticNumber, 2> apply_to_shape(const Matrix2& a, const QuadraticNumber& tau) {
  return {qrat(a.a) + qrat(a.b) * tau, qrat(a.c) + qrat(a.d) * tau};
}

bool parallel(const std::array<QuadraticNumber, 2>& x, const std::array<QuadraticNumber, 2>& y) {
  auto field = [](const std::array<QuadraticNumber, 2>& v) {
    for (const auto& e : v) {
      if (e.b != 0) return e.d;
    }
    return 0L;
  };
  const long fx = field(x);
  const long fy = field(y);
  if (fx == 0 || fy == 0 || fx == fy) {
    QuadraticNumber cross = x[0] * y[1] - x[1] * y[0];
    return cross.a == 0 && cross.b == 0;
  }
  Biquadratic p = mixed_product(x[0], y[1]);
  Biquadratic q = mixed_product(x[1], y[0]);
  for (int i = 0; i < 4; ++i) {
    if (p.c[i] != q.c[i]) return false;
  }
  return true;
}

RelationWitness verify_subgroup_relations(const SubgroupSpec& spec, const std::array<FillingSlope, 2>& slopes,
                                          const std::array<FillingSlope, 2>& slopes_prime, bool with_completions,
                                          const std::optional<std::array<QuadraticNumber, 2>>& shapes,
                                          const std::optional<HolonomyData>& holonomy) {
  RelationWitness w;
  const auto& A = spec.a;
  const auto& Ap = spec.a_prime;

  if (spec.shape == SpecShape::HolonomyDependent) {
    // Rows (p1 q1) A1^{-1} ~ (p2 q2) A2^{-1}, (p'1 q'1) A'1^{-1} ~ (p'2 q'2) A'2^{-1},
    // (p1 q1) A3^{-1} ~ (p'1 q'1) A'3^{-1}.
    auto row_check = [&](const std::string& name, const FillingSlope& x, const Matrix2& mx, const FillingSlope& y,
                         const Matrix2& my) {
      if (mx.det() == 0 || my.det() == 0) {
        w.checks[name] = false;
        w.notes.push_back(name + ": singular block");
        return;
      }
      w.checks[name] = rows_parallel(row_of(x) * mx.inverse(), row_of(y) * my.inverse());
    };
    row_check("rows_cusp_pair", slopes[0], A[0], slopes[1], A[1]);
    if (Ap[0] && Ap[1]) row_check("rows_cusp_pair_prime", slopes_prime[0], *Ap[0], slopes_prime[1], *Ap[1]);
    if (Ap[2]) row_check("rows_cross_filling", slopes[0], A[2], slopes_prime[0], *Ap[2]);
    if (Ap[0] && Ap[1] && Ap[2]) {
      const Rational d1 = A[0].det(), d2 = A[1].det(), d3 = A[2].det();
      const Rational e1 = Ap[0]->det(), e2 = Ap[1]->det(), e3 = Ap[2]->det();
      if (d2 != 0 && e2 != 0 && e3 != 0) {
        w.checks["det_ratio_identity"] = 1 + d1 / d2 == (d3 / e3) * (1 + e1 / e2);
      } else {
        w.checks["det_ratio_identity"] = false;
        w.notes.push_back("det_ratio_identity: zero determinant in a denominator");
      }
    }
    if (shapes) {
      const auto& [t1, t2] = *shapes;
      bool ok = parallel(apply_to_shape(A[0], t1), apply_to_shape(A[1], t2));
      if (Ap[0] && Ap[1]) ok = ok && parallel(apply_to_shape(*Ap[0], t1), apply_to_shape(*Ap[1], t2));
      if (Ap[2]) ok = ok && parallel(apply_to_shape(A[2], t1), apply_to_shape(*Ap[2], t1));
      w.checks["shape_parallelism"] = ok;
    }
    if (holonomy) {
      auto holo = [&](const BigComplex& ta, const Rational& da, const BigComplex& tb, const Rational& db) {
        Integer den;
        mpz_lcm(den.get_mpz_t(), da.get_den_mpz_t(), db.get_den_mpz_t());
        Rational ea = da * Rational(den), eb = db * Rational(den);
        DependenceRelation rel{{ea.get_num().get_si(), -eb.get_num().get_si()}, std::nullopt, BigReal()};
        RelationCheck chk = verify_relation({ta, tb}, rel);
        return chk.pass && chk.unity_order.has_value();
      };
      bool ok = holo(holonomy->t[0], A[0].det(), holonomy->t[1], A[1].det());
      if (Ap[0] && Ap[1]) ok = ok && holo(holonomy->t_prime[0], Ap[0]->det(), holonomy->t_prime[1], Ap[1]->det());
      if (Ap[2]) ok = ok && holo(holonomy->t[0], A[2].det(), holonomy->t_prime[0], Ap[2]->det());
      w.checks["holonomy_relation"] = ok;
    }
    return w;
  }

  // Coupled and cross shapes: B_j = (A'_1)^{-1} A_j for j = 1, 2 and
  // (A'_4)^{-1} A_j for j = 3, 4, with A' defaulting to the identity.
  std::array<Matrix2, 4> B = A;
  if (Ap[0]) {
    Matrix2 inv = Ap[0]->inverse();
    B[0] = inv * A[0];
    B[1] = inv * A[1];
  }
  if (Ap[3]) {
    Matrix2 inv = Ap[3]->inverse();
    B[2] = inv * A[2];
    B[3] = inv * A[3];
  }
  const std::array<const FillingSlope*, 4> left = {&slopes_prime[0], &slopes_prime[0], &slopes_prime[1],
                                                   &slopes_prime[1]};
  const std::array<const FillingSlope*, 4> right = {&slopes[0], &slopes[1], &slopes[0], &slopes[1]};
  bool rows_ok = true;
  for (int j = 0; j < 4; ++j) {
    const std::string label = "k" + std::to_string(j + 1);
    if (with_completions) {
      Matrix2 K = filling_matrix(*left[j]) * B[j] * filling_matrix(*right[j]).inverse();
      if (K.b != 0) {
        rows_ok = false;
        w.notes.push_back(std::string(error_kind_name(ErrorKind::InconsistentRows)) + ": " + label);
        continue;
      }
      w.k[j] = K.a;
      w.n[j] = K.c;
      w.l[j] = K.d;
    } else {
      Row2 image = row_of(*left[j]) * B[j];
      Row2 target = row_of(*right[j]);
      Rational k = target.x != 0 ? image.x / target.x : image.y / target.y;
      if (!(image.x == k * target.x && image.y == k * target.y)) {
        rows_ok = false;
        w.notes.push_back(std::string(error_kind_name(ErrorKind::InconsistentRows)) + ": " + label);
        continue;
      }
      w.k[j] = k;
      if (k != 0) w.l[j] = B[j].det() / k;
      else if (B[j].is_zero()) w.l[j] = Rational(0);
    }
  }
  w.checks["rows_consistent"] = rows_ok;
  if (w.k[0] && w.k[1] && w.k[2] && w.k[3]) {
    w.checks["k_sums"] = *w.k[0] + *w.k[1] == 1 && *w.k[2] + *w.k[3] == 1;
  } else {
    w.checks["k_sums"] = false;
  }
  if (w.l[0] && w.l[1] && w.l[2] && w.l[3]) {
    w.checks["l_sums"] = *w.l[0] + *w.l[2] == 1 && *w.l[1] + *w.l[3] == 1;
  } else {
    w.checks["l_sums"] = false;
  }
  bool kl = true;
  for (int j = 0; j < 4; ++j) {
    if (w.k[j] && w.l[j]) kl = kl && *w.k[j] * *w.l[j] == B[j].det();
  }
  w.checks["kl_products"] = kl;

  w.trichotomy_case = det_trichotomy_case(A);
  w.checks["det_trichotomy"] = w.trichotomy_case != 0;

  const bool all_invertible = A[0].det() != 0 && A[1].det() != 0 && A[2].det() != 0 && A[3].det() != 0;
  if (all_invertible) {
    const Matrix2 e12 = A[0].inverse() * A[1];
    const Matrix2 e34 = A[2].inverse() * A[3];
    w.checks["det_identity"] = A[0].det() * e12 == -(A[2].det() * e34);
    if (w.k[0] && w.k[1] && w.k[2] && w.k[3] && *w.k[0] * *w.k[3] != 0) {
      w.checks["block_proportionality"] = e12 == ((*w.k[1] * *w.k[2]) / (*w.k[0] * *w.k[3])) * e34;
    } else {
      w.checks["block_proportionality"] = false;
    }
  }
  if (spec.shape == SpecShape::Cross) {
    w.checks["shape_consistent"] = A[0].is_zero() && A[3].is_zero();
  }
  if (shapes) {
    const auto& [t1, t2] = *shapes;
    bool ok = true;
    if (!A[0].is_zero() || !A[1].is_zero()) {
      ok = ok && parallel(apply_to_shape(A[0], t1), apply_to_shape(A[1], t2));
      if (Ap[0]) ok = ok && parallel(apply_to_shape(A[1], t2), apply_to_shape(*Ap[0], t1));
    }
    if (!A[2].is_zero() || !A[3].is_zero()) {
      ok = ok && parallel(apply_to_shape(A[2], t1), apply_to_shape(A[3], t2));
      if (Ap[3]) ok = ok && parallel(apply_to_shape(A[3], t2), apply_to_shape(*Ap[3], t2));
    }
    w.checks["shape_parallelism"] = ok;
  }
  return w;
}

}  // namespace dehn
