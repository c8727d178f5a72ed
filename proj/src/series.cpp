#include "dehn/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dehn/error.hpp"

namespace dehn {

namespace {

void require_compatible(const MultiSeries& a, const MultiSeries& b) {
  if (a.n_vars() != b.n_vars()) {
    throw Error(ErrorKind::VarCountMismatch, std::to_string(a.n_vars()) + " vs " +
                                                 std::to_string(b.n_vars()) + " variables");
  }
  if (a.truncation_order() != b.truncation_order()) {
    throw Error(ErrorKind::OrderMismatch, "truncation orders " + std::to_string(a.truncation_order()) +
                                              " vs " + std::to_string(b.truncation_order()));
  }
}

}  // namespace

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

MultiSeries::MultiSeries(int n_vars, int truncation_order, int precision_bits)
    : n_vars_(n_vars), order_(truncation_order), prec_(precision_bits) {
  if (n_vars < 1) throw Error(ErrorKind::VarCountMismatch, "series needs at least one variable");
  if (truncation_order < 1) throw Error(ErrorKind::OrderMismatch, "truncation order must be positive");
}

MultiSeries MultiSeries::constant(int n_vars, int truncation_order, const BigComplex& c) {
  MultiSeries s(n_vars, truncation_order, c.precision_bits());
  s.set_term(Exponent(n_vars, 0), c);
  return s;
}

MultiSeries MultiSeries::variable(int n_vars, int k, int truncation_order, int precision_bits) {
  if (k < 0 || k >= n_vars) throw Error(ErrorKind::BadIndex, "variable index out of range");
  MultiSeries s(n_vars, truncation_order, precision_bits);
  Exponent e(n_vars, 0);
  e[k] = 1;
  s.set_term(e, BigComplex(1.0, 0.0, precision_bits));
  return s;
}

BigComplex MultiSeries::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  if (it == terms_.end()) return BigComplex(prec_);
  return it->second;
}

BigComplex MultiSeries::constant_term() const { return coefficient(Exponent(n_vars_, 0)); }

void MultiSeries::add_term(const Exponent& e, const BigComplex& c) {
  if (static_cast<int>(e.size()) != n_vars_) {
    throw Error(ErrorKind::VarCountMismatch, "exponent tuple has wrong length");
  }
  if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) {
    throw Error(ErrorKind::BadIndex, "negative exponent");
  }
  if (total_degree(e) > order_) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(e, c.with_precision(prec_));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void MultiSeries::set_term(const Exponent& e, const BigComplex& c) {
  if (static_cast<int>(e.size()) != n_vars_) {
    throw Error(ErrorKind::VarCountMismatch, "exponent tuple has wrong length");
  }
  terms_.erase(e);
  add_term(e, c);
}

int MultiSeries::max_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

MultiSeries MultiSeries::with_order(int truncation_order) const {
  MultiSeries r(n_vars_, truncation_order, prec_);
  for (const auto& [e, c] : terms_) r.add_term(e, c);
  return r;
}

MultiSeries MultiSeries::with_precision(int precision_bits) const {
  MultiSeries r(n_vars_, order_, precision_bits);
  for (const auto& [e, c] : terms_) r.add_term(e, c.with_precision(precision_bits));
  return r;
}

MultiSeries MultiSeries::operator-() const {
  MultiSeries r(n_vars_, order_, prec_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiSeries MultiSeries::scaled(const BigComplex& k) const {
  MultiSeries r(n_vars_, order_, prec_);
  for (const auto& [e, c] : terms_) r.add_term(e, c * k);
  return r;
}

bool operator==(const MultiSeries& a, const MultiSeries& b) {
  return a.n_vars_ == b.n_vars_ && a.order_ == b.order_ && a.terms_ == b.terms_;
}

std::string MultiSeries::to_string(int digits) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.re().to_string(digits) << (c.im().sign() < 0 ? " - " : " + ")
       << abs(c.im()).to_string(digits) << "i)";
    for (int k = 0; k < n_vars_; ++k) {
      if (e[k] == 0) continue;
      os << "*u" << (k + 1);
      if (e[k] > 1) os << "^" << e[k];
    }
  }
  return os.str();
}

MultiSeries series_add(const MultiSeries& a, const MultiSeries& b) {
  require_compatible(a, b);
  MultiSeries r(a.n_vars(), a.truncation_order(), std::max(a.precision_bits(), b.precision_bits()));
  for (const auto& [e, c] : a.terms()) r.add_term(e, c);
  for (const auto& [e, c] : b.terms()) r.add_term(e, c);
  return r;
}

MultiSeries series_sub(const MultiSeries& a, const MultiSeries& b) { return series_add(a, -b); }

MultiSeries series_mul(const MultiSeries& a, const MultiSeries& b) {
  require_compatible(a, b);
  const int n = a.n_vars();
  const int order = a.truncation_order();
  MultiSeries r(n, order, std::max(a.precision_bits(), b.precision_bits()));
  Exponent e(n);
  for (const auto& [ea, ca] : a.terms()) {
    const int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms()) {
      if (da + total_degree(eb) > order) continue;
      for (int k = 0; k < n; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiSeries series_partial(const MultiSeries& s, int k) {
  if (k < 0 || k >= s.n_vars()) {
    throw Error(ErrorKind::BadIndex, "variable index " + std::to_string(k + 1) + " out of range 1.." +
                                         std::to_string(s.n_vars()));
  }
  MultiSeries r(s.n_vars(), s.truncation_order(), s.precision_bits());
  for (const auto& [e, c] : s.terms()) {
    if (e[k] == 0) continue;
    Exponent d = e;
    d[k] -= 1;
    r.add_term(d, c * static_cast<long>(e[k]));
  }
  return r;
}

MultiSeries series_compose(const MultiSeries& s, const std::vector<MultiSeries>& subs) {
  if (static_cast<int>(subs.size()) != s.n_vars()) {
    throw Error(ErrorKind::VarCountMismatch, "composition needs one series per variable");
  }
  if (subs.empty()) throw Error(ErrorKind::VarCountMismatch, "empty substitution");
  const int m = subs.front().n_vars();
  const int order = s.truncation_order();
  for (const auto& t : subs) {
    if (t.n_vars() != m) throw Error(ErrorKind::VarCountMismatch, "substituted series disagree on variables");
    if (!t.constant_term().is_zero()) {
      throw Error(ErrorKind::NonzeroConstantTerm, "substituted series must vanish at the origin");
    }
  }
  const int prec = s.precision_bits();
  // powers[k][j] = subs[k]^j truncated at the output order.
  std::vector<std::vector<MultiSeries>> powers(subs.size());
  for (std::size_t k = 0; k < subs.size(); ++k) {
    MultiSeries base = subs[k].with_order(order);
    int need = 0;
    for (const auto& [e, c] : s.terms()) need = std::max(need, e[k]);
    powers[k].push_back(MultiSeries::constant(m, order, BigComplex(1.0, 0.0, prec)));
    for (int j = 1; j <= need; ++j) powers[k].push_back(series_mul(powers[k].back(), base));
  }
  MultiSeries r(m, order, prec);
  for (const auto& [e, c] : s.terms()) {
    MultiSeries term = MultiSeries::constant(m, order, c);
    for (std::size_t k = 0; k < subs.size(); ++k) {
      if (e[k] > 0) term = series_mul(term, powers[k][e[k]]);
    }
    r = series_add(r, term);
  }
  return r;
}

BigComplex series_eval(const MultiSeries& s, const std::vector<BigComplex>& point) {
  if (static_cast<int>(point.size()) != s.n_vars()) {
    throw Error(ErrorKind::VarCountMismatch, "evaluation point has " + std::to_string(point.size()) +
                                                 " coordinates, series has " + std::to_string(s.n_vars()));
  }
  const int prec = s.precision_bits();
  BigComplex one(1.0, 0.0, prec);
  std::vector<std::vector<BigComplex>> pw(point.size());
  for (std::size_t k = 0; k < point.size(); ++k) {
    int need = 0;
    for (const auto& [e, c] : s.terms()) need = std::max(need, e[k]);
    pw[k].push_back(one);
    for (int j = 1; j <= need; ++j) pw[k].push_back(pw[k].back() * point[k]);
  }
  BigComplex sum(prec);
  for (const auto& [e, c] : s.terms()) {
    BigComplex term = c;
    for (std::size_t k = 0; k < point.size(); ++k) {
      if (e[k] > 0) term *= pw[k][e[k]];
    }
    sum += term;
  }
  return sum;
}

}  // namespace dehn
