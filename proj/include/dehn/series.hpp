#pragma once

#include <map>
#include <string>
#include <vector>

#include "dehn/big_complex.hpp"

namespace dehn {

inline constexpr int kDefaultTruncationOrder = 9;

using Exponent = std::vector<int>;

// Truncated multivariate power series with BigComplex coefficients.
// Terms of total degree above the truncation order are never stored and
// exactly-zero coefficients are dropped, so the term map is canonical.
class MultiSeries {
 public:
  MultiSeries(int n_vars, int truncation_order, int precision_bits = kDefaultPrecisionBits);

  static MultiSeries constant(int n_vars, int truncation_order, const BigComplex& c);
  // The coordinate function u_k (0-based index).
  static MultiSeries variable(int n_vars, int k, int truncation_order,
                              int precision_bits = kDefaultPrecisionBits);

  int n_vars() const { return n_vars_; }
  int truncation_order() const { return order_; }
  int precision_bits() const { return prec_; }
  const std::map<Exponent, BigComplex>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  BigComplex coefficient(const Exponent& e) const;
  BigComplex constant_term() const;
  // Adds c to the coefficient of u^e; silently ignores degrees above the order.
  void add_term(const Exponent& e, const BigComplex& c);
  void set_term(const Exponent& e, const BigComplex& c);

  // Highest total degree present, or -1 for the zero series.
  int max_degree() const;
  // Same terms, truncated or re-housed at another order.
  MultiSeries with_order(int truncation_order) const;
  MultiSeries with_precision(int precision_bits) const;

  MultiSeries operator-() const;
  MultiSeries scaled(const BigComplex& c) const;

  friend bool operator==(const MultiSeries& a, const MultiSeries& b);

  std::string to_string(int digits = 12) const;

 private:
  int n_vars_;
  int order_;
  int prec_;
  std::map<Exponent, BigComplex> terms_;
};

int total_degree(const Exponent& e);

MultiSeries series_add(const MultiSeries& a, const MultiSeries& b);
MultiSeries series_sub(const MultiSeries& a, const MultiSeries& b);
MultiSeries series_mul(const MultiSeries& a, const MultiSeries& b);

inline MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) { return series_add(a, b); }
inline MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) { return series_sub(a, b); }
inline MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) { return series_mul(a, b); }

// Formal partial derivative in the variable with 0-based index k.
MultiSeries series_partial(const MultiSeries& s, int k);

// s(subs_1, ..., subs_n); every substituted series must have zero constant
// term. The result lives in the variables of the substituted series.
MultiSeries series_compose(const MultiSeries& s, const std::vector<MultiSeries>& subs);

BigComplex series_eval(const MultiSeries& s, const std::vector<BigComplex>& point);

}  // namespace dehn
