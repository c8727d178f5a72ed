#pragma once

#include <vector>

#include "dehn/big_complex.hpp"
#include "dehn/exact.hpp"
#include "dehn/manifold.hpp"

namespace dehn {

// A validated manifold with its longitude series and per-cusp convergence
// radii, prepared once and shared read-only by every solve.
class FillingModel {
 public:
  explicit FillingModel(NZPotential m);

  const NZPotential& manifold() const { return m_; }
  const LongitudeSeries& longitudes() const { return lon_; }
  int n_cusps() const { return m_.n_cusps; }
  // Radius of the disk around 0 in which the Newton seed must lie.
  const BigReal& disk_radius(int k) const { return radius_[k]; }

  std::vector<BigComplex> eval_v(const std::vector<BigComplex>& u) const;

 private:
  NZPotential m_;
  LongitudeSeries lon_;
  std::vector<BigReal> radius_;
};

// 0.5 * min over nonlinear terms of (|tau| / |coeff|)^(1 / (degree - 1)),
// clamped to [0.05, 0.5].
BigReal convergence_radius(const MultiSeries& v_k, const BigComplex& tau);

struct FillingSolution {
  std::vector<FillingSlope> slopes;
  std::vector<BigComplex> u;
  std::vector<BigComplex> v;
  BigReal residual;
  int precision_bits = kDefaultPrecisionBits;
  int iterations = 0;
};

struct FillingInvariants {
  std::vector<BigComplex> t;
  std::vector<BigComplex> lambda;
  BigComplex pvol;
  BigComplex cvol;
};

// Newton solve of p_k u_k + q_k v_k(u) + 2 pi i = 0 near the origin.
FillingSolution solve_filling(const FillingModel& model, const std::vector<FillingSlope>& slopes,
                              int precision_bits = kDefaultPrecisionBits);
FillingSolution solve_filling(const NZPotential& m, const std::vector<FillingSlope>& slopes,
                              int precision_bits = kDefaultPrecisionBits);

FillingInvariants filling_invariants(const FillingModel& model, const FillingSolution& sol);

// sum_k u_k v_k(u) - Phi(u).
BigComplex volume_correction(const FillingModel& model, const std::vector<BigComplex>& u);
BigComplex complex_volume(const FillingModel& model, const FillingSolution& sol);

// Representative with imaginary part in [0, pi^2).
BigComplex mod_reduce(const BigComplex& z);
// Distance on C / (i pi^2 Z).
BigReal cylinder_distance(const BigComplex& a, const BigComplex& b);
// Imaginary part reduced into (-pi, pi].
BigComplex normalize_length(const BigComplex& w);

}  // namespace dehn
