#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dehn/big_complex.hpp"
#include "dehn/exact.hpp"

namespace dehn {

// One representative sigma per sign pair: for tau in Q(sqrt(-1)) the matrix
// with a + b tau = i, for tau in Q(sqrt(-3)) the one with a + b tau = omega.
// Every other field yields an empty list.
std::vector<Matrix2> symmetry_matrices(const QuadraticNumber& tau);

// Smallest m <= 12 with sigma^m = I; nullopt means "infinite (capped)".
std::optional<int> sigma_order(const Matrix2& sigma);

// sigma(p/q) = (a p + b q) / (c p + d q), canonicalized.
Slope apply_slope(const Matrix2& sigma, const Slope& s);

// (p2 q2) proportional to (p1 q1) A1^{-1} A2.
Slope slope_transfer(const Matrix2& a1, const Matrix2& a2, const Slope& s);

// Integer [[a, b], [c, d]] with tau1 = (a tau2 + b) / (c tau2 + d) of least
// |a|+|b|+|c|+|d|, or nullopt when the shapes lie in different fields.
std::optional<Matrix2> relatively_dependent(const QuadraticNumber& tau1, const QuadraticNumber& tau2);

enum class VerdictKind { Identity, SwapRho, SigmaOrbit, SigmaPhiOrbit, Unrelated, Undetermined };

std::string verdict_kind_name(VerdictKind kind);

struct Verdict {
  VerdictKind kind = VerdictKind::Unrelated;
  Matrix2 sigma;          // SigmaOrbit, SigmaPhiOrbit (the Q(sqrt(-1)) factor)
  int power = 0;
  int coordinate = 1;     // cusp carrying sigma (1-based)
  Matrix2 phi;            // SigmaPhiOrbit (the Q(sqrt(-3)) factor)
  int phi_power = 0;
  Matrix2 rho;            // SwapRho
  std::string reason;     // Undetermined

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::string to_string(const Verdict& v);

// Orbit action of a shape symmetry on slopes: the row (p q) goes to
// (p q) sigma^{-1}, i.e. slope_transfer(sigma, I, .).
Slope sigma_act(const Matrix2& sigma, const Slope& s, int power = 1);

using SlopePairTuple = std::array<Slope, 2>;

Verdict classify_pair(const std::optional<QuadraticNumber>& tau1, const std::optional<QuadraticNumber>& tau2,
                      const SlopePairTuple& slopes, const SlopePairTuple& slopes_prime);

Verdict classify_single(const std::optional<QuadraticNumber>& tau, const Slope& s, const Slope& s_prime);

enum class SpecShape { Coupled, Cross, HolonomyDependent };

std::string spec_shape_name(SpecShape shape);
SpecShape parse_spec_shape(const std::string& name);

// Blocks of the exponent matrix [[A1, A2], [A3, A4]] and its primed partner.
struct SubgroupSpec {
  std::array<Matrix2, 4> a;
  std::array<std::optional<Matrix2>, 4> a_prime;
  SpecShape shape = SpecShape::Coupled;
};

struct HolonomyData {
  std::array<BigComplex, 2> t;
  std::array<BigComplex, 2> t_prime;
};

struct RelationWitness {
  std::array<std::optional<Rational>, 4> k;
  std::array<std::optional<Rational>, 4> l;
  std::array<std::optional<Rational>, 4> n;
  std::map<std::string, bool> checks;
  int trichotomy_case = 0;  // 1, 2, 3, or 0 when none holds
  std::vector<std::string> notes;

  bool all_pass() const;
};

// Checks the identities tying the blocks to a pair of fillings. Completions
// are used for n_j only when `with_completions` is set.
RelationWitness verify_subgroup_relations(const SubgroupSpec& spec, const std::array<FillingSlope, 2>& slopes,
                                          const std::array<FillingSlope, 2>& slopes_prime,
                                          bool with_completions,
                                          const std::optional<std::array<QuadraticNumber, 2>>& shapes = std::nullopt,
                                          const std::optional<HolonomyData>& holonomy = std::nullopt);

// Which of the three determinant patterns the blocks satisfy (0 if none).
int det_trichotomy_case(const std::array<Matrix2, 4>& a);

// x = (x1, x2) in K1^2 and y = (y1, y2) in K2^2 are parallel, i.e.
// x1 y2 - x2 y1 = 0 in the compositum.
bool parallel(const std::array<QuadraticNumber, 2>& x, const std::array<QuadraticNumber, 2>& y);

// A (1, tau)^T.
std::array<QuadraticNumber, 2> apply_to_shape(const Matrix2& a, const QuadraticNumber& tau);

}  // namespace dehn
