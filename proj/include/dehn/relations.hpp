#pragma once

#include <optional>
#include <vector>

#include "dehn/big_complex.hpp"

namespace dehn {

inline constexpr int kMaxUnityOrder = 24;

// prod t_i^{e_i} is a root of unity of the given order (or merely of modulus
// one when no order is recorded).
struct DependenceRelation {
  std::vector<long> exponents;
  std::optional<int> unity_order;
  BigReal residual;
};

struct RelationCheck {
  bool pass = false;
  BigReal residual;
  std::optional<int> unity_order;  // smallest detected order <= 24
};

// Returns nullopt for "independent up to the bound at this precision".
std::optional<DependenceRelation> detect_dependence(const std::vector<BigComplex>& t, int exponent_bound,
                                                    int precision_bits = kDefaultPrecisionBits);

RelationCheck verify_relation(const std::vector<BigComplex>& t, const DependenceRelation& rel);

// Threshold used for the modulus and root-of-unity tests.
BigReal relation_threshold(int precision_bits);

}  // namespace dehn
