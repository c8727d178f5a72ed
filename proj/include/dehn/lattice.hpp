#pragma once

#include <vector>

#include "dehn/exact.hpp"

namespace dehn {

using IntVector = std::vector<Integer>;

// Exact LLL reduction of linearly independent integer row vectors.
std::vector<IntVector> lll_reduce(std::vector<IntVector> basis, const Rational& delta = Rational(99, 100));

Integer dot(const IntVector& a, const IntVector& b);

}  // namespace dehn
