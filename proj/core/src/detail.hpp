#pragma once

// Internal helpers shared across translation units.

#include <utility>
#include <vector>

#include "k3lat/discriminant_group.hpp"

namespace k3lat::detail {

// Prime factorization of |n| (n != 0), primes ascending.
std::vector<std::pair<Integer, unsigned long>> factor(const Integer& n);

// Reduces generators into [0,1)^n and sorts equal-order generators
// lexicographically, permuting the form and coordinate map to match.
void canonicalize(DiscriminantGroup& g);

}  // namespace k3lat::detail
