#pragma once

// Exact short-vector enumeration in definite integral lattices.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "k3lat/int_matrix.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

struct ShortVector {
  IntVector coords;
  Integer norm;  // signed, as the form gives it
};

struct ShortVectorReport {
  Integer bound;
  std::vector<ShortVector> vectors;
  std::optional<Integer> min_norm;
  std::map<Integer, std::size_t> counts;  // norm -> number of vectors
};

// Every nonzero v with |(v,v)| <= bound. The lattice must be definite
// (std::domain_error otherwise).
//
// Enumeration walks coordinates from last to first over the exact rational
// LDL^T decomposition of +-gram; each coordinate range is cut by the
// remaining budget without any rounding. Vectors come out in pairs: the
// representative whose first nonzero coordinate is positive, then its
// negative, with pairs sorted lexicographically.
ShortVectorReport short_vectors(const IntegralLattice& lattice, const Integer& bound);

// Nonzero norm of smallest absolute value. Requires rank >= 1.
Integer min_norm(const IntegralLattice& lattice);

std::size_t count_norm(const IntegralLattice& lattice, const Integer& norm);

// Gram entries even and diagonal divisible by 4: all norms are then
// multiples of 4, so no vector has norm +-2.
bool norms_divisible_by_four(const IntegralLattice& lattice);

}  // namespace k3lat
