#pragma once

#include <cstddef>
#include <vector>

#include "k3lat/int_matrix.hpp"

namespace k3lat {

// Finite abelian group L*/L with its torsion bilinear form (values in Q/Z)
// and quadratic form (values in Q/2Z), presented on invariant-factor
// generators.
//
// Generators are reduced modulo L into [0,1)^n; generators of equal order are
// sorted lexicographically. A group built from divisors alone (for example the
// discriminant group of a lattice known only through its invariants) has
// `has_form == false` and empty `generators`, `bform` and `qvals`.
struct DiscriminantGroup {
  IntVector divisors;             // d1 | d2 | ..., every entry > 1
  std::vector<RatVector> generators;
  RatMatrix bform;                // b(g_i, g_j) in [0,1)
  RatVector qvals;                // q(g_i) in [0,2)
  bool has_form = true;
  // coordinates of a dual vector v on the generators are (v * coord_map)
  // reduced modulo the divisors. Empty for abstract groups.
  RatMatrix coord_map;

  std::size_t size() const { return divisors.size(); }
  Integer order() const;
  bool trivial() const { return divisors.empty(); }

  // Generator coordinates of an element of L* (given in L (x) Q coordinates).
  IntVector coordinates(const RatVector& v) const;
  // Element sum_i c_i g_i, reduced into [0,1)^n.
  RatVector element(const IntVector& c) const;
  Rational b(const IntVector& x, const IntVector& y) const;
  Rational q(const IntVector& x) const;
};

// Group with the given invariant factors and no recorded form.
DiscriminantGroup abstract_group(const IntVector& orders);

// Orthogonal sum of two torsion forms, rebased to invariant factors.
DiscriminantGroup orthogonal_sum(const DiscriminantGroup& a,
                                 const DiscriminantGroup& b);

// Same group with b and q negated.
DiscriminantGroup negated(const DiscriminantGroup& g);

// Prime-power orders of the primary decomposition, sorted by prime and then by
// ascending exponent.
IntVector elementary_divisors(const IntVector& orders);
IntVector elementary_divisors(const DiscriminantGroup& g);

// Invariant factors (> 1, divisor chain) of the group with cyclic factors of
// the given orders.
IntVector invariant_factors(const IntVector& orders);

bool same_group_structure(const DiscriminantGroup& a, const DiscriminantGroup& b);

Rational mod_one(const Rational& x);
Rational mod_two(const Rational& x);

}  // namespace k3lat
