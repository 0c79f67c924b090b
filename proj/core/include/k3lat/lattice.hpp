#pragma once

// Integral lattices presented by Gram matrices.

#include <cstddef>
#include <string>
#include <string_view>

#include "k3lat/discriminant_group.hpp"
#include "k3lat/int_matrix.hpp"

namespace k3lat {

class IntegralLattice {
 public:
  IntegralLattice() = default;
  // Throws std::invalid_argument unless gram is square and symmetric.
  explicit IntegralLattice(IntMatrix gram, std::string label = {});

  const IntMatrix& gram() const { return gram_; }
  const std::string& label() const { return label_; }
  std::size_t rank() const { return gram_.rows(); }

  Integer inner(const IntVector& x, const IntVector& y) const;
  Rational inner(const RatVector& x, const RatVector& y) const;
  Integer norm(const IntVector& x) const { return inner(x, x); }

  IntegralLattice relabeled(std::string label) const;

  friend bool operator==(const IntegralLattice& a, const IntegralLattice& b) {
    return a.gram_ == b.gram_;
  }

 private:
  IntMatrix gram_;
  std::string label_;
};

enum class Builtin { U, E8, Gamma, LambdaK3 };

// U = [[0,1],[1,0]]; E8 is the negative-definite Cartan form; Gamma = U + E8;
// LambdaK3 = U + U + U + E8 + E8.
IntegralLattice builtin(Builtin which);
// Accepts "U", "E8", "Gamma", "LambdaK3"; throws std::invalid_argument otherwise.
IntegralLattice builtin(std::string_view name);

// Throws std::invalid_argument on a zero entry.
IntegralLattice diag_lattice(const IntVector& entries);

// Form scaled by n > 0.
IntegralLattice twist(const IntegralLattice& lattice, const Integer& n);

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b);

struct Signature {
  std::size_t plus = 0;
  std::size_t minus = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Sylvester signature by exact congruence diagonalization. Throws
// std::domain_error on a degenerate form.
Signature signature(const IntegralLattice& lattice);

bool is_even(const IntegralLattice& lattice);
bool is_negative_definite(const IntegralLattice& lattice);
bool is_positive_definite(const IntegralLattice& lattice);

// Signed determinant of the Gram matrix.
Integer discriminant(const IntegralLattice& lattice);

// l(L) with b_L and q_L. Throws std::domain_error on a degenerate form.
DiscriminantGroup discriminant_group(const IntegralLattice& lattice);

}  // namespace k3lat
