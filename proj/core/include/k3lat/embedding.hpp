#pragma once

// Sublattices of an ambient lattice: primitivity, saturation, orthogonal
// complements, overlattices from isotropic glue, and the glue criterion for
// extending isometries of M + M^perp to an overlattice.

#include <stdexcept>
#include <vector>

#include "k3lat/discriminant_group.hpp"
#include "k3lat/int_matrix.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

// Rows of `basis` are the images of the sublattice basis, in ambient
// coordinates.
struct LatticeEmbedding {
  IntegralLattice ambient;
  IntMatrix basis;

  // Throws std::invalid_argument if the rows are dependent or the column count
  // differs from the ambient rank.
  LatticeEmbedding(IntegralLattice ambient, IntMatrix basis);

  std::size_t rank() const { return basis.rows(); }
  // basis * gram * basis^T
  IntegralLattice sublattice(std::string label = {}) const;
};

bool is_primitive(const LatticeEmbedding& e);

// Primitive closure with the same rational span; primitive input is returned
// unchanged.
LatticeEmbedding saturate(const LatticeEmbedding& e);

struct Complement {
  LatticeEmbedding embedding;
  // The sublattice meets its complement (isotropic directions present).
  bool degenerate = false;
};

Complement orthogonal_complement(const LatticeEmbedding& e);

// True when span(a) == span(b) as subgroups of Z^n.
bool same_span(const IntMatrix& a, const IntMatrix& b);

// [L : span(rows)] for a full-rank family of rows in Z^n.
Integer index_in_ambient(const IntMatrix& rows);

class NonIsotropicGlue : public std::invalid_argument {
 public:
  NonIsotropicGlue(const std::string& what, Rational value)
      : std::invalid_argument(what), value_(std::move(value)) {}
  const Rational& value() const { return value_; }

 private:
  Rational value_;
};

struct Overlattice {
  IntegralLattice lattice;
  RatMatrix basis;  // rows, in coordinates of the original lattice
  Integer index;    // [L : M]
};

// Lattice generated by M and the glue vectors (coordinates on M's basis).
// Throws std::invalid_argument if a vector is outside M*, NonIsotropicGlue if
// the generated subgroup of l(M) is not isotropic.
Overlattice overlattice(const IntegralLattice& m, const std::vector<RatVector>& glue);

// M's basis vectors in the coordinates of the overlattice basis.
IntMatrix sublattice_in_overlattice(const Overlattice& o);

struct GluePair {
  RatVector s1;  // element of M*, coordinates on M's basis
  RatVector s2;  // element of (M^perp)*, coordinates on M^perp's basis
};

struct GlueData {
  IntegralLattice m;
  IntegralLattice m_perp;
  DiscriminantGroup dg_m;
  DiscriminantGroup dg_perp;
  IntMatrix sum_basis;         // rows of M then M^perp, in L coordinates
  IntVector divisors;          // invariant factors of S = L / (M + M^perp)
  std::vector<GluePair> generators;  // one per divisor; gamma(s1) = s2
  Integer index;               // |S|
  Integer s1_order;            // |image in l(M)|
  Integer s2_order;            // |image in l(M^perp)|
};

// S(L) for an overlattice L of M + M^perp, where m_basis and perp_basis are
// given in L coordinates and together have full rank. Throws
// std::domain_error if either projection of S is not injective.
GlueData glue_data(const IntegralLattice& over, const IntMatrix& m_basis,
                   const IntMatrix& perp_basis);

// Automorphism of a discriminant group acting on generator coordinates
// (row vector convention: c -> c * action, reduced modulo the divisors).
using GroupAction = IntMatrix;

GroupAction identity_action(const DiscriminantGroup& g);
GroupAction negation_action(const DiscriminantGroup& g);
// Action induced on l(M) by an isometry of M (row convention v -> v * isometry).
GroupAction induced_action(const DiscriminantGroup& g, const IntMatrix& isometry);
GroupAction compose(const GroupAction& first, const GroupAction& second,
                    const DiscriminantGroup& g);

struct ExtensionCheck {
  bool preserves_s1 = false;
  bool preserves_s2 = false;
  bool commutes = false;  // gamma o phibar == psibar o gamma on S1
  bool extends() const { return preserves_s1 && preserves_s2 && commutes; }
};

ExtensionCheck extends_to(const GroupAction& phibar, const GroupAction& psibar,
                          const GlueData& glue);

// (l(M^perp), q) for a primitive M in L with |l(M)|, |l(L)| coprime: the sum of
// l(M) with negated form and l(L). Throws std::invalid_argument when the
// orders are not coprime.
DiscriminantGroup coprime_complement_disc(const DiscriminantGroup& dg_m,
                                          const DiscriminantGroup& dg_l);

}  // namespace k3lat
