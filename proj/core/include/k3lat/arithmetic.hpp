#pragma once

// Quadratic-residue arithmetic for the Enriques criterion, the parameter
// search for the explicit constructions, and slope bookkeeping for the
// second crystalline cohomology of a K3 surface.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3lat/int_matrix.hpp"

namespace k3lat {

bool is_prime(std::int64_t n);

// Throws std::invalid_argument unless p is an odd prime.
void require_odd_prime(std::int64_t p);

// Legendre symbol (a/p) by Euler's criterion.
int legendre(const Integer& a, std::int64_t p);

// ((-1)^(sigma+1) d / p) == -1. Requires p an odd prime not dividing 2d and
// 1 <= sigma <= 10.
bool arth(std::int64_t p, int sigma, const Integer& d);

// Smallest d with 8d < p and (-d/p) == +1 for sigma in {2,4}, == -1 for
// sigma in {3,5}.
std::optional<std::int64_t> find_d(std::int64_t p, int sigma);

// The alternative parameter rule obtained by applying arth to the
// Neron-Severi discriminant -4^a d: smallest d with 8d < p and
// arth(p, sigma, -4^a d).
std::optional<std::int64_t> find_d_by_arth(std::int64_t p, int sigma);

// p > 8d: a norm divisible by 4dp, divided by (4d)^2, is then below -2.
bool verify_norm_bound(std::int64_t p, std::int64_t d);

struct FrobeniusBounds {
  int max_height = 0;
  int max_artin = 0;
  std::vector<std::string> derivation;
};

// Bounds on the Frobenius invariants of a K3 surface with an Enriques
// involution, derived from the rank-10 lattice U(2) + E8(2) it must contain.
FrobeniusBounds frobenius_bounds_enriques();

// Height of the formal Brauer group: 1..10, or infinite (supersingular).
class Height {
 public:
  static Height finite(int h);
  static Height infinite() { return Height(); }
  bool is_infinite() const { return !value_; }
  int value() const { return *value_; }
  std::string to_string() const;
  friend bool operator==(const Height&, const Height&) = default;

 private:
  Height() = default;
  explicit Height(int h) : value_(h) {}
  std::optional<int> value_;
};

struct Slope {
  Rational slope;
  int multiplicity = 0;
  friend bool operator==(const Slope& a, const Slope& b) {
    return a.slope == b.slope && a.multiplicity == b.multiplicity;
  }
};

struct NewtonPolygon {
  std::vector<Slope> slopes;  // ascending
  friend bool operator==(const NewtonPolygon& a, const NewtonPolygon& b) {
    return a.slopes == b.slopes;
  }
};

inline constexpr int kK3SecondBetti = 22;

// Throws std::invalid_argument for h >= 11 (slope-1 multiplicity 22 - 2h
// would be <= 0) and for h < 1.
NewtonPolygon newton_slopes(const Height& h);

NewtonPolygon hodge_polygon();

// Multiplicities sum to 22, slopes ascending, multiplicity of s equals that
// of 2 - s.
bool is_valid_k3_polygon(const NewtonPolygon& np);
bool is_symmetric(const NewtonPolygon& np);

// Value of the polygon at each integer abscissa 0..total multiplicity.
std::vector<Rational> polygon_values(const NewtonPolygon& np);

// Weakly above the Hodge polygon at every integer abscissa 0..22.
bool polygon_lies_above(const NewtonPolygon& np);

}  // namespace k3lat
