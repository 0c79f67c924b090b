#include "k3lat/arithmetic.hpp"

#include <algorithm>
#include <stdexcept>

#include "k3lat/lattice.hpp"

namespace k3lat {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  const Integer z = n;
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

void require_odd_prime(std::int64_t p) {
  if (p == 2) throw std::invalid_argument("p = 2 is excluded: characteristic must be odd");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
}

int legendre(const Integer& a, std::int64_t p) {
  require_odd_prime(p);
  const Integer pz = p;
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), pz.get_mpz_t());
  if (r == 0) return 0;
  const Integer e = (pz - 1) / 2;
  Integer out;
  mpz_powm(out.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), pz.get_mpz_t());
  return out == 1 ? 1 : -1;
}

bool arth(std::int64_t p, int sigma, const Integer& d) {
  require_odd_prime(p);
  if (sigma < 1 || sigma > 10) throw std::invalid_argument("arth: sigma must be in 1..10");
  if (d == 0 || mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) {
    throw std::invalid_argument("arth: p divides 2d");
  }
  const Integer a = (sigma % 2 == 1) ? Integer(d) : Integer(-d);
  return legendre(a, p) == -1;
}

namespace {

void require_case_sigma(int sigma) {
  if (sigma < 2 || sigma > 5) throw std::invalid_argument("sigma must be in 2..5");
}

int ns_exponent(int sigma) {
  switch (sigma) {
    case 2: return 2;
    case 3: return 4;
    default: return 5;
  }
}

}  // namespace

std::optional<std::int64_t> find_d(std::int64_t p, int sigma) {
  require_odd_prime(p);
  require_case_sigma(sigma);
  const int wanted = sigma % 2 == 0 ? 1 : -1;
  for (std::int64_t d = 1; 8 * d < p; ++d) {
    if (d % p == 0) continue;
    if (legendre(Integer(-d), p) == wanted) return d;
  }
  return std::nullopt;
}

std::optional<std::int64_t> find_d_by_arth(std::int64_t p, int sigma) {
  require_odd_prime(p);
  require_case_sigma(sigma);
  for (std::int64_t d = 1; 8 * d < p; ++d) {
    Integer ns;
    mpz_ui_pow_ui(ns.get_mpz_t(), 4, ns_exponent(sigma));
    ns *= -d;
    if (arth(p, sigma, ns)) return d;
  }
  return std::nullopt;
}

bool verify_norm_bound(std::int64_t p, std::int64_t d) { return p > 8 * d; }

FrobeniusBounds frobenius_bounds_enriques() {
  FrobeniusBounds b;
  const IntegralLattice gamma2 = direct_sum(twist(builtin(Builtin::U), 2),
                                            twist(builtin(Builtin::E8), 2));
  const int picard_min = static_cast<int>(gamma2.rank());

  // Slope-1 part of H^2 has dimension 22 - 2h and bounds the Picard number.
  for (int h = 1; h <= 10; ++h)
    if (kK3SecondBetti - 2 * h >= picard_min) b.max_height = h;
  b.derivation.push_back("slope-1 multiplicity 22-2h >= " + std::to_string(picard_min) +
                         " holds up to h = " + std::to_string(b.max_height) + " (22-2*" +
                         std::to_string(b.max_height + 1) + " = " +
                         std::to_string(kK3SecondBetti - 2 * (b.max_height + 1)) + ")");

  // A rank-r primitive sublattice of the supersingular Neron-Severi lattice
  // needs r <= 22 - 2 sigma; at equality the Arth condition must also hold.
  int rank_bound = 0;
  for (int s = 1; s <= 10; ++s)
    if (picard_min <= kK3SecondBetti - 2 * s) rank_bound = s;
  b.max_artin = rank_bound;
  const Integer disc = discriminant(gamma2);
  const Integer sym = (rank_bound % 2 == 1) ? Integer(disc) : Integer(-disc);
  b.derivation.push_back("rank " + std::to_string(picard_min) + " <= 22-2*sigma holds up to sigma = " +
                         std::to_string(rank_bound));
  if (sym > 0 && mpz_perfect_square_p(sym.get_mpz_t())) {
    // Legendre symbol of a nonzero square is +1 for every admissible p.
    b.max_artin = rank_bound - 1;
    b.derivation.push_back("sigma = " + std::to_string(rank_bound) + ": (-1)^" +
                           std::to_string(rank_bound + 1) + " * " + disc.get_str() + " = " +
                           sym.get_str() + " is a perfect square, so Arth fails for every p");
  }
  return b;
}

Height Height::finite(int h) {
  if (h < 1) throw std::invalid_argument("height must be a positive integer");
  return Height(h);
}

std::string Height::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("inf");
}

NewtonPolygon newton_slopes(const Height& h) {
  if (h.is_infinite()) return NewtonPolygon{{{Rational(1), kK3SecondBetti}}};
  const int v = h.value();
  const int middle = kK3SecondBetti - 2 * v;
  if (middle <= 0) {
    throw std::invalid_argument("height " + std::to_string(v) +
                                " rejected: slope-1 multiplicity 22-2h = " +
                                std::to_string(middle) + " <= 0");
  }
  return NewtonPolygon{{{Rational(v - 1, v), v}, {Rational(1), middle}, {Rational(v + 1, v), v}}};
}

NewtonPolygon hodge_polygon() {
  return NewtonPolygon{{{Rational(0), 1}, {Rational(1), 20}, {Rational(2), 1}}};
}

bool is_symmetric(const NewtonPolygon& np) {
  for (const auto& s : np.slopes) {
    const Rational mirror = 2 - s.slope;
    int m = 0;
    for (const auto& t : np.slopes)
      if (t.slope == mirror) m += t.multiplicity;
    int own = 0;
    for (const auto& t : np.slopes)
      if (t.slope == s.slope) own += t.multiplicity;
    if (m != own) return false;
  }
  return true;
}

bool is_valid_k3_polygon(const NewtonPolygon& np) {
  int total = 0;
  for (std::size_t i = 0; i < np.slopes.size(); ++i) {
    if (np.slopes[i].multiplicity <= 0) return false;
    if (i && np.slopes[i].slope <= np.slopes[i - 1].slope) return false;
    total += np.slopes[i].multiplicity;
  }
  return total == kK3SecondBetti && is_symmetric(np);
}

std::vector<Rational> polygon_values(const NewtonPolygon& np) {
  std::vector<Slope> sorted = np.slopes;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Slope& a, const Slope& b) { return a.slope < b.slope; });
  std::vector<Rational> y{Rational(0)};
  for (const auto& s : sorted)
    for (int k = 0; k < s.multiplicity; ++k) y.push_back(y.back() + s.slope);
  return y;
}

bool polygon_lies_above(const NewtonPolygon& np) {
  const std::vector<Rational> newton = polygon_values(np);
  const std::vector<Rational> hodge = polygon_values(hodge_polygon());
  if (newton.size() != hodge.size()) return false;
  for (std::size_t x = 0; x < hodge.size(); ++x)
    if (newton[x] < hodge[x]) return false;
  return true;
}

}  // namespace k3lat
