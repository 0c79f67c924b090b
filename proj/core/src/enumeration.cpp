#include "k3lat/enumeration.hpp"

#include <algorithm>

namespace k3lat {

namespace {

struct Enumerator {
  std::size_t n;
  RatMatrix q;  // q(i,i) = pivots, q(i,j) for j > i = multipliers
  IntVector x;
  std::vector<IntVector> found;

  void run(std::size_t level, const Rational& remaining) {
    Rational center = 0;
    for (std::size_t j = level + 1; j < n; ++j) center -= q(level, j) * x[j];
    const Rational& pivot = q(level, level);
    // Integers t with pivot * (t - center)^2 <= remaining.
    const Rational budget = remaining / pivot;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), budget.get_num_mpz_t(), budget.get_den_mpz_t());
    const Integer radius = sqrt(fl) + 1;
    Integer c_floor;
    mpz_fdiv_q(c_floor.get_mpz_t(), center.get_num_mpz_t(), center.get_den_mpz_t());
    const Integer lo = c_floor - radius;
    const Integer hi = c_floor + 1 + radius;
    for (Integer t = lo; t <= hi; ++t) {
      const Rational diff = t - center;
      const Rational used = pivot * diff * diff;
      if (used > remaining) continue;
      x[level] = t;
      if (level == 0) {
        if (std::any_of(x.begin(), x.end(), [](const Integer& v) { return v != 0; })) {
          found.push_back(x);
        }
      } else {
        run(level - 1, remaining - used);
      }
    }
    x[level] = 0;
  }
};

bool positive_leading(const IntVector& v) {
  for (const auto& c : v)
    if (c != 0) return c > 0;
  return false;
}

}  // namespace

ShortVectorReport short_vectors(const IntegralLattice& lattice, const Integer& bound) {
  if (bound < 0) throw std::invalid_argument("short_vectors: negative bound");
  const std::size_t n = lattice.rank();
  ShortVectorReport report;
  report.bound = bound;
  if (n == 0) return report;

  int sign;
  if (is_positive_definite(lattice)) {
    sign = 1;
  } else if (is_negative_definite(lattice)) {
    sign = -1;
  } else {
    throw std::domain_error("short_vectors: lattice is not definite");
  }

  // Fincke-Pohst form: Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2.
  RatMatrix q = to_rational(Integer(sign) * lattice.gram());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) /= q(i, i);
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
  }

  Enumerator e{n, q, IntVector(n), {}};
  e.run(n - 1, Rational(bound));

  std::vector<IntVector> reps;
  for (auto& v : e.found)
    if (positive_leading(v)) reps.push_back(std::move(v));
  std::sort(reps.begin(), reps.end());
  for (const auto& v : reps) {
    IntVector neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    const Integer norm = lattice.norm(v);
    report.vectors.push_back({v, norm});
    report.vectors.push_back({neg, norm});
    report.counts[norm] += 2;
    if (!report.min_norm || abs(norm) < abs(*report.min_norm)) report.min_norm = norm;
  }
  return report;
}

Integer min_norm(const IntegralLattice& lattice) {
  if (lattice.rank() == 0) throw std::invalid_argument("min_norm: rank-0 lattice");
  // A basis vector bounds the minimum from above.
  Integer bound = abs(lattice.gram()(0, 0));
  for (std::size_t i = 1; i < lattice.rank(); ++i)
    bound = std::min(bound, Integer(abs(lattice.gram()(i, i))));
  const ShortVectorReport r = short_vectors(lattice, bound);
  return *r.min_norm;
}

std::size_t count_norm(const IntegralLattice& lattice, const Integer& norm) {
  if (norm == 0) return 0;
  const ShortVectorReport r = short_vectors(lattice, abs(norm));
  const auto it = r.counts.find(norm);
  return it == r.counts.end() ? 0 : it->second;
}

bool norms_divisible_by_four(const IntegralLattice& lattice) {
  const IntMatrix& g = lattice.gram();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (!mpz_divisible_ui_p(g(i, i).get_mpz_t(), 4)) return false;
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (!mpz_even_p(g(i, j).get_mpz_t())) return false;
  }
  return true;
}

}  // namespace k3lat
