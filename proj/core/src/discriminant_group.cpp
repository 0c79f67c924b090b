#include "k3lat/discriminant_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "detail.hpp"

namespace k3lat {

Rational mod_one(const Rational& x) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(x - f);
}

Rational mod_two(const Rational& x) {
  Rational half = x / 2;
  return Rational(2 * mod_one(half));
}

Integer DiscriminantGroup::order() const {
  Integer o = 1;
  for (const auto& d : divisors) o *= d;
  return o;
}

IntVector DiscriminantGroup::coordinates(const RatVector& v) const {
  if (coord_map.rows() == 0 && !divisors.empty()) {
    throw std::logic_error("DiscriminantGroup: no coordinate map for abstract group");
  }
  const RatVector w = row_times(v, coord_map);
  IntVector c(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].get_den() != 1) {
      throw std::invalid_argument("DiscriminantGroup: vector is not in the dual lattice");
    }
    mpz_fdiv_r(c[i].get_mpz_t(), w[i].get_num_mpz_t(), divisors[i].get_mpz_t());
  }
  return c;
}

RatVector DiscriminantGroup::element(const IntVector& c) const {
  if (generators.size() != divisors.size()) {
    throw std::logic_error("DiscriminantGroup: no generators for abstract group");
  }
  RatVector v(generators.empty() ? 0 : generators.front().size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += c[i] * generators[i][j];
  for (auto& x : v) x = mod_one(x);
  return v;
}

Rational DiscriminantGroup::b(const IntVector& x, const IntVector& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * y[j] * bform(i, j);
  return mod_one(s);
}

Rational DiscriminantGroup::q(const IntVector& x) const {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += x[i] * x[i] * qvals[i];
    for (std::size_t j = i + 1; j < x.size(); ++j) s += 2 * x[i] * x[j] * bform(i, j);
  }
  return mod_two(s);
}

DiscriminantGroup abstract_group(const IntVector& orders) {
  DiscriminantGroup g;
  g.divisors = invariant_factors(orders);
  g.has_form = false;
  return g;
}

namespace detail {

std::vector<std::pair<Integer, unsigned long>> factor(const Integer& n) {
  if (n == 0) throw std::invalid_argument("factor: zero");
  std::vector<std::pair<Integer, unsigned long>> out;
  Integer m = abs(n);
  auto take = [&](const Integer& p) {
    unsigned long e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  take(Integer(2));
  for (Integer p = 3; p * p <= m; p += 2) {
    if (mpz_probab_prime_p(m.get_mpz_t(), 30) == 2) break;
    take(p);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

void canonicalize(DiscriminantGroup& g) {
  if (g.generators.empty() || g.generators.size() != g.divisors.size()) return;
  for (auto& gen : g.generators)
    for (auto& x : gen) x = mod_one(x);

  // Stable reorder of equal-order generators.
  std::vector<std::size_t> perm(g.divisors.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (g.divisors[a] != g.divisors[b]) return g.divisors[a] < g.divisors[b];
    return std::lexicographical_compare(g.generators[a].begin(), g.generators[a].end(),
                                        g.generators[b].begin(), g.generators[b].end());
  });
  DiscriminantGroup out;
  out.has_form = g.has_form;
  const std::size_t k = perm.size();
  out.bform = RatMatrix(k, k);
  out.coord_map = RatMatrix(g.coord_map.rows(), k);
  for (std::size_t a = 0; a < k; ++a) {
    out.divisors.push_back(g.divisors[perm[a]]);
    out.generators.push_back(g.generators[perm[a]]);
    if (g.has_form) out.qvals.push_back(g.qvals[perm[a]]);
    for (std::size_t r = 0; r < g.coord_map.rows(); ++r)
      out.coord_map(r, a) = g.coord_map(r, perm[a]);
    if (g.has_form)
      for (std::size_t b = 0; b < k; ++b) out.bform(a, b) = g.bform(perm[a], perm[b]);
  }
  g = std::move(out);
}

}  // namespace detail

DiscriminantGroup orthogonal_sum(const DiscriminantGroup& a, const DiscriminantGroup& b) {
  const std::size_t ka = a.size(), kb = b.size(), k = ka + kb;
  IntVector orders = a.divisors;
  orders.insert(orders.end(), b.divisors.begin(), b.divisors.end());
  if (k == 0) {
    DiscriminantGroup g;
    g.has_form = a.has_form && b.has_form;
    return g;
  }

  const bool form = a.has_form && b.has_form;
  const bool gens = a.generators.size() == ka && b.generators.size() == kb &&
                    a.coord_map.rows() > 0 && b.coord_map.rows() > 0;

  // Old generator data in one block presentation.
  RatMatrix old_b(k, k);
  RatVector old_q(k);
  if (form) {
    for (std::size_t i = 0; i < ka; ++i) {
      old_q[i] = a.qvals[i];
      for (std::size_t j = 0; j < ka; ++j) old_b(i, j) = a.bform(i, j);
    }
    for (std::size_t i = 0; i < kb; ++i) {
      old_q[ka + i] = b.qvals[i];
      for (std::size_t j = 0; j < kb; ++j) old_b(ka + i, ka + j) = b.bform(i, j);
    }
  }
  const std::size_t na = gens && ka ? a.generators.front().size() : a.coord_map.rows();
  const std::size_t nb = gens && kb ? b.generators.front().size() : b.coord_map.rows();

  // New generator i has old coordinates row i of v^{-1}.
  const SmithForm sf = snf(IntMatrix::diagonal(orders));
  const RatMatrix vinv = inverse(to_rational(sf.v));
  const RatMatrix old_map = gens ? block_diagonal(a.coord_map, b.coord_map) : RatMatrix();
  const RatMatrix new_map = gens ? old_map * to_rational(sf.v) : RatMatrix();

  DiscriminantGroup g;
  g.has_form = form;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < k; ++i)
    if (sf.s(i, i) > 1) keep.push_back(i);
  std::vector<IntVector> xs;
  for (std::size_t i : keep) {
    g.divisors.push_back(sf.s(i, i));
    IntVector x(k);
    for (std::size_t j = 0; j < k; ++j) x[j] = vinv(i, j).get_num();
    xs.push_back(x);
  }
  const std::size_t kk = keep.size();
  if (form) {
    DiscriminantGroup tmp;
    tmp.bform = old_b;
    tmp.qvals = old_q;
    g.bform = RatMatrix(kk, kk);
    for (std::size_t i = 0; i < kk; ++i) {
      g.qvals.push_back(tmp.q(xs[i]));
    }
    for (std::size_t i = 0; i < kk; ++i)
      for (std::size_t j = 0; j < kk; ++j)
        g.bform(i, j) = i == j ? mod_one(g.qvals[i]) : tmp.b(xs[i], xs[j]);
  }
  if (gens) {
    g.coord_map = RatMatrix(na + nb, kk);
    for (std::size_t c = 0; c < kk; ++c)
      for (std::size_t r = 0; r < na + nb; ++r) g.coord_map(r, c) = new_map(r, keep[c]);
    for (const auto& x : xs) {
      RatVector v(na + nb);
      for (std::size_t j = 0; j < ka; ++j)
        for (std::size_t t = 0; t < na; ++t) v[t] += x[j] * a.generators[j][t];
      for (std::size_t j = 0; j < kb; ++j)
        for (std::size_t t = 0; t < nb; ++t) v[na + t] += x[ka + j] * b.generators[j][t];
      g.generators.push_back(std::move(v));
    }
    detail::canonicalize(g);
  }
  return g;
}

DiscriminantGroup negated(const DiscriminantGroup& g) {
  DiscriminantGroup out = g;
  if (!g.has_form) return out;
  for (auto& q : out.qvals) q = mod_two(Rational(-q));
  for (std::size_t i = 0; i < out.bform.rows(); ++i)
    for (std::size_t j = 0; j < out.bform.cols(); ++j)
      out.bform(i, j) = mod_one(Rational(-out.bform(i, j)));
  return out;
}

IntVector elementary_divisors(const IntVector& orders) {
  std::vector<std::pair<Integer, unsigned long>> parts;
  for (const auto& o : orders) {
    for (const auto& [prime, exp] : detail::factor(o)) parts.emplace_back(prime, exp);
  }
  std::sort(parts.begin(), parts.end());
  IntVector out;
  for (const auto& [prime, exp] : parts) {
    Integer pp;
    mpz_pow_ui(pp.get_mpz_t(), prime.get_mpz_t(), exp);
    out.push_back(pp);
  }
  return out;
}

IntVector elementary_divisors(const DiscriminantGroup& g) {
  return elementary_divisors(g.divisors);
}

IntVector invariant_factors(const IntVector& orders) {
  std::map<Integer, std::vector<unsigned long>> by_prime;
  for (const auto& o : orders)
    for (const auto& [prime, exp] : detail::factor(o)) by_prime[prime].push_back(exp);
  std::size_t len = 0;
  for (auto& [prime, exps] : by_prime) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    len = std::max(len, exps.size());
  }
  // Largest factor first, then reversed into a divisor chain.
  IntVector out(len, Integer(1));
  for (const auto& [prime, exps] : by_prime)
    for (std::size_t i = 0; i < exps.size(); ++i) {
      Integer pp;
      mpz_pow_ui(pp.get_mpz_t(), prime.get_mpz_t(), exps[i]);
      out[i] *= pp;
    }
  std::reverse(out.begin(), out.end());
  return out;
}

bool same_group_structure(const DiscriminantGroup& a, const DiscriminantGroup& b) {
  return elementary_divisors(a) == elementary_divisors(b);
}

}  // namespace k3lat
