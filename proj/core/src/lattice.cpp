#include "k3lat/lattice.hpp"

#include <algorithm>

#include "detail.hpp"

namespace k3lat {

IntegralLattice::IntegralLattice(IntMatrix gram, std::string label)
    : gram_(std::move(gram)), label_(std::move(label)) {
  if (!gram_.is_square()) {
    throw std::invalid_argument("IntegralLattice: Gram matrix is not square");
  }
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = i + 1; j < gram_.cols(); ++j)
      if (gram_(i, j) != gram_(j, i)) {
        throw std::invalid_argument("IntegralLattice: Gram matrix is not symmetric");
      }
}

Integer IntegralLattice::inner(const IntVector& x, const IntVector& y) const {
  if (x.size() != rank() || y.size() != rank()) {
    throw std::invalid_argument("IntegralLattice::inner: dimension mismatch");
  }
  Integer s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) s += x[i] * gram_(i, j) * y[j];
  }
  return s;
}

Rational IntegralLattice::inner(const RatVector& x, const RatVector& y) const {
  if (x.size() != rank() || y.size() != rank()) {
    throw std::invalid_argument("IntegralLattice::inner: dimension mismatch");
  }
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) s += x[i] * gram_(i, j) * y[j];
  }
  return s;
}

IntegralLattice IntegralLattice::relabeled(std::string label) const {
  IntegralLattice l = *this;
  l.label_ = std::move(label);
  return l;
}

namespace {

// Dynkin diagram: chain 1-2-3-5-6-7-8 with 4 attached to 3.
IntMatrix e8_cartan_negative() {
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
  const std::pair<int, int> edges[] = {{0, 1}, {1, 2}, {2, 3}, {2, 4},
                                       {4, 5}, {5, 6}, {6, 7}};
  for (auto [a, b] : edges) {
    g(a, b) = 1;
    g(b, a) = 1;
  }
  return g;
}

}  // namespace

IntegralLattice builtin(Builtin which) {
  const IntegralLattice u(IntMatrix{{0, 1}, {1, 0}}, "U");
  const IntegralLattice e8(e8_cartan_negative(), "E8");
  switch (which) {
    case Builtin::U:
      return u;
    case Builtin::E8:
      return e8;
    case Builtin::Gamma:
      return direct_sum(u, e8).relabeled("Gamma");
    case Builtin::LambdaK3:
      return direct_sum(direct_sum(direct_sum(u, u), direct_sum(u, e8)), e8)
          .relabeled("LambdaK3");
  }
  throw std::invalid_argument("builtin: unknown lattice");
}

IntegralLattice builtin(std::string_view name) {
  if (name == "U") return builtin(Builtin::U);
  if (name == "E8") return builtin(Builtin::E8);
  if (name == "Gamma") return builtin(Builtin::Gamma);
  if (name == "LambdaK3") return builtin(Builtin::LambdaK3);
  throw std::invalid_argument("builtin: unknown lattice '" + std::string(name) + "'");
}

IntegralLattice diag_lattice(const IntVector& entries) {
  for (const auto& e : entries)
    if (e == 0) throw std::invalid_argument("diag_lattice: zero diagonal entry");
  return IntegralLattice(IntMatrix::diagonal(entries));
}

IntegralLattice twist(const IntegralLattice& lattice, const Integer& n) {
  if (n <= 0) throw std::invalid_argument("twist: factor must be positive");
  std::string label;
  if (!lattice.label().empty()) label = lattice.label() + "(" + n.get_str() + ")";
  return IntegralLattice(n * lattice.gram(), label);
}

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b) {
  std::string label;
  if (!a.label().empty() && !b.label().empty()) label = a.label() + "+" + b.label();
  return IntegralLattice(block_diagonal(a.gram(), b.gram()), label);
}

Signature signature(const IntegralLattice& lattice) {
  RatMatrix a = to_rational(lattice.gram());
  const std::size_t n = a.rows();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (a(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv == n) {
      // Zero diagonal: replace e_i by e_i + e_j for a nonzero (i, j) entry,
      // which puts 2 (e_i, e_j) on the diagonal.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) throw std::domain_error("signature: degenerate form");
      a.add_row_multiple(pi, pj, Rational(1));
      a.add_col_multiple(pi, pj, Rational(1));
      piv = pi;
    }
    a.swap_rows(k, piv);
    a.swap_cols(k, piv);
    const Rational p = a(k, k);
    (p > 0 ? sig.plus : sig.minus) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / p;
      a.add_row_multiple(i, k, -f);
      a.add_col_multiple(i, k, -f);
    }
  }
  return sig;
}

bool is_even(const IntegralLattice& lattice) {
  for (std::size_t i = 0; i < lattice.rank(); ++i)
    if (!mpz_even_p(lattice.gram()(i, i).get_mpz_t())) return false;
  return true;
}

bool is_negative_definite(const IntegralLattice& lattice) {
  if (discriminant(lattice) == 0) return false;
  return signature(lattice).plus == 0;
}

bool is_positive_definite(const IntegralLattice& lattice) {
  if (discriminant(lattice) == 0) return false;
  return signature(lattice).minus == 0;
}

Integer discriminant(const IntegralLattice& lattice) { return det(lattice.gram()); }

DiscriminantGroup discriminant_group(const IntegralLattice& lattice) {
  const IntMatrix& g = lattice.gram();
  const std::size_t n = g.rows();
  if (det(g) == 0) throw std::domain_error("discriminant_group: degenerate form");

  // u g v = s, so g^{-1} = v s^{-1} u and L*/L is generated by the rows of u
  // divided by the invariant factors.
  const SmithForm sf = snf(g);
  const RatMatrix uinv = inverse(to_rational(sf.u));
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i)
    if (sf.s(i, i) > 1) idx.push_back(i);

  DiscriminantGroup dg;
  dg.coord_map = RatMatrix(n, idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c) {
    const Integer& s = sf.s(idx[c], idx[c]);
    dg.divisors.push_back(s);
    RatVector gen(n);
    for (std::size_t j = 0; j < n; ++j) gen[j] = Rational(sf.u(idx[c], j), s);
    for (auto& x : gen) x.canonicalize();
    dg.generators.push_back(std::move(gen));
    for (std::size_t r = 0; r < n; ++r) dg.coord_map(r, c) = uinv(r, idx[c]) * s;
  }
  const std::size_t k = idx.size();
  dg.bform = RatMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    dg.qvals.push_back(mod_two(lattice.inner(dg.generators[i], dg.generators[i])));
    for (std::size_t j = 0; j < k; ++j)
      dg.bform(i, j) = mod_one(lattice.inner(dg.generators[i], dg.generators[j]));
  }
  detail::canonicalize(dg);
  if (k == 0) dg.coord_map = RatMatrix(n, 0);
  return dg;
}

}  // namespace k3lat
