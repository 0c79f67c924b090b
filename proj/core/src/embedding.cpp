#include "k3lat/embedding.hpp"

#include <algorithm>

namespace k3lat {

namespace {

// Index of Z^dim inside the group generated by Z^dim and the rational rows.
Integer span_index(const std::vector<RatVector>& gens, std::size_t dim) {
  Integer den = 1;
  for (const auto& g : gens) den = lcm(den, common_denominator(g));
  IntMatrix rows(dim + gens.size(), dim);
  for (std::size_t i = 0; i < dim; ++i) rows(i, i) = den;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j)
      rows(dim + i, j) = Rational(gens[i][j] * den).get_num();
  const HermiteForm hf = hnf(rows);
  Integer d = abs(det(hf.h.submatrix(0, 0, dim, dim)));
  Integer full;
  mpz_pow_ui(full.get_mpz_t(), den.get_mpz_t(), dim);
  return full / d;
}

// v in Z^dim + span_Z(gens)?
bool in_span(const std::vector<RatVector>& gens, const RatVector& v) {
  const std::size_t dim = v.size();
  Integer den = common_denominator(v);
  for (const auto& g : gens) den = lcm(den, common_denominator(g));
  IntMatrix rows(dim + gens.size(), dim);
  for (std::size_t i = 0; i < dim; ++i) rows(i, i) = den;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j)
      rows(dim + i, j) = Rational(gens[i][j] * den).get_num();
  IntVector target(dim);
  for (std::size_t j = 0; j < dim; ++j) target[j] = Rational(v[j] * den).get_num();
  return solve_integer(rows, target).has_value();
}

bool integral(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.get_den() == 1; });
}

IntMatrix gram_of(const IntMatrix& basis, const IntMatrix& gram) {
  return basis * gram * basis.transpose();
}

}  // namespace

LatticeEmbedding::LatticeEmbedding(IntegralLattice amb, IntMatrix b)
    : ambient(std::move(amb)), basis(std::move(b)) {
  if (basis.rows() > 0 && basis.cols() != ambient.rank()) {
    throw std::invalid_argument("LatticeEmbedding: basis width differs from ambient rank");
  }
  if (basis.rows() == 0) basis = IntMatrix(0, ambient.rank());
  if (k3lat::rank(basis) != basis.rows()) {
    throw std::invalid_argument("LatticeEmbedding: basis rows are linearly dependent");
  }
}

IntegralLattice LatticeEmbedding::sublattice(std::string label) const {
  return IntegralLattice(gram_of(basis, ambient.gram()), std::move(label));
}

bool is_primitive(const LatticeEmbedding& e) {
  const IntVector d = snf(e.basis).diagonal();
  return std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 1; });
}

LatticeEmbedding saturate(const LatticeEmbedding& e) {
  if (is_primitive(e)) return e;
  // Saturation = annihilator of the annihilator under the standard dot product.
  const IntMatrix annihilator = kernel_basis(e.basis.transpose());
  IntMatrix sat = kernel_basis(annihilator.rows() == 0
                                   ? IntMatrix(e.ambient.rank(), 0)
                                   : annihilator.transpose());
  return LatticeEmbedding(e.ambient, std::move(sat));
}

Complement orthogonal_complement(const LatticeEmbedding& e) {
  const std::size_t n = e.ambient.rank();
  IntMatrix pairing = e.rank() == 0 ? IntMatrix(n, 0)
                                    : e.ambient.gram() * e.basis.transpose();
  IntMatrix k = kernel_basis(pairing);
  const bool degenerate = rank(stack_rows(e.basis, k)) < e.rank() + k.rows();
  return Complement{LatticeEmbedding(e.ambient, std::move(k)), degenerate};
}

bool same_span(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) return false;
  const HermiteForm ha = hnf(a), hb = hnf(b);
  if (ha.rank != hb.rank) return false;
  return ha.h.submatrix(0, 0, ha.rank, a.cols()) == hb.h.submatrix(0, 0, hb.rank, b.cols());
}

Integer index_in_ambient(const IntMatrix& rows) {
  const IntVector d = snf(rows).diagonal();
  Integer idx = 1;
  for (const auto& x : d) idx *= x;
  return idx;
}

Overlattice overlattice(const IntegralLattice& m, const std::vector<RatVector>& glue) {
  const std::size_t n = m.rank();
  const RatMatrix g = to_rational(m.gram());
  for (const auto& v : glue) {
    if (v.size() != n) throw std::invalid_argument("overlattice: glue vector dimension");
    if (!integral(row_times(v, g))) {
      throw std::invalid_argument("overlattice: glue vector " + to_string(v) +
                                  " is not in the dual lattice");
    }
  }
  for (std::size_t i = 0; i < glue.size(); ++i) {
    const Rational q = mod_two(m.inner(glue[i], glue[i]));
    if (q != 0) {
      throw NonIsotropicGlue("overlattice: q" + to_string(glue[i]) + " = " + q.get_str() +
                                 " mod 2, glue is not isotropic",
                             q);
    }
    for (std::size_t j = i + 1; j < glue.size(); ++j) {
      const Rational b = mod_one(m.inner(glue[i], glue[j]));
      if (b != 0) {
        throw NonIsotropicGlue("overlattice: b" + to_string(glue[i]) + to_string(glue[j]) +
                                   " = " + b.get_str() + " mod 1, glue is not isotropic",
                               b);
      }
    }
  }

  Integer den = 1;
  for (const auto& v : glue) den = lcm(den, common_denominator(v));
  IntMatrix rows(n + glue.size(), n);
  for (std::size_t i = 0; i < n; ++i) rows(i, i) = den;
  for (std::size_t i = 0; i < glue.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) rows(n + i, j) = Rational(glue[i][j] * den).get_num();
  const IntMatrix h = hnf(rows).h.submatrix(0, 0, n, n);

  RatMatrix basis(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(i, j) = Rational(h(i, j), den);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(i, j).canonicalize();

  const RatMatrix rg = basis * g * basis.transpose();
  IntMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = rg(i, j).get_num();

  Integer full;
  mpz_pow_ui(full.get_mpz_t(), den.get_mpz_t(), n);
  return Overlattice{IntegralLattice(gram), basis, full / abs(det(h))};
}

IntMatrix sublattice_in_overlattice(const Overlattice& o) {
  const RatMatrix inv = inverse(o.basis);
  IntMatrix out(inv.rows(), inv.cols());
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j) out(i, j) = inv(i, j).get_num();
  return out;
}

GlueData glue_data(const IntegralLattice& over, const IntMatrix& m_basis,
                   const IntMatrix& perp_basis) {
  const std::size_t n = over.rank();
  const std::size_t r = m_basis.rows();
  if (r + perp_basis.rows() != n) {
    throw std::invalid_argument("glue_data: ranks of M and M^perp do not add up");
  }
  const IntMatrix cross = m_basis * over.gram() * perp_basis.transpose();
  for (const auto& x : cross.data())
    if (x != 0) throw std::invalid_argument("glue_data: M and M^perp are not orthogonal");

  GlueData out;
  out.sum_basis = stack_rows(m_basis, perp_basis);
  const Integer dp = det(out.sum_basis);
  if (dp == 0) throw std::invalid_argument("glue_data: M + M^perp has lower rank");
  out.index = abs(dp);
  out.m = IntegralLattice(gram_of(m_basis, over.gram()));
  out.m_perp = IntegralLattice(gram_of(perp_basis, over.gram()));
  out.dg_m = discriminant_group(out.m);
  out.dg_perp = discriminant_group(out.m_perp);

  // S = Z^n / Z^n P on L coordinates; generators are rows of v^{-1}.
  const SmithForm sf = snf(out.sum_basis);
  const RatMatrix vinv = inverse(to_rational(sf.v));
  const RatMatrix pinv = inverse(to_rational(out.sum_basis));
  std::vector<RatVector> s1s, s2s;
  for (std::size_t i = 0; i < n; ++i) {
    if (sf.s(i, i) <= 1) continue;
    out.divisors.push_back(sf.s(i, i));
    const RatVector y = row_times(vinv.row(i), pinv);
    GluePair pair;
    pair.s1.assign(y.begin(), y.begin() + r);
    pair.s2.assign(y.begin() + r, y.end());
    for (auto& x : pair.s1) x = mod_one(x);
    for (auto& x : pair.s2) x = mod_one(x);
    s1s.push_back(pair.s1);
    s2s.push_back(pair.s2);
    out.generators.push_back(std::move(pair));
  }
  out.s1_order = span_index(s1s, r);
  out.s2_order = span_index(s2s, n - r);
  if (out.s1_order != out.index || out.s2_order != out.index) {
    throw std::domain_error("glue_data: projection of S(L) is not injective");
  }
  return out;
}

GroupAction identity_action(const DiscriminantGroup& g) {
  return IntMatrix::identity(g.size());
}

GroupAction negation_action(const DiscriminantGroup& g) {
  IntMatrix a(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i) a(i, i) = g.divisors[i] - 1;
  return a;
}

GroupAction induced_action(const DiscriminantGroup& g, const IntMatrix& isometry) {
  IntMatrix a(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const IntVector c = g.coordinates(row_times(g.generators[i], isometry));
    for (std::size_t j = 0; j < g.size(); ++j) a(i, j) = c[j];
  }
  return a;
}

GroupAction compose(const GroupAction& first, const GroupAction& second,
                    const DiscriminantGroup& g) {
  IntMatrix c = first * second;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      mpz_fdiv_r(c(i, j).get_mpz_t(), c(i, j).get_mpz_t(), g.divisors[j].get_mpz_t());
  return c;
}

namespace {

RatVector apply(const GroupAction& action, const DiscriminantGroup& g, const RatVector& v) {
  if (g.trivial()) return RatVector(v.size());
  IntVector c = row_times(g.coordinates(v), action);
  for (std::size_t j = 0; j < c.size(); ++j)
    mpz_fdiv_r(c[j].get_mpz_t(), c[j].get_mpz_t(), g.divisors[j].get_mpz_t());
  return g.element(c);
}

}  // namespace

ExtensionCheck extends_to(const GroupAction& phibar, const GroupAction& psibar,
                          const GlueData& glue) {
  std::vector<RatVector> s1s, s2s;
  for (const auto& p : glue.generators) {
    s1s.push_back(p.s1);
    s2s.push_back(p.s2);
  }
  ExtensionCheck out{true, true, true};
  for (const auto& p : glue.generators) {
    const RatVector t1 = apply(phibar, glue.dg_m, p.s1);
    const RatVector t2 = apply(psibar, glue.dg_perp, p.s2);
    if (!in_span(s1s, t1)) out.preserves_s1 = false;
    if (!in_span(s2s, t2)) out.preserves_s2 = false;
    // (phibar s1, psibar s2) must lie in S itself, i.e. in L.
    RatVector y = t1;
    y.insert(y.end(), t2.begin(), t2.end());
    if (!integral(row_times(y, glue.sum_basis))) out.commutes = false;
  }
  return out;
}

DiscriminantGroup coprime_complement_disc(const DiscriminantGroup& dg_m,
                                          const DiscriminantGroup& dg_l) {
  if (gcd(dg_m.order(), dg_l.order()) != 1) {
    throw std::invalid_argument("coprime_complement_disc: orders " + dg_m.order().get_str() +
                                " and " + dg_l.order().get_str() + " are not coprime");
  }
  auto strip = [](DiscriminantGroup g) {
    g.generators.clear();
    g.coord_map = RatMatrix();
    return g;
  };
  return orthogonal_sum(strip(negated(dg_m)), strip(dg_l));
}

}  // namespace k3lat
