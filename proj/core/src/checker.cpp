#include "k3lat/checker.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

#include "k3lat/arithmetic.hpp"
#include "k3lat/enumeration.hpp"

namespace k3lat {

namespace {

constexpr std::size_t kAmbientRank = 10;
constexpr std::size_t kK3Rank = 22;
// LambdaK3 coordinates: u1 v1 u2 v2 u3 v3 | E8 (6..13) | E8 (14..21).
constexpr std::size_t kU1 = 0, kV1 = 1, kU2 = 2, kV2 = 3, kU3 = 4, kV3 = 5;
constexpr std::size_t kE8a = 6, kE8b = 14;

void require_case(int sigma, const Integer& d) {
  if (sigma < 2 || sigma > 5) throw std::invalid_argument("sigma must be in 2..5");
  if (d < 1) throw std::invalid_argument("d must be a positive integer");
}

Integer pow_int(long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

unsigned long t_exponent(int sigma) {
  switch (sigma) {
    case 2: return 2;
    case 3: return 4;
    default: return 5;
  }
}

IntVector flatten(const IntMatrix& m) { return m.data(); }

IntVector invariant_factors_of(const IntMatrix& m) {
  IntVector out;
  for (const auto& x : snf(m).diagonal()) out.push_back(x);
  return out;
}

bool all_ones(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 1; });
}

IntMatrix rows_of(const IntMatrix& m, const std::vector<IntVector>& extra_front) {
  std::vector<IntVector> rows = extra_front;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return IntMatrix::from_rows(rows, m.cols());
}

// Coordinates of each row of `vectors` on the primitive family `basis`.
std::optional<IntMatrix> coordinates_on(const IntMatrix& basis, const IntMatrix& vectors) {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < vectors.rows(); ++i) {
    auto c = solve_integer(basis, vectors.row(i));
    if (!c) return std::nullopt;
    out.push_back(*c);
  }
  return IntMatrix::from_rows(out, basis.rows());
}

Check make_check(std::string name, bool passed, Witness w) {
  return Check{std::move(name), passed, std::move(w)};
}

// All checks of a case, computed from the three matrices alone.
std::vector<Check> run_checks(int sigma, const Integer& d, const IntegralLattice& ambient,
                              const IntMatrix& emb, const IntMatrix& comp) {
  std::vector<Check> checks;
  const IntMatrix& g = ambient.gram();
  const IntegralLattice sub(emb * g * emb.transpose());
  const IntegralLattice cmp(comp.rows() ? comp * g * comp.transpose() : IntMatrix());
  const bool n_is_complement = sigma <= 3;
  const IntegralLattice& n_side = n_is_complement ? cmp : sub;
  const IntegralLattice& m_side = n_is_complement ? sub : cmp;
  const IntMatrix& n_basis = n_is_complement ? comp : emb;
  const IntMatrix& m_basis = n_is_complement ? emb : comp;
  const std::size_t n_rank = static_cast<std::size_t>(12 - 2 * sigma);

  {
    const IntVector expected = case_sublattice_diagonal(sigma, d);
    checks.push_back(make_check("embedding_gram", sub.gram() == IntMatrix::diagonal(expected),
                                {{"expected_diagonal", expected},
                                 {"induced_gram", flatten(sub.gram())}}));
  }
  {
    const IntVector f = invariant_factors_of(emb);
    checks.push_back(make_check("embedding_primitive", all_ones(f),
                                {{"basis_invariant_factors", f}}));
  }
  {
    const IntMatrix pairing = comp.rows() ? emb * g * comp.transpose() : IntMatrix();
    const bool zero = std::all_of(pairing.data().begin(), pairing.data().end(),
                                  [](const Integer& x) { return x == 0; });
    checks.push_back(make_check("complement_orthogonal", zero, {{"pairing_zero", zero}}));
  }
  {
    const IntVector f = comp.rows() ? invariant_factors_of(comp) : IntVector{};
    checks.push_back(make_check("complement_primitive", all_ones(f),
                                {{"basis_invariant_factors", f}}));
  }
  {
    const Integer r = static_cast<long>(comp.rows());
    const Integer expected = static_cast<long>(sigma <= 3 ? 12 - 2 * sigma : 2 * sigma - 2);
    checks.push_back(make_check("complement_rank", r == expected,
                                {{"rank", r}, {"expected", expected}}));
  }
  {
    const Integer ds = discriminant(sub), dc = discriminant(cmp), da = discriminant(ambient);
    const IntMatrix both = stack_rows(emb, comp);
    const Integer index = both.rows() == both.cols() ? Integer(abs(det(both))) : Integer(0);
    const bool ok = index != 0 && abs(ds) * abs(dc) == abs(da) * index * index;
    checks.push_back(make_check("complement_index_identity", ok,
                                {{"det_sublattice", ds},
                                 {"det_complement", dc},
                                 {"det_ambient", da},
                                 {"index", index}}));
  }

  const bool n_ok_rank = n_side.rank() == n_rank && discriminant(n_side) != 0;
  {
    Signature s{};
    if (n_ok_rank) s = signature(n_side);
    const bool ok = n_ok_rank && s.plus == 0 && s.minus == n_rank;
    checks.push_back(make_check("n_negative_definite", ok,
                                {{"rank", Integer(static_cast<long>(n_side.rank()))},
                                 {"plus", Integer(static_cast<long>(s.plus))},
                                 {"minus", Integer(static_cast<long>(s.minus))}}));
  }
  const bool n_definite = n_ok_rank && is_negative_definite(n_side);
  const bool congruence = norms_divisible_by_four(n_side);
  {
    const IntMatrix& ng = n_side.gram();
    bool even = true, div4 = true;
    for (std::size_t i = 0; i < ng.rows(); ++i) {
      if (!mpz_divisible_ui_p(ng(i, i).get_mpz_t(), 4)) div4 = false;
      for (std::size_t j = 0; j < ng.cols(); ++j)
        if (!mpz_even_p(ng(i, j).get_mpz_t())) even = false;
    }
    checks.push_back(make_check("n_norm_congruence", congruence,
                                {{"gram_even", even}, {"diagonal_divisible_by_4", div4}}));
  }
  {
    Integer roots = -1, total = -1;
    if (n_definite) {
      const ShortVectorReport r = short_vectors(n_side, Integer(2));
      const auto it = r.counts.find(Integer(-2));
      roots = it == r.counts.end() ? 0 : static_cast<long>(it->second);
      total = static_cast<long>(r.vectors.size());
    }
    // Enumeration and the congruence shortcut must agree.
    const bool ok = roots == 0 && congruence;
    checks.push_back(make_check("n_root_count", ok,
                                {{"bound", Integer(2)},
                                 {"count_norm_minus_2", roots},
                                 {"vectors_within_bound", total}}));
  }
  {
    Integer m = 0;
    if (n_definite) m = min_norm(n_side);
    checks.push_back(make_check("n_min_norm", n_definite && m <= -4, {{"min_norm", m}}));
  }
  {
    const IntVector formula = displayed_divisor_formula(sigma, d);
    const IntVector expected = invariant_factors(formula);
    IntVector computed;
    if (discriminant(n_side) != 0) computed = discriminant_group(n_side).divisors;
    checks.push_back(make_check("n_discriminant_group", computed == expected,
                                {{"displayed_formula", formula},
                                 {"expected_invariant_factors", expected},
                                 {"computed_invariant_factors", computed}}));
  }

  const IntegralLattice t = direct_sum(builtin(Builtin::U), m_side);
  {
    Signature s{};
    const bool nondeg = discriminant(m_side) != 0;
    if (nondeg) s = signature(m_side);
    const std::size_t expected_minus = static_cast<std::size_t>(2 * sigma - 3);
    checks.push_back(make_check("m_signature",
                                nondeg && s.plus == 1 && s.minus == expected_minus,
                                {{"plus", Integer(static_cast<long>(s.plus))},
                                 {"minus", Integer(static_cast<long>(s.minus))},
                                 {"expected_minus", Integer(static_cast<long>(expected_minus))}}));
  }
  {
    const Integer dm = discriminant(m_side), dt = discriminant(t);
    const Integer expected = expected_t_discriminant(sigma, d);
    Signature s{};
    if (dt != 0) s = signature(t);
    const bool ok = dt == expected && s.plus == 2 &&
                    s.minus == static_cast<std::size_t>(2 * sigma - 2);
    checks.push_back(make_check("t_discriminant", ok,
                                {{"det_m", dm},
                                 {"det_t", dt},
                                 {"expected", expected},
                                 {"t_plus", Integer(static_cast<long>(s.plus))},
                                 {"t_minus", Integer(static_cast<long>(s.minus))}}));
  }

  // Neron-Severi lattice as the complement of T = U3 + iota(M) in LambdaK3.
  const IntegralLattice k3 = builtin(Builtin::LambdaK3);
  const IntMatrix iota = ambient_into_k3();
  IntVector u3(kK3Rank), v3(kK3Rank);
  u3[kU3] = 1;
  v3[kV3] = 1;
  const IntMatrix t_in_k3 = rows_of(m_basis * iota, {u3, v3});
  const LatticeEmbedding ns_emb = orthogonal_complement(LatticeEmbedding(k3, t_in_k3)).embedding;
  const IntegralLattice ns = ns_emb.sublattice();
  const Integer d_ns = discriminant(ns);
  {
    const Integer expected = -expected_t_discriminant(sigma, d);
    Signature s{};
    if (d_ns != 0) s = signature(ns);
    const bool ok = d_ns == expected && ns.rank() == static_cast<std::size_t>(22 - 2 * sigma) &&
                    s.plus == 1 && s.minus == static_cast<std::size_t>(21 - 2 * sigma);
    checks.push_back(make_check("ns_discriminant", ok,
                                {{"rank", Integer(static_cast<long>(ns.rank()))},
                                 {"plus", Integer(static_cast<long>(s.plus))},
                                 {"minus", Integer(static_cast<long>(s.minus))},
                                 {"det_ns", d_ns},
                                 {"expected", expected}}));
  }
  {
    const auto g2 = coordinates_on(ns_emb.basis, gamma2_into_k3());
    const auto nn = coordinates_on(ns_emb.basis, n_basis * iota);
    bool complement_is_n = false;
    Integer index = 0;
    IntVector glue_factors;
    ExtensionCheck ext{};
    bool glue_ok = false;
    if (g2 && nn && d_ns != 0) {
      const LatticeEmbedding g2_in_ns(ns, *g2);
      const IntMatrix perp = orthogonal_complement(g2_in_ns).embedding.basis;
      complement_is_n = same_span(perp, *nn);
      try {
        const GlueData glue = glue_data(ns, *g2, *nn);
        index = glue.index;
        glue_factors = glue.divisors;
        ext = extends_to(identity_action(glue.dg_m), negation_action(glue.dg_perp), glue);
        const Integer lhs = index * index * abs(d_ns);
        const Integer rhs = abs(discriminant(g2_in_ns.sublattice())) * abs(discriminant(n_side));
        glue_ok = lhs == rhs;
      } catch (const std::exception&) {
        glue_ok = false;
      }
    }
    checks.push_back(make_check("ns_glue", complement_is_n && glue_ok,
                                {{"gamma2_complement_is_n", complement_is_n},
                                 {"index", index},
                                 {"glue_invariant_factors", glue_factors}}));
    checks.push_back(make_check("involution_extends", glue_ok && ext.extends(),
                                {{"preserves_s1", ext.preserves_s1},
                                 {"preserves_s2", ext.preserves_s2},
                                 {"commutes", ext.commutes}}));
  }
  return checks;
}

}  // namespace

const WitnessValue* find_witness(const Check& check, const std::string& key) {
  for (const auto& e : check.witness)
    if (e.key == key) return &e.value;
  return nullptr;
}

IntegralLattice case_ambient() {
  const IntegralLattice u2 = twist(builtin(Builtin::U), 2);
  const IntegralLattice e82 = twist(builtin(Builtin::E8), 2);
  return direct_sum(u2, e82).relabeled("U(2)+E8(2)");
}

IntMatrix case_embedding_basis(int sigma, const Integer& d) {
  require_case(sigma, d);
  const std::size_t x = 0, y = 1;
  auto e = [](int i) { return static_cast<std::size_t>(1 + i); };  // e1 -> column 2
  const std::size_t rows = (sigma == 2 || sigma == 5) ? 2 : 4;
  IntMatrix b(rows, kAmbientRank);
  b(0, x) = 1;
  b(0, y) = (sigma == 2 || sigma == 3) ? Integer(d) : Integer(-d);
  b(1, e(1)) = 1;
  if (rows == 4) {
    b(2, e(3)) = 1;
    b(3, e(6)) = 1;
  }
  return b;
}

std::vector<std::string> case_embedding_images(int sigma, const Integer& d) {
  require_case(sigma, d);
  const std::string sign = (sigma == 2 || sigma == 3) ? "+" : "-";
  std::vector<std::string> out{"f1 -> x " + sign + " " + d.get_str() + "y", "f2 -> e1"};
  if (sigma == 3 || sigma == 4) {
    out.push_back("f3 -> e3");
    out.push_back("f4 -> e6");
  }
  return out;
}

IntVector case_sublattice_diagonal(int sigma, const Integer& d) {
  require_case(sigma, d);
  const Integer first = (sigma <= 3) ? Integer(4 * d) : Integer(-4 * d);
  IntVector diag{first, Integer(-4)};
  if (sigma == 3 || sigma == 4) {
    diag.push_back(Integer(-4));
    diag.push_back(Integer(-4));
  }
  return diag;
}

IntVector displayed_divisor_formula(int sigma, const Integer& d) {
  require_case(sigma, d);
  IntVector f{Integer(4 * d)};
  const int fours = (sigma == 2 || sigma == 5) ? 1 : 3;
  const int twos = sigma == 2 ? 6 : sigma == 3 ? 2 : 0;
  for (int i = 0; i < fours; ++i) f.push_back(Integer(4));
  for (int i = 0; i < twos; ++i) f.push_back(Integer(2));
  return f;
}

Integer expected_t_discriminant(int sigma, const Integer& d) {
  require_case(sigma, d);
  return pow_int(4, t_exponent(sigma)) * d;
}

IntMatrix ambient_into_k3() {
  IntMatrix m(kAmbientRank, kK3Rank);
  m(0, kU1) = 1;
  m(0, kU2) = -1;
  m(1, kV1) = 1;
  m(1, kV2) = -1;
  for (std::size_t i = 0; i < 8; ++i) {
    m(2 + i, kE8a + i) = 1;
    m(2 + i, kE8b + i) = -1;
  }
  return m;
}

IntMatrix gamma2_into_k3() {
  IntMatrix m(kAmbientRank, kK3Rank);
  m(0, kU1) = 1;
  m(0, kU2) = 1;
  m(1, kV1) = 1;
  m(1, kV2) = 1;
  for (std::size_t i = 0; i < 8; ++i) {
    m(2 + i, kE8a + i) = 1;
    m(2 + i, kE8b + i) = 1;
  }
  return m;
}

bool CaseCertificate::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

CaseCertificate build_case(int sigma, const Integer& d) {
  require_case(sigma, d);
  CaseCertificate cert;
  cert.sigma = sigma;
  cert.d = d;
  cert.ambient = case_ambient();
  cert.embedding_basis = case_embedding_basis(sigma, d);
  cert.images = case_embedding_images(sigma, d);
  const Complement c =
      orthogonal_complement(LatticeEmbedding(cert.ambient, cert.embedding_basis));
  cert.complement_basis = c.embedding.basis;
  cert.complement_gram = c.embedding.sublattice().gram();
  cert.checks = run_checks(sigma, d, cert.ambient, cert.embedding_basis, cert.complement_basis);
  cert.cited = {
      "U + M embeds primitively into LambdaK3 uniquely up to isometry (even, signature "
      "(2, 2sigma-2)), so a complex K3 surface with transcendental lattice U + M exists by "
      "surjectivity of the period map",
      "NS(X) of rank 22-2sigma and discriminant -4^a d embeds primitively into the "
      "supersingular Neron-Severi lattice of Artin invariant sigma when the Arth condition "
      "holds at maximal rank",
      "the orthogonal complement K of that embedding has discriminant group "
      "(Z/p)^(2sigma) + l(NS), so its form is divisible by p; with p > 8d every vector of "
      "the glued lattice outside N has norm below -2",
  };
  if (sigma % 2 == 0) {
    cert.notes.push_back(
        "parameter rule for even sigma: -d is a square mod p; the Arth condition applied to "
        "d(NS) = -4^a d asks (d/p) = -1 instead, and the two agree only for p = 3 mod 4");
  }
  return cert;
}

VerificationResult verify_certificate(const CaseCertificate& cert) {
  VerificationResult r;
  auto fail = [&](std::string msg) { r.failures.push_back(std::move(msg)); };
  if (cert.sigma < 2 || cert.sigma > 5 || cert.d < 1) {
    fail("sigma/d out of range");
    return r;
  }
  if (!(cert.ambient.gram() == case_ambient().gram())) fail("ambient Gram is not U(2)+E8(2)");
  if (!(cert.embedding_basis == case_embedding_basis(cert.sigma, cert.d))) {
    fail("embedding basis differs from the prescribed images");
  }
  if (cert.complement_basis.cols() != kAmbientRank ||
      cert.complement_basis.rows() + cert.embedding_basis.rows() != kAmbientRank) {
    fail("complement basis has the wrong shape");
    return r;
  }
  if (!r.failures.empty()) return r;

  const IntMatrix& g = cert.ambient.gram();
  const IntMatrix& comp = cert.complement_basis;
  if (!(comp * g * comp.transpose() == cert.complement_gram)) {
    fail("stored complement Gram does not match its basis");
  }
  if (rank(comp) != comp.rows()) {
    fail("complement basis rows are dependent");
    return r;
  }

  const std::vector<Check> fresh =
      run_checks(cert.sigma, cert.d, cert.ambient, cert.embedding_basis, comp);
  if (fresh.size() != cert.checks.size()) fail("check list length differs");
  for (std::size_t i = 0; i < std::min(fresh.size(), cert.checks.size()); ++i) {
    const Check& want = fresh[i];
    const Check& got = cert.checks[i];
    if (want.name != got.name) {
      fail("check " + std::to_string(i) + ": expected '" + want.name + "', found '" + got.name + "'");
      continue;
    }
    if (want.passed != got.passed) fail(want.name + ": stored pass flag differs from recomputation");
    if (!(want.witness == got.witness)) fail(want.name + ": witness data differs from recomputation");
    if (!want.passed) fail(want.name + ": check fails");
  }
  r.ok = r.failures.empty();
  return r;
}

bool Gamma2Report::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Gamma2Report gamma2_in_k3() {
  Gamma2Report rep;
  const IntegralLattice k3 = builtin(Builtin::LambdaK3);
  const IntegralLattice gamma2 = direct_sum(twist(builtin(Builtin::U), 2),
                                            twist(builtin(Builtin::E8), 2));
  rep.embedding = gamma2_into_k3();
  const LatticeEmbedding emb(k3, rep.embedding);
  {
    const bool iso = emb.sublattice().gram() == gamma2.gram();
    rep.checks.push_back(make_check("embedding_isometric", iso, {{"induced_is_gamma2", iso}}));
  }
  {
    const IntVector f = invariant_factors_of(rep.embedding);
    rep.checks.push_back(make_check("embedding_primitive", all_ones(f),
                                    {{"basis_invariant_factors", f}}));
  }
  const Complement comp = orthogonal_complement(emb);
  rep.complement = comp.embedding.basis;
  const IntegralLattice c = comp.embedding.sublattice();
  rep.complement_gram = c.gram();
  const IntegralLattice reference =
      direct_sum(direct_sum(builtin(Builtin::U), twist(builtin(Builtin::U), 2)),
                 twist(builtin(Builtin::E8), 2));
  {
    const Integer r = static_cast<long>(c.rank());
    rep.checks.push_back(make_check("complement_rank", r == 12 && !comp.degenerate,
                                    {{"rank", r}, {"expected", Integer(12)}}));
  }
  {
    const Signature s = signature(c);
    rep.checks.push_back(make_check("complement_signature", s.plus == 2 && s.minus == 10,
                                    {{"plus", Integer(static_cast<long>(s.plus))},
                                     {"minus", Integer(static_cast<long>(s.minus))}}));
  }
  {
    const Integer dc = discriminant(c), dr = discriminant(reference);
    rep.checks.push_back(make_check("complement_discriminant", dc == dr,
                                    {{"det_complement", dc}, {"det_reference", dr}}));
  }
  const DiscriminantGroup dg_c = discriminant_group(c);
  {
    const IntVector ref = discriminant_group(reference).divisors;
    rep.checks.push_back(make_check("complement_discriminant_group", dg_c.divisors == ref,
                                    {{"computed_invariant_factors", dg_c.divisors},
                                     {"reference_invariant_factors", ref}}));
  }
  {
    const bool even = is_even(c);
    rep.checks.push_back(make_check("complement_even", even, {{"even", even}}));
  }
  {
    // The explicit copy of U + U(2) + E8(2) spans the whole complement.
    IntVector u3(kK3Rank), v3(kK3Rank);
    u3[kU3] = 1;
    v3[kV3] = 1;
    const IntMatrix explicit_rows = rows_of(ambient_into_k3(), {u3, v3});
    const bool eq = same_span(explicit_rows, rep.complement) &&
                    explicit_rows * k3.gram() * explicit_rows.transpose() == reference.gram();
    rep.checks.push_back(make_check("complement_matches_reference_basis", eq,
                                    {{"spans_equal", eq}}));
  }
  {
    const Complement back = orthogonal_complement(comp.embedding);
    const bool eq = same_span(back.embedding.basis, saturate(emb).basis);
    rep.checks.push_back(make_check("double_complement", eq, {{"equals_saturation", eq}}));
  }
  {
    Integer index = 0, s1 = 0, s2 = 0;
    IntVector factors;
    ExtensionCheck ext{};
    bool injective = false;
    try {
      const GlueData glue = glue_data(k3, rep.embedding, rep.complement);
      index = glue.index;
      s1 = glue.s1_order;
      s2 = glue.s2_order;
      factors = glue.divisors;
      injective = true;
      ext = extends_to(identity_action(glue.dg_m), negation_action(glue.dg_perp), glue);
    } catch (const std::exception&) {
      injective = false;
    }
    const bool ok = injective && index == 1024;
    rep.checks.push_back(make_check("glue_group", ok,
                                    {{"order", index},
                                     {"s1_order", s1},
                                     {"s2_order", s2},
                                     {"invariant_factors", factors}}));
    rep.checks.push_back(make_check("involution_extends", injective && ext.extends(),
                                    {{"preserves_s1", ext.preserves_s1},
                                     {"preserves_s2", ext.preserves_s2},
                                     {"commutes", ext.commutes}}));
  }
  {
    // Coprime discriminants (1024 and 1): the complement's group is l(Gamma(2))
    // with negated form.
    const DiscriminantGroup predicted =
        coprime_complement_disc(discriminant_group(gamma2), discriminant_group(k3));
    const bool same = same_group_structure(predicted, dg_c);
    rep.checks.push_back(make_check("coprime_complement_crosscheck", same,
                                    {{"predicted_invariant_factors", predicted.divisors},
                                     {"computed_invariant_factors", dg_c.divisors}}));
  }
  return rep;
}

std::string to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "Yes";
    case Answer::No: return "No";
    case Answer::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(Reason r) {
  switch (r) {
    case Reason::KummerSigma1: return "KummerSigma1";
    case Reason::ConstructedCase: return "ConstructedCase";
    case Reason::SigmaBoundExceeded: return "SigmaBoundExceeded";
    case Reason::NoValidD: return "NoValidD";
  }
  return "?";
}

Verdict decide_enriques(std::int64_t p, int sigma) {
  return decide_enriques(p, sigma, [](int s, const Integer& d) { return build_case(s, d); });
}

Verdict decide_enriques(std::int64_t p, int sigma, const CaseBuilder& build) {
  require_odd_prime(p);
  if (sigma < 1 || sigma > 10) throw std::invalid_argument("sigma must be in 1..10");
  Verdict v;
  v.p = p;
  v.sigma = sigma;

  if (sigma == 1) {
    v.answer = Answer::Yes;
    v.reason = Reason::KummerSigma1;
    v.note = "cited: the Artin invariant 1 surface is the Kummer surface of a product of two "
             "supersingular elliptic curves, which carries an Enriques involution";
    return v;
  }
  const FrobeniusBounds bounds = frobenius_bounds_enriques();
  if (sigma > bounds.max_artin) {
    v.answer = Answer::No;
    v.reason = Reason::SigmaBoundExceeded;
    if (sigma == 6) {
      v.sigma6_arth = arth(p, 6, Integer(-1024));
      v.note = "rank 10 = 22-2*6 forces the Arth condition, which fails: 2^10 is a square";
    } else {
      v.note = "rank 10 exceeds 22-2*sigma = " + std::to_string(22 - 2 * sigma);
    }
    return v;
  }

  const auto d = find_d(p, sigma);
  if (!d) {
    v.answer = Answer::Unknown;
    v.reason = Reason::NoValidD;
    v.note = "no d with 8d < p satisfies the residue condition; the construction gives no "
             "certificate here";
    return v;
  }
  v.d = d;
  ArthCrosscheck ac;
  ac.d = *d;
  ac.residue_rule = legendre(Integer(-*d), p) == (sigma % 2 == 0 ? 1 : -1);
  ac.ns_discriminant = -expected_t_discriminant(sigma, Integer(*d));
  ac.arth_on_ns = arth(p, sigma, ac.ns_discriminant);
  v.arth_crosscheck = ac;

  CaseCertificate cert = build(sigma, Integer(*d));
  const bool bound = verify_norm_bound(p, *d);
  if (!cert.passed() || !bound) {
    v.answer = Answer::Unknown;
    v.reason = Reason::NoValidD;
    v.note = cert.passed() ? "norm bound p > 8d fails" : "case certificate has failing checks";
    v.certificate = std::move(cert);
    return v;
  }
  v.answer = Answer::Yes;
  v.reason = Reason::ConstructedCase;
  v.certificate = std::move(cert);
  if (!ac.agree()) {
    v.note = "Arth on d(NS) disagrees with the residue rule for this p (p = 1 mod 4, even sigma)";
  }
  return v;
}

SurveyReport survey(std::int64_t pmax) {
  if (pmax < 3) throw std::invalid_argument("survey: pmax must be at least 3");
  SurveyReport rep;
  rep.pmax = pmax;
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 3; p <= pmax; p += 2)
    if (is_prime(p)) primes.push_back(p);

  // Each (sigma, d) case is built once, concurrently.
  std::set<std::pair<int, std::int64_t>> needed;
  for (auto p : primes)
    for (int s = 2; s <= 5; ++s)
      if (auto d = find_d(p, s)) needed.insert({s, *d});
  std::map<std::pair<int, std::int64_t>, std::future<CaseCertificate>> pending;
  for (const auto& key : needed) {
    pending.emplace(key, std::async(std::launch::async, [key] {
                      return build_case(key.first, Integer(key.second));
                    }));
  }
  std::map<std::pair<int, std::int64_t>, CaseCertificate> built;
  for (auto& [key, fut] : pending) built.emplace(key, fut.get());
  const CaseBuilder cached = [&built](int s, const Integer& d) {
    return built.at({s, d.get_si()});
  };

  for (auto p : primes)
    for (int s = 1; s <= 10; ++s) rep.rows.push_back(decide_enriques(p, s, cached));

  for (const auto& v : rep.rows) {
    if (!(v.p == 19 || v.p > 23)) continue;
    const Answer want = v.sigma <= 5 ? Answer::Yes : Answer::No;
    if (v.answer != want) {
      rep.pattern_violations.push_back("p=" + std::to_string(v.p) + " sigma=" +
                                       std::to_string(v.sigma) + ": " + to_string(v.answer));
    }
  }
  return rep;
}

}  // namespace k3lat
