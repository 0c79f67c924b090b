#include <gtest/gtest.h>

#include "k3lat/arithmetic.hpp"
#include "k3lat/checker.hpp"
#include "oracles.hpp"

namespace k3lat {
namespace {

const Check& check_named(const CaseCertificate& c, const std::string& name) {
  for (const auto& ch : c.checks)
    if (ch.name == name) return ch;
  throw std::out_of_range(name);
}

IntVector witness_vector(const Check& c, const std::string& key) {
  return std::get<IntVector>(*find_witness(c, key));
}

Integer witness_integer(const Check& c, const std::string& key) {
  return std::get<Integer>(*find_witness(c, key));
}

TEST(CaseData, Embeddings) {
  EXPECT_EQ(case_embedding_basis(2, Integer(3)).row(0),
            (IntVector{1, 3, 0, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(case_embedding_basis(5, Integer(3)).row(0),
            (IntVector{1, -3, 0, 0, 0, 0, 0, 0, 0, 0}));
  const IntMatrix b4 = case_embedding_basis(4, Integer(1));
  ASSERT_EQ(b4.rows(), 4u);
  EXPECT_EQ(b4.row(2), (IntVector{0, 0, 0, 0, 1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(b4.row(3), (IntVector{0, 0, 0, 0, 0, 0, 0, 1, 0, 0}));
  EXPECT_THROW(case_embedding_basis(6, Integer(1)), std::invalid_argument);
  EXPECT_THROW(build_case(3, Integer(0)), std::invalid_argument);
}

TEST(BuildCase, SigmaTwoDOne) {
  const CaseCertificate c = build_case(2, Integer(1));
  ASSERT_TRUE(c.passed());
  EXPECT_EQ(c.complement_basis.rows(), 8u);
  EXPECT_EQ(witness_vector(check_named(c, "n_discriminant_group"), "computed_invariant_factors"),
            (IntVector{2, 2, 2, 2, 2, 2, 4, 4}));
  EXPECT_EQ(witness_integer(check_named(c, "n_min_norm"), "min_norm"), -4);
  EXPECT_EQ(witness_integer(check_named(c, "t_discriminant"), "det_t"), 16);
  EXPECT_EQ(witness_integer(check_named(c, "ns_discriminant"), "det_ns"), -16);
}

TEST(BuildCase, SigmaFiveDOne) {
  const CaseCertificate c = build_case(5, Integer(1));
  ASSERT_TRUE(c.passed());
  EXPECT_EQ(IntegralLattice(c.embedding_basis * c.ambient.gram() * c.embedding_basis.transpose()).gram(),
            IntMatrix::diagonal({-4, -4}));
  EXPECT_EQ(witness_vector(check_named(c, "n_discriminant_group"), "computed_invariant_factors"),
            (IntVector{4, 4}));
  EXPECT_EQ(witness_integer(check_named(c, "t_discriminant"), "det_t"), 1024);
  EXPECT_EQ(witness_integer(check_named(c, "ns_discriminant"), "det_ns"), -1024);
}

TEST(BuildCase, SigmaThreeDTwo) {
  const CaseCertificate c = build_case(3, Integer(2));
  ASSERT_TRUE(c.passed());
  // Divisor multiset {8, 4, 4, 4, 2, 2} as prime powers.
  IntVector e = elementary_divisors(
      witness_vector(check_named(c, "n_discriminant_group"), "computed_invariant_factors"));
  std::sort(e.begin(), e.end());
  EXPECT_EQ(e, (IntVector{2, 2, 4, 4, 4, 8}));
  EXPECT_EQ(witness_integer(check_named(c, "t_discriminant"), "det_t"), 512);
}

TEST(BuildCase, AllTwentyCasesPass) {
  for (int s = 2; s <= 5; ++s) {
    for (int d = 1; d <= 5; ++d) {
      const CaseCertificate c = build_case(s, Integer(d));
      for (const auto& ch : c.checks) EXPECT_TRUE(ch.passed) << s << "," << d << ": " << ch.name;
      // Displayed formula as a multiset of prime powers.
      IntVector shown = elementary_divisors(invariant_factors(displayed_divisor_formula(s, Integer(d))));
      IntVector got = elementary_divisors(
          witness_vector(check_named(c, "n_discriminant_group"), "computed_invariant_factors"));
      std::sort(shown.begin(), shown.end());
      std::sort(got.begin(), got.end());
      EXPECT_EQ(shown, got);
      const std::size_t expected_rank = s <= 3 ? 12 - 2 * s : 2 * s - 2;
      EXPECT_EQ(c.complement_basis.rows(), expected_rank);
      EXPECT_EQ(s % 2 == 0, !c.notes.empty());
    }
  }
}

TEST(BuildCase, SucceedsBeyondTheTestedRange) {
  EXPECT_TRUE(build_case(3, Integer(24)).passed());
  EXPECT_TRUE(build_case(4, Integer(31)).passed());
}

TEST(Verify, AcceptsFreshAndRejectsTampering) {
  CaseCertificate c = build_case(4, Integer(2));
  EXPECT_TRUE(verify_certificate(c).ok);

  CaseCertificate flipped = c;
  flipped.checks[3].passed = false;
  EXPECT_FALSE(verify_certificate(flipped).ok);

  CaseCertificate witness = c;
  for (auto& ch : witness.checks)
    if (ch.name == "t_discriminant") ch.witness[1].value = Integer(4097);
  EXPECT_FALSE(verify_certificate(witness).ok);

  CaseCertificate gram = c;
  gram.complement_gram(0, 0) += 1;
  EXPECT_FALSE(verify_certificate(gram).ok);

  CaseCertificate basis = c;
  basis.complement_basis(0, 0) += 2;
  EXPECT_FALSE(verify_certificate(basis).ok);

  CaseCertificate emb = c;
  emb.embedding_basis(0, 1) += 1;
  EXPECT_FALSE(verify_certificate(emb).ok);

  CaseCertificate dropped = c;
  dropped.checks.pop_back();
  EXPECT_FALSE(verify_certificate(dropped).ok);
}

TEST(Gamma2, Report) {
  const Gamma2Report r = gamma2_in_k3();
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name;
  EXPECT_EQ(r.complement.rows(), 12u);
  const IntegralLattice comp(r.complement_gram);
  EXPECT_EQ(discriminant_group(comp).divisors, IntVector(10, Integer(2)));
  EXPECT_EQ(signature(comp), (Signature{2, 10}));
}

TEST(Decide, Examples) {
  EXPECT_EQ(decide_enriques(19, 6).answer, Answer::No);
  EXPECT_EQ(decide_enriques(19, 6).sigma6_arth, false);
  const Verdict v = decide_enriques(11, 5);
  EXPECT_EQ(v.answer, Answer::Yes);
  EXPECT_EQ(v.d, 1);
  EXPECT_EQ(decide_enriques(7, 2).answer, Answer::Unknown);
  EXPECT_FALSE(decide_enriques(7, 2).d.has_value());
  const Verdict w = decide_enriques(13, 4);
  EXPECT_EQ(w.answer, Answer::Yes);
  EXPECT_EQ(w.d, 1);
  ASSERT_TRUE(w.arth_crosscheck.has_value());
  EXPECT_FALSE(w.arth_crosscheck->agree());
  EXPECT_EQ(decide_enriques(23, 2).answer, Answer::Unknown);
  EXPECT_EQ(decide_enriques(3, 1).reason, Reason::KummerSigma1);
  EXPECT_THROW(decide_enriques(2, 3), std::invalid_argument);
  EXPECT_THROW(decide_enriques(9, 3), std::invalid_argument);
  EXPECT_THROW(decide_enriques(13, 11), std::invalid_argument);
}

TEST(Decide, FailingCaseBuilderGivesUnknown) {
  const CaseBuilder broken = [](int s, const Integer& d) {
    CaseCertificate c = build_case(s, d);
    c.checks.front().passed = false;
    return c;
  };
  const Verdict v = decide_enriques(29, 3, broken);
  EXPECT_EQ(v.answer, Answer::Unknown);
}

TEST(DecideProperty, VerdictInvariants) {
  for (long p = 3; p <= 200; p += 2) {
    if (!oracle::is_prime_trial(p)) continue;
    EXPECT_EQ(decide_enriques(p, 1).answer, Answer::Yes);
    for (int s = 6; s <= 10; ++s) EXPECT_EQ(decide_enriques(p, s).answer, Answer::No);
    for (int s = 2; s <= 5; ++s) {
      const Verdict v = decide_enriques(p, s);
      if (v.answer != Answer::Yes) continue;
      ASSERT_TRUE(v.d.has_value());
      ASSERT_EQ(find_d(p, s), v.d);
      ASSERT_LT(8 * *v.d, p);
      ASSERT_TRUE(v.certificate && v.certificate->passed());
      ASSERT_TRUE(verify_certificate(*v.certificate).ok);
    }
  }
}

TEST(Survey, SmallTables) {
  const SurveyReport r31 = survey(31);
  EXPECT_TRUE(r31.pattern_holds());
  for (const auto& v : r31.rows) {
    if (v.p == 29 || v.p == 31) EXPECT_EQ(v.answer == Answer::Yes, v.sigma <= 5);
    if (v.p == 23) {
      const Answer want = (v.sigma == 1 || v.sigma == 3 || v.sigma == 5) ? Answer::Yes
                          : v.sigma <= 4                                   ? Answer::Unknown
                                                                           : Answer::No;
      EXPECT_EQ(v.answer, want) << v.sigma;
    }
  }
  const SurveyReport r11 = survey(11);
  for (const auto& v : r11.rows) {
    if (v.p != 11) continue;
    if (v.sigma == 1 || v.sigma == 3 || v.sigma == 5) EXPECT_EQ(v.answer, Answer::Yes);
    if (v.sigma == 2 || v.sigma == 4) EXPECT_EQ(v.answer, Answer::Unknown);
  }
  EXPECT_THROW(survey(2), std::invalid_argument);
}

TEST(Survey, OrderedRowsUpTo200) {
  const SurveyReport r = survey(200);
  EXPECT_TRUE(r.pattern_holds());
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    const auto& a = r.rows[i - 1];
    const auto& b = r.rows[i];
    ASSERT_TRUE(a.p < b.p || (a.p == b.p && a.sigma < b.sigma));
  }
  for (const auto& v : r.rows)
    if (v.p == 19 || v.p > 23) EXPECT_NE(v.answer, Answer::Unknown) << v.p << " " << v.sigma;
}

}  // namespace
}  // namespace k3lat
