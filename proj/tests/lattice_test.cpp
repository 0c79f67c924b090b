#include <gtest/gtest.h>

#include <random>

#include "k3lat/discriminant_group.hpp"
#include "k3lat/lattice.hpp"
#include "oracles.hpp"

namespace k3lat {
namespace {

IntegralLattice gamma2() {
  return direct_sum(twist(builtin(Builtin::U), 2), twist(builtin(Builtin::E8), 2));
}

TEST(Builtin, StandardForms) {
  EXPECT_EQ(builtin(Builtin::U).gram(), (IntMatrix{{0, 1}, {1, 0}}));
  const IntegralLattice g = builtin(Builtin::Gamma);
  EXPECT_EQ(g.rank(), 10u);
  EXPECT_EQ(discriminant(g), -1);
  const IntegralLattice k3 = builtin(Builtin::LambdaK3);
  EXPECT_EQ(k3.rank(), 22u);
  EXPECT_EQ(signature(k3), (Signature{3, 19}));
  EXPECT_EQ(builtin("E8"), builtin(Builtin::E8));
  EXPECT_THROW(builtin("E7"), std::invalid_argument);
}

TEST(Builtin, E8IsHalfOfTheDisplayedTwist) {
  const IntMatrix displayed{{-4, 2, 0, 0, 0, 0, 0, 0}, {2, -4, 2, 0, 0, 0, 0, 0},
                            {0, 2, -4, 2, 2, 0, 0, 0}, {0, 0, 2, -4, 0, 0, 0, 0},
                            {0, 0, 2, 0, -4, 2, 0, 0}, {0, 0, 0, 0, 2, -4, 2, 0},
                            {0, 0, 0, 0, 0, 2, -4, 2}, {0, 0, 0, 0, 0, 0, 2, -4}};
  EXPECT_EQ(twist(builtin(Builtin::E8), 2).gram(), displayed);
  EXPECT_EQ(signature(builtin(Builtin::E8)), (Signature{0, 8}));
  EXPECT_TRUE(is_even(twist(builtin(Builtin::E8), 2)));
}

TEST(Constructors, DiagonalAndTwist) {
  EXPECT_EQ(diag_lattice({Integer(4), Integer(-4)}).gram(), (IntMatrix{{4, 0}, {0, -4}}));
  EXPECT_EQ(diag_lattice({-4, -4, -4, -4}).gram(), IntMatrix::diagonal({-4, -4, -4, -4}));
  EXPECT_THROW(diag_lattice({Integer(1), Integer(0)}), std::invalid_argument);
  EXPECT_EQ(twist(builtin(Builtin::U), 2).gram(), (IntMatrix{{0, 2}, {2, 0}}));
  EXPECT_EQ(twist(builtin(Builtin::E8), 1), builtin(Builtin::E8));
  EXPECT_THROW(twist(builtin(Builtin::U), 0), std::invalid_argument);
  EXPECT_THROW(IntegralLattice(IntMatrix{{0, 1}, {2, 0}}), std::invalid_argument);
}

TEST(Constructors, DirectSum) {
  const IntegralLattice g = direct_sum(builtin(Builtin::U), builtin(Builtin::E8));
  EXPECT_EQ(g, builtin(Builtin::Gamma));
  EXPECT_EQ(discriminant(gamma2()), -1024);
  EXPECT_EQ(gamma2().rank(), 10u);
  EXPECT_EQ(direct_sum(g, IntegralLattice()), g);
}

TEST(Invariants, Signature) {
  EXPECT_EQ(signature(builtin(Builtin::U)), (Signature{1, 1}));
  EXPECT_EQ(signature(gamma2()), (Signature{1, 9}));
  EXPECT_THROW(signature(IntegralLattice(IntMatrix{{0, 0}, {0, 1}})), std::domain_error);
}

TEST(Invariants, Evenness) {
  EXPECT_TRUE(is_even(builtin(Builtin::U)));
  EXPECT_FALSE(is_even(diag_lattice({1})));
}

TEST(Invariants, Discriminant) {
  EXPECT_EQ(discriminant(builtin(Builtin::LambdaK3)), -1);
  EXPECT_EQ(discriminant(diag_lattice({Integer(12), Integer(-4)})), -48);
}

TEST(DiscriminantGroupTest, Unimodular) {
  EXPECT_TRUE(discriminant_group(builtin(Builtin::Gamma)).trivial());
}

TEST(DiscriminantGroupTest, TwistedHyperbolicPlane) {
  const DiscriminantGroup g = discriminant_group(twist(builtin(Builtin::U), 2));
  ASSERT_EQ(g.divisors, (IntVector{2, 2}));
  EXPECT_EQ(g.qvals, (RatVector{0, 0}));
  EXPECT_EQ(g.bform(0, 1), Rational(1, 2));
  EXPECT_EQ(g.bform(0, 0), 0);
  // Generators x/2 and y/2 (in some order).
  for (const auto& gen : g.generators) {
    EXPECT_EQ(common_denominator(gen), 2);
    EXPECT_EQ(gen[0] + gen[1], Rational(1, 2));
  }
}

TEST(DiscriminantGroupTest, Gamma2) {
  const DiscriminantGroup g = discriminant_group(gamma2());
  EXPECT_EQ(g.divisors, IntVector(10, Integer(2)));
  EXPECT_EQ(g.order(), 1024);
}

TEST(DiscriminantGroupTest, CyclicWithForm) {
  const DiscriminantGroup g = discriminant_group(diag_lattice({Integer(-12)}));
  ASSERT_EQ(g.divisors, IntVector{12});
  // Either sign of f/12 generates; both have q = -1/12 mod 2.
  const Rational gen = g.generators[0][0];
  EXPECT_TRUE(gen == Rational(1, 12) || gen == Rational(11, 12)) << gen;
  EXPECT_EQ(g.qvals[0], mod_two(gen * gen * -12));
  EXPECT_EQ(g.bform(0, 0), Rational(11, 12));
  EXPECT_EQ(elementary_divisors(g), (IntVector{4, 3}));
}

TEST(DiscriminantGroupTest, ElementaryAndInvariantFactors) {
  EXPECT_EQ(invariant_factors({4, 2, 3}), (IntVector{2, 12}));
  EXPECT_EQ(elementary_divisors(IntVector{2, 12}), (IntVector{2, 4, 3}));
  EXPECT_EQ(invariant_factors({1, 1}), IntVector{});
}

TEST(DiscriminantGroupTest, OrthogonalSumAndNegation) {
  const DiscriminantGroup a = discriminant_group(diag_lattice({Integer(4)}));
  const DiscriminantGroup b = discriminant_group(diag_lattice({Integer(6)}));
  const DiscriminantGroup s = orthogonal_sum(a, b);
  EXPECT_EQ(s.divisors, (IntVector{2, 12}));
  EXPECT_EQ(s.order(), 24);
  const DiscriminantGroup n = negated(a);
  EXPECT_EQ(n.qvals[0], mod_two(-a.qvals[0]));
  const DiscriminantGroup direct =
      discriminant_group(diag_lattice({Integer(4), Integer(6)}));
  EXPECT_TRUE(same_group_structure(s, direct));
}

TEST(LatticeProperty, DiscriminantGroupOrderEqualsDet) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const IntegralLattice l(oracle::random_even_gram(rng, dim(rng), 5));
    const DiscriminantGroup g = discriminant_group(l);
    ASSERT_EQ(g.order(), abs(discriminant(l))) << l.gram();
    ASSERT_EQ(g.divisors, invariant_factors(oracle::smith_by_minors(l.gram())));
    for (std::size_t i = 0; i < g.size(); ++i) {
      // Generator order equals its divisor.
      const RatVector& v = g.generators[i];
      ASSERT_EQ(common_denominator(v), g.divisors[i]);
      ASSERT_GE(g.qvals[i], 0);
      ASSERT_LT(g.qvals[i], 2);
      ASSERT_EQ(mod_one(g.qvals[i]), g.bform(i, i));
      for (std::size_t j = 0; j < g.size(); ++j) {
        ASSERT_EQ(g.bform(i, j), g.bform(j, i));
        ASSERT_EQ(g.bform(i, j), mod_one(l.inner(g.generators[i], g.generators[j])));
      }
      ASSERT_EQ(g.qvals[i], mod_two(l.inner(v, v)));
    }
  }
}

TEST(LatticeProperty, SignatureIsCongruenceInvariant) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix g = oracle::random_even_gram(rng, dim(rng), 4);
    const IntMatrix u = oracle::random_unimodular(rng, g.rows());
    const Signature s = signature(IntegralLattice(g));
    ASSERT_EQ(s.plus + s.minus, g.rows());
    ASSERT_EQ(signature(IntegralLattice(u * g * u.transpose())), s);
  }
}

TEST(LatticeProperty, TwistScalesDeterminant) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  std::uniform_int_distribution<int> factor(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const IntegralLattice l(oracle::random_even_gram(rng, dim(rng), 4));
    const int n = factor(rng);
    const IntegralLattice t = twist(l, n);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), n, l.rank());
    ASSERT_EQ(discriminant(t), scale * discriminant(l));
    ASSERT_EQ(signature(t), signature(l));
    ASSERT_TRUE(is_even(t));
  }
}

TEST(LatticeProperty, DirectSumConcatenatesElementaryDivisors) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const IntegralLattice a(oracle::random_even_gram(rng, dim(rng), 4));
    const IntegralLattice b(oracle::random_even_gram(rng, dim(rng), 4));
    IntVector joined = elementary_divisors(discriminant_group(a));
    for (const auto& x : elementary_divisors(discriminant_group(b))) joined.push_back(x);
    IntVector sum = elementary_divisors(discriminant_group(direct_sum(a, b)));
    std::sort(joined.begin(), joined.end());
    std::sort(sum.begin(), sum.end());
    ASSERT_EQ(joined, sum);
    ASSERT_TRUE(same_group_structure(
        orthogonal_sum(discriminant_group(a), discriminant_group(b)),
        discriminant_group(direct_sum(a, b))));
  }
}

}  // namespace
}  // namespace k3lat
