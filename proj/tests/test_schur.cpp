#include "oracles.hpp"

#include <giambelli/errors.hpp>
#include <giambelli/schur.hpp>
#include <giambelli/verify.hpp>

#include <gtest/gtest.h>

using namespace giambelli;

namespace {
  const auto x = LaurentPoly::x();
}

TEST(IndexVector, Classification)
{
  EXPECT_TRUE((IndexVector{0, 1, 1, 3}).is_partition());
  EXPECT_FALSE((IndexVector{-1, 1}).is_partition());
  EXPECT_TRUE((IndexVector{-1, 1}).is_weakly_increasing());
  EXPECT_FALSE((IndexVector{2, 1}).is_weakly_increasing());
  EXPECT_EQ((IndexVector{1, -2, 3}).reversed(), (IndexVector{3, -2, 1}));
  EXPECT_EQ((IndexVector{1, -2}).negated(), (IndexVector{-1, 2}));
  EXPECT_EQ((IndexVector{-4, 3}).to_string(), "[-4,3]");
}

TEST(Gschur, SpecExamples)
{
  EXPECT_EQ(gschur({1, 1}, {1, 2}), Rational(2));
  EXPECT_EQ(gschur({4, -2}, {1, 2}), Rational(-31, 2));
  // The Jacobi-Trudi determinant with index (4,-2) is zero.
  EXPECT_TRUE(multi_schur(IndexVector{4, -2}, DiffArgument(Alphabet{1, 2})).is_zero());
}

TEST(Gschur, Errors)
{
  EXPECT_THROW(gschur({-1, 0}, {0, 2}), PoleError);
  EXPECT_NO_THROW(gschur({1, 0}, {0, 2}));
  EXPECT_THROW(gschur({1, 2, 3}, {1, 2}), DimensionError);
}

TEST(Gschur, MatchesTableauSumOnPartitions)
{
  RandomAlgebra rng(19);
  for (int t = 0; t < 40; ++t)
  {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto A = rng.alphabet(n);
    const auto J = rng.partition_in_box(n, 3);
    EXPECT_EQ(gschur(J, A), oracle::tableau_schur(J.parts(), A.letters()))
        << J.to_string();
  }
}

TEST(Gschur, MatchesLeibnizBialternant)
{
  RandomAlgebra rng(23);
  for (int t = 0; t < 60; ++t)
  {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    const auto A = rng.alphabet(n);
    const auto J = rng.index_vector(n, -5, 5);
    EXPECT_EQ(gschur(J, A), oracle::bialternant(J.parts(), A.letters()));
  }
}

TEST(MultiSchur, SpecExamples)
{
  const Alphabet A{1, 2};
  MultiSchurSpec spec{{1, 2}, {}, {A - Generator::symbol_x(), DiffArgument(A)}};
  EXPECT_EQ(multi_schur(spec), LaurentPoly(6) - x * Rational(7));
  EXPECT_EQ(multi_schur(IndexVector{1, 1}, DiffArgument(A)), LaurentPoly(2));
}

TEST(MultiSchur, LowerIndexShiftsEntries)
{
  // S_{J/I} with I = J is the identity determinant.
  const IndexVector J{1, 2, 2};
  EXPECT_EQ(multi_schur({J, J, std::vector<DiffArgument>(3, DiffArgument(Alphabet{1, 2, 3}))}),
            LaurentPoly(1));
}

TEST(MultiSchur, LengthMismatchRejected)
{
  EXPECT_THROW(multi_schur({{1, 2}, {0}, {DiffArgument(), DiffArgument()}}), DimensionError);
  EXPECT_THROW(multi_schur({{1, 2}, {}, {DiffArgument()}}), DimensionError);
}

TEST(SchurValue, PadsWithZeroParts)
{
  const Alphabet A{1, 2, 3};
  EXPECT_EQ(schur_value({2}, A), oracle::complete(2, A.letters()));
  EXPECT_EQ(schur_value({1, 1, 1, 1}, A), Rational(0));
  EXPECT_EQ(schur_value({}, A), Rational(1));
}

TEST(BoxComplement, SpecExamples)
{
  EXPECT_EQ(box_complement({0, 0, 0}, 4, 3), (IndexVector{4, 4, 4}));
  EXPECT_EQ(box_complement({1, 2}, 3, 2), (IndexVector{1, 2}));
  EXPECT_EQ(box_complement({0, 3}, 3, 2), (IndexVector{0, 3}));
  EXPECT_THROW(box_complement({0, 4}, 3, 2), DomainError);
}

TEST(Conjugate, NondecreasingConvention)
{
  EXPECT_EQ(conjugate({2, 3, 4}), (IndexVector{1, 2, 3, 3}));
  EXPECT_EQ(conjugate(conjugate({1, 1, 4})), (IndexVector{1, 1, 4}));
}

TEST(Frobenius, SpecExamples)
{
  const auto a = frobenius({2, 3, 4});
  EXPECT_EQ(a.alpha, (std::vector<int>{3, 1}));
  EXPECT_EQ(a.beta, (std::vector<int>{2, 1}));
  EXPECT_EQ(a.rank(), 2u);
  EXPECT_EQ(a.to_string(), "(3,1|2,1)");

  const auto g = frobenius({1, 3, 4});
  EXPECT_EQ(g.alpha, (std::vector<int>{3, 1}));
  EXPECT_EQ(g.beta, (std::vector<int>{2, 0}));

  EXPECT_EQ(frobenius({}).rank(), 0u);
  EXPECT_EQ(frobenius({0, 0}).rank(), 0u);
  EXPECT_THROW(frobenius({-1, 2}), DomainError);
}

TEST(HookAmp, SpecExamples)
{
  EXPECT_EQ(hook_amp(3, 4), (IndexVector{1, 1, 1, 1, 4}));
  EXPECT_EQ(hook_amp(0, 0), (IndexVector{1}));
  EXPECT_EQ(hook_amp(1, 1), (IndexVector{1, 2}));
  EXPECT_THROW(hook_amp(-1, 0), DomainError);
}

TEST(SchurIdentities, BoxDuality)
{
  RandomAlgebra rng(29);
  for (int t = 0; t < 30; ++t)
  {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto A = rng.alphabet(n);
    const auto m = rng.uniform(0, 4);
    const auto I = rng.partition_in_box(n, m);
    EXPECT_EQ(gschur(I, dual(A)), gschur(box_complement(I, m, n), A) * prod_u(A).pow(-m));
  }
}

TEST(SchurIdentities, NegatedIndexIsDualReversed)
{
  const Alphabet A{2, Rational(-1, 3), 5};
  const IndexVector J{0, 2, 3};
  EXPECT_EQ(gschur(J.negated(), A), gschur(J.reversed(), dual(A)));
}

TEST(SchurIdentities, CollidingExponentsVanish)
{
  // Exponents j_l + l - 1: (1+0, 0+1) collide.
  EXPECT_EQ(gschur({1, 0}, {3, 7}), Rational(0));
}
