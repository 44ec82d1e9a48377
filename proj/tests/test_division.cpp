#include <giambelli/division.hpp>
#include <giambelli/errors.hpp>
#include <giambelli/verify.hpp>

#include <gtest/gtest.h>

using namespace giambelli;

namespace {

  const auto x = LaurentPoly::x();

  auto half_poly(int linear, int constant) -> LaurentPoly
  {
    return (x * Rational(linear) + LaurentPoly(constant)) / Rational(2);
  }

}  // namespace

TEST(LagrangeFunctional, SpecExamples)
{
  const Alphabet A{1, 2};
  const TailSymmetricExpr inverse{"x1^-1", [](const Rational& h, const Alphabet&) {
                                    return LaurentPoly(h.inverse());
                                  }};
  EXPECT_EQ(lagrange_functional(inverse, A), LaurentPoly(Rational(-1, 2)));

  const TailSymmetricExpr one{"1", [](const Rational&, const Alphabet&) {
                                return LaurentPoly(1);
                              }};
  EXPECT_TRUE(lagrange_functional(one, A).is_zero());

  const auto r = x * Rational(5) + LaurentPoly(7);
  const TailSymmetricExpr rebuild{"r(x1) R(x, X - x1)",
                                  [&](const Rational& h, const Alphabet& tail) {
                                    return LaurentPoly(r.evaluate(h)) * root_polynomial(tail);
                                  }};
  EXPECT_EQ(lagrange_functional(rebuild, A), r);
}

TEST(LagrangeFunctional, PolePropagates)
{
  const TailSymmetricExpr inverse{"x1^-1", [](const Rational& h, const Alphabet&) {
                                    return LaurentPoly(h.inverse());
                                  }};
  EXPECT_THROW(lagrange_functional(inverse, Alphabet{0, 1}), PoleError);
}

TEST(RemainderXPow, SpecExamples)
{
  const Alphabet A{1, 2};
  EXPECT_EQ(remainder_x_pow(0, A), LaurentPoly(1));
  EXPECT_EQ(remainder_x_pow(3, A), x * Rational(7) - LaurentPoly(6));
  EXPECT_EQ(remainder_x_pow(-1, A), half_poly(-1, 3));
  EXPECT_THROW(remainder_x_pow(-1, Alphabet{0, 2}), PoleError);
}

TEST(InversePowerForms, AgreeAtDeskScale)
{
  const Alphabet A{1, 2};
  for (int k = 0; k <= 6; ++k)
  {
    const auto oracle = remainder_via_interpolation(LaurentPoly::monomial(1, -k), A);
    EXPECT_EQ(inverse_power_remainder_box_form(k, A), oracle) << k;
    EXPECT_EQ(inverse_power_remainder_dual_form(k, A), oracle) << k;
  }
  // k = 0 of the box form is the constant 1.
  EXPECT_EQ(inverse_power_remainder_box_form(0, Alphabet{3, 4, 5}), LaurentPoly(1));
  EXPECT_THROW(inverse_power_remainder_box_form(-1, A), DomainError);
}

TEST(InversePowerForms, SingleLetter)
{
  const Alphabet A{Rational(2, 3)};
  EXPECT_EQ(remainder_x_pow(-3, A), LaurentPoly(Rational(27, 8)));
  EXPECT_EQ(inverse_power_remainder_box_form(3, A), LaurentPoly(Rational(27, 8)));
}

TEST(RemainderLaurent, SpecExamples)
{
  const Alphabet A{1, 2};
  const auto f = reciprocal_root_polynomial(Alphabet{3});
  EXPECT_EQ(remainder_laurent(f, A), half_poly(-1, -3));
  EXPECT_EQ(reciprocal_root_remainder_form(Alphabet{3}, A), half_poly(-1, -3));
  EXPECT_TRUE(remainder_laurent(LaurentPoly(), A).is_zero());
  EXPECT_TRUE(remainder_laurent(root_polynomial(A), A).is_zero());
}

TEST(EuclidRemainders, SpecExamples)
{
  const auto f = x.pow(3) - x.pow(2) * Rational(3);
  const auto g = root_polynomial(Alphabet{1, 2});
  const auto trace = euclid_remainders(f, g);
  ASSERT_EQ(trace.remainders.size(), 3u);
  EXPECT_EQ(trace.remainders[0], x * Rational(-2));
  EXPECT_EQ(trace.remainders[1], LaurentPoly(2));
  EXPECT_TRUE(trace.remainders[2].is_zero());

  const auto same = euclid_remainders(g, g);
  ASSERT_EQ(same.remainders.size(), 1u);
  EXPECT_TRUE(same.remainders[0].is_zero());

  const auto low = euclid_remainders(x, g);
  EXPECT_EQ(low.remainders[0], x);
  EXPECT_THROW(euclid_remainders(x, LaurentPoly()), DivisionByZeroError);
}

TEST(EuclidMultiSchur, CalibrationScalars)
{
  const Alphabet A{1, 2}, B{3};
  EXPECT_EQ(euclid_remainder_multischur(1, 3, A, B), x * Rational(2));
  EXPECT_EQ(euclid_remainder_multischur(2, 3, A, B), LaurentPoly(8));

  const auto rows = compare_euclid_with_multischur(3, A, B);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].remainder, x * Rational(-2));
  EXPECT_EQ(rows[0].scalar, Rational(-1));
  EXPECT_EQ(rows[1].remainder, LaurentPoly(2));
  EXPECT_EQ(rows[1].scalar, Rational(4));
}

TEST(EuclidMultiSchur, LastRemainderIsConstant)
{
  RandomAlgebra rng(31);
  for (int t = 0; t < 10; ++t)
  {
    const auto n = rng.uniform(1, 4);
    const auto A = rng.alphabet(static_cast<std::size_t>(n));
    const auto B = rng.alphabet(static_cast<std::size_t>(rng.uniform(1, 6)));
    EXPECT_TRUE(euclid_remainder_multischur(n, n + 2, A, B).is_constant());
  }
}

TEST(EuclidMultiSchur, RangeErrors)
{
  const Alphabet A{1, 2}, B{3};
  EXPECT_THROW(euclid_remainder_multischur(0, 3, A, B), DomainError);
  EXPECT_THROW(euclid_remainder_multischur(3, 3, A, B), DomainError);
  EXPECT_THROW(euclid_remainder_multischur(1, 1, A, B), DomainError);
}

TEST(ProportionalityScalar, CrossMultiplication)
{
  const auto p = x * Rational(2) + LaurentPoly(4);
  EXPECT_EQ(proportionality_scalar(p * Rational(-3), p), Rational(-3));
  EXPECT_FALSE(proportionality_scalar(p + x, p).has_value());
  EXPECT_FALSE(proportionality_scalar(LaurentPoly(), p).has_value());
}
