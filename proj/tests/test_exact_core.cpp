#include "oracles.hpp"

#include <giambelli/errors.hpp>
#include <giambelli/matrix.hpp>
#include <giambelli/verify.hpp>

#include <gtest/gtest.h>

using namespace giambelli;

namespace {

  auto mat(std::initializer_list<std::initializer_list<Rational>> rows)
      -> RationalMatrix
  {
    RationalMatrix m(static_cast<Index>(rows.size()),
                     static_cast<Index>(rows.begin()->size()));
    Index i = 0;
    for (const auto& row : rows)
    {
      Index j = 0;
      for (const auto& v : row)
        m(i, j++) = v;
      ++i;
    }
    return m;
  }

  auto to_table(const RationalMatrix& m) -> oracle::Table
  {
    oracle::Table t(static_cast<std::size_t>(m.rows()));
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j)
        t[static_cast<std::size_t>(i)].push_back(m(i, j));
    return t;
  }

}  // namespace

TEST(Rational, NormalizesSignAndGcd)
{
  const Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, 5).denominator(), 1);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
}

TEST(Rational, ParseAcceptsSignedFractions)
{
  EXPECT_EQ(Rational::parse("-5/3"), Rational(-5, 3));
  EXPECT_EQ(Rational::parse("+7"), Rational(7));
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
}

TEST(Rational, ParseRejectsMalformedText)
{
  EXPECT_THROW(Rational::parse("2/0"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
  EXPECT_THROW(Rational::parse("1/"), ParseError);
  EXPECT_THROW(Rational::parse("1.5"), ParseError);
  try
  {
    Rational::parse("12x");
    FAIL();
  }
  catch (const ParseError& e)
  {
    EXPECT_EQ(e.offset(), 2u);
  }
}

TEST(Rational, ArithmeticAndErrors)
{
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) / Rational(-1, 4), Rational(-2));
  EXPECT_THROW(Rational(1) / Rational(0), DivisionByZeroError);
  EXPECT_EQ(Rational(2).pow(-3), Rational(1, 8));
  EXPECT_EQ(Rational(0).pow(0), Rational(1));
  EXPECT_THROW(Rational(0).pow(-1), PoleError);
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
}

TEST(Rational, HugeValuesStayExact)
{
  const auto big = Rational(3).pow(200);
  EXPECT_EQ(big / Rational(3).pow(199), Rational(3));
}

TEST(Det, SpecExamples)
{
  EXPECT_EQ(det(identity<Rational>(2)), Rational(1));
  EXPECT_EQ(det(mat({{1, 2}, {3, 4}})), Rational(-2));
  EXPECT_EQ(det(RationalMatrix(0, 0)), Rational(1));
}

TEST(Det, PolynomialEntriesOfTheMultiSchurExample)
{
  // [[S1(A-x), S3(A)], [1, S2(A)]] with A = {1,2}.
  PolyMatrix m(2, 2);
  m(0, 0) = LaurentPoly(3) - LaurentPoly::x();
  m(0, 1) = LaurentPoly(15);
  m(1, 0) = LaurentPoly(1);
  m(1, 1) = LaurentPoly(7);
  EXPECT_EQ(det(m), LaurentPoly(6) - LaurentPoly::x() * Rational(7));
}

TEST(Det, RejectsNonSquare)
{
  EXPECT_THROW(det(RationalMatrix(2, 3)), DimensionError);
  EXPECT_THROW(det_cofactor(PolyMatrix(1, 2)), DimensionError);
}

TEST(Det, AgreesWithLeibnizOnRandomMatrices)
{
  RandomAlgebra rng(7);
  for (int t = 0; t < 100; ++t)
  {
    const auto n = static_cast<Index>(rng.uniform(1, 5));
    const auto entries = rng.matrix_entries(static_cast<std::size_t>(n * n));
    RationalMatrix m(n, n);
    for (Index i = 0; i < n * n; ++i)
      m(i / n, i % n) = entries[static_cast<std::size_t>(i)];
    const auto expected = oracle::leibniz_det(to_table(m));
    EXPECT_EQ(det_cofactor(m), expected);
    EXPECT_EQ(det_fraction_free(m), expected);
  }
}

TEST(Det, SingularMatrixHasZeroDet)
{
  EXPECT_TRUE(det(mat({{1, 2}, {2, 4}})).is_zero());
  EXPECT_TRUE(det_fraction_free(mat({{0, 0}, {0, 1}})).is_zero());
}

TEST(MatMul, SpecExamples)
{
  const auto C = mat({{0, -2}, {1, 3}});
  EXPECT_EQ(mat_mul(identity<Rational>(2), C), C);
  EXPECT_EQ(mat_mul(C, C), mat({{-2, -6}, {3, 7}}));
  EXPECT_THROW(mat_mul(RationalMatrix(2, 3), RationalMatrix(2, 3)), DimensionError);
}

TEST(MatMul, RowVectorTimesCompanionColumnGivesPower)
{
  // (1, a) times the column of x^k mod (x-1)(x-2) is a^k.
  const auto C = mat({{0, -2}, {1, 3}});
  for (const auto& a : {Rational(1), Rational(2)})
  {
    const auto row = mat({{1, a}});
    EXPECT_EQ(mat_mul(row, C), mat({{a, a * a}}));
  }
}

TEST(MatPowSigned, SpecExamples)
{
  const auto C = mat({{0, -2}, {1, 3}});
  EXPECT_EQ(mat_pow_signed(C, 0), identity<Rational>(2));
  EXPECT_EQ(mat_pow_signed(C, -1), mat({{Rational(3, 2), 1}, {Rational(-1, 2), 0}}));
  EXPECT_EQ(mat_pow_signed(C, 2), mat({{-2, -6}, {3, 7}}));
  EXPECT_EQ(mat_mul(mat_pow_signed(C, 3), mat_pow_signed(C, -3)), identity<Rational>(2));
}

TEST(MatPowSigned, SingularNegativePowerThrows)
{
  const auto S = mat({{1, 2}, {2, 4}});
  EXPECT_THROW(mat_pow_signed(S, -1), SingularMatrixError);
  EXPECT_NO_THROW(mat_pow_signed(S, 2));
}

TEST(SelectColumns, PicksInOrderAndChecksRange)
{
  const auto m = mat({{1, 2, 3}, {4, 5, 6}});
  EXPECT_EQ(select_columns(m, {2, 0}), mat({{3, 1}, {6, 4}}));
  EXPECT_THROW(select_columns(m, {3}), DimensionError);
}
