#include <giambelli/companion.hpp>
#include <giambelli/errors.hpp>
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

  auto column(const RationalMatrix& m, Index j) -> std::vector<Rational>
  {
    std::vector<Rational> out;
    for (Index i = 0; i < m.rows(); ++i)
      out.push_back(m(i, j));
    return out;
  }

}  // namespace

TEST(DoubleCompanion, SpecColumns)
{
  const Alphabet A{1, 2};
  const auto C = double_companion(A, ColumnRange(-1, 2));
  EXPECT_EQ(column(C, 0), (std::vector<Rational>{Rational(3, 2), Rational(-1, 2)}));
  EXPECT_EQ(column(C, 1), (std::vector<Rational>{1, 0}));
  EXPECT_EQ(column(C, 2), (std::vector<Rational>{0, 1}));
  EXPECT_EQ(column(C, 3), (std::vector<Rational>{-2, 3}));
}

TEST(DoubleCompanion, BothRoutesAgree)
{
  const Alphabet A{Rational(-3, 7), 2, 5};
  for (int k = -4; k <= 6; ++k)
    EXPECT_EQ(companion_column_from_remainder(k, A), companion_column_from_gschur(k, A));
}

TEST(DoubleCompanion, IdentityBlockAndPoles)
{
  const Alphabet A{Rational(1, 2), 3, -4};
  EXPECT_EQ(double_companion(A, ColumnRange(0, 2)), identity<Rational>(3));
  EXPECT_THROW(double_companion(Alphabet{0, 1}, ColumnRange(-1, 0)), PoleError);
  EXPECT_NO_THROW(double_companion(Alphabet{0, 1}, ColumnRange(0, 3)));
  EXPECT_THROW(ColumnRange(2, 1), DomainError);
}

TEST(CompanionSubmatrix, SpecExamples)
{
  const Alphabet A{1, 2};
  EXPECT_EQ(companion_submatrix(A, {1, 1}), mat({{0, -2}, {1, 3}}));
  EXPECT_EQ(companion_submatrix(A, {0, 0}), identity<Rational>(2));
  EXPECT_EQ(companion_submatrix(A, {2, 2}), mat({{-2, -6}, {3, 7}}));
  EXPECT_EQ(companion_submatrix(A, {-1, -1}),
            mat({{Rational(3, 2), 1}, {Rational(-1, 2), 0}}));
}

TEST(CompanionSubmatrix, PowersOfTheClassicalCompanion)
{
  const Alphabet A{Rational(2, 3), -1, 4};
  const auto C = companion_submatrix(A, IndexVector::repeated(1, 3));
  for (int m = -4; m <= 4; ++m)
    EXPECT_EQ(mat_pow_signed(C, m), companion_submatrix(A, IndexVector::repeated(m, 3))) << m;
}

TEST(DoubleVandermonde, SpecExamples)
{
  const Alphabet A{1, 2};
  EXPECT_EQ(double_vandermonde(A, ColumnRange(0, 1)), mat({{1, 1}, {1, 2}}));
  EXPECT_EQ(double_vandermonde(A, ColumnRange(-1, -1)), mat({{1}, {Rational(1, 2)}}));
  EXPECT_EQ(double_vandermonde(A, ColumnRange(2, 2)), mat({{1}, {4}}));
  EXPECT_EQ(finite_vandermonde(A), mat({{1, 1}, {1, 2}}));
}

TEST(DoubleVandermonde, FactorsThroughTheCompanion)
{
  const Alphabet A{Rational(-5, 2), 3, Rational(1, 7)};
  const ColumnRange window(-6, 6);
  EXPECT_EQ(mat_mul(finite_vandermonde(A), double_companion(A, window)),
            double_vandermonde(A, window));
}

TEST(GiambelliGeneral, SpecExamples)
{
  const Alphabet A{1, 2};
  const auto r = giambelli_general({1, 1}, A);
  EXPECT_EQ(r.matrix, mat({{0, -2}, {1, 3}}));
  EXPECT_EQ(r.value, Rational(2));

  const auto zero = giambelli_general({0, 0, 0}, {2, 3, 5});
  EXPECT_EQ(zero.matrix, identity<Rational>(3));
  EXPECT_EQ(zero.value, Rational(1));
}

TEST(GiambelliGeneral, SixLetterExampleMatchesBialternant)
{
  RandomAlgebra rng(37);
  const IndexVector J{-4, -3, -2, 1, 3, 4};
  for (int t = 0; t < 3; ++t)
  {
    const auto A = rng.alphabet(6);
    EXPECT_EQ(giambelli_general(J, A).value, gschur(J, A));
  }
}

TEST(GiambelliBlock, SixLetterExampleLabels)
{
  const IndexVector J{-4, -3, -2, 1, 3, 4};
  const auto r = giambelli_block(J, {1, 2, 3, 4, 5, 6});
  const std::vector<std::vector<std::string>> expected{
      {"S_{1,2}(A^v)", "S_{1,4}(A^v)", "S_{1^4,4}(A)", "S_{1^4,2}(A)"},
      {"S_{1^2,2}(A^v)", "S_{1^2,4}(A^v)", "S_{1^3,4}(A)", "S_{1^3,2}(A)"},
      {"S_{1^3,2}(A^v)", "S_{1^3,4}(A^v)", "S_{1^2,4}(A)", "S_{1^2,2}(A)"},
      {"S_{1^5,2}(A^v)", "S_{1^5,4}(A^v)", "S_{4}(A)", "S_{2}(A)"}};
  ASSERT_EQ(r.blocks.labels.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_EQ(r.blocks.labels[i][j].to_string(), expected[i][j]) << i << "," << j;
  EXPECT_EQ(r.blocks.negative.to_string(), "(3,1|2,1)");
  EXPECT_EQ(r.blocks.nonnegative.to_string(), "(3,1|2,0)");
  EXPECT_EQ(r.blocks.labels[0][0].block, 'P');
  EXPECT_EQ(r.blocks.labels[0][3].block, 'Q');
  EXPECT_EQ(r.blocks.labels[3][0].block, 'M');
  EXPECT_EQ(r.blocks.labels[3][3].block, 'N');
  EXPECT_EQ(r.blocks.labels[0][2].to_latex(), "S_{1^{4},4}(A)");
}

TEST(GiambelliBlock, SixLetterExampleDiagonalBlocks)
{
  const Alphabet A{Rational(1, 2), 2, -3, 5, Rational(7, 4), -1};
  const auto r = giambelli_block({-4, -3, -2, 1, 3, 4}, A);
  EXPECT_EQ(r.value, gschur({-4, -3, -2, 1, 3, 4}, A));
  EXPECT_EQ(det(r.blocks.P), gschur({0, 0, 0, 2, 3, 4}, dual(A)));
  EXPECT_EQ(det(r.blocks.N), gschur({0, 0, 0, 1, 3, 4}, A));
}

TEST(GiambelliBlock, EdgeCases)
{
  const Alphabet A{1, 2};
  const auto neg = giambelli_block({-1, 0}, A);
  EXPECT_EQ(neg.value, Rational(3, 2));
  EXPECT_EQ(neg.blocks.P.rows(), 1);
  EXPECT_EQ(neg.blocks.N.rows(), 0);

  const auto nonneg = giambelli_block({1, 2}, A);
  EXPECT_EQ(nonneg.blocks.P.rows(), 0);
  EXPECT_EQ(nonneg.value, gschur({1, 2}, A));

  const auto empty = giambelli_block({0, 0}, A);
  EXPECT_EQ(empty.value, Rational(1));

  EXPECT_THROW(giambelli_block({1, 0}, A), DomainError);
}

TEST(RecurExtend, SpecExamples)
{
  const Alphabet A{1, 2};
  const RecurrentSeq geometric(A, 0, {1, 2, 4, 8});
  EXPECT_EQ(recur_extend(geometric, -1), Rational(1, 2));
  EXPECT_EQ(recur_extend(geometric, 10), Rational(1024));

  const RecurrentSeq ones(A, 0, {1, 1, 1, 1});
  for (int m = -5; m <= 5; ++m)
    EXPECT_EQ(recur_extend(ones, m), Rational(1));

  const RecurrentSeq mersenne(A, 0, {0, 1, 3, 7});
  EXPECT_EQ(recur_extend(mersenne, 4), Rational(15));
}

TEST(RecurExtend, Errors)
{
  EXPECT_THROW(RecurrentSeq(Alphabet{1, 2}, 0, {1, 2, 4, 9}), ValidationError);
  const RecurrentSeq with_zero(Alphabet{0, 1}, 0, {1, 1, 1, 1});
  EXPECT_EQ(recur_extend(with_zero, 5), Rational(1));
  EXPECT_THROW(recur_extend(with_zero, -1), PoleError);
}

TEST(HouMu, SpecExamples)
{
  const Alphabet A{1, 2};
  std::vector<RecurrentSeq> seqs{RecurrentSeq::from_seed(A, 0, {1, 1}),
                                 RecurrentSeq::from_seed(A, 0, {1, 2})};
  EXPECT_EQ(houmu_ratio(seqs, {1, 1}), Rational(2));
  EXPECT_EQ(houmu_ratio(seqs, {0, 0}), Rational(1));
  EXPECT_EQ(houmu_ratio(seqs, {4, -2}), gschur({4, -2}, A));
}

TEST(HouMu, DependentSeedsAreDegenerate)
{
  const Alphabet A{1, 2};
  std::vector<RecurrentSeq> seqs{RecurrentSeq::from_seed(A, 0, {1, 2}),
                                 RecurrentSeq::from_seed(A, 0, {2, 4})};
  EXPECT_THROW(houmu_ratio(seqs, {1, 1}), DegeneracyError);
}
