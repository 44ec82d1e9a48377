#pragma once

#include <giambelli/errors.hpp>
#include <giambelli/laurent.hpp>
#include <giambelli/rational.hpp>

#include <Eigen/Core>

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>


namespace Eigen {

  // Exact scalars: no vectorization, nontrivial construction, no precision.
  template <>
  struct NumTraits<giambelli::Rational> : GenericNumTraits<giambelli::Rational>
  {
    using Real = giambelli::Rational;
    using NonInteger = giambelli::Rational;
    using Literal = giambelli::Rational;
    using Nested = giambelli::Rational;

    enum
    {
      IsComplex = 0,
      IsInteger = 0,
      IsSigned = 1,
      RequireInitialization = 1,
      ReadCost = 8,
      AddCost = 16,
      MulCost = 32
    };

    static inline auto epsilon() -> Real
    {
      return 0;
    }
    static inline auto dummy_precision() -> Real
    {
      return 0;
    }
    static inline auto digits10() -> int
    {
      return 0;
    }
  };

  template <>
  struct NumTraits<giambelli::LaurentPoly>
    : GenericNumTraits<giambelli::LaurentPoly>
  {
    using Real = giambelli::LaurentPoly;
    using NonInteger = giambelli::LaurentPoly;
    using Literal = giambelli::LaurentPoly;
    using Nested = giambelli::LaurentPoly;

    enum
    {
      IsComplex = 0,
      IsInteger = 0,
      IsSigned = 1,
      RequireInitialization = 1,
      ReadCost = 16,
      AddCost = 64,
      MulCost = 256
    };

    static inline auto epsilon() -> Real
    {
      return 0;
    }
    static inline auto dummy_precision() -> Real
    {
      return 0;
    }
    static inline auto digits10() -> int
    {
      return 0;
    }
  };

}  // namespace Eigen


namespace giambelli {

  //! Commutative ring element usable as a matrix entry.
  template <typename T>
  concept RingScalar = requires(const T& a, const T& b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a.is_zero() } -> std::convertible_to<bool>;
    T(0);
    T(1);
  };

  template <typename Scalar>
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  using RationalMatrix = Matrix<Rational>;
  using PolyMatrix = Matrix<LaurentPoly>;
  using Index = Eigen::Index;

  template <RingScalar Scalar>
  auto identity(Index n) -> Matrix<Scalar>
  {
    Matrix<Scalar> m(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        m(i, j) = Scalar(i == j ? 1 : 0);
    return m;
  }

  namespace detail {

    inline void require_square(Index rows, Index cols, const char* what)
    {
      if (rows != cols)
        throw DimensionError(std::string(what) + " needs a square matrix, got " +
                             std::to_string(rows) + "x" +
                             std::to_string(cols));
    }

  }  // namespace detail

  //! @brief Determinant by Laplace expansion, memoized over column subsets.
  //!
  //! Needs only ring operations, so it is the route for Laurent polynomial
  //! entries. Cost is O(n 2^n) ring operations.
  template <RingScalar Scalar>
  auto det_cofactor(const Matrix<Scalar>& m) -> Scalar
  {
    detail::require_square(m.rows(), m.cols(), "det_cofactor");
    const auto n = static_cast<int>(m.rows());
    if (n == 0)
      return Scalar(1);
    if (n > 24)
      throw DimensionError("det_cofactor is limited to 24x24 matrices");

    // minors[S] = determinant of rows 0..|S|-1 restricted to columns S.
    std::vector<Scalar> minors(std::size_t{1} << n, Scalar(0));
    minors[0] = Scalar(1);
    for (std::uint32_t subset = 1; subset < (1u << n); ++subset)
    {
      const auto row = std::popcount(subset) - 1;
      Scalar acc(0);
      int greater = 0;
      for (int col = n - 1; col >= 0; --col)
      {
        const auto bit = 1u << col;
        if (!(subset & bit))
          continue;
        const auto& entry = m(row, col);
        const auto& minor = minors[subset ^ bit];
        if (!entry.is_zero() && !minor.is_zero())
        {
          if (greater % 2 == 0)
            acc = acc + entry * minor;
          else
            acc = acc - entry * minor;
        }
        ++greater;
      }
      minors[subset] = std::move(acc);
    }
    return minors.back();
  }

  //! Bareiss fraction-free elimination with row pivoting.
  auto det_fraction_free(const RationalMatrix& m) -> Rational;

  //! Exact determinant: fraction-free elimination over the rationals,
  //! cofactor expansion over any other ring.
  template <RingScalar Scalar>
  auto det(const Matrix<Scalar>& m) -> Scalar
  {
    if constexpr (std::is_same_v<Scalar, Rational>)
      return det_fraction_free(m);
    else
      return det_cofactor(m);
  }

  template <RingScalar Scalar>
  auto mat_mul(const Matrix<Scalar>& a, const Matrix<Scalar>& b)
      -> Matrix<Scalar>
  {
    if (a.cols() != b.rows())
      throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" +
                           std::to_string(a.cols()) + " times " +
                           std::to_string(b.rows()) + "x" +
                           std::to_string(b.cols()));
    return a.lazyProduct(b);
  }

  //! Gauss-Jordan inverse; SingularMatrixError when det = 0.
  auto inverse(const RationalMatrix& m) -> RationalMatrix;

  //! m^e for any integer e; negative exponents go through the exact inverse.
  auto mat_pow_signed(const RationalMatrix& m, long e) -> RationalMatrix;

  //! Columns `cols` of m, in the given order; DimensionError if one is out
  //! of range.
  template <typename Scalar>
  auto select_columns(const Matrix<Scalar>& m, const std::vector<Index>& cols)
      -> Matrix<Scalar>
  {
    Matrix<Scalar> out(m.rows(), static_cast<Index>(cols.size()));
    for (Index j = 0; j < out.cols(); ++j)
    {
      const auto c = cols[static_cast<std::size_t>(j)];
      if (c < 0 || c >= m.cols())
        throw DimensionError("column " + std::to_string(c) + " outside 0.." +
                             std::to_string(m.cols() - 1));
      out.col(j) = m.col(c);
    }
    return out;
  }

}  // namespace giambelli
