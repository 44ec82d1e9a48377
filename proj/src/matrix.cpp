#include <giambelli/matrix.hpp>

namespace giambelli {

  auto det_fraction_free(const RationalMatrix& input) -> Rational
  {
    detail::require_square(input.rows(), input.cols(), "det");
    const auto n = input.rows();
    if (n == 0)
      return 1;

    RationalMatrix m = input;
    Rational previous_pivot = 1;
    int sign = 1;
    for (Index k = 0; k < n - 1; ++k)
    {
      auto pivot = k;
      while (pivot < n && m(pivot, k).is_zero())
        ++pivot;
      if (pivot == n)
        return 0;
      if (pivot != k)
      {
        m.row(k).swap(m.row(pivot));
        sign = -sign;
      }
      for (Index i = k + 1; i < n; ++i)
      {
        for (Index j = k + 1; j < n; ++j)
          m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous_pivot;
        m(i, k) = 0;
      }
      previous_pivot = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
  }

  auto inverse(const RationalMatrix& input) -> RationalMatrix
  {
    detail::require_square(input.rows(), input.cols(), "inverse");
    const auto n = input.rows();
    RationalMatrix m = input;
    RationalMatrix inv = identity<Rational>(n);
    for (Index k = 0; k < n; ++k)
    {
      auto pivot = k;
      while (pivot < n && m(pivot, k).is_zero())
        ++pivot;
      if (pivot == n)
        throw SingularMatrixError("matrix is singular");
      if (pivot != k)
      {
        m.row(k).swap(m.row(pivot));
        inv.row(k).swap(inv.row(pivot));
      }
      const auto scale = m(k, k).inverse();
      for (Index j = 0; j < n; ++j)
      {
        m(k, j) *= scale;
        inv(k, j) *= scale;
      }
      for (Index i = 0; i < n; ++i)
      {
        if (i == k || m(i, k).is_zero())
          continue;
        const auto factor = m(i, k);
        for (Index j = 0; j < n; ++j)
        {
          m(i, j) -= factor * m(k, j);
          inv(i, j) -= factor * inv(k, j);
        }
      }
    }
    return inv;
  }

  auto mat_pow_signed(const RationalMatrix& m, long e) -> RationalMatrix
  {
    detail::require_square(m.rows(), m.cols(), "mat_pow_signed");
    auto base = e < 0 ? inverse(m) : m;
    auto remaining = e < 0 ? -static_cast<unsigned long>(e)
                           : static_cast<unsigned long>(e);
    RationalMatrix result = identity<Rational>(m.rows());
    while (remaining > 0)
    {
      if (remaining & 1u)
        result = mat_mul(result, base);
      remaining >>= 1u;
      if (remaining > 0)
        base = mat_mul(base, base);
    }
    return result;
  }

}  // namespace giambelli
