#include <giambelli/division.hpp>

#include <giambelli/errors.hpp>
#include <giambelli/schur.hpp>

namespace giambelli {

  namespace {

    auto sign_power(std::size_t exponent) -> Rational
    {
      return exponent % 2 == 0 ? 1 : -1;
    }

    //! (-1)^{n-1} x^{n-1} S_{1^{n-1}; last}(A^v - 1/x; A^v - B).
    auto dual_hook_form(int last, const Alphabet& A, const Alphabet& B)
        -> LaurentPoly
    {
      const auto n = A.size();
      const auto Av = dual(A);
      auto parts = std::vector<int>(n - 1, 1);
      parts.push_back(last);
      auto columns = std::vector<DiffArgument>(
          n - 1, DiffArgument(Av).add_minus(Generator::symbol_x_inverse()));
      columns.emplace_back(Av, B);
      const auto det = multi_schur({IndexVector(std::move(parts)), {}, columns});
      return (det * sign_power(n - 1)).shifted(static_cast<int>(n) - 1);
    }

  }  // namespace

  auto lagrange_functional(const TailSymmetricExpr& p, const Alphabet& A)
      -> LaurentPoly
  {
    LaurentPoly sum;
    for (std::size_t i = 0; i < A.size(); ++i)
    {
      const auto tail = A.without(i);
      const auto denominator = resultant(Alphabet{A[i]}, tail);
      sum += p(A[i], tail) / denominator;
    }
    return sum;
  }

  auto remainder_x_pow(int k, const Alphabet& A) -> LaurentPoly
  {
    if (A.empty())
      return {};
    if (k < 0)
      return inverse_power_remainder_dual_form(-k, A);

    const auto n = A.size();
    auto parts = std::vector<int>(n - 1, 1);
    parts.push_back(k - static_cast<int>(n) + 1);
    auto columns =
        std::vector<DiffArgument>(n - 1, A - Generator::symbol_x());
    columns.emplace_back(A);
    return multi_schur({IndexVector(std::move(parts)), {}, columns}) *
           sign_power(n - 1);
  }

  auto inverse_power_remainder_box_form(int k, const Alphabet& A)
      -> LaurentPoly
  {
    if (k < 0)
      throw DomainError("inverse_power_remainder_box_form needs k >= 0");
    if (A.empty())
      return {};
    if (A.contains_zero())
      throw PoleError("remainder of x^-" + std::to_string(k) +
                      " modulo a polynomial vanishing at 0");
    const auto n = A.size();
    const auto det = multi_schur(IndexVector::repeated(k, n - 1),
                                 A - Generator::symbol_x());
    return det * prod_u(A).pow(-k);
  }

  auto inverse_power_remainder_dual_form(int k, const Alphabet& A)
      -> LaurentPoly
  {
    if (k < 0)
      throw DomainError("inverse_power_remainder_dual_form needs k >= 0");
    if (A.empty())
      return {};
    return dual_hook_form(k, A, {});
  }

  auto reciprocal_root_remainder_form(const Alphabet& B, const Alphabet& A)
      -> LaurentPoly
  {
    if (A.empty())
      return {};
    return dual_hook_form(static_cast<int>(B.size()), A, B);
  }

  auto remainder_laurent(const LaurentPoly& f, const Alphabet& A)
      -> LaurentPoly
  {
    LaurentPoly r;
    for (const auto& [degree, c] : f.terms())
      r += remainder_x_pow(degree, A) * c;
    return r;
  }

  auto euclid_remainders(const LaurentPoly& f, const LaurentPoly& g)
      -> EuclidTrace
  {
    if (g.is_zero())
      throw DivisionByZeroError("Euclidean algorithm with a zero divisor");
    EuclidTrace trace{f, g, {}, {}};
    auto previous = g;
    auto step = poly_divmod(f, g);
    while (true)
    {
      trace.quotients.push_back(step.quotient);
      trace.remainders.push_back(step.remainder);
      if (step.remainder.is_zero())
        break;
      auto next = poly_divmod(previous, step.remainder);
      previous = step.remainder;
      step = std::move(next);
    }
    return trace;
  }

  auto euclid_remainder_multischur(int r, int m, const Alphabet& A,
                                   const Alphabet& B) -> LaurentPoly
  {
    const auto n = static_cast<int>(A.size());
    if (n < 1 || r < 1 || r > n || m < n)
      throw DomainError("euclid_remainder_multischur needs n >= 1, "
                        "1 <= r <= n and m >= n; got n=" +
                        std::to_string(n) + " r=" + std::to_string(r) +
                        " m=" + std::to_string(m));
    auto parts = std::vector<int>(static_cast<std::size_t>(n - r), 1);
    parts.insert(parts.end(), static_cast<std::size_t>(r), m - n + r);
    auto columns = std::vector<DiffArgument>(static_cast<std::size_t>(n - r),
                                             A - Generator::symbol_x());
    columns.insert(columns.end(), static_cast<std::size_t>(r), A - B);
    return multi_schur({IndexVector(std::move(parts)), {}, columns});
  }

  auto complete_in_x(int m, const Alphabet& B) -> LaurentPoly
  {
    return complete_sym(m, DiffArgument({}, B).add_plus(Generator::symbol_x()));
  }

  auto proportionality_scalar(const LaurentPoly& candidate,
                              const LaurentPoly& reference)
      -> std::optional<Rational>
  {
    if (candidate.is_zero() || reference.is_zero())
      return std::nullopt;
    std::vector<int> degrees;
    for (const auto& [d, c] : candidate.terms())
      degrees.push_back(d);
    for (const auto& [d, c] : reference.terms())
      if (candidate.coeff(d).is_zero())
        degrees.push_back(d);
    for (auto i : degrees)
      for (auto j : degrees)
        if (candidate.coeff(i) * reference.coeff(j) !=
            candidate.coeff(j) * reference.coeff(i))
          return std::nullopt;
    const auto d = reference.degree();
    return candidate.coeff(d) / reference.coeff(d);
  }

  auto compare_euclid_with_multischur(int m, const Alphabet& A,
                                      const Alphabet& B)
      -> std::vector<EuclidComparison>
  {
    const auto n = static_cast<int>(A.size());
    const auto trace = euclid_remainders(
        complete_in_x(m, B),
        complete_sym(n, DiffArgument({}, A).add_plus(Generator::symbol_x())));
    std::vector<EuclidComparison> rows;
    for (int r = 1; r <= n; ++r)
    {
      const auto& remainder = trace.remainders[static_cast<std::size_t>(r - 1)];
      if (remainder.is_zero())
        break;
      auto formula = euclid_remainder_multischur(r, m, A, B);
      auto scalar = proportionality_scalar(formula, remainder);
      rows.push_back({r, remainder, std::move(formula), scalar});
    }
    return rows;
  }

}  // namespace giambelli
