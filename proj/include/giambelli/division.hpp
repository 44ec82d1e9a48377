#pragma once

#include <giambelli/alphabet.hpp>
#include <giambelli/laurent.hpp>
#include <giambelli/rational.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace giambelli {

  //! @brief Function of a head letter and the remaining letters, symmetric in
  //! the latter.
  //!
  //! Evaluated at every split (a, A - a) of an alphabet by the Lagrange
  //! functional. Symmetry in the tail is the caller's contract.
  struct TailSymmetricExpr
  {
    using Rule =
        std::function<LaurentPoly(const Rational& head, const Alphabet& tail)>;

    std::string label;
    Rule rule;

    auto operator()(const Rational& head, const Alphabet& tail) const
        -> LaurentPoly
    {
      return rule(head, tail);
    }
  };

  //! L_A(p) = sum over a in A of p(a, A - a) / R(a, A - a).
  auto lagrange_functional(const TailSymmetricExpr& p, const Alphabet& A)
      -> LaurentPoly;

  //! @brief Remainder of x^k modulo R(x, A) for any integer k, from the
  //! multi-Schur closed forms.
  //!
  //! k >= 0: (-1)^{n-1} S_{1^{n-1}; k-n+1}(A - x, A).
  //! k < 0:  (-1)^{n-1} x^{n-1} S_{1^{n-1}; -k}(A^v - 1/x; A^v).
  //! PoleError when k < 0 and 0 is a letter.
  auto remainder_x_pow(int k, const Alphabet& A) -> LaurentPoly;

  //! Remainder of x^-k (k >= 0) as S_{k^{n-1}}(A - x) u^-k.
  auto inverse_power_remainder_box_form(int k, const Alphabet& A)
      -> LaurentPoly;

  //! Remainder of x^-k (k >= 0) as (-1)^{n-1} x^{n-1}
  //! S_{1^{n-1}; k}(A^v - 1/x; A^v).
  auto inverse_power_remainder_dual_form(int k, const Alphabet& A)
      -> LaurentPoly;

  //! Remainder of R(1/x, B) as (-1)^{n-1} x^{n-1}
  //! S_{1^{n-1}; |B|}(A^v - 1/x; A^v - B).
  auto reciprocal_root_remainder_form(const Alphabet& B, const Alphabet& A)
      -> LaurentPoly;

  //! Remainder of a Laurent polynomial, by linearity over remainder_x_pow.
  auto remainder_laurent(const LaurentPoly& f, const Alphabet& A)
      -> LaurentPoly;

  //! Remainder sequence r_1 = f mod g, r_{i+1} = r_{i-1} mod r_i.
  struct EuclidTrace
  {
    LaurentPoly dividend;
    LaurentPoly divisor;
    std::vector<LaurentPoly> remainders;  //!< ends with the zero remainder
    std::vector<LaurentPoly> quotients;
  };

  //! Plain field division at every step, no normalization of remainders.
  auto euclid_remainders(const LaurentPoly& f, const LaurentPoly& g)
      -> EuclidTrace;

  //! @brief S_{1^{n-r}; (m-n+r)^r}(A - x, A - B), the multi-Schur candidate
  //! for the r-th remainder of S^m(x - B) by S^n(x - A).
  //!
  //! First n-r columns carry A - x with index 1, the last r carry A - B with
  //! index m-n+r. Requires n >= 1, 1 <= r <= n and m >= n.
  auto euclid_remainder_multischur(int r, int m, const Alphabet& A,
                                   const Alphabet& B) -> LaurentPoly;

  //! S^m(x - B), monic of degree m in x.
  auto complete_in_x(int m, const Alphabet& B) -> LaurentPoly;

  //! @brief Scalar s with candidate = s * reference, when the two are
  //! proportional by a nonzero scalar.
  //!
  //! Proportionality is decided by the cross-multiplication identity
  //! c_i r_j = c_j r_i over all degree pairs. Empty when either side is zero
  //! or the vectors are not proportional.
  auto proportionality_scalar(const LaurentPoly& candidate,
                              const LaurentPoly& reference)
      -> std::optional<Rational>;

  //! One row of the remainder-sequence comparison table.
  struct EuclidComparison
  {
    int r;
    LaurentPoly remainder;
    LaurentPoly formula;
    std::optional<Rational> scalar;
  };

  //! Compares every remainder r = 1..min(n, terminating index) of
  //! S^m(x - B) by S^n(x - A) with its multi-Schur formula.
  auto compare_euclid_with_multischur(int m, const Alphabet& A,
                                      const Alphabet& B)
      -> std::vector<EuclidComparison>;

}  // namespace giambelli
