#pragma once

#include <giambelli/alphabet.hpp>
#include <giambelli/matrix.hpp>
#include <giambelli/rational.hpp>
#include <giambelli/schur.hpp>

#include <span>
#include <string>
#include <vector>

namespace giambelli {

  //! Finite window kmin..kmax onto the bi-infinite column index k in Z.
  struct ColumnRange
  {
    int kmin = 0;
    int kmax = 0;

    //! DomainError when kmin > kmax.
    ColumnRange(int lo, int hi);

    auto size() const -> Index
    {
      return static_cast<Index>(kmax - kmin + 1);
    }
  };

  //! Coefficients of x^k mod R(x, A) in the basis 1, x, ..., x^{n-1}, read
  //! off the multi-Schur remainder.
  auto companion_column_from_remainder(int k, const Alphabet& A)
      -> std::vector<Rational>;

  //! The same column from c_{l-1,k} = G_{0^{l-1}, k-l+1, 0^{n-l}}(A).
  auto companion_column_from_gschur(int k, const Alphabet& A)
      -> std::vector<Rational>;

  //! @brief Window of the double companion matrix C(A).
  //!
  //! Every column is built twice, from the remainder and from the bialternant
  //! closed form; a disagreement throws ConsistencyError.
  auto double_companion(const Alphabet& A, const ColumnRange& range)
      -> RationalMatrix;

  //! Columns i_1 + 0, i_2 + 1, ..., i_n + n-1 of C(A). C_{1^n} is the usual
  //! companion matrix. Negative parts are accepted.
  auto companion_submatrix(const Alphabet& A, const IndexVector& I)
      -> RationalMatrix;

  //! Entry (i, k) = a_i^k over the window.
  auto double_vandermonde(const Alphabet& A, const ColumnRange& range)
      -> RationalMatrix;

  //! V_0(A): columns 0..n-1 of the double Vandermonde matrix.
  auto finite_vandermonde(const Alphabet& A) -> RationalMatrix;

  struct GiambelliDeterminant
  {
    RationalMatrix matrix;
    Rational value;
  };

  //! |G_{0^{l-1}, j_k+k-l, 0^{n-l}}(A)|, the generalized Giambelli
  //! determinant of G_J(A).
  auto giambelli_general(const IndexVector& J, const Alphabet& A)
      -> GiambelliDeterminant;

  enum class AlphabetTag
  {
    direct,  //!< A
    dual     //!< A^v
  };

  //! Hook Schur function attached to one entry of the block determinant.
  struct HookLabel
  {
    char block = 'N';  //!< 'P', 'Q', 'M' or 'N'
    int arm = 0;
    int leg = 0;
    AlphabetTag tag = AlphabetTag::direct;

    auto partition() const -> IndexVector
    {
      return hook_amp(arm, leg);
    }
    //! "S_{1^4,4}(A)" or "S_{1,2}(A^v)".
    auto to_string() const -> std::string;
    auto to_latex() const -> std::string;

    friend auto operator==(const HookLabel&, const HookLabel&)
        -> bool = default;
  };

  //! @brief Block form [[P, Q], [M, N]] of G_J(A) for weakly increasing J.
  //!
  //! (alpha|beta) are the Frobenius coordinates of the negated, reversed
  //! negative part of J; (gamma|delta) those of the nonnegative part.
  struct GiambelliBlocks
  {
    FrobeniusCoords negative;
    FrobeniusCoords nonnegative;
    RationalMatrix P;
    RationalMatrix Q;
    RationalMatrix M;
    RationalMatrix N;
    //! Row-major labels of the assembled (r1 + r2) square matrix.
    std::vector<std::vector<HookLabel>> labels;

    auto assembled() const -> RationalMatrix;
  };

  struct GiambelliBlockResult
  {
    GiambelliBlocks blocks;
    Rational value;
  };

  //! DomainError unless J is weakly increasing.
  auto giambelli_block(const IndexVector& J, const Alphabet& A)
      -> GiambelliBlockResult;

  //! @brief Linear recurrent sequence with characteristic polynomial R(x, A),
  //! stored as 2n consecutive terms starting at index `base`.
  class RecurrentSeq
  {
  public:
    //! ValidationError if the window violates the recurrence.
    RecurrentSeq(Alphabet A, int base, std::vector<Rational> window);

    //! Extends n seed values T_base..T_{base+n-1} to a full window.
    static auto from_seed(Alphabet A, int base,
                          const std::vector<Rational>& seed) -> RecurrentSeq;

    auto alphabet() const -> const Alphabet&
    {
      return A_;
    }
    auto base() const -> int
    {
      return base_;
    }
    auto window() const -> const std::vector<Rational>&
    {
      return window_;
    }

  private:
    Alphabet A_;
    int base_;
    std::vector<Rational> window_;
  };

  //! T_m for any m in Z. Backward steps divide by the constant term of
  //! R(x, A) and raise PoleError when 0 is a letter.
  auto recur_extend(const RecurrentSeq& seq, int m) -> Rational;

  //! @brief |T^{(k)}_{j_l+l-1}| / |T^{(k)}_{l-1}| over n sequences sharing
  //! one root set.
  //!
  //! DegeneracyError when the seed determinant vanishes.
  auto houmu_ratio(std::span<const RecurrentSeq> seqs, const IndexVector& J)
      -> Rational;

}  // namespace giambelli
