#pragma once

#include <giambelli/alphabet.hpp>
#include <giambelli/laurent.hpp>
#include <giambelli/rational.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace giambelli {

  //! @brief Integer vector J indexing Schur functions and multi-Schur
  //! determinants.
  //!
  //! Partitions follow the nondecreasing convention: (1,1,2) is the hook
  //! with a row of length 2 and two rows of length 1.
  class IndexVector
  {
  public:
    IndexVector() = default;
    IndexVector(std::vector<int> parts)
      : parts_(std::move(parts))
    {
    }
    IndexVector(std::initializer_list<int> parts)
      : parts_(parts)
    {
    }
    //! n copies of value, e.g. repeated(1, n) is 1^n.
    static auto repeated(int value, std::size_t n) -> IndexVector
    {
      return IndexVector(std::vector<int>(n, value));
    }

    auto parts() const -> const std::vector<int>&
    {
      return parts_;
    }
    auto size() const -> std::size_t
    {
      return parts_.size();
    }
    auto operator[](std::size_t i) const -> int
    {
      return parts_[i];
    }
    auto begin() const
    {
      return parts_.begin();
    }
    auto end() const
    {
      return parts_.end();
    }

    auto is_weakly_increasing() const -> bool;
    //! Weakly increasing with every part >= 0.
    auto is_partition() const -> bool;

    //! J^omega: parts in reverse order.
    auto reversed() const -> IndexVector;
    auto negated() const -> IndexVector;
    //! This vector followed by other.
    auto concat(const IndexVector& other) const -> IndexVector;

    //! "[j1,j2,...]".
    auto to_string() const -> std::string;

    friend auto operator==(const IndexVector&, const IndexVector&)
        -> bool = default;

  private:
    std::vector<int> parts_;
  };

  //! Arms alpha and legs beta of the diagonal hooks, both strictly
  //! decreasing.
  struct FrobeniusCoords
  {
    std::vector<int> alpha;
    std::vector<int> beta;

    auto rank() const -> std::size_t
    {
      return alpha.size();
    }
    //! "(3,1|2,1)".
    auto to_string() const -> std::string;

    friend auto operator==(const FrobeniusCoords&, const FrobeniusCoords&)
        -> bool = default;
  };

  //! Index J/I and one complete-function argument per column.
  struct MultiSchurSpec
  {
    IndexVector J;
    IndexVector I;  //!< empty means all zeros
    std::vector<DiffArgument> columns;
  };

  //! @brief Bialternant |a_k^{j_l+l-1}| / |a_k^{l-1}| for any J in Z^n.
  //!
  //! Agrees with the classical Schur function when J is a partition, and
  //! stays meaningful for negative parts. PoleError for a negative exponent
  //! of a zero letter; DimensionError when |J| != |A|.
  auto gschur(const IndexVector& J, const Alphabet& A) -> Rational;

  //! Multi-Schur determinant |S_{j_k - i_l + k - l}(column_k)| (rows l,
  //! columns k).
  auto multi_schur(const MultiSchurSpec& spec) -> LaurentPoly;

  //! Multi-Schur determinant with the same argument in every column.
  auto multi_schur(const IndexVector& J, const DiffArgument& arg)
      -> LaurentPoly;

  //! @brief Classical Schur function of a nondecreasing partition P on A.
  //!
  //! P is padded with leading zeros up to |A|; the value is 0 when P has
  //! more nonzero parts than A has letters.
  auto schur_value(const IndexVector& P, const Alphabet& A) -> Rational;

  //! Complement J of I inside the m^n box, so that S_I(A^v) = S_J(A) u^-m.
  auto box_complement(const IndexVector& I, int m, std::size_t n)
      -> IndexVector;

  //! Conjugate of a nondecreasing partition, also nondecreasing.
  auto conjugate(const IndexVector& P) -> IndexVector;

  //! Frobenius coordinates of a nondecreasing partition.
  auto frobenius(const IndexVector& P) -> FrobeniusCoords;

  //! The hook i & j = (1^j, i+1).
  auto hook_amp(int i, int j) -> IndexVector;

}  // namespace giambelli
