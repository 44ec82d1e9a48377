#pragma once

#include <giambelli/laurent.hpp>
#include <giambelli/rational.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace giambelli {

  //! @brief Ordered set of pairwise distinct rational letters.
  //!
  //! Stands for the root set of a monic polynomial. Zero letters are allowed
  //! here; operations needing reciprocals reject them.
  class Alphabet
  {
  public:
    Alphabet() = default;
    //! DomainError on a repeated letter.
    Alphabet(std::vector<Rational> letters);
    Alphabet(std::initializer_list<Rational> letters)
      : Alphabet(std::vector<Rational>(letters))
    {
    }

    auto letters() const -> const std::vector<Rational>&
    {
      return letters_;
    }
    auto size() const -> std::size_t
    {
      return letters_.size();
    }
    auto empty() const -> bool
    {
      return letters_.empty();
    }
    auto operator[](std::size_t i) const -> const Rational&
    {
      return letters_[i];
    }
    auto begin() const
    {
      return letters_.begin();
    }
    auto end() const
    {
      return letters_.end();
    }
    auto contains_zero() const -> bool;

    //! The alphabet with letter i removed (A - a_i).
    auto without(std::size_t i) const -> Alphabet;

    auto to_string() const -> std::string;

    friend auto operator==(const Alphabet&, const Alphabet&) -> bool = default;

  private:
    std::vector<Rational> letters_;
  };

  //! Elementwise reciprocals, order kept. PoleError on a zero letter.
  auto dual(const Alphabet& A) -> Alphabet;

  //! u = product of the letters; 1 for the empty alphabet.
  auto prod_u(const Alphabet& A) -> Rational;

  //! R(A, B) = prod over a in A, b in B of (a - b).
  auto resultant(const Alphabet& A, const Alphabet& B) -> Rational;

  //! Delta(A) = prod over i < j of (a_j - a_i).
  auto vandermonde_delta(const Alphabet& A) -> Rational;

  //! R(x, A) = prod (x - a), the monic polynomial with root set A.
  auto root_polynomial(const Alphabet& A) -> LaurentPoly;

  //! R(x^-1, B) = prod (x^-1 - b).
  auto reciprocal_root_polynomial(const Alphabet& B) -> LaurentPoly;

  //! A rational letter, or the symbol x, or x^-1.
  class Generator
  {
  public:
    enum class Kind
    {
      value,
      x,
      x_inverse
    };

    Generator(const Rational& value)
      : kind_(Kind::value)
      , value_(value)
    {
    }
    static auto symbol_x() -> Generator
    {
      return Generator(Kind::x);
    }
    static auto symbol_x_inverse() -> Generator
    {
      return Generator(Kind::x_inverse);
    }

    auto kind() const -> Kind
    {
      return kind_;
    }
    auto value() const -> const Rational&
    {
      return value_;
    }
    //! The generator as an element of the Laurent ring in x.
    auto as_poly() const -> LaurentPoly;
    auto to_string() const -> std::string;

    friend auto operator==(const Generator&, const Generator&) -> bool = default;

  private:
    explicit Generator(Kind kind)
      : kind_(kind)
    {
    }

    Kind kind_;
    Rational value_;
  };

  //! @brief Formal difference of two multisets of generators, such as A - B,
  //! A - x or A^v - x^-1; the argument of a complete function.
  struct DiffArgument
  {
    std::vector<Generator> plus;
    std::vector<Generator> minus;

    DiffArgument() = default;
    DiffArgument(const Alphabet& plus_letters,
                 const Alphabet& minus_letters = {});

    auto add_plus(const Generator& g) const -> DiffArgument;
    auto add_minus(const Generator& g) const -> DiffArgument;
    auto has_symbol() const -> bool;

    //! "(1,2) - (x)" form, as accepted by the CLI.
    auto to_string() const -> std::string;

    friend auto operator==(const DiffArgument&, const DiffArgument&)
        -> bool = default;
  };

  //! A - B for two alphabets.
  inline auto operator-(const Alphabet& A, const Alphabet& B) -> DiffArgument
  {
    return DiffArgument(A, B);
  }
  //! A - g for an alphabet and a single generator, e.g. A - x.
  inline auto operator-(const Alphabet& A, const Generator& g) -> DiffArgument
  {
    return DiffArgument(A).add_minus(g);
  }

  //! @brief Complete function S^k(arg): coefficient of z^k in
  //! prod_{b in minus}(1 - b z) / prod_{a in plus}(1 - a z).
  //!
  //! Coefficients live in the Laurent ring of x; zero for k < 0.
  auto complete_sym(int k, const DiffArgument& arg) -> LaurentPoly;

  //! S^0..S^k of arg in one pass.
  auto complete_sym_series(int k, const DiffArgument& arg)
      -> std::vector<LaurentPoly>;

}  // namespace giambelli
