#pragma once

#include <giambelli/rational.hpp>

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace giambelli {

  class Alphabet;

  //! @brief Laurent polynomial in one symbol x with rational coefficients.
  //!
  //! Sparse degree -> coefficient table. Zero coefficients are never stored,
  //! so the empty table is the zero polynomial and equality is structural.
  class LaurentPoly
  {
  public:
    using Terms = std::map<int, Rational>;

    LaurentPoly() = default;

    template <std::integral Int>
    LaurentPoly(Int constant)
      : LaurentPoly(Rational(constant))
    {
    }
    LaurentPoly(const Rational& constant);
    explicit LaurentPoly(Terms terms);

    //! c * x^degree.
    static auto monomial(const Rational& c, int degree) -> LaurentPoly;
    static auto x() -> LaurentPoly
    {
      return monomial(1, 1);
    }
    //! Ascending coefficients c0 + c1 x + ...
    static auto from_coefficients(const std::vector<Rational>& ascending)
        -> LaurentPoly;

    auto terms() const -> const Terms&
    {
      return terms_;
    }
    auto is_zero() const -> bool
    {
      return terms_.empty();
    }
    auto is_constant() const -> bool;
    //! Coefficient of x^0 when the polynomial is constant; DomainError
    //! otherwise.
    auto constant_value() const -> Rational;
    auto coeff(int degree) const -> Rational;

    //! Lowest degree present; DomainError on the zero polynomial.
    auto valuation() const -> int;
    //! Highest degree present; DomainError on the zero polynomial.
    auto degree() const -> int;
    auto leading_coefficient() const -> Rational;

    //! Value at t. PoleError when t = 0 and negative degrees are present.
    auto evaluate(const Rational& t) const -> Rational;

    //! Multiplies by x^shift.
    auto shifted(int shift) const -> LaurentPoly;

    //! Dense ascending coefficients for degrees 0..length-1; DomainError if
    //! the polynomial has support outside that range.
    auto coefficients(int length) const -> std::vector<Rational>;

    auto operator-() const -> LaurentPoly;
    auto operator+=(const LaurentPoly& other) -> LaurentPoly&;
    auto operator-=(const LaurentPoly& other) -> LaurentPoly&;
    auto operator*=(const LaurentPoly& other) -> LaurentPoly&;
    auto operator*=(const Rational& scalar) -> LaurentPoly&;
    auto operator/=(const Rational& scalar) -> LaurentPoly&;

    friend auto operator+(LaurentPoly a, const LaurentPoly& b) -> LaurentPoly
    {
      return a += b;
    }
    friend auto operator-(LaurentPoly a, const LaurentPoly& b) -> LaurentPoly
    {
      return a -= b;
    }
    friend auto operator*(const LaurentPoly& a, const LaurentPoly& b)
        -> LaurentPoly;
    friend auto operator*(LaurentPoly a, const Rational& s) -> LaurentPoly
    {
      return a *= s;
    }
    friend auto operator*(const Rational& s, LaurentPoly a) -> LaurentPoly
    {
      return a *= s;
    }
    friend auto operator/(LaurentPoly a, const Rational& s) -> LaurentPoly
    {
      return a /= s;
    }

    friend auto operator==(const LaurentPoly&, const LaurentPoly&)
        -> bool = default;

    auto pow(unsigned exponent) const -> LaurentPoly;

    //! Human-readable form such as "-1/2*x + 3/2" or "x^-1".
    auto to_string() const -> std::string;

  private:
    void add_term(int degree, const Rational& c);

    Terms terms_;
  };

  auto operator<<(std::ostream& os, const LaurentPoly& p) -> std::ostream&;

  //! Pairs (node, value) with pairwise distinct nodes.
  class PointValueSet
  {
  public:
    using Point = std::pair<Rational, Rational>;

    PointValueSet() = default;
    //! DomainError on repeated nodes.
    explicit PointValueSet(std::vector<Point> points);

    auto points() const -> const std::vector<Point>&
    {
      return points_;
    }
    auto size() const -> std::size_t
    {
      return points_.size();
    }

  private:
    std::vector<Point> points_;
  };

  struct DivMod
  {
    LaurentPoly quotient;
    LaurentPoly remainder;
  };

  //! Euclidean division of ordinary polynomials: f = q g + r, deg r < deg g.
  auto poly_divmod(const LaurentPoly& f, const LaurentPoly& g) -> DivMod;

  struct LaurentSplit
  {
    LaurentPoly nonnegative;  //!< f1(x), degrees >= 0
    LaurentPoly negative;     //!< f2(1/x), degrees < 0, so f2(0) = 0
  };

  auto laurent_split(const LaurentPoly& f) -> LaurentSplit;

  //! Unique polynomial of degree < |pv| through every point (Lagrange form).
  auto lagrange_interpolate(const PointValueSet& pv) -> LaurentPoly;

  //! @brief Remainder of f modulo R(x, A) = prod (x - a), computed as the
  //! unique polynomial of degree < |A| agreeing with f on every letter.
  //!
  //! This is the reference every closed-form remainder is checked against.
  //! PoleError when f has negative degrees and 0 is a letter.
  auto remainder_via_interpolation(const LaurentPoly& f, const Alphabet& A)
      -> LaurentPoly;

}  // namespace giambelli
