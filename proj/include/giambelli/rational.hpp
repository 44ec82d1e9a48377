#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace giambelli {

  //! @brief Exact fraction over arbitrary-precision integers.
  //!
  //! Always kept in lowest terms with a positive denominator, so equality is
  //! structural. Zero is 0/1.
  class Rational
  {
  public:
    Rational() = default;

    template <std::integral Int>
    Rational(Int value)
      : value_(static_cast<long>(value))
    {
    }

    Rational(long numerator, long denominator);
    Rational(const mpz_class& numerator, const mpz_class& denominator);
    explicit Rational(const mpq_class& value);

    //! Parses "p", "-p", "p/q" or "-p/q" (decimal digits only).
    static auto parse(std::string_view text) -> Rational;

    auto numerator() const -> mpz_class
    {
      return value_.get_num();
    }
    auto denominator() const -> mpz_class
    {
      return value_.get_den();
    }
    auto sign() const -> int
    {
      return sgn(value_);
    }
    auto is_zero() const -> bool
    {
      return sign() == 0;
    }
    auto is_integer() const -> bool
    {
      return value_.get_den() == 1;
    }

    auto inverse() const -> Rational;
    //! Signed integer power; a negative exponent of zero throws PoleError.
    auto pow(long exponent) const -> Rational;

    //! "p/q", or "p" when q = 1; the sign sits on the numerator.
    auto to_string() const -> std::string;

    auto mpq() const -> const mpq_class&
    {
      return value_;
    }

    auto operator-() const -> Rational
    {
      return Rational{mpq_class(-value_)};
    }

    auto operator+=(const Rational& other) -> Rational&
    {
      value_ += other.value_;
      return *this;
    }
    auto operator-=(const Rational& other) -> Rational&
    {
      value_ -= other.value_;
      return *this;
    }
    auto operator*=(const Rational& other) -> Rational&
    {
      value_ *= other.value_;
      return *this;
    }
    //! Throws DivisionByZeroError on a zero divisor.
    auto operator/=(const Rational& other) -> Rational&;

    friend auto operator+(Rational a, const Rational& b) -> Rational
    {
      return a += b;
    }
    friend auto operator-(Rational a, const Rational& b) -> Rational
    {
      return a -= b;
    }
    friend auto operator*(Rational a, const Rational& b) -> Rational
    {
      return a *= b;
    }
    friend auto operator/(Rational a, const Rational& b) -> Rational
    {
      return a /= b;
    }

    friend auto operator==(const Rational& a, const Rational& b) -> bool
    {
      return a.value_ == b.value_;
    }
    friend auto operator<=>(const Rational& a, const Rational& b)
        -> std::strong_ordering
    {
      return cmp(a.value_, b.value_) <=> 0;
    }

  private:
    mpq_class value_{0};
  };

  auto operator<<(std::ostream& os, const Rational& r) -> std::ostream&;

  inline auto abs(const Rational& r) -> Rational
  {
    return r.sign() < 0 ? -r : r;
  }

}  // namespace giambelli
