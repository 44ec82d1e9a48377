#include <giambelli/rational.hpp>

#include <giambelli/errors.hpp>

#include <cctype>
#include <ostream>

namespace giambelli {

  Rational::Rational(long numerator, long denominator)
    : Rational(mpz_class(numerator), mpz_class(denominator))
  {
  }

  Rational::Rational(const mpz_class& numerator, const mpz_class& denominator)
  {
    if (denominator == 0)
      throw DivisionByZeroError("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
  }

  Rational::Rational(const mpq_class& value)
    : value_(value)
  {
    value_.canonicalize();
  }

  auto Rational::parse(std::string_view text) -> Rational
  {
    std::size_t pos = 0;
    const auto read_digits = [&](bool allow_sign) -> std::string {
      std::string digits;
      if (allow_sign && pos < text.size() &&
          (text[pos] == '-' || text[pos] == '+'))
      {
        if (text[pos] == '-')
          digits.push_back('-');
        ++pos;
      }
      const auto start = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        digits.push_back(text[pos++]);
      if (pos == start)
        throw ParseError("expected digits in rational '" + std::string(text) +
                             "'",
                         pos);
      return digits;
    };

    const auto num = mpz_class(read_digits(true));
    auto den = mpz_class(1);
    if (pos < text.size() && text[pos] == '/')
    {
      ++pos;
      const auto den_offset = pos;
      den = mpz_class(read_digits(false));
      if (den == 0)
        throw ParseError("zero denominator in rational '" + std::string(text) +
                             "'",
                         den_offset);
    }
    if (pos != text.size())
      throw ParseError("trailing characters in rational '" +
                           std::string(text) + "'",
                       pos);
    return Rational(num, den);
  }

  auto Rational::inverse() const -> Rational
  {
    if (is_zero())
      throw PoleError("inverse of zero");
    return Rational{mpq_class(1 / value_)};
  }

  auto Rational::pow(long exponent) const -> Rational
  {
    if (exponent < 0)
    {
      if (is_zero())
        throw PoleError("negative power of zero");
      return inverse().pow(-exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(),
               static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(),
               static_cast<unsigned long>(exponent));
    // Powers of coprime integers stay coprime.
    Rational result;
    result.value_ = mpq_class(num, den);
    return result;
  }

  auto Rational::operator/=(const Rational& other) -> Rational&
  {
    if (other.is_zero())
      throw DivisionByZeroError("rational division by zero");
    value_ /= other.value_;
    return *this;
  }

  auto Rational::to_string() const -> std::string
  {
    if (is_integer())
      return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  auto operator<<(std::ostream& os, const Rational& r) -> std::ostream&
  {
    return os << r.to_string();
  }

}  // namespace giambelli
