#include <giambelli/alphabet.hpp>

#include <giambelli/errors.hpp>

#include <algorithm>

namespace giambelli {

  Alphabet::Alphabet(std::vector<Rational> letters)
    : letters_(std::move(letters))
  {
    for (std::size_t i = 0; i < letters_.size(); ++i)
      for (std::size_t j = i + 1; j < letters_.size(); ++j)
        if (letters_[i] == letters_[j])
          throw DomainError("repeated letter " + letters_[i].to_string() +
                            " in alphabet");
  }

  auto Alphabet::contains_zero() const -> bool
  {
    return std::any_of(letters_.begin(), letters_.end(),
                       [](const Rational& a) { return a.is_zero(); });
  }

  auto Alphabet::without(std::size_t i) const -> Alphabet
  {
    auto rest = letters_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    Alphabet out;
    out.letters_ = std::move(rest);
    return out;
  }

  auto Alphabet::to_string() const -> std::string
  {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i)
    {
      if (i > 0)
        out += ",";
      out += letters_[i].to_string();
    }
    return out;
  }

  auto dual(const Alphabet& A) -> Alphabet
  {
    std::vector<Rational> inv;
    inv.reserve(A.size());
    for (const auto& a : A)
    {
      if (a.is_zero())
        throw PoleError("dual of an alphabet containing 0");
      inv.push_back(a.inverse());
    }
    return Alphabet(std::move(inv));
  }

  auto prod_u(const Alphabet& A) -> Rational
  {
    Rational u = 1;
    for (const auto& a : A)
      u *= a;
    return u;
  }

  auto resultant(const Alphabet& A, const Alphabet& B) -> Rational
  {
    Rational r = 1;
    for (const auto& a : A)
      for (const auto& b : B)
        r *= a - b;
    return r;
  }

  auto vandermonde_delta(const Alphabet& A) -> Rational
  {
    Rational d = 1;
    for (std::size_t i = 0; i < A.size(); ++i)
      for (std::size_t j = i + 1; j < A.size(); ++j)
        d *= A[j] - A[i];
    return d;
  }

  auto root_polynomial(const Alphabet& A) -> LaurentPoly
  {
    LaurentPoly p = 1;
    for (const auto& a : A)
      p *= LaurentPoly::x() - LaurentPoly(a);
    return p;
  }

  auto reciprocal_root_polynomial(const Alphabet& B) -> LaurentPoly
  {
    LaurentPoly p = 1;
    for (const auto& b : B)
      p *= LaurentPoly::monomial(1, -1) - LaurentPoly(b);
    return p;
  }

  auto Generator::as_poly() const -> LaurentPoly
  {
    switch (kind_)
    {
    case Kind::x:
      return LaurentPoly::monomial(1, 1);
    case Kind::x_inverse:
      return LaurentPoly::monomial(1, -1);
    case Kind::value:
      break;
    }
    return LaurentPoly(value_);
  }

  auto Generator::to_string() const -> std::string
  {
    switch (kind_)
    {
    case Kind::x:
      return "x";
    case Kind::x_inverse:
      return "x^-1";
    case Kind::value:
      break;
    }
    return value_.to_string();
  }

  DiffArgument::DiffArgument(const Alphabet& plus_letters,
                             const Alphabet& minus_letters)
  {
    plus.assign(plus_letters.begin(), plus_letters.end());
    minus.assign(minus_letters.begin(), minus_letters.end());
  }

  auto DiffArgument::add_plus(const Generator& g) const -> DiffArgument
  {
    auto out = *this;
    out.plus.push_back(g);
    return out;
  }

  auto DiffArgument::add_minus(const Generator& g) const -> DiffArgument
  {
    auto out = *this;
    out.minus.push_back(g);
    return out;
  }

  auto DiffArgument::has_symbol() const -> bool
  {
    const auto symbolic = [](const Generator& g) {
      return g.kind() != Generator::Kind::value;
    };
    return std::any_of(plus.begin(), plus.end(), symbolic) ||
           std::any_of(minus.begin(), minus.end(), symbolic);
  }

  auto DiffArgument::to_string() const -> std::string
  {
    const auto side = [](const std::vector<Generator>& gens) {
      std::string out = "(";
      for (std::size_t i = 0; i < gens.size(); ++i)
      {
        if (i > 0)
          out += ",";
        out += gens[i].to_string();
      }
      return out + ")";
    };
    return side(plus) + " - " + side(minus);
  }

  auto complete_sym_series(int k, const DiffArgument& arg)
      -> std::vector<LaurentPoly>
  {
    if (k < 0)
      return {};
    const auto len = static_cast<std::size_t>(k) + 1;
    std::vector<LaurentPoly> series(len);
    series[0] = 1;

    // Numerator: prod (1 - b z), truncated at z^k.
    for (const auto& g : arg.minus)
    {
      const auto b = g.as_poly();
      for (std::size_t i = len - 1; i >= 1; --i)
        series[i] -= b * series[i - 1];
    }
    // Divide by each (1 - a z): c'_i = c_i + a c'_{i-1}.
    for (const auto& g : arg.plus)
    {
      const auto a = g.as_poly();
      for (std::size_t i = 1; i < len; ++i)
        series[i] += a * series[i - 1];
    }
    return series;
  }

  auto complete_sym(int k, const DiffArgument& arg) -> LaurentPoly
  {
    if (k < 0)
      return {};
    return complete_sym_series(k, arg).back();
  }

}  // namespace giambelli
