#include <giambelli/laurent.hpp>

#include <giambelli/alphabet.hpp>
#include <giambelli/errors.hpp>

#include <ostream>
#include <sstream>

namespace giambelli {

  LaurentPoly::LaurentPoly(const Rational& constant)
  {
    add_term(0, constant);
  }

  LaurentPoly::LaurentPoly(Terms terms)
  {
    for (const auto& [d, c] : terms)
      add_term(d, c);
  }

  auto LaurentPoly::monomial(const Rational& c, int degree) -> LaurentPoly
  {
    LaurentPoly p;
    p.add_term(degree, c);
    return p;
  }

  auto LaurentPoly::from_coefficients(const std::vector<Rational>& ascending)
      -> LaurentPoly
  {
    LaurentPoly p;
    for (std::size_t i = 0; i < ascending.size(); ++i)
      p.add_term(static_cast<int>(i), ascending[i]);
    return p;
  }

  void LaurentPoly::add_term(int degree, const Rational& c)
  {
    if (c.is_zero())
      return;
    auto [it, inserted] = terms_.try_emplace(degree, c);
    if (inserted)
      return;
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }

  auto LaurentPoly::is_constant() const -> bool
  {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }

  auto LaurentPoly::constant_value() const -> Rational
  {
    if (!is_constant())
      throw DomainError("Laurent polynomial " + to_string() +
                        " is not a constant");
    return coeff(0);
  }

  auto LaurentPoly::coeff(int degree) const -> Rational
  {
    const auto it = terms_.find(degree);
    return it == terms_.end() ? Rational{} : it->second;
  }

  auto LaurentPoly::valuation() const -> int
  {
    if (is_zero())
      throw DomainError("valuation of the zero polynomial");
    return terms_.begin()->first;
  }

  auto LaurentPoly::degree() const -> int
  {
    if (is_zero())
      throw DomainError("degree of the zero polynomial");
    return terms_.rbegin()->first;
  }

  auto LaurentPoly::leading_coefficient() const -> Rational
  {
    if (is_zero())
      throw DomainError("leading coefficient of the zero polynomial");
    return terms_.rbegin()->second;
  }

  auto LaurentPoly::evaluate(const Rational& t) const -> Rational
  {
    if (is_zero())
      return {};
    if (t.is_zero())
    {
      if (valuation() < 0)
        throw PoleError("evaluating " + to_string() + " at x = 0");
      return coeff(0);
    }
    // Horner from the top degree down to the valuation, then rescale.
    Rational acc;
    int current = degree();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    {
      acc *= t.pow(current - it->first);
      acc += it->second;
      current = it->first;
    }
    return acc * t.pow(current);
  }

  auto LaurentPoly::shifted(int shift) const -> LaurentPoly
  {
    LaurentPoly p;
    for (const auto& [d, c] : terms_)
      p.terms_.emplace(d + shift, c);
    return p;
  }

  auto LaurentPoly::coefficients(int length) const -> std::vector<Rational>
  {
    std::vector<Rational> out(static_cast<std::size_t>(length));
    for (const auto& [d, c] : terms_)
    {
      if (d < 0 || d >= length)
        throw DomainError("term x^" + std::to_string(d) +
                          " outside the requested coefficient window");
      out[static_cast<std::size_t>(d)] = c;
    }
    return out;
  }

  auto LaurentPoly::operator-() const -> LaurentPoly
  {
    LaurentPoly p;
    for (const auto& [d, c] : terms_)
      p.terms_.emplace(d, -c);
    return p;
  }

  auto LaurentPoly::operator+=(const LaurentPoly& other) -> LaurentPoly&
  {
    for (const auto& [d, c] : other.terms_)
      add_term(d, c);
    return *this;
  }

  auto LaurentPoly::operator-=(const LaurentPoly& other) -> LaurentPoly&
  {
    for (const auto& [d, c] : other.terms_)
      add_term(d, -c);
    return *this;
  }

  auto operator*(const LaurentPoly& a, const LaurentPoly& b) -> LaurentPoly
  {
    LaurentPoly p;
    for (const auto& [da, ca] : a.terms_)
      for (const auto& [db, cb] : b.terms_)
        p.add_term(da + db, ca * cb);
    return p;
  }

  auto LaurentPoly::operator*=(const LaurentPoly& other) -> LaurentPoly&
  {
    *this = *this * other;
    return *this;
  }

  auto LaurentPoly::operator*=(const Rational& scalar) -> LaurentPoly&
  {
    if (scalar.is_zero())
    {
      terms_.clear();
      return *this;
    }
    for (auto& [d, c] : terms_)
      c *= scalar;
    return *this;
  }

  auto LaurentPoly::operator/=(const Rational& scalar) -> LaurentPoly&
  {
    return *this *= scalar.inverse();
  }

  auto LaurentPoly::pow(unsigned exponent) const -> LaurentPoly
  {
    LaurentPoly result = 1;
    for (unsigned i = 0; i < exponent; ++i)
      result *= *this;
    return result;
  }

  auto LaurentPoly::to_string() const -> std::string
  {
    if (is_zero())
      return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    {
      const auto& [d, c] = *it;
      auto magnitude = abs(c);
      if (first)
        os << (c.sign() < 0 ? "-" : "");
      else
        os << (c.sign() < 0 ? " - " : " + ");
      first = false;
      if (d == 0)
      {
        os << magnitude;
        continue;
      }
      if (magnitude != Rational(1))
        os << magnitude << "*";
      os << "x";
      if (d != 1)
        os << "^" << d;
    }
    return os.str();
  }

  auto operator<<(std::ostream& os, const LaurentPoly& p) -> std::ostream&
  {
    return os << p.to_string();
  }

  PointValueSet::PointValueSet(std::vector<Point> points)
    : points_(std::move(points))
  {
    for (std::size_t i = 0; i < points_.size(); ++i)
      for (std::size_t j = i + 1; j < points_.size(); ++j)
        if (points_[i].first == points_[j].first)
          throw DomainError("repeated interpolation node " +
                            points_[i].first.to_string());
  }

  auto poly_divmod(const LaurentPoly& f, const LaurentPoly& g) -> DivMod
  {
    if (g.is_zero())
      throw DivisionByZeroError("polynomial division by zero");
    if (g.valuation() < 0 || (!f.is_zero() && f.valuation() < 0))
      throw DomainError("poly_divmod needs ordinary polynomials");

    const auto dg = g.degree();
    const auto lead = g.leading_coefficient();
    DivMod out{LaurentPoly{}, f};
    while (!out.remainder.is_zero() && out.remainder.degree() >= dg)
    {
      const auto shift = out.remainder.degree() - dg;
      const auto factor = out.remainder.leading_coefficient() / lead;
      const auto step = LaurentPoly::monomial(factor, shift);
      out.quotient += step;
      out.remainder -= step * g;
    }
    return out;
  }

  auto laurent_split(const LaurentPoly& f) -> LaurentSplit
  {
    LaurentPoly::Terms pos, neg;
    for (const auto& [d, c] : f.terms())
      (d >= 0 ? pos : neg).emplace(d, c);
    return {LaurentPoly(std::move(pos)), LaurentPoly(std::move(neg))};
  }

  auto lagrange_interpolate(const PointValueSet& pv) -> LaurentPoly
  {
    if (pv.size() == 0)
      throw DomainError("interpolation needs at least one point");
    const auto& pts = pv.points();
    LaurentPoly result;
    for (std::size_t i = 0; i < pts.size(); ++i)
    {
      LaurentPoly basis = 1;
      Rational denom = 1;
      for (std::size_t j = 0; j < pts.size(); ++j)
      {
        if (j == i)
          continue;
        basis *= LaurentPoly::x() - LaurentPoly(pts[j].first);
        denom *= pts[i].first - pts[j].first;
      }
      result += basis * (pts[i].second / denom);
    }
    return result;
  }

  auto remainder_via_interpolation(const LaurentPoly& f, const Alphabet& A)
      -> LaurentPoly
  {
    if (A.empty())
      return {};
    std::vector<PointValueSet::Point> points;
    points.reserve(A.size());
    for (const auto& a : A)
      points.emplace_back(a, f.evaluate(a));
    return lagrange_interpolate(PointValueSet(std::move(points)));
  }

}  // namespace giambelli
