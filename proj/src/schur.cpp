#include <giambelli/schur.hpp>

#include <giambelli/errors.hpp>
#include <giambelli/matrix.hpp>

#include <algorithm>

namespace giambelli {

  auto IndexVector::is_weakly_increasing() const -> bool
  {
    return std::is_sorted(parts_.begin(), parts_.end());
  }

  auto IndexVector::is_partition() const -> bool
  {
    return is_weakly_increasing() && (parts_.empty() || parts_.front() >= 0);
  }

  auto IndexVector::reversed() const -> IndexVector
  {
    return IndexVector(std::vector<int>(parts_.rbegin(), parts_.rend()));
  }

  auto IndexVector::negated() const -> IndexVector
  {
    auto out = parts_;
    for (auto& p : out)
      p = -p;
    return IndexVector(std::move(out));
  }

  auto IndexVector::concat(const IndexVector& other) const -> IndexVector
  {
    auto out = parts_;
    out.insert(out.end(), other.parts_.begin(), other.parts_.end());
    return IndexVector(std::move(out));
  }

  auto IndexVector::to_string() const -> std::string
  {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i)
    {
      if (i > 0)
        out += ",";
      out += std::to_string(parts_[i]);
    }
    return out + "]";
  }

  auto FrobeniusCoords::to_string() const -> std::string
  {
    const auto list = [](const std::vector<int>& v) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i)
      {
        if (i > 0)
          out += ",";
        out += std::to_string(v[i]);
      }
      return out;
    };
    return "(" + list(alpha) + "|" + list(beta) + ")";
  }

  auto gschur(const IndexVector& J, const Alphabet& A) -> Rational
  {
    if (J.size() != A.size())
      throw DimensionError("gschur: index " + J.to_string() + " has length " +
                           std::to_string(J.size()) + " but the alphabet has " +
                           std::to_string(A.size()) + " letters");
    const auto n = static_cast<Index>(A.size());
    RationalMatrix alternant(n, n);
    for (Index l = 0; l < n; ++l)
    {
      const long exponent = J[static_cast<std::size_t>(l)] + l;
      for (Index k = 0; k < n; ++k)
      {
        const auto& a = A[static_cast<std::size_t>(k)];
        if (exponent < 0 && a.is_zero())
          throw PoleError("gschur: negative exponent " +
                          std::to_string(exponent) + " of the letter 0");
        alternant(l, k) = a.pow(exponent);
      }
    }
    return det(alternant) / vandermonde_delta(A);
  }

  auto multi_schur(const MultiSchurSpec& spec) -> LaurentPoly
  {
    const auto n = spec.J.size();
    const auto I = spec.I.size() == 0 ? IndexVector::repeated(0, n) : spec.I;
    if (I.size() != n || spec.columns.size() != n)
      throw DimensionError("multi_schur: J, I and the column arguments need "
                           "equal lengths");

    PolyMatrix m(static_cast<Index>(n), static_cast<Index>(n));
    for (std::size_t k = 0; k < n; ++k)
    {
      int top = -1;
      for (std::size_t l = 0; l < n; ++l)
        top = std::max(top, spec.J[k] - I[l] + static_cast<int>(k) -
                                static_cast<int>(l));
      const auto series = complete_sym_series(top, spec.columns[k]);
      for (std::size_t l = 0; l < n; ++l)
      {
        const auto index =
            spec.J[k] - I[l] + static_cast<int>(k) - static_cast<int>(l);
        m(static_cast<Index>(l), static_cast<Index>(k)) =
            index < 0 ? LaurentPoly{} : series[static_cast<std::size_t>(index)];
      }
    }
    return det(m);
  }

  auto multi_schur(const IndexVector& J, const DiffArgument& arg)
      -> LaurentPoly
  {
    return multi_schur(
        MultiSchurSpec{J, {}, std::vector<DiffArgument>(J.size(), arg)});
  }

  auto schur_value(const IndexVector& P, const Alphabet& A) -> Rational
  {
    if (!P.is_partition())
      throw DomainError("schur_value: " + P.to_string() +
                        " is not a nondecreasing partition");
    std::vector<int> nonzero;
    std::copy_if(P.begin(), P.end(), std::back_inserter(nonzero),
                 [](int p) { return p > 0; });
    if (nonzero.size() > A.size())
      return 0;
    std::vector<int> padded(A.size() - nonzero.size(), 0);
    padded.insert(padded.end(), nonzero.begin(), nonzero.end());
    return gschur(IndexVector(std::move(padded)), A);
  }

  auto box_complement(const IndexVector& I, int m, std::size_t n)
      -> IndexVector
  {
    if (I.size() != n)
      throw DimensionError("box_complement: " + I.to_string() +
                           " does not have length " + std::to_string(n));
    if (!I.is_partition())
      throw DomainError("box_complement: " + I.to_string() +
                        " is not a partition");
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i)
    {
      const auto part = I[n - 1 - i];
      if (part > m)
        throw DomainError("box_complement: part " + std::to_string(part) +
                          " exceeds the box width " + std::to_string(m));
      out[i] = m - part;
    }
    return IndexVector(std::move(out));
  }

  auto conjugate(const IndexVector& P) -> IndexVector
  {
    if (!P.is_partition())
      throw DomainError("conjugate: " + P.to_string() +
                        " is not a nondecreasing partition");
    const int largest = P.size() == 0 ? 0 : P.parts().back();
    std::vector<int> out;
    // Column c of the diagram has as many boxes as parts >= c; scanning c
    // downward keeps the result nondecreasing.
    for (int c = largest; c >= 1; --c)
      out.push_back(static_cast<int>(
          std::count_if(P.begin(), P.end(), [c](int p) { return p >= c; })));
    return IndexVector(std::move(out));
  }

  auto frobenius(const IndexVector& P) -> FrobeniusCoords
  {
    if (!P.is_partition())
      throw DomainError("frobenius: " + P.to_string() +
                        " is not a nondecreasing partition of nonnegative "
                        "parts");
    // Work with the decreasing form lambda and its conjugate.
    const auto lambda = P.reversed();
    const auto lambda_conj = conjugate(P).reversed();
    FrobeniusCoords coords;
    for (std::size_t i = 0; i < lambda.size(); ++i)
    {
      const int row = static_cast<int>(i) + 1;
      if (lambda[i] < row)
        break;
      coords.alpha.push_back(lambda[i] - row);
      coords.beta.push_back(lambda_conj[i] - row);
    }
    return coords;
  }

  auto hook_amp(int i, int j) -> IndexVector
  {
    if (i < 0 || j < 0)
      throw DomainError("hook " + std::to_string(i) + " & " +
                        std::to_string(j) + " needs nonnegative arguments");
    auto parts = std::vector<int>(static_cast<std::size_t>(j), 1);
    parts.push_back(i + 1);
    return IndexVector(std::move(parts));
  }

}  // namespace giambelli
