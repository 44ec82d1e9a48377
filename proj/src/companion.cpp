#include <giambelli/companion.hpp>

#include <giambelli/division.hpp>
#include <giambelli/errors.hpp>

#include <deque>

namespace giambelli {

  namespace {

    auto companion_column(int k, const Alphabet& A) -> std::vector<Rational>
    {
      auto from_remainder = companion_column_from_remainder(k, A);
      if (from_remainder != companion_column_from_gschur(k, A))
        throw ConsistencyError("double companion column " + std::to_string(k) +
                               " differs between the remainder and the "
                               "bialternant constructions for A = {" +
                               A.to_string() + "}");
      return from_remainder;
    }

    auto hook_value(const HookLabel& label, const Alphabet& A,
                    const Alphabet& Av) -> Rational
    {
      return schur_value(label.partition(),
                         label.tag == AlphabetTag::dual ? Av : A);
    }

    auto render_parts(const IndexVector& p, bool latex) -> std::string
    {
      std::string out;
      for (std::size_t i = 0; i < p.size();)
      {
        auto j = i;
        while (j < p.size() && p[j] == p[i])
          ++j;
        if (!out.empty())
          out += ",";
        out += std::to_string(p[i]);
        if (j - i > 1)
          out += latex ? "^{" + std::to_string(j - i) + "}"
                       : "^" + std::to_string(j - i);
        i = j;
      }
      return out;
    }

  }  // namespace

  ColumnRange::ColumnRange(int lo, int hi)
    : kmin(lo)
    , kmax(hi)
  {
    if (lo > hi)
      throw DomainError("column range " + std::to_string(lo) + ".." +
                        std::to_string(hi) + " is empty");
  }

  auto companion_column_from_remainder(int k, const Alphabet& A)
      -> std::vector<Rational>
  {
    return remainder_x_pow(k, A).coefficients(static_cast<int>(A.size()));
  }

  auto companion_column_from_gschur(int k, const Alphabet& A)
      -> std::vector<Rational>
  {
    const auto n = A.size();
    std::vector<Rational> column(n);
    for (std::size_t l = 1; l <= n; ++l)
    {
      auto index = std::vector<int>(n, 0);
      index[l - 1] = k - static_cast<int>(l) + 1;
      column[l - 1] = gschur(IndexVector(std::move(index)), A);
    }
    return column;
  }

  auto double_companion(const Alphabet& A, const ColumnRange& range)
      -> RationalMatrix
  {
    const auto n = static_cast<Index>(A.size());
    RationalMatrix C(n, range.size());
    for (int k = range.kmin; k <= range.kmax; ++k)
    {
      const auto column = companion_column(k, A);
      for (Index l = 0; l < n; ++l)
        C(l, k - range.kmin) = column[static_cast<std::size_t>(l)];
    }
    return C;
  }

  auto companion_submatrix(const Alphabet& A, const IndexVector& I)
      -> RationalMatrix
  {
    const auto n = static_cast<Index>(A.size());
    if (I.size() != A.size())
      throw DimensionError("companion_submatrix: index " + I.to_string() +
                           " does not match " + std::to_string(n) +
                           " letters");
    RationalMatrix C(n, n);
    for (Index k = 0; k < n; ++k)
    {
      const auto column =
          companion_column(I[static_cast<std::size_t>(k)] + static_cast<int>(k),
                           A);
      for (Index l = 0; l < n; ++l)
        C(l, k) = column[static_cast<std::size_t>(l)];
    }
    return C;
  }

  auto double_vandermonde(const Alphabet& A, const ColumnRange& range)
      -> RationalMatrix
  {
    const auto n = static_cast<Index>(A.size());
    RationalMatrix V(n, range.size());
    for (Index i = 0; i < n; ++i)
      for (int k = range.kmin; k <= range.kmax; ++k)
        V(i, k - range.kmin) = A[static_cast<std::size_t>(i)].pow(k);
    return V;
  }

  auto finite_vandermonde(const Alphabet& A) -> RationalMatrix
  {
    if (A.empty())
      return RationalMatrix(0, 0);
    return double_vandermonde(A, {0, static_cast<int>(A.size()) - 1});
  }

  auto giambelli_general(const IndexVector& J, const Alphabet& A)
      -> GiambelliDeterminant
  {
    const auto n = A.size();
    if (J.size() != n)
      throw DimensionError("giambelli_general: index " + J.to_string() +
                           " does not match " + std::to_string(n) +
                           " letters");
    const auto size = static_cast<Index>(n);
    RationalMatrix m(size, size);
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t k = 0; k < n; ++k)
      {
        auto index = std::vector<int>(n, 0);
        index[l] = J[k] + static_cast<int>(k) - static_cast<int>(l);
        m(static_cast<Index>(l), static_cast<Index>(k)) =
            gschur(IndexVector(std::move(index)), A);
      }
    auto value = det(m);
    return {std::move(m), std::move(value)};
  }

  auto HookLabel::to_string() const -> std::string
  {
    return "S_{" + render_parts(partition(), false) + "}(" +
           (tag == AlphabetTag::dual ? "A^v" : "A") + ")";
  }

  auto HookLabel::to_latex() const -> std::string
  {
    return "S_{" + render_parts(partition(), true) + "}(" +
           (tag == AlphabetTag::dual ? "A^{\\vee}" : "A") + ")";
  }

  auto GiambelliBlocks::assembled() const -> RationalMatrix
  {
    const auto r1 = P.rows();
    const auto r2 = N.rows();
    RationalMatrix out(r1 + r2, r1 + r2);
    out.topLeftCorner(r1, r1) = P;
    out.topRightCorner(r1, r2) = Q;
    out.bottomLeftCorner(r2, r1) = M;
    out.bottomRightCorner(r2, r2) = N;
    return out;
  }

  auto giambelli_block(const IndexVector& J, const Alphabet& A)
      -> GiambelliBlockResult
  {
    if (!J.is_weakly_increasing())
      throw DomainError("giambelli_block: " + J.to_string() +
                        " is not weakly increasing");
    if (J.size() != A.size())
      throw DimensionError("giambelli_block: index " + J.to_string() +
                           " does not match " + std::to_string(A.size()) +
                           " letters");
    const auto n = static_cast<int>(A.size());

    std::vector<int> negative_part, nonnegative_part;
    for (auto j : J)
      (j < 0 ? negative_part : nonnegative_part).push_back(j);

    GiambelliBlocks blocks;
    blocks.negative = frobenius(IndexVector(negative_part).reversed().negated());
    blocks.nonnegative = frobenius(IndexVector(nonnegative_part));
    const auto& alpha = blocks.negative.alpha;
    const auto& beta = blocks.negative.beta;
    const auto& gamma = blocks.nonnegative.alpha;
    const auto& delta = blocks.nonnegative.beta;
    const auto r1 = static_cast<int>(blocks.negative.rank());
    const auto r2 = static_cast<int>(blocks.nonnegative.rank());

    const auto Av = negative_part.empty() ? Alphabet{} : dual(A);
    const auto ui = [](int i) { return static_cast<std::size_t>(i); };

    blocks.labels.assign(ui(r1 + r2), std::vector<HookLabel>(ui(r1 + r2)));
    for (int i = 0; i < r1; ++i)
    {
      for (int j = 0; j < r1; ++j)
        blocks.labels[ui(i)][ui(j)] = {'P', alpha[ui(r1 - 1 - j)],
                                       beta[ui(r1 - 1 - i)], AlphabetTag::dual};
      for (int j = 0; j < r2; ++j)
        blocks.labels[ui(i)][ui(r1 + j)] = {'Q', gamma[ui(j)],
                                            n - 1 - beta[ui(r1 - 1 - i)],
                                            AlphabetTag::direct};
    }
    for (int i = 0; i < r2; ++i)
    {
      for (int j = 0; j < r1; ++j)
        blocks.labels[ui(r1 + i)][ui(j)] = {'M', alpha[ui(r1 - 1 - j)],
                                            n - 1 - delta[ui(i)],
                                            AlphabetTag::dual};
      for (int j = 0; j < r2; ++j)
        blocks.labels[ui(r1 + i)][ui(r1 + j)] = {'N', gamma[ui(j)],
                                                 delta[ui(i)],
                                                 AlphabetTag::direct};
    }

    RationalMatrix full(r1 + r2, r1 + r2);
    for (int i = 0; i < r1 + r2; ++i)
      for (int j = 0; j < r1 + r2; ++j)
        full(i, j) = hook_value(blocks.labels[ui(i)][ui(j)], A, Av);
    blocks.P = full.topLeftCorner(r1, r1);
    blocks.Q = full.topRightCorner(r1, r2);
    blocks.M = full.bottomLeftCorner(r2, r1);
    blocks.N = full.bottomRightCorner(r2, r2);

    auto value = det(full);
    return {std::move(blocks), std::move(value)};
  }

  namespace {

    //! Coefficients c_0..c_{n-1} of R(x, A) below the leading 1.
    auto recurrence_coefficients(const Alphabet& A) -> std::vector<Rational>
    {
      const auto n = static_cast<int>(A.size());
      auto c = root_polynomial(A).coefficients(n + 1);
      c.pop_back();
      return c;
    }

    //! T_t from T_{t-n}..T_{t-1}.
    auto step_forward(const std::vector<Rational>& c,
                      const std::deque<Rational>& previous) -> Rational
    {
      Rational next;
      for (std::size_t i = 0; i < c.size(); ++i)
        next -= c[i] * previous[previous.size() - c.size() + i];
      return next;
    }

  }  // namespace

  RecurrentSeq::RecurrentSeq(Alphabet A, int base, std::vector<Rational> window)
    : A_(std::move(A))
    , base_(base)
    , window_(std::move(window))
  {
    const auto n = A_.size();
    if (n == 0)
      throw ValidationError("recurrent sequence needs a nonempty root set");
    if (window_.size() != 2 * n)
      throw ValidationError("recurrent sequence window has " +
                            std::to_string(window_.size()) +
                            " terms, expected " + std::to_string(2 * n));
    const auto c = recurrence_coefficients(A_);
    for (std::size_t t = n; t < 2 * n; ++t)
    {
      const auto previous =
          std::deque<Rational>(window_.begin() + static_cast<long>(t - n),
                               window_.begin() + static_cast<long>(t));
      if (step_forward(c, previous) != window_[t])
        throw ValidationError(
            "window term T_" + std::to_string(base_ + static_cast<int>(t)) +
            " violates the recurrence of R(x, {" + A_.to_string() + "})");
    }
  }

  auto RecurrentSeq::from_seed(Alphabet A, int base,
                               const std::vector<Rational>& seed)
      -> RecurrentSeq
  {
    const auto n = A.size();
    if (n == 0 || seed.size() != n)
      throw ValidationError("recurrent sequence seed needs exactly |A| terms");
    const auto c = recurrence_coefficients(A);
    std::deque<Rational> terms(seed.begin(), seed.end());
    while (terms.size() < 2 * n)
      terms.push_back(step_forward(c, terms));
    return RecurrentSeq(std::move(A), base,
                        std::vector<Rational>(terms.begin(), terms.end()));
  }

  auto recur_extend(const RecurrentSeq& seq, int m) -> Rational
  {
    const auto& window = seq.window();
    const auto n = seq.alphabet().size();
    const long offset = static_cast<long>(m) - seq.base();
    if (offset >= 0 && offset < static_cast<long>(window.size()))
      return window[static_cast<std::size_t>(offset)];

    const auto c = recurrence_coefficients(seq.alphabet());
    if (offset >= 0)
    {
      std::deque<Rational> tail(window.end() - static_cast<long>(n),
                                window.end());
      auto index = static_cast<long>(window.size()) - 1;
      while (index < offset)
      {
        tail.push_back(step_forward(c, tail));
        tail.pop_front();
        ++index;
      }
      return tail.back();
    }

    if (c.front().is_zero())
      throw PoleError("backward extension with 0 in the root set");
    // c_0 T_t = -(T_{t+n} + sum_{i=1}^{n-1} c_i T_{t+i}).
    std::deque<Rational> head(window.begin(),
                              window.begin() + static_cast<long>(n));
    for (long index = 0; index > offset; --index)
    {
      auto acc = head[n - 1];
      for (std::size_t i = 1; i < n; ++i)
        acc += c[i] * head[i - 1];
      head.push_front(-acc / c.front());
      head.pop_back();
    }
    return head.front();
  }

  auto houmu_ratio(std::span<const RecurrentSeq> seqs, const IndexVector& J)
      -> Rational
  {
    const auto n = seqs.size();
    if (n == 0 || J.size() != n)
      throw DimensionError("houmu_ratio needs |J| = number of sequences >= 1");
    for (const auto& s : seqs)
    {
      if (s.alphabet() != seqs.front().alphabet())
        throw ValidationError("houmu_ratio: sequences do not share a root set");
      if (s.alphabet().size() != n)
        throw DimensionError("houmu_ratio needs as many sequences as letters");
    }
    const auto size = static_cast<Index>(n);
    RationalMatrix numerator(size, size), denominator(size, size);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l)
      {
        const auto row = static_cast<Index>(k);
        const auto col = static_cast<Index>(l);
        numerator(row, col) =
            recur_extend(seqs[k], J[l] + static_cast<int>(l));
        denominator(row, col) = recur_extend(seqs[k], static_cast<int>(l));
      }
    const auto seed_det = det(denominator);
    if (seed_det.is_zero())
      throw DegeneracyError("seed sequences are linearly dependent");
    return det(numerator) / seed_det;
  }

}  // namespace giambelli
