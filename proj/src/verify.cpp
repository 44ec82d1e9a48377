#include <giambelli/verify.hpp>

#include <giambelli/companion.hpp>
#include <giambelli/division.hpp>
#include <giambelli/errors.hpp>
#include <giambelli/matrix.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <sstream>

namespace giambelli {

  // ---------------------------------------------------------------- random

  auto RandomAlgebra::uniform(int lo, int hi) -> int
  {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }

  auto RandomAlgebra::rational() -> Rational
  {
    auto num = uniform(-50, 49);
    if (num >= 0)
      ++num;
    return Rational(num, uniform(1, 20));
  }

  auto RandomAlgebra::alphabet(std::size_t n) -> Alphabet
  {
    return alphabet_avoiding(n, {});
  }

  auto RandomAlgebra::alphabet_avoiding(std::size_t n, const Alphabet& avoid)
      -> Alphabet
  {
    std::vector<Rational> letters;
    while (letters.size() < n)
    {
      auto a = rational();
      if (std::find(letters.begin(), letters.end(), a) == letters.end() &&
          std::find(avoid.begin(), avoid.end(), a) == avoid.end())
        letters.push_back(std::move(a));
    }
    return Alphabet(std::move(letters));
  }

  auto RandomAlgebra::index_vector(std::size_t n, int lo, int hi)
      -> IndexVector
  {
    std::vector<int> parts(n);
    for (auto& p : parts)
      p = uniform(lo, hi);
    return IndexVector(std::move(parts));
  }

  auto RandomAlgebra::weakly_increasing(std::size_t n, int lo, int hi)
      -> IndexVector
  {
    const auto negatives = static_cast<std::size_t>(uniform(0, static_cast<int>(n)));
    std::vector<int> parts(n);
    for (std::size_t i = 0; i < n; ++i)
      parts[i] = i < negatives ? uniform(lo, -1) : uniform(0, hi);
    std::sort(parts.begin(), parts.end());
    return IndexVector(std::move(parts));
  }

  auto RandomAlgebra::partition_in_box(std::size_t n, int m) -> IndexVector
  {
    auto p = index_vector(n, 0, m);
    auto parts = p.parts();
    std::sort(parts.begin(), parts.end());
    return IndexVector(std::move(parts));
  }

  auto RandomAlgebra::laurent(int valuation, int degree) -> LaurentPoly
  {
    LaurentPoly::Terms terms;
    for (int d = valuation; d <= degree; ++d)
      if (uniform(0, 2) > 0)
        terms.emplace(d, rational());
    return LaurentPoly(std::move(terms));
  }

  auto RandomAlgebra::matrix_entries(std::size_t count) -> std::vector<Rational>
  {
    std::vector<Rational> out(count);
    for (auto& e : out)
      e = uniform(0, 4) == 0 ? Rational(0) : rational();
    return out;
  }

  // ------------------------------------------------------------- framework

  namespace {

    class SuiteContext
    {
    public:
      SuiteContext(SuiteReport& report, RandomAlgebra& rng, int nmax)
        : report_(report)
        , rng_(rng)
        , nmax_(std::max(1, nmax))
      {
      }

      auto rng() -> RandomAlgebra&
      {
        return rng_;
      }
      auto nmax() const -> int
      {
        return nmax_;
      }
      //! Letter count in [lo, min(hi, nmax)].
      auto letters(int lo, int hi) -> std::size_t
      {
        return static_cast<std::size_t>(rng_.uniform(lo, std::max(lo, std::min(hi, nmax_))));
      }

      void expect(bool ok, const std::string& check, const std::string& inputs,
                  const std::string& detail = {})
      {
        ++report_.checks;
        if (!ok)
          report_.failures.push_back({check, inputs, detail});
      }

      //! Runs one trial; an escaping exception is a failure of that trial.
      template <typename Body>
      void trial(const std::string& label, Body&& body)
      {
        ++report_.trials;
        std::string inputs;
        try
        {
          body(inputs);
        }
        catch (const std::exception& e)
        {
          report_.failures.push_back({label + ": exception", inputs, e.what()});
        }
      }

      void note(std::string text)
      {
        report_.notes.push_back(std::move(text));
      }

    private:
      SuiteReport& report_;
      RandomAlgebra& rng_;
      int nmax_;
    };

    auto show(const Alphabet& A) -> std::string
    {
      return "{" + A.to_string() + "}";
    }

    auto sign_power(std::size_t e) -> Rational
    {
      return e % 2 == 0 ? 1 : -1;
    }

    auto random_matrix(RandomAlgebra& rng, Index rows, Index cols)
        -> RationalMatrix
    {
      const auto entries =
          rng.matrix_entries(static_cast<std::size_t>(rows * cols));
      RationalMatrix m(rows, cols);
      for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
          m(i, j) = entries[static_cast<std::size_t>(i * cols + j)];
      return m;
    }

    auto show(const RationalMatrix& m) -> std::string
    {
      std::string out = "[";
      for (Index i = 0; i < m.rows(); ++i)
      {
        out += i ? ",[" : "[";
        for (Index j = 0; j < m.cols(); ++j)
          out += (j ? "," : "") + m(i, j).to_string();
        out += "]";
      }
      return out + "]";
    }

    // ------------------------------------------------------------ suites

    void exact_core_suite(SuiteContext& ctx, int trials)
    {
      auto& rng = ctx.rng();
      for (int t = 0; t < trials; ++t)
        ctx.trial("exact-core", [&](std::string& inputs) {
          const auto n = static_cast<Index>(ctx.letters(1, 5));
          const auto a = random_matrix(rng, n, n);
          const auto b = random_matrix(rng, n, n);
          inputs = "a=" + show(a) + " b=" + show(b);

          ctx.expect(det(mat_mul(a, b)) == det(a) * det(b),
                     "det multiplicative", inputs);
          ctx.expect(det_fraction_free(a) == det_cofactor(a),
                     "fraction-free det = cofactor det", inputs);
          if (!det(a).is_zero())
          {
            const auto e = rng.uniform(1, 4);
            ctx.expect(mat_mul(mat_pow_signed(a, e), mat_pow_signed(a, -e)) ==
                           identity<Rational>(n),
                       "signed powers cancel", inputs + " e=" + std::to_string(e));
          }
        });
    }

    void laurent_suite(SuiteContext& ctx, int trials)
    {
      auto& rng = ctx.rng();
      for (int t = 0; t < trials; ++t)
        ctx.trial("laurent", [&](std::string& inputs) {
          const auto A = rng.alphabet(ctx.letters(1, 6));
          const auto f = rng.laurent(rng.uniform(-6, 0), rng.uniform(0, 8));
          const auto g = rng.laurent(rng.uniform(-6, 0), rng.uniform(0, 8));
          inputs = "A=" + show(A) + " f=" + f.to_string() + " g=" + g.to_string();

          const auto r = remainder_via_interpolation(f, A);
          bool agrees = r.is_zero() || (r.valuation() >= 0 &&
                                        r.degree() < static_cast<int>(A.size()));
          for (const auto& a : A)
            agrees = agrees && r.evaluate(a) == f.evaluate(a);
          ctx.expect(agrees, "interpolated remainder matches f on A", inputs);

          const auto split = laurent_split(f);
          ctx.expect(split.nonnegative + split.negative == f,
                     "split re-sums to f", inputs);

          const auto poly = split.nonnegative;
          ctx.expect(remainder_via_interpolation(poly, A) ==
                         poly_divmod(poly, root_polynomial(A)).remainder,
                     "interpolation = long division on polynomials", inputs);

          const auto alpha = rng.rational();
          const auto beta = rng.rational();
          ctx.expect(remainder_via_interpolation(f * alpha + g * beta, A) ==
                         remainder_via_interpolation(f, A) * alpha +
                             remainder_via_interpolation(g, A) * beta,
                     "remainder is linear", inputs);
        });
    }

    auto random_generators(RandomAlgebra& rng, std::size_t count)
        -> std::vector<Generator>
    {
      std::vector<Generator> out;
      for (std::size_t i = 0; i < count; ++i)
      {
        switch (rng.uniform(0, 5))
        {
        case 0:
          out.push_back(Generator::symbol_x());
          break;
        case 1:
          out.push_back(Generator::symbol_x_inverse());
          break;
        default:
          out.emplace_back(rng.rational());
        }
      }
      return out;
    }

    void alphabet_suite(SuiteContext& ctx, int trials)
    {
      auto& rng = ctx.rng();
      constexpr int K = 8;
      for (int t = 0; t < trials; ++t)
        ctx.trial("alphabet", [&](std::string& inputs) {
          DiffArgument arg;
          arg.plus = random_generators(rng, static_cast<std::size_t>(rng.uniform(0, 4)));
          arg.minus = random_generators(rng, static_cast<std::size_t>(rng.uniform(0, 4)));
          DiffArgument negated;
          negated.plus = arg.minus;
          negated.minus = arg.plus;
          inputs = "arg=" + arg.to_string();

          const auto s = complete_sym_series(K, arg);
          const auto inv = complete_sym_series(K, negated);
          bool unit = true;
          for (int k = 0; k <= K; ++k)
          {
            LaurentPoly coeff;
            for (int i = 0; i <= k; ++i)
              coeff += s[static_cast<std::size_t>(i)] *
                       inv[static_cast<std::size_t>(k - i)];
            unit = unit && coeff == LaurentPoly(k == 0 ? 1 : 0);
          }
          ctx.expect(unit, "series times negated series is 1", inputs);

          const auto B = rng.alphabet(static_cast<std::size_t>(rng.uniform(0, 5)));
          const auto m = static_cast<int>(B.size());
          ctx.expect(complete_in_x(m, B) == root_polynomial(B),
                     "S^|B|(x - B) = prod (x - b)", "B=" + show(B));
          const auto A = rng.alphabet(ctx.letters(1, 6));
          ctx.expect(complete_sym(static_cast<int>(A.size()),
                                  DiffArgument({}, A).add_plus(Generator::symbol_x())) ==
                         root_polynomial(A),
                     "S^n(x - A) = R(x, A)", "A=" + show(A));
        });
    }

    void schur_suite(SuiteContext& ctx, int trials)
    {
      auto& rng = ctx.rng();
      for (int t = 0; t < trials; ++t)
        ctx.trial("schur", [&](std::string& inputs) {
          const auto n = ctx.letters(1, 6);
          const auto A = rng.alphabet(n);
          const auto J = rng.partition_in_box(n, 6);
          inputs = "A=" + show(A) + " J=" + J.to_string();

          const auto value = gschur(J, A);
          ctx.expect(value == multi_schur(J, DiffArgument(A)).constant_value(),
                     "bialternant = Jacobi-Trudi on partitions", inputs);
          ctx.expect(gschur(J.negated(), A) == gschur(J.reversed(), dual(A)),
                     "G_{-J}(A) = S_{J^w}(A^v)", inputs);

          const auto m = rng.uniform(0, 6);
          const auto I = rng.partition_in_box(n, m);
          const auto complement = box_complement(I, m, n);
          ctx.expect(gschur(I, dual(A)) == gschur(complement, A) * prod_u(A).pow(-m),
                     "S_I(A^v) = S_J(A) u^-m",
                     "A=" + show(A) + " I=" + I.to_string() + " m=" + std::to_string(m));

          const auto Z = rng.index_vector(n, -6, 6);
          const auto zvalue = gschur(Z, A);
          auto shuffled = A.letters();
          std::shuffle(shuffled.begin(), shuffled.end(), rng.engine());
          ctx.expect(gschur(Z, Alphabet(shuffled)) == zvalue,
                     "letter permutation invariance",
                     "A=" + show(A) + " J=" + Z.to_string());

          if (n >= 2)
          {
            const auto p = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n) - 2));
            const auto q = static_cast<std::size_t>(rng.uniform(static_cast<int>(p) + 1, static_cast<int>(n) - 1));
            auto swapped = Z.parts();
            // Swapping exponents j_l + l of positions p and q.
            const auto ep = Z[p] + static_cast<int>(p);
            const auto eq = Z[q] + static_cast<int>(q);
            swapped[p] = eq - static_cast<int>(p);
            swapped[q] = ep - static_cast<int>(q);
            ctx.expect(gschur(IndexVector(swapped), A) == -zvalue,
                       "exponent swap negates",
                       "A=" + show(A) + " J=" + Z.to_string());

            auto collided = Z.parts();
            collided[q] = ep - static_cast<int>(q);
            ctx.expect(gschur(IndexVector(collided), A).is_zero(),
                       "exponent collision vanishes",
                       "A=" + show(A) + " J=" + IndexVector(collided).to_string());
          }
        });
    }

    void division_identities_suite(SuiteContext& ctx, int trials)
    {
      auto& rng = ctx.rng();
      for (int t = 0; t < trials; ++t)
        ctx.trial("division-identities", [&](std::string& inputs) {
          const auto n = ctx.letters(1, 6);
          const auto A = rng.alphabet(n);
          const auto u = prod_u(A);
          const auto Av = dual(A);
          const auto sign = sign_power(n - 1);
          const auto k = rng.uniform(1, 10);
          const auto B = rng.alphabet(static_cast<std::size_t>(rng.uniform(0, 5)));
          inputs = "A=" + show(A) + " B=" + show(B) + " k=" + std::to_string(k);

          // Reconstruction of any polynomial of degree < n.
          const auto r = rng.laurent(0, static_cast<int>(n) - 1);
          const TailSymmetricExpr reconstruct{
              "r(x1) R(x, X - x1)", [&](const Rational& head, const Alphabet& tail) {
                return LaurentPoly(r.evaluate(head)) * root_polynomial(tail);
              }};
          ctx.expect(lagrange_functional(reconstruct, A) == r,
                     "L_A reconstructs degree < n polynomials",
                     inputs + " r=" + r.to_string());

          // L_A(x1^-k) in its two closed forms.
          const TailSymmetricExpr inverse_power{
              "x1^-k", [&](const Rational& head, const Alphabet&) {
                return LaurentPoly(head.pow(-k));
              }};
          const auto functional = lagrange_functional(inverse_power, A);
          const auto rectangle =
              sign * u.pow(-k) *
              schur_value(IndexVector::repeated(k - 1, n - 1), A);
          const auto via_dual =
              sign * u.inverse() *
              complete_sym(k - 1, DiffArgument(Av)).constant_value();
          ctx.expect(functional == LaurentPoly(rectangle),
                     "L_A(x1^-k) = (-1)^{n-1} u^-k S_{(k-1)^{n-1}}(A)", inputs);
          ctx.expect(functional == LaurentPoly(via_dual),
                     "L_A(x1^-k) = (-1)^{n-1} u^-1 S_{k-1}(A^v)", inputs);

          // L_A(S_k(x1^-1 - B)).
          const TailSymmetricExpr shifted_complete{
              "S_k(x1^-1 - B)", [&](const Rational& head, const Alphabet&) {
                return complete_sym(k, DiffArgument(Alphabet{head.inverse()}, B));
              }};
          // With one letter L_A(1) = 1 rather than 0, which leaves an extra
          // S_k(-B) term; it vanishes once k > |B|.
          auto expected_shifted =
              sign * u.inverse() *
              complete_sym(k - 1, DiffArgument(Av, B)).constant_value();
          if (n == 1)
            expected_shifted += complete_sym(k, DiffArgument({}, B)).constant_value();
          ctx.expect(lagrange_functional(shifted_complete, A) ==
                         LaurentPoly(expected_shifted),
                     n == 1 ? "L_A(S_k(x1^-1 - B)) = u^-1 S_{k-1}(A^v - B) + S_k(-B)"
                            : "L_A(S_k(x1^-1 - B)) = (-1)^{n-1} u^-1 S_{k-1}(A^v - B)",
                     inputs);

          // R(1/x1, B) R(x, X - x1) as a multi-Schur function; X plays the
          // role of A with x1 its first letter.
          const auto x1 = A[0];
          const auto lhs = LaurentPoly(resultant(Alphabet{x1.inverse()}, B)) *
                           root_polynomial(A.without(0));
          auto parts = std::vector<int>(n - 1, 1);
          parts.push_back(static_cast<int>(B.size()) + 1);
          auto columns = std::vector<DiffArgument>(
              n - 1, DiffArgument(Av).add_minus(Generator::symbol_x_inverse()));
          columns.emplace_back(Alphabet{x1.inverse()}, B);
          const auto rhs =
              multi_schur({IndexVector(std::move(parts)), {}, columns})
                  .shifted(static_cast<int>(n) - 1) *
              u;
          ctx.expect(lhs == rhs,
                     "R(x1^-1, B) R(x, X - x1) as S_{1^{n-1}; m+1}", inputs);

          // Monomial coefficients of the remainder of x^k, k >= 0.
          const auto kk = rng.uniform(0, 12);
          const auto coeffs = remainder_x_pow(kk, A).coefficients(static_cast<int>(n));
          bool expansion = true;
          for (std::size_t l = 1; l <= n; ++l)
          {
            auto idx = std::vector<int>(n - l, 1);
            idx.push_back(kk - static_cast<int>(n) + 1);
            const auto expected =
                sign_power(n - l) *
                multi_schur(IndexVector(idx), DiffArgument(A)).constant_value();
            expansion = expansion && coeffs[l - 1] == expected;
          }
          ctx.expect(expansion,
                     "c_{l-1,k} = (-1)^{n-l} S_{1^{n-l}, k-n+1}(A)",
                     "A=" + show(A) + " k=" + std::to_string(kk));
        });
    }

    void inverse_power_suite(SuiteContext& ctx, int trials)
    {
      auto& rng = ctx.rng();
      for (int t = 0; t < trials; ++t)
        ctx.trial("inverse-power-remainders", [&](std::string& inputs) {
          const auto A = rng.alphabet(ctx.letters(1, 6));
          const auto k = rng.uniform(0, 10);
          inputs = "A=" + show(A) + " k=" + std::to_string(k);

          const auto oracle =
              remainder_via_interpolation(LaurentPoly::monomial(1, -k), A);
          ctx.expect(inverse_power_remainder_box_form(k, A) == oracle,
                     "S_{k^{n-1}}(A - x) u^-k = remainder of x^-k", inputs);
          ctx.expect(inverse_power_remainder_dual_form(k, A) == oracle,
                     "(-1)^{n-1} x^{n-1} S_{1^{n-1};k}(A^v - 1/x; A^v) = "
                     "remainder of x^-k",
                     inputs);
          ctx.expect(remainder_x_pow(-k, A) == oracle,
                     "remainder_x_pow(-k) = oracle", inputs);

          const auto B = rng.alphabet(static_cast<std::size_t>(rng.uniform(0, 5)));
          const auto f = reciprocal_root_polynomial(B);
          const auto oracle_b = remainder_via_interpolation(f, A);
          ctx.expect(reciprocal_root_remainder_form(B, A) == oracle_b,
                     "(-1)^{n-1} x^{n-1} S_{1^{n-1};m}(A^v - 1/x; A^v - B) = "
                     "remainder of R(1/x, B)",
                     inputs + " B=" + show(B));
          ctx.expect(remainder_laurent(f, A) == oracle_b,
                     "remainder_laurent = oracle", inputs + " B=" + show(B));
        });
    }

    void euclid_suite(SuiteContext& ctx, int trials)
    {
      auto& rng = ctx.rng();

      // Desk-scale calibration points.
      const auto calibration = compare_euclid_with_multischur(3, {1, 2}, {3});
      const std::string calib_inputs = "n=2 m=3 A={1,2} B={3}";
      ctx.expect(calibration.size() == 2 && calibration[0].scalar == Rational(-1),
                 "calibration (n,m,r)=(2,3,1) scalar -1", calib_inputs);
      ctx.expect(calibration.size() == 2 && calibration[1].scalar == Rational(4),
                 "calibration (n,m,r)=(2,3,2) scalar 4", calib_inputs);

      const auto nmax = std::min(5, ctx.nmax());
      for (int n = 1; n <= nmax; ++n)
        for (int m = n; m <= 9; ++m)
          for (int t = 0; t < trials; ++t)
            ctx.trial("euclid-multischur", [&](std::string& inputs) {
              const auto A = rng.alphabet(static_cast<std::size_t>(n));
              const auto B = rng.alphabet(static_cast<std::size_t>(rng.uniform(1, m)));
              inputs = "m=" + std::to_string(m) + " A=" + show(A) + " B=" + show(B);
              for (const auto& row : compare_euclid_with_multischur(m, A, B))
                ctx.expect(row.scalar.has_value(),
                           "multi-Schur proportional to remainder r=" +
                               std::to_string(row.r),
                           inputs,
                           "remainder " + row.remainder.to_string() +
                               ", formula " + row.formula.to_string());
            });
    }

    void companion_suite(SuiteContext& ctx, int trials)
    {
      auto& rng = ctx.rng();
      for (int t = 0; t < trials; ++t)
        ctx.trial("companion", [&](std::string& inputs) {
          const auto n = ctx.letters(1, 6);
          const auto A = rng.alphabet(n);
          inputs = "A=" + show(A);

          const ColumnRange window(-6, 6);
          RationalMatrix C;
          try
          {
            C = double_companion(A, window);
            ctx.expect(true, "dual construction agrees", inputs);
          }
          catch (const ConsistencyError& e)
          {
            ctx.expect(false, "dual construction agrees", inputs, e.what());
            return;
          }
          const auto V0 = finite_vandermonde(A);
          const auto V = double_vandermonde(A, window);
          ctx.expect(mat_mul(V0, C) == V, "V_0(A) C(A) = V~(A)", inputs);

          const auto classical = companion_submatrix(A, IndexVector::repeated(1, n));
          bool powers = true;
          for (int m = -4; m <= 4; ++m)
            powers = powers && mat_pow_signed(classical, m) ==
                                   companion_submatrix(A, IndexVector::repeated(m, n));
          ctx.expect(powers, "(C_{1^n})^m = C_{m^n} for m in [-4, 4]", inputs);

          const auto J = rng.index_vector(n, -3, 3);
          const auto CJ = companion_submatrix(A, J);
          const ColumnRange shifted(-3, 3 + static_cast<int>(n) - 1);
          std::vector<Index> cols;
          for (std::size_t k = 0; k < n; ++k)
            cols.push_back(J[k] + static_cast<int>(k) - shifted.kmin);
          ctx.expect(det(mat_mul(V0, CJ)) ==
                         det(select_columns(double_vandermonde(A, shifted), cols)),
                     "|V_0 C_J| = minor of V~", inputs + " J=" + J.to_string());
        });
    }

    void giambelli_general_suite(SuiteContext& ctx, int trials)
    {
      auto& rng = ctx.rng();
      for (int t = 0; t < trials; ++t)
        ctx.trial("giambelli-general", [&](std::string& inputs) {
          const auto n = ctx.letters(1, 6);
          const auto A = rng.alphabet(n);
          const auto J = rng.index_vector(n, -6, 6);
          inputs = "A=" + show(A) + " J=" + J.to_string();
          ctx.expect(giambelli_general(J, A).value == gschur(J, A),
                     "generalized Giambelli determinant = G_J", inputs);
        });
    }

    void giambelli_block_suite(SuiteContext& ctx, int trials)
    {
      auto& rng = ctx.rng();
      for (int t = 0; t < trials; ++t)
        ctx.trial("giambelli-block", [&](std::string& inputs) {
          const auto n = ctx.letters(1, 6);
          const auto A = rng.alphabet(n);
          const auto J = rng.weakly_increasing(n, -6, 6);
          inputs = "A=" + show(A) + " J=" + J.to_string();
          ctx.expect(giambelli_block(J, A).value == gschur(J, A),
                     "hook block determinant = G_J", inputs);
        });
    }

    void worked_example_suite(SuiteContext& ctx, int trials)
    {
      auto& rng = ctx.rng();
      const IndexVector J{-4, -3, -2, 1, 3, 4};
      using T = AlphabetTag;
      // Hooks (arm, leg, alphabet) of the displayed 4x4 determinant.
      const std::vector<std::vector<std::tuple<int, int, T>>> expected{
          {{1, 1, T::dual}, {3, 1, T::dual}, {3, 4, T::direct}, {1, 4, T::direct}},
          {{1, 2, T::dual}, {3, 2, T::dual}, {3, 3, T::direct}, {1, 3, T::direct}},
          {{1, 3, T::dual}, {3, 3, T::dual}, {3, 2, T::direct}, {1, 2, T::direct}},
          {{1, 5, T::dual}, {3, 5, T::dual}, {3, 0, T::direct}, {1, 0, T::direct}}};

      const auto probe = giambelli_block(J, rng.alphabet(6));
      bool labels_match = probe.blocks.labels.size() == 4;
      for (std::size_t i = 0; labels_match && i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
        {
          const auto& got = probe.blocks.labels[i][j];
          const auto& [arm, leg, tag] = expected[i][j];
          labels_match = labels_match && got.arm == arm && got.leg == leg &&
                         got.tag == tag;
        }
      ctx.expect(labels_match, "hook labels match the displayed 4x4",
                 "J=" + J.to_string());

      for (int t = 0; t < trials; ++t)
        ctx.trial("worked-example", [&](std::string& inputs) {
          const auto A = rng.alphabet(6);
          inputs = "A=" + show(A);
          const auto block = giambelli_block(J, A);
          const auto bialternant = gschur(J, A);
          ctx.expect(block.value == bialternant, "block determinant = G_J", inputs);
          ctx.expect(giambelli_general(J, A).value == bialternant,
                     "generalized Giambelli determinant = G_J", inputs);
          ctx.expect(det(block.blocks.P) == schur_value({2, 3, 4}, dual(A)),
                     "det P = S_{234}(A^v)", inputs);
          ctx.expect(det(block.blocks.N) == schur_value({1, 3, 4}, A),
                     "det N = S_{134}(A)", inputs);
          const auto nonzero = [](const RationalMatrix& m) {
            for (Index i = 0; i < m.rows(); ++i)
              for (Index j = 0; j < m.cols(); ++j)
                if (!m(i, j).is_zero())
                  return true;
            return false;
          };
          ctx.expect(nonzero(block.blocks.Q) && nonzero(block.blocks.M),
                     "off-diagonal blocks are nonzero", inputs);
        });
    }

    void houmu_suite(SuiteContext& ctx, int trials)
    {
      auto& rng = ctx.rng();
      int degenerate = 0;
      for (int t = 0; t < trials; ++t)
        ctx.trial("houmu", [&](std::string& inputs) {
          const auto n = ctx.letters(1, 5);
          const auto A = rng.alphabet(n);
          const auto J = rng.index_vector(n, -4, 4);
          const auto base = rng.uniform(-3, 3);
          const bool force_singular = rng.uniform(0, 4) == 0;

          std::vector<std::vector<Rational>> seeds(n);
          for (auto& s : seeds)
            for (std::size_t i = 0; i < n; ++i)
              s.push_back(rng.uniform(0, 3) == 0 ? Rational(0) : rng.rational());
          if (force_singular)
          {
            // Last seed becomes a combination of the others (or zero).
            const auto c = rng.rational();
            for (std::size_t i = 0; i < n; ++i)
              seeds[n - 1][i] = n == 1 ? Rational(0) : seeds[0][i] * c;
          }

          std::vector<RecurrentSeq> seqs;
          inputs = "A=" + show(A) + " J=" + J.to_string() +
                   " base=" + std::to_string(base) + " seeds=";
          for (const auto& s : seeds)
          {
            seqs.push_back(RecurrentSeq::from_seed(A, base, s));
            inputs += "(" + Alphabet().to_string();
            for (std::size_t i = 0; i < s.size(); ++i)
              inputs += (i ? "," : "") + s[i].to_string();
            inputs += ")";
          }

          RationalMatrix seed_matrix(static_cast<Index>(n), static_cast<Index>(n));
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l)
              seed_matrix(static_cast<Index>(k), static_cast<Index>(l)) =
                  recur_extend(seqs[k], static_cast<int>(l));
          const bool singular = det_cofactor(seed_matrix).is_zero();

          try
          {
            const auto ratio = houmu_ratio(seqs, J);
            ctx.expect(!singular, "singular seeds raise degeneracy", inputs);
            ctx.expect(ratio == gschur(J, A), "recurrent ratio = G_J", inputs);
          }
          catch (const DegeneracyError&)
          {
            ++degenerate;
            ctx.expect(singular, "degeneracy only for singular seeds", inputs);
          }
        });
      ctx.note("degenerate seed sets rejected: " + std::to_string(degenerate));
    }

    using SuiteFn = void (*)(SuiteContext&, int);

    struct SuiteEntry
    {
      const char* name;
      SuiteFn run;
      std::vector<std::string> aliases;
    };

    auto registry() -> const std::vector<SuiteEntry>&
    {
      static const std::vector<SuiteEntry> entries{
          {"exact-core", exact_core_suite, {}},
          {"laurent", laurent_suite, {}},
          {"alphabet", alphabet_suite, {}},
          {"schur", schur_suite, {"lemma1"}},
          {"division-identities", division_identities_suite, {}},
          {"inverse-power-remainders", inverse_power_suite, {"theorem2"}},
          {"euclid-multischur", euclid_suite, {"theorem1"}},
          {"companion", companion_suite, {}},
          {"giambelli-general", giambelli_general_suite, {"theorem5"}},
          {"giambelli-block", giambelli_block_suite, {"theorem6"}},
          {"worked-example", worked_example_suite, {"golden"}},
          {"houmu", houmu_suite, {}},
      };
      return entries;
    }

    //! FNV-1a, so every suite gets a stream independent of the others.
    auto stream_seed(std::uint64_t seed, const std::string& name)
        -> std::uint64_t
    {
      std::uint64_t h = 1469598103934665603ull;
      for (unsigned char c : name)
      {
        h ^= c;
        h *= 1099511628211ull;
      }
      return seed ^ h;
    }

  }  // namespace

  auto VerifyReport::passed() const -> bool
  {
    return std::all_of(suites.begin(), suites.end(),
                       [](const SuiteReport& s) { return s.passed(); });
  }

  auto suite_names() -> std::vector<std::string>
  {
    std::vector<std::string> names;
    for (const auto& e : registry())
      names.emplace_back(e.name);
    return names;
  }

  auto resolve_suite(const std::string& name) -> std::string
  {
    for (const auto& e : registry())
    {
      if (name == e.name)
        return name;
      if (std::find(e.aliases.begin(), e.aliases.end(), name) != e.aliases.end())
        return e.name;
    }
    throw ConfigError("unknown verification suite '" + name + "'");
  }

  auto run_suite(const std::string& name, int trials, std::uint64_t seed,
                 int nmax) -> SuiteReport
  {
    if (trials < 1)
      throw ConfigError("trials must be at least 1");
    const auto canonical = resolve_suite(name);
    const auto& entries = registry();
    const auto it = std::find_if(entries.begin(), entries.end(),
                                 [&](const SuiteEntry& e) { return canonical == e.name; });

    SuiteReport report;
    report.name = canonical;
    RandomAlgebra rng(stream_seed(seed, canonical));
    SuiteContext ctx(report, rng, nmax);
    const auto start = std::chrono::steady_clock::now();
    it->run(ctx, trials);
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
  }

  auto run_verify(const VerifyConfig& config) -> VerifyReport
  {
    if (config.trials < 1)
      throw ConfigError("trials must be at least 1");
    if (config.nmax < 1)
      throw ConfigError("nmax must be at least 1");
    std::vector<std::string> selected;
    for (const auto& s : config.suites)
    {
      auto canonical = resolve_suite(s);
      if (std::find(selected.begin(), selected.end(), canonical) == selected.end())
        selected.push_back(std::move(canonical));
    }
    if (selected.empty())
      selected = suite_names();

    VerifyReport report;
    report.config = config;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& name : suite_names())
      if (std::find(selected.begin(), selected.end(), name) != selected.end())
        report.suites.push_back(run_suite(name, config.trials, config.seed, config.nmax));
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
  }

}  // namespace giambelli
