#pragma once

#include <giambelli/alphabet.hpp>
#include <giambelli/laurent.hpp>
#include <giambelli/rational.hpp>
#include <giambelli/schur.hpp>

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace giambelli {

  //! @brief Random exact inputs for identity checks.
  //!
  //! Letters have numerator uniform in [-50, 50] \ {0} and denominator
  //! uniform in [1, 20]; alphabets are rejection-sampled for distinctness.
  class RandomAlgebra
  {
  public:
    explicit RandomAlgebra(std::uint64_t seed)
      : engine_(seed)
    {
    }

    auto uniform(int lo, int hi) -> int;
    auto rational() -> Rational;
    //! Distinct nonzero letters.
    auto alphabet(std::size_t n) -> Alphabet;
    //! Distinct nonzero letters avoiding every letter of `avoid`.
    auto alphabet_avoiding(std::size_t n, const Alphabet& avoid) -> Alphabet;
    auto index_vector(std::size_t n, int lo, int hi) -> IndexVector;
    //! Sorted vector with a random number of negative parts in [lo, -1]
    //! followed by nonnegative parts in [0, hi].
    auto weakly_increasing(std::size_t n, int lo, int hi) -> IndexVector;
    //! Nondecreasing partition of length n with parts in [0, m].
    auto partition_in_box(std::size_t n, int m) -> IndexVector;
    //! Random Laurent polynomial supported on [valuation, degree].
    auto laurent(int valuation, int degree) -> LaurentPoly;
    auto matrix_entries(std::size_t count) -> std::vector<Rational>;

    auto engine() -> std::mt19937_64&
    {
      return engine_;
    }

  private:
    std::mt19937_64 engine_;
  };

  struct VerifyConfig
  {
    int trials = 200;
    std::uint64_t seed = 1;
    int nmax = 6;
    std::vector<std::string> suites;  //!< empty runs every suite
  };

  struct VerifyFailure
  {
    std::string check;
    std::string inputs;  //!< enough to replay the trial by hand
    std::string detail;
  };

  struct SuiteReport
  {
    std::string name;
    int trials = 0;
    long checks = 0;
    std::vector<VerifyFailure> failures;
    std::vector<std::string> notes;
    double wall_ms = 0;

    auto passed() const -> bool
    {
      return failures.empty();
    }
  };

  struct VerifyReport
  {
    VerifyConfig config;
    std::vector<SuiteReport> suites;
    double wall_ms = 0;

    auto passed() const -> bool;
  };

  //! Canonical suite names in execution order.
  auto suite_names() -> std::vector<std::string>;

  //! Canonical name for a suite or one of its aliases; ConfigError if
  //! unknown.
  auto resolve_suite(const std::string& name) -> std::string;

  //! Runs one suite with `trials` random trials; letters per alphabet are
  //! bounded by nmax.
  auto run_suite(const std::string& name, int trials, std::uint64_t seed,
                 int nmax) -> SuiteReport;

  //! Deterministic in (seed, config): each suite draws from its own stream.
  auto run_verify(const VerifyConfig& config) -> VerifyReport;

}  // namespace giambelli
