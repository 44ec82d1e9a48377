// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "oracles.hpp"

#include <giambelli/laurent.hpp>
#include <giambelli/matrix.hpp>
#include <giambelli/verify.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace giambelli;

namespace {

  constexpr std::uint64_t seed = 1;

  struct Outcome
  {
    bool passed = true;
    std::string summary;
  };

  auto from_suites(const std::vector<SuiteReport>& reports) -> Outcome
  {
    Outcome o;
    for (const auto& r : reports)
    {
      o.passed = o.passed && r.passed();
      if (!o.summary.empty())
        o.summary += "; ";
      o.summary += r.name + " " + std::to_string(r.trials) + " trials, " +
                   std::to_string(r.checks) + " checks, " +
                   std::to_string(r.failures.size()) + " failures";
      for (std::size_t i = 0; i < std::min<std::size_t>(3, r.failures.size()); ++i)
        std::cerr << "  " << r.name << ": " << r.failures[i].check << " | "
                  << r.failures[i].inputs << " | " << r.failures[i].detail << "\n";
    }
    return o;
  }

  auto suites(std::initializer_list<std::pair<const char*, int>> runs, int nmax = 6)
      -> Outcome
  {
    std::vector<SuiteReport> reports;
    for (const auto& [name, trials] : runs)
      reports.push_back(run_suite(name, trials, seed, nmax));
    return from_suites(reports);
  }

  auto dense(const LaurentPoly& p) -> oracle::Dense
  {
    return p.is_zero() ? oracle::Dense{} : p.coefficients(p.degree() + 1);
  }

  auto oracle_floor() -> Outcome
  {
    RandomAlgebra rng(seed);
    constexpr int instances = 500;
    int divmod_bad = 0, interp_bad = 0, det_bad = 0;

    for (int t = 0; t < instances; ++t)
    {
      const auto f = rng.laurent(0, rng.uniform(0, 8));
      auto g = rng.laurent(0, rng.uniform(0, 5));
      if (g.is_zero())
        g = LaurentPoly(rng.rational());
      const auto got = poly_divmod(f, g);
      const auto [q, r] = oracle::long_division(dense(f), dense(g));
      divmod_bad += dense(got.quotient) != q || dense(got.remainder) != r;
    }

    for (int t = 0; t < instances; ++t)
    {
      const auto nodes = rng.alphabet(static_cast<std::size_t>(rng.uniform(1, 6)));
      std::vector<std::pair<Rational, Rational>> pts;
      for (const auto& a : nodes)
        pts.emplace_back(a, rng.rational());
      interp_bad += dense(lagrange_interpolate(PointValueSet(pts))) !=
                    oracle::vandermonde_solve(pts);
    }

    for (int t = 0; t < instances; ++t)
    {
      const auto n = static_cast<Index>(rng.uniform(1, 5));
      const auto entries = rng.matrix_entries(static_cast<std::size_t>(n * n));
      RationalMatrix m(n, n);
      oracle::Table table(static_cast<std::size_t>(n));
      for (Index i = 0; i < n * n; ++i)
      {
        m(i / n, i % n) = entries[static_cast<std::size_t>(i)];
        table[static_cast<std::size_t>(i / n)].push_back(entries[static_cast<std::size_t>(i)]);
      }
      const auto cofactor = det_cofactor(m);
      det_bad += cofactor != det_fraction_free(m) || cofactor != oracle::leibniz_det(table);
    }

    Outcome o;
    o.passed = divmod_bad == 0 && interp_bad == 0 && det_bad == 0;
    o.summary = "poly_divmod " + std::to_string(instances) + " instances, " +
                std::to_string(divmod_bad) + " mismatches; lagrange_interpolate " +
                std::to_string(instances) + " instances, " + std::to_string(interp_bad) +
                " mismatches; det " + std::to_string(instances) + " instances, " +
                std::to_string(det_bad) + " mismatches";
    return o;
  }

}  // namespace

int main()
{
  struct Criterion
  {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };

  const std::vector<Criterion> criteria{
      {1, "inverse-power and reciprocal-root remainder forms",
       [] { return suites({{"inverse-power-remainders", 200}}); }},
      {2, "Euclidean remainders proportional to multi-Schur determinants",
       [] { return suites({{"euclid-multischur", 50}}, 5); }},
      {3, "generalized and hook-block Giambelli determinants",
       [] { return suites({{"giambelli-general", 200}, {"giambelli-block", 200}}); }},
      {4, "n=6 worked example: labels, determinants, diagonal blocks",
       [] { return suites({{"worked-example", 20}}); }},
      {5, "double companion factorization, signed powers, dual construction",
       [] { return suites({{"companion", 100}}); }},
      {6, "structural identities (duality, bialternant lemma, Lagrange functional)",
       [] { return suites({{"schur", 200}, {"division-identities", 200}}); }},
      {7, "recurrent-sequence determinant ratio",
       [] { return suites({{"houmu", 100}}, 5); }},
      {8, "oracle floor", oracle_floor},
  };

  bool all = true;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& c : criteria)
  {
    Outcome o;
    try
    {
      o = c.run();
    }
    catch (const std::exception& e)
    {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << c.id << " ("
              << c.title << "): " << o.summary << std::endl;
  }
  const auto seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("acceptance wall time: %.1f s\n", seconds);
  return all ? 0 : 1;
}
