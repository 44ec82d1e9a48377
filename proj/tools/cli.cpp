#include "cli.hpp"

#include "grammar.hpp"

#include <giambelli/companion.hpp>
#include <giambelli/division.hpp>
#include <giambelli/errors.hpp>
#include <giambelli/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace giambelli::cli {

  namespace {

    using json = nlohmann::ordered_json;

    enum class Format
    {
      json,
      latex
    };

    struct Globals
    {
      bool json_flag = false;
      bool latex_flag = false;
      std::uint64_t seed = 1;
      int trials = 200;
      int nmax = 6;

      auto format() const -> Format
      {
        if (json_flag && latex_flag)
          throw ConfigError("--json and --latex are mutually exclusive");
        return latex_flag ? Format::latex : Format::json;
      }
    };

    // ------------------------------------------------------------- latex

    auto latex(const Rational& r) -> std::string
    {
      if (r.is_integer())
        return r.to_string();
      const auto num = abs(r).numerator().get_str();
      const auto den = r.denominator().get_str();
      return std::string(r.sign() < 0 ? "-" : "") + "\\frac{" + num + "}{" +
             den + "}";
    }

    auto latex(const LaurentPoly& p) -> std::string
    {
      if (p.is_zero())
        return "0";
      std::string out;
      const auto& terms = p.terms();
      for (auto it = terms.rbegin(); it != terms.rend(); ++it)
      {
        const auto& [d, c] = *it;
        const bool negative = c.sign() < 0;
        if (out.empty())
          out += negative ? "-" : "";
        else
          out += negative ? " - " : " + ";
        const auto magnitude = abs(c);
        if (d == 0 || magnitude != Rational(1))
          out += latex(magnitude);
        if (d == 1)
          out += "x";
        else if (d != 0)
          out += "x^{" + std::to_string(d) + "}";
      }
      return out;
    }

    //! Run-length form "0^{2},3,0" of an index vector.
    auto latex_index(const IndexVector& v) -> std::string
    {
      std::string out;
      for (std::size_t i = 0; i < v.size();)
      {
        auto j = i;
        while (j < v.size() && v[j] == v[i])
          ++j;
        if (!out.empty())
          out += ",";
        out += std::to_string(v[i]);
        if (j - i > 1)
          out += "^{" + std::to_string(j - i) + "}";
        i = j;
      }
      return out;
    }

    auto latex_alphabet(const Alphabet& A) -> std::string
    {
      std::string out = "A = \\{";
      for (std::size_t i = 0; i < A.size(); ++i)
        out += (i ? ", " : "") + latex(A[i]);
      return out + "\\}";
    }

    auto latex_matrix(const RationalMatrix& m, const char* env) -> std::string
    {
      std::string out = std::string("\\begin{") + env + "}\n";
      for (Index i = 0; i < m.rows(); ++i)
      {
        for (Index j = 0; j < m.cols(); ++j)
          out += (j ? " & " : "") + latex(m(i, j));
        out += i + 1 < m.rows() ? " \\\\\n" : "\n";
      }
      return out + "\\end{" + env + "}";
    }

    // -------------------------------------------------------------- emit

    void emit(std::ostream& out, const json& doc)
    {
      out << doc.dump(2) << "\n";
    }

    auto laurent_entry(const LaurentPoly& p) -> json
    {
      return json{{"terms", laurent_to_json(p)}, {"text", p.to_string()}};
    }

    //! What a subcommand handler returns besides its printed output.
    using Handler = std::function<int(std::ostream&)>;

    // ---------------------------------------------------------- commands

    struct SchurArgs
    {
      std::string J, A;
    };

    auto run_schur(const SchurArgs& args, Format format) -> Handler
    {
      const auto J = parse_index_vector(args.J);
      const auto A = parse_rational_list(args.A);
      return [=](std::ostream& out) {
        const auto value = gschur(J, A);
        if (format == Format::latex)
        {
          out << "% " << latex_alphabet(A) << "\n";
          out << "\\mathfrak{G}_{" << J.to_string() << "}(A) = "
              << "\\frac{1}{\\Delta(A)}\n\\begin{vmatrix}\n";
          for (std::size_t i = 0; i < A.size(); ++i)
          {
            for (std::size_t l = 0; l < J.size(); ++l)
              out << (l ? " & " : "") << "a_{" << i + 1 << "}^{"
                  << J[l] + static_cast<int>(l) << "}";
            out << (i + 1 < A.size() ? " \\\\\n" : "\n");
          }
          out << "\\end{vmatrix}\n= " << latex(value) << "\n";
        }
        else
          emit(out, json{{"command", "schur"},
                         {"J", J.to_string()},
                         {"A", A.to_string()},
                         {"value", value.to_string()}});
        return exit_ok;
      };
    }

    struct MultiSchurArgs
    {
      std::string J, I;
      std::vector<std::string> args;
    };

    auto run_multischur(const MultiSchurArgs& args, Format format) -> Handler
    {
      MultiSchurSpec spec;
      spec.J = parse_index_vector(args.J);
      if (!args.I.empty())
        spec.I = parse_index_vector(args.I);
      std::vector<DiffArgument> parsed;
      for (const auto& a : args.args)
        parsed.push_back(parse_diff_argument(a));
      if (parsed.size() == 1)
        spec.columns.assign(spec.J.size(), parsed.front());
      else if (parsed.size() == spec.J.size())
        spec.columns = parsed;
      else
        throw ConfigError("--arg must be given once or once per column (" +
                          std::to_string(spec.J.size()) + ")");
      return [=](std::ostream& out) {
        const auto value = multi_schur(spec);
        if (format == Format::latex)
        {
          out << "S_{" << latex_index(spec.J);
          if (spec.I.size() != 0)
            out << "/" << latex_index(spec.I);
          out << "}(";
          for (std::size_t k = 0; k < spec.columns.size(); ++k)
            out << (k ? "; " : "") << spec.columns[k].to_string();
          out << ") = " << latex(value) << "\n";
        }
        else
        {
          auto columns = json::array();
          for (const auto& c : spec.columns)
            columns.push_back(c.to_string());
          emit(out, json{{"command", "multischur"},
                         {"J", spec.J.to_string()},
                         {"I", spec.I.size() ? spec.I.to_string() : "[]"},
                         {"columns", columns},
                         {"value", laurent_entry(value)}});
        }
        return exit_ok;
      };
    }

    struct RemainderArgs
    {
      std::optional<int> power;
      std::string laurent, A;
    };

    auto run_remainder(const RemainderArgs& args, Format format) -> Handler
    {
      if (args.power.has_value() == !args.laurent.empty())
        throw ConfigError("remainder needs exactly one of --power and --laurent");
      const auto A = parse_rational_list(args.A);
      const auto f = args.power ? LaurentPoly::monomial(1, *args.power)
                                : parse_laurent_json(args.laurent);
      return [=](std::ostream& out) {
        const auto oracle = remainder_via_interpolation(f, A);
        const auto closed = remainder_laurent(f, A);
        json forms = json::object();
        forms["multi_schur"] = laurent_entry(closed);
        bool agree = closed == oracle;
        if (args.power && *args.power < 0 && !A.empty())
        {
          const auto box = inverse_power_remainder_box_form(-*args.power, A);
          forms["box"] = laurent_entry(box);
          agree = agree && box == oracle;
        }
        if (format == Format::latex)
          out << "% " << latex_alphabet(A) << "\n"
              << latex(f) << " \\bmod R(x, A) = " << latex(oracle) << "\n";
        else
          emit(out, json{{"command", "remainder"},
                         {"f", laurent_entry(f)},
                         {"A", A.to_string()},
                         {"remainder", laurent_entry(oracle)},
                         {"forms", forms},
                         {"agree", agree}});
        return agree ? exit_ok : exit_verification;
      };
    }

    struct EuclidArgs
    {
      int m = 0;
      std::string A, B;
    };

    auto run_euclid(const EuclidArgs& args, Format format) -> Handler
    {
      if (format == Format::latex)
        throw ConfigError("euclid has no LaTeX form");
      const auto A = parse_rational_list(args.A);
      const auto B = parse_rational_list(args.B);
      return [=](std::ostream& out) {
        const auto n = static_cast<int>(A.size());
        const auto trace = euclid_remainders(
            complete_in_x(args.m, B),
            complete_sym(n, DiffArgument({}, A).add_plus(Generator::symbol_x())));
        auto quotients = json::array();
        for (const auto& q : trace.quotients)
          quotients.push_back(laurent_entry(q));
        auto remainders = json::array();
        for (const auto& r : trace.remainders)
          remainders.push_back(laurent_entry(r));
        auto table = json::array();
        for (const auto& row : compare_euclid_with_multischur(args.m, A, B))
          table.push_back(json{
              {"r", row.r},
              {"remainder", laurent_entry(row.remainder)},
              {"formula", laurent_entry(row.formula)},
              {"scalar", row.scalar ? json(row.scalar->to_string()) : json(nullptr)}});
        bool proportional = true;
        for (const auto& row : table)
          proportional = proportional && !row["scalar"].is_null();
        emit(out, json{{"command", "euclid"},
                       {"m", args.m},
                       {"A", A.to_string()},
                       {"B", B.to_string()},
                       {"f", laurent_entry(trace.dividend)},
                       {"g", laurent_entry(trace.divisor)},
                       {"quotients", quotients},
                       {"remainders", remainders},
                       {"comparison", table},
                       {"proportional", proportional}});
        return proportional ? exit_ok : exit_verification;
      };
    }

    struct CompanionArgs
    {
      std::string A, cols;
    };

    auto run_companion(const CompanionArgs& args, Format format) -> Handler
    {
      const auto A = parse_rational_list(args.A);
      const auto range = parse_column_range(args.cols);
      return [=](std::ostream& out) {
        const auto C = double_companion(A, range);
        if (format == Format::latex)
          out << "% " << latex_alphabet(A) << ", columns " << range.kmin
              << ".." << range.kmax << "\n"
              << latex_matrix(C, "bmatrix") << "\n";
        else
        {
          auto columns = json::array();
          for (int k = range.kmin; k <= range.kmax; ++k)
            columns.push_back(k);
          emit(out, json{{"command", "companion"},
                         {"A", A.to_string()},
                         {"columns", columns},
                         {"matrix", matrix_to_json(C)}});
        }
        return exit_ok;
      };
    }

    struct GiambelliArgs
    {
      std::string J, A;
      bool block = false;
      bool explain = false;
    };

    auto block_latex(const GiambelliBlocks& b, const Rational& value,
                     bool explain) -> std::string
    {
      const auto r1 = static_cast<std::size_t>(b.P.rows());
      const auto size = b.labels.size();
      std::ostringstream out;
      if (explain)
        out << "% (\\alpha|\\beta) = " << b.negative.to_string()
            << ", (\\gamma|\\delta) = " << b.nonnegative.to_string() << "\n";
      out << "\\left|\\begin{array}{" << std::string(r1, 'c')
          << (r1 && r1 < size ? "|" : "") << std::string(size - r1, 'c') << "}\n";
      for (std::size_t i = 0; i < size; ++i)
      {
        if (i == r1 && r1 > 0)
          out << "\\hline\n";
        for (std::size_t j = 0; j < size; ++j)
          out << (j ? " & " : "") << b.labels[i][j].to_latex();
        out << (i + 1 < size ? " \\\\\n" : "\n");
      }
      out << "\\end{array}\\right| = " << latex(value) << "\n";
      return out.str();
    }

    auto run_giambelli(const GiambelliArgs& args, Format format) -> Handler
    {
      if (args.explain && !args.block)
        throw ConfigError("--explain requires --block");
      const auto J = parse_index_vector(args.J);
      const auto A = parse_rational_list(args.A);
      return [=](std::ostream& out) {
        const auto bialternant = gschur(J, A);
        if (!args.block)
        {
          const auto general = giambelli_general(J, A);
          const bool agree = general.value == bialternant;
          const auto n = J.size();
          if (format == Format::latex)
          {
            out << "% " << latex_alphabet(A) << "\n\\begin{vmatrix}\n";
            for (std::size_t l = 0; l < n; ++l)
            {
              for (std::size_t k = 0; k < n; ++k)
              {
                auto index = std::vector<int>(n, 0);
                index[l] = J[k] + static_cast<int>(k) - static_cast<int>(l);
                out << (k ? " & " : "") << "\\mathfrak{G}_{"
                    << latex_index(IndexVector(index)) << "}(A)";
              }
              out << (l + 1 < n ? " \\\\\n" : "\n");
            }
            out << "\\end{vmatrix} = " << latex(general.value) << "\n";
          }
          else
            emit(out, json{{"command", "giambelli"},
                           {"J", J.to_string()},
                           {"A", A.to_string()},
                           {"matrix", matrix_to_json(general.matrix)},
                           {"value", general.value.to_string()},
                           {"bialternant", bialternant.to_string()},
                           {"agree", agree}});
          return agree ? exit_ok : exit_verification;
        }

        const auto result = giambelli_block(J, A);
        const bool agree = result.value == bialternant;
        const auto& b = result.blocks;
        if (format == Format::latex)
          out << "% " << latex_alphabet(A) << "\n"
              << block_latex(b, result.value, args.explain);
        else
        {
          auto labels = json::array();
          for (const auto& row : b.labels)
          {
            auto jrow = json::array();
            for (const auto& label : row)
              jrow.push_back(label.to_string());
            labels.push_back(std::move(jrow));
          }
          json doc{{"command", "giambelli"},
                   {"J", J.to_string()},
                   {"A", A.to_string()},
                   {"block", true},
                   {"matrix", matrix_to_json(b.assembled())},
                   {"labels", labels},
                   {"value", result.value.to_string()},
                   {"bialternant", bialternant.to_string()},
                   {"agree", agree}};
          if (args.explain)
          {
            const auto assembled = b.assembled();
            auto hooks = json::array();
            for (std::size_t i = 0; i < b.labels.size(); ++i)
              for (std::size_t j = 0; j < b.labels.size(); ++j)
              {
                const auto& label = b.labels[i][j];
                hooks.push_back(json{
                    {"row", i + 1},
                    {"col", j + 1},
                    {"block", std::string(1, label.block)},
                    {"partition", label.partition().to_string()},
                    {"alphabet", label.tag == AlphabetTag::dual ? "A^v" : "A"},
                    {"label", label.to_string()},
                    {"value", assembled(static_cast<Index>(i), static_cast<Index>(j))
                                  .to_string()}});
              }
            doc["frobenius"] = json{{"negative", b.negative.to_string()},
                                    {"nonnegative", b.nonnegative.to_string()}};
            doc["hooks"] = hooks;
          }
          emit(out, doc);
        }
        return agree ? exit_ok : exit_verification;
      };
    }

    struct HouMuArgs
    {
      std::string A, J;
      std::vector<std::string> windows;
      int base = 0;
    };

    auto run_houmu(const HouMuArgs& args, Format format) -> Handler
    {
      if (format == Format::latex)
        throw ConfigError("houmu has no LaTeX form");
      const auto A = parse_rational_list(args.A);
      const auto J = parse_index_vector(args.J);
      std::vector<std::vector<Rational>> windows;
      for (const auto& w : args.windows)
        windows.push_back(parse_rational_values(w));
      return [=](std::ostream& out) {
        const auto n = A.size();
        std::vector<RecurrentSeq> seqs;
        for (const auto& w : windows)
        {
          if (w.size() == n)
            seqs.push_back(RecurrentSeq::from_seed(A, args.base, w));
          else if (w.size() == 2 * n)
            seqs.emplace_back(A, args.base, w);
          else
            throw DimensionError("--seed-window needs " + std::to_string(n) +
                                 " or " + std::to_string(2 * n) +
                                 " values, got " + std::to_string(w.size()));
        }
        const auto ratio = houmu_ratio(seqs, J);
        const auto bialternant = gschur(J, A);
        emit(out, json{{"command", "houmu"},
                       {"A", A.to_string()},
                       {"J", J.to_string()},
                       {"base", args.base},
                       {"ratio", ratio.to_string()},
                       {"bialternant", bialternant.to_string()},
                       {"agree", ratio == bialternant}});
        return ratio == bialternant ? exit_ok : exit_verification;
      };
    }

    struct VerifyArgs
    {
      std::vector<std::string> suites;
      std::string out_path;
      bool timing = false;
    };

    auto report_json(const VerifyReport& report, bool timing) -> json
    {
      auto suites = json::array();
      for (const auto& s : report.suites)
      {
        auto failures = json::array();
        for (const auto& f : s.failures)
          failures.push_back(
              json{{"check", f.check}, {"inputs", f.inputs}, {"detail", f.detail}});
        json entry{{"name", s.name},
                   {"trials", s.trials},
                   {"checks", s.checks},
                   {"passed", s.passed()},
                   {"failures", failures},
                   {"notes", s.notes}};
        if (timing)
          entry["wall_ms"] = s.wall_ms;
        suites.push_back(std::move(entry));
      }
      json doc{{"command", "verify"},
               {"seed", report.config.seed},
               {"trials", report.config.trials},
               {"nmax", report.config.nmax},
               {"passed", report.passed()},
               {"suites", suites}};
      if (timing)
        doc["wall_ms"] = report.wall_ms;
      return doc;
    }

    auto run_verify_command(const VerifyArgs& args, const Globals& globals,
                            Format format) -> Handler
    {
      if (format == Format::latex)
        throw ConfigError("verify has no LaTeX form");
      VerifyConfig config;
      config.trials = globals.trials;
      config.seed = globals.seed;
      config.nmax = globals.nmax;
      for (const auto& s : args.suites)
        config.suites.push_back(resolve_suite(s));
      if (config.trials < 1)
        throw ConfigError("--trials must be at least 1");
      if (config.nmax < 1)
        throw ConfigError("--nmax must be at least 1");
      return [=](std::ostream& out) {
        const auto report = run_verify(config);
        const auto doc = report_json(report, args.timing);
        if (args.out_path.empty())
          emit(out, doc);
        else
        {
          std::ofstream file(args.out_path);
          if (!file)
            throw ConfigError("cannot write report to " + args.out_path);
          emit(file, doc);
          for (const auto& s : report.suites)
            out << s.name << ": " << s.trials << " trials, " << s.checks
                << " checks, " << s.failures.size() << " failures\n";
        }
        return report.passed() ? exit_ok : exit_verification;
      };
    }

  }  // namespace

  auto run_cli(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) -> int
  {
    CLI::App app{"Exact Schur-function remainders and generalized Giambelli "
                 "determinants",
                 "giambelli"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals globals;
    app.add_flag("--json", globals.json_flag, "JSON output (default)");
    app.add_flag("--latex", globals.latex_flag, "LaTeX determinant displays");
    app.add_option("--seed", globals.seed, "Random seed for verify");
    app.add_option("--trials", globals.trials, "Trials per verify suite");
    app.add_option("--nmax", globals.nmax, "Largest alphabet in verify");

    std::function<Handler(Format)> build;

    SchurArgs schur;
    auto* cmd = app.add_subcommand("schur", "Bialternant G_J(A)");
    cmd->add_option("--J", schur.J, "Index vector, e.g. [4,-2]")->required();
    cmd->add_option("--A", schur.A, "Alphabet, e.g. 1,2")->required();
    cmd->callback([&] { build = [&](Format f) { return run_schur(schur, f); }; });

    MultiSchurArgs ms;
    cmd = app.add_subcommand("multischur", "Multi-Schur determinant S_{J/I}");
    cmd->add_option("--J", ms.J, "Index vector")->required();
    cmd->add_option("--I", ms.I, "Lower index vector (default zeros)");
    cmd->add_option("--arg", ms.args,
                    "Column argument \"(A) - (B)\"; once, or once per column")
        ->required();
    cmd->callback([&] { build = [&](Format f) { return run_multischur(ms, f); }; });

    RemainderArgs rem;
    cmd = app.add_subcommand("remainder", "Remainder of a Laurent polynomial mod R(x, A)");
    cmd->add_option("--power", rem.power, "Exponent k of x^k");
    cmd->add_option("--laurent", rem.laurent, "Laurent JSON, e.g. {\"-1\":\"3/2\"}");
    cmd->add_option("--A", rem.A, "Alphabet")->required();
    cmd->callback([&] { build = [&](Format f) { return run_remainder(rem, f); }; });

    EuclidArgs eu;
    cmd = app.add_subcommand("euclid", "Euclidean remainders of S^m(x-B) by R(x, A)");
    cmd->add_option("--m", eu.m, "Degree m")->required();
    cmd->add_option("--A", eu.A, "Alphabet A")->required();
    cmd->add_option("--B", eu.B, "Alphabet B")->required();
    cmd->callback([&] { build = [&](Format f) { return run_euclid(eu, f); }; });

    CompanionArgs comp;
    cmd = app.add_subcommand("companion", "Window of the double companion matrix");
    cmd->add_option("--A", comp.A, "Alphabet")->required();
    cmd->add_option("--cols", comp.cols, "Columns kmin..kmax")->required();
    cmd->callback([&] { build = [&](Format f) { return run_companion(comp, f); }; });

    GiambelliArgs gi;
    cmd = app.add_subcommand("giambelli", "Generalized Giambelli determinant of G_J(A)");
    cmd->add_option("--J", gi.J, "Index vector")->required();
    cmd->add_option("--A", gi.A, "Alphabet")->required();
    cmd->add_flag("--block", gi.block, "Hook block form (J weakly increasing)");
    cmd->add_flag("--explain", gi.explain, "List Frobenius hooks and entry labels");
    cmd->callback([&] { build = [&](Format f) { return run_giambelli(gi, f); }; });

    HouMuArgs hm;
    cmd = app.add_subcommand("houmu", "Ratio of recurrent-sequence determinants");
    cmd->add_option("--A", hm.A, "Characteristic roots")->required();
    cmd->add_option("--J", hm.J, "Index vector")->required();
    cmd->add_option("--seed-window", hm.windows,
                    "One sequence per flag: n seed values or 2n window values")
        ->required();
    cmd->add_option("--base", hm.base, "Index of the first window value");
    cmd->callback([&] { build = [&](Format f) { return run_houmu(hm, f); }; });

    VerifyArgs ver;
    cmd = app.add_subcommand("verify", "Randomized identity checks");
    cmd->add_option("--suite", ver.suites, "Suite name (repeatable; default all)");
    cmd->add_option("--out", ver.out_path, "Write the JSON report here");
    cmd->add_flag("--timing", ver.timing, "Include wall times in the report");
    cmd->callback([&] {
      build = [&](Format f) { return run_verify_command(ver, globals, f); };
    });

    try
    {
      app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
      return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    try
    {
      // All inputs are parsed and validated here, before any computation.
      const auto handler = build(globals.format());
      return handler(out);
    }
    catch (const ParseError& e)
    {
      err << "parse error: " << e.what() << "\n";
      return exit_usage;
    }
    catch (const ConfigError& e)
    {
      err << "usage error: " << e.what() << "\n";
      return exit_usage;
    }
    catch (const ConsistencyError& e)
    {
      err << "consistency failure: " << e.what() << "\n";
      return exit_verification;
    }
    catch (const DomainError& e)
    {
      err << "domain error: " << e.what() << "\n";
      return exit_domain;
    }
    catch (const DimensionError& e)
    {
      err << "dimension error: " << e.what() << "\n";
      return exit_domain;
    }
  }

}  // namespace giambelli::cli
