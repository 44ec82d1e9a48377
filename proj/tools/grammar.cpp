#include "grammar.hpp"

#include <giambelli/errors.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

namespace giambelli::cli {

  namespace {

    auto is_space(char c) -> bool
    {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    }

    //! Cursor over the input that reports absolute offsets.
    class Scanner
    {
    public:
      explicit Scanner(std::string_view text)
        : text_(text)
      {
      }

      void skip_space()
      {
        while (pos_ < text_.size() && is_space(text_[pos_]))
          ++pos_;
      }
      auto at_end() const -> bool
      {
        return pos_ >= text_.size();
      }
      auto peek() const -> char
      {
        return at_end() ? '\0' : text_[pos_];
      }
      auto pos() const -> std::size_t
      {
        return pos_;
      }
      void advance(std::size_t count = 1)
      {
        pos_ += count;
      }
      auto rest() const -> std::string_view
      {
        return text_.substr(pos_);
      }

      void expect(char c)
      {
        skip_space();
        if (peek() != c)
          fail(std::string("expected '") + c + "'");
        ++pos_;
      }

      [[noreturn]] void fail(const std::string& reason) const
      {
        throw ParseError(reason, pos_);
      }

      auto read_int() -> int
      {
        skip_space();
        const auto start = pos_;
        if (peek() == '+' || peek() == '-')
          ++pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
          ++pos_;
        auto token = text_.substr(start, pos_ - start);
        if (!token.empty() && token.front() == '+')
          token.remove_prefix(1);
        int value = 0;
        const auto [end, ec] =
            std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec == std::errc::result_out_of_range)
          throw ParseError("integer out of range", start);
        if (ec != std::errc() || end != token.data() + token.size())
          throw ParseError("expected an integer", start);
        return value;
      }

    private:
      std::string_view text_;
      std::size_t pos_ = 0;
    };

    auto trim_span(std::string_view text, std::size_t& offset) -> std::string_view
    {
      while (!text.empty() && is_space(text.front()))
      {
        text.remove_prefix(1);
        ++offset;
      }
      while (!text.empty() && is_space(text.back()))
        text.remove_suffix(1);
      return text;
    }

    auto parse_rational_at(std::string_view token, std::size_t offset)
        -> Rational
    {
      try
      {
        return Rational::parse(token);
      }
      catch (const ParseError& e)
      {
        throw ParseError(e.reason(), offset + e.offset());
      }
    }

    //! Splits on commas; calls visit(token, absolute offset) per entry.
    template <typename Visit>
    void for_each_entry(std::string_view text, std::size_t base, Visit&& visit)
    {
      std::size_t blank = 0;
      if (trim_span(text, blank).empty())
        return;
      std::size_t start = 0;
      while (true)
      {
        const auto comma = text.find(',', start);
        const auto end = comma == std::string_view::npos ? text.size() : comma;
        auto offset = base + start;
        const auto token = trim_span(text.substr(start, end - start), offset);
        if (token.empty())
          throw ParseError("empty list entry", offset);
        visit(token, offset);
        if (comma == std::string_view::npos)
          break;
        start = comma + 1;
      }
    }

    auto parse_generators(std::string_view text, std::size_t base)
        -> std::vector<Generator>
    {
      std::vector<Generator> out;
      for_each_entry(text, base, [&](std::string_view token, std::size_t offset) {
        if (token == "x")
          out.push_back(Generator::symbol_x());
        else if (token == "x^-1")
          out.push_back(Generator::symbol_x_inverse());
        else
          out.emplace_back(parse_rational_at(token, offset));
      });
      return out;
    }

  }  // namespace

  auto parse_index_vector(std::string_view text) -> IndexVector
  {
    Scanner s(text);
    s.expect('[');
    std::vector<int> parts;
    s.skip_space();
    if (s.peek() == ']')
      s.advance();
    else
      while (true)
      {
        parts.push_back(s.read_int());
        s.skip_space();
        if (s.peek() == ',')
        {
          s.advance();
          continue;
        }
        if (s.peek() == ']')
        {
          s.advance();
          break;
        }
        s.fail("expected ',' or ']'");
      }
    s.skip_space();
    if (!s.at_end())
      s.fail("trailing characters after index vector");
    return IndexVector(std::move(parts));
  }

  auto parse_rational_values(std::string_view text) -> std::vector<Rational>
  {
    std::vector<Rational> out;
    for_each_entry(text, 0, [&](std::string_view token, std::size_t offset) {
      out.push_back(parse_rational_at(token, offset));
    });
    return out;
  }

  auto parse_rational_list(std::string_view text) -> Alphabet
  {
    std::vector<Rational> letters;
    for_each_entry(text, 0, [&](std::string_view token, std::size_t offset) {
      auto value = parse_rational_at(token, offset);
      if (std::find(letters.begin(), letters.end(), value) != letters.end())
        throw ParseError("duplicate letter " + value.to_string(), offset);
      letters.push_back(std::move(value));
    });
    return Alphabet(std::move(letters));
  }

  auto parse_diff_argument(std::string_view text) -> DiffArgument
  {
    Scanner s(text);
    const auto side = [&]() -> std::vector<Generator> {
      s.expect('(');
      const auto start = s.pos();
      const auto close = s.rest().find(')');
      if (close == std::string_view::npos)
        s.fail("unclosed '('");
      auto gens = parse_generators(text.substr(start, close), start);
      s.advance(close + 1);
      return gens;
    };

    DiffArgument arg;
    arg.plus = side();
    s.skip_space();
    if (s.peek() == '-')
    {
      s.advance();
      arg.minus = side();
    }
    s.skip_space();
    if (!s.at_end())
      s.fail("expected '- (' or end of argument");
    return arg;
  }

  auto parse_laurent_json(std::string_view text) -> LaurentPoly
  {
    nlohmann::json doc;
    try
    {
      doc = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error& e)
    {
      throw ParseError("malformed JSON", e.byte > 0 ? e.byte - 1 : 0);
    }
    if (!doc.is_object())
      throw ParseError("Laurent polynomial must be a JSON object", 0);

    LaurentPoly::Terms terms;
    for (const auto& [key, value] : doc.items())
    {
      const auto quoted = text.find("\"" + key + "\"");
      const auto offset = quoted == std::string_view::npos ? 0 : quoted + 1;
      int degree = 0;
      const auto [end, ec] =
          std::from_chars(key.data(), key.data() + key.size(), degree);
      if (ec != std::errc() || end != key.data() + key.size())
        throw ParseError("degree key '" + key + "' is not an integer", offset);
      if (!value.is_string())
        throw ParseError("coefficient of degree " + key +
                             " must be a rational string",
                         offset);
      auto c = parse_rational_at(value.get<std::string>(), 0);
      if (!c.is_zero())
        terms[degree] += c;
    }
    return LaurentPoly(std::move(terms));
  }

  auto parse_column_range(std::string_view text) -> ColumnRange
  {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos)
      throw ParseError("expected kmin..kmax", 0);
    Scanner lo(text.substr(0, dots));
    const auto kmin = lo.read_int();
    lo.skip_space();
    if (!lo.at_end())
      lo.fail("trailing characters before '..'");
    Scanner hi(text.substr(dots + 2));
    int kmax = 0;
    try
    {
      kmax = hi.read_int();
      hi.skip_space();
      if (!hi.at_end())
        hi.fail("trailing characters after '..'");
    }
    catch (const ParseError& e)
    {
      throw ParseError(e.reason(), dots + 2 + e.offset());
    }
    return ColumnRange(kmin, kmax);
  }

  auto laurent_to_json(const LaurentPoly& p) -> nlohmann::ordered_json
  {
    auto out = nlohmann::ordered_json::object();
    for (const auto& [degree, c] : p.terms())
      out[std::to_string(degree)] = c.to_string();
    return out;
  }

  auto matrix_to_json(const RationalMatrix& m) -> nlohmann::ordered_json
  {
    auto rows = nlohmann::ordered_json::array();
    for (Index i = 0; i < m.rows(); ++i)
    {
      auto row = nlohmann::ordered_json::array();
      for (Index j = 0; j < m.cols(); ++j)
        row.push_back(m(i, j).to_string());
      rows.push_back(std::move(row));
    }
    return rows;
  }

}  // namespace giambelli::cli
