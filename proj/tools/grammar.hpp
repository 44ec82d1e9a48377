#pragma once

#include <giambelli/alphabet.hpp>
#include <giambelli/companion.hpp>
#include <giambelli/laurent.hpp>
#include <giambelli/rational.hpp>
#include <giambelli/schur.hpp>

#include <json.hpp>

#include <string_view>
#include <vector>

namespace giambelli::cli {

  //! "[j1, ..., jn]" with optional signs and whitespace; "[]" is empty.
  auto parse_index_vector(std::string_view text) -> IndexVector;

  //! "1,2,5/3,-4" without distinctness; blank text is the empty list.
  auto parse_rational_values(std::string_view text) -> std::vector<Rational>;

  //! As parse_rational_values, but a repeated letter is a ParseError.
  auto parse_rational_list(std::string_view text) -> Alphabet;

  //! "(1,2) - (x)" or "(1,2,x^-1)"; each side lists rationals and the
  //! tokens x, x^-1.
  auto parse_diff_argument(std::string_view text) -> DiffArgument;

  //! {"-1":"3/2","1":"-1/2"}: degree strings to rational strings.
  auto parse_laurent_json(std::string_view text) -> LaurentPoly;

  //! "kmin..kmax".
  auto parse_column_range(std::string_view text) -> ColumnRange;

  //! Ascending degrees, zero coefficients dropped; the zero polynomial is {}.
  auto laurent_to_json(const LaurentPoly& p) -> nlohmann::ordered_json;

  auto matrix_to_json(const RationalMatrix& m) -> nlohmann::ordered_json;

}  // namespace giambelli::cli
