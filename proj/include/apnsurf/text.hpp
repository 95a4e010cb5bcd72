#pragma once

#include <string>
#include <string_view>

#include "apnsurf/field.hpp"
#include "apnsurf/tripoly.hpp"
#include "apnsurf/unipoly.hpp"

namespace apnsurf {

// Text forms shared by the CLI and reports.
//
//   poly  := term ('+' term)*
//   term  := [coeff '*'] power ('*' power)* | coeff
//   power := var ['^' uint]
//   coeff := hex literal ("0x1F") | decimal bit-vector | 'a' ['^' uint]
//
// `a` is the field generator (the polynomial-basis element x). Whitespace is
// ignored. Univariate input only admits the variable x.

UniPoly parse_poly(std::string_view text, const Field& field);
TriPoly parse_tripoly(std::string_view text, const Field& field);

/// Terms `C*x^E` in descending order; coefficient 1 and exponent 1 omitted.
std::string format(const UniPoly& p);
/// Terms `C*x^I*y^J*z^K` in descending graded-lex order.
std::string format(const TriPoly& p);

}  // namespace apnsurf
