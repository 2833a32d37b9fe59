#pragma once

#include <string>

#include "witt/polynomial.hpp"

namespace witt {

// Grammar (whitespace-insensitive):
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ['^' nonneg-int]
//   primary := rational | var | '(' expr ')'
//   rational:= digits ['/' digits]
//   var     := [A-Za-z][A-Za-z0-9_]*
// '*' between factors is mandatory. Unknown variables and syntax errors
// throw ParseError carrying the byte offset.
Polynomial parse_polynomial(const std::string& text, const VarsPtr& vars,
                            MonomialOrder ord = MonomialOrder::Grevlex);

}  // namespace witt
