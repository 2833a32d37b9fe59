// Expression grammar: rationals, variables, + - * ^, parentheses.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "witt/parser.hpp"

using namespace witt;

namespace {

VarsPtr v4() { return make_vars({"x0", "x1", "x2", "x3"}); }

}  // namespace

TEST_CASE("parses the sphere relation") {
  VarsPtr vars = v4();
  Polynomial sphere = parse_polynomial("x0^2 + x1^2 + x2^2 + x3^2 - 1", vars);
  std::vector<Term> expect{{Monomial({2, 0, 0, 0}), rat(1)},
                           {Monomial({0, 2, 0, 0}), rat(1)},
                           {Monomial({0, 0, 2, 0}), rat(1)},
                           {Monomial({0, 0, 0, 2}), rat(1)},
                           {Monomial({0, 0, 0, 0}), rat(-1)}};
  CHECK(sphere == Polynomial::from_terms(vars, expect));
}

TEST_CASE("single term with rational coefficient") {
  Polynomial p = parse_polynomial("3/4*x0*x1", v4());
  CHECK(p.terms().size() == 1);
  CHECK(p.leading_coeff() == rat(3, 4));
  CHECK(p.leading_monomial() == Monomial({1, 1, 0, 0}));
}

TEST_CASE("syntax error carries the byte offset") {
  try {
    parse_polynomial("x0 +* x1", v4());
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 4);
  }
}

TEST_CASE("unknown variable is a parse error with position") {
  CHECK_THROWS_AS(parse_polynomial("x0 + y", v4()), ParseError);
  try {
    parse_polynomial("x0 + y", v4());
  } catch (const ParseError& e) {
    CHECK(e.offset == 5);
  }
}

TEST_CASE("star between factors is mandatory") {
  CHECK_THROWS_AS(parse_polynomial("2x0", v4()), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0 x1", v4()), ParseError);
  CHECK_NOTHROW(parse_polynomial("2*x0", v4()));
}

TEST_CASE("whitespace is insignificant") {
  VarsPtr vars = v4();
  CHECK(parse_polynomial("  x0 ^ 2+ x1*  x2 ", vars) == parse_polynomial("x0^2+x1*x2", vars));
  CHECK(parse_polynomial("1 / 2 * x3", vars) == parse_polynomial("1/2*x3", vars));
}

TEST_CASE("unary sign and parentheses") {
  VarsPtr vars = v4();
  CHECK(parse_polynomial("-x0", vars) == -parse_polynomial("x0", vars));
  CHECK(parse_polynomial("+x0", vars) == parse_polynomial("x0", vars));
  CHECK(parse_polynomial("(x0 + x1)*(x0 - x1)", vars) == parse_polynomial("x0^2 - x1^2", vars));
  CHECK(parse_polynomial("-(x0 - x1)", vars) == parse_polynomial("x1 - x0", vars));
  CHECK(parse_polynomial("((x2))", vars) == parse_polynomial("x2", vars));
}

TEST_CASE("exponents are nonnegative integers") {
  VarsPtr vars = v4();
  CHECK(parse_polynomial("x0^0", vars).is_one());
  CHECK(parse_polynomial("x0^1", vars) == parse_polynomial("x0", vars));
  CHECK(parse_polynomial("(x0+1)^2", vars) == parse_polynomial("x0^2 + 2*x0 + 1", vars));
  CHECK_THROWS_AS(parse_polynomial("x0^-1", vars), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0^x1", vars), ParseError);
}

TEST_CASE("rational literals") {
  VarsPtr vars = v4();
  CHECK(parse_polynomial("7/2", vars).constant_value() == rat(7, 2));
  CHECK(parse_polynomial("4/6", vars).constant_value() == rat(2, 3));
  CHECK(parse_polynomial("0", vars).is_zero());
  CHECK(parse_polynomial("0*x0 + 0", vars).is_zero());
}

TEST_CASE("identifier-shaped variable names") {
  VarsPtr vars = make_vars({"t_x3", "alpha2", "B"});
  Polynomial p = parse_polynomial("t_x3*alpha2 - B", vars);
  CHECK(p.terms().size() == 2);
  CHECK_THROWS_AS(parse_polynomial("_t", vars), ParseError);
}

TEST_CASE("trailing garbage and empty input are errors") {
  VarsPtr vars = v4();
  CHECK_THROWS_AS(parse_polynomial("x0)", vars), ParseError);
  CHECK_THROWS_AS(parse_polynomial("", vars), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(x0", vars), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0 +", vars), ParseError);
}

TEST_CASE("parse-print round trip is stable") {
  VarsPtr vars = v4();
  for (const char* s : {"x0^2 + x1^2 + x2^2 + x3^2 - 1", "-x0*x3 - x1", "3/4*x0*x1 - 2",
                        "x0*x1*x2*x3", "1/2", "-7", "x2^3 - 1/3*x2 + 5/9"}) {
    Polynomial p = parse_polynomial(s, vars);
    CHECK(parse_polynomial(p.to_string(), vars) == p);
    CHECK(p.to_string() == s);
  }
}

TEST_CASE("parse respects the requested monomial order") {
  VarsPtr vars = v4();
  Polynomial p = parse_polynomial("x3^3 + x0", vars, MonomialOrder::Lex);
  CHECK(p.order() == MonomialOrder::Lex);
  CHECK(p.leading_monomial() == Monomial({1, 0, 0, 0}));
}
