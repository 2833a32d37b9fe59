// Exact polynomial arithmetic and monomial orders.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "witt/parser.hpp"
#include "witt/polynomial.hpp"

using namespace witt;

namespace {

VarsPtr v4() { return make_vars({"x0", "x1", "x2", "x3"}); }

Polynomial P(const VarsPtr& vars, const std::string& s, MonomialOrder ord = MonomialOrder::Grevlex) {
  return parse_polynomial(s, vars, ord);
}

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

}  // namespace

TEST_CASE("grevlex compares by total degree first") {
  CHECK(cmp(mono({3, 0, 0, 0}), mono({1, 1, 0, 0}), MonomialOrder::Grevlex) > 0);
  CHECK(cmp(mono({0, 0, 0, 1}), mono({0, 0, 0, 0}), MonomialOrder::Grevlex) > 0);
}

TEST_CASE("grevlex tie-break: smaller exponent at the rightmost difference wins") {
  // x0^2 > x1^2 > x2^2 > x3^2, so the sphere polynomial leads with x0^2
  CHECK(cmp(mono({2, 0, 0, 0}), mono({0, 2, 0, 0}), MonomialOrder::Grevlex) > 0);
  CHECK(cmp(mono({0, 0, 2, 0}), mono({0, 0, 0, 2}), MonomialOrder::Grevlex) > 0);
  // x0*x2 vs x1^2: rightmost difference at index 2, x1^2 has 0 there
  CHECK(cmp(mono({1, 0, 1, 0}), mono({0, 2, 0, 0}), MonomialOrder::Grevlex) < 0);
  CHECK(cmp(mono({1, 1, 0, 0}), mono({1, 1, 0, 0}), MonomialOrder::Grevlex) == 0);
}

TEST_CASE("lex compares leftmost exponent first, degree ignored") {
  CHECK(cmp(mono({1, 0, 0, 0}), mono({0, 5, 2, 1}), MonomialOrder::Lex) > 0);
  CHECK(cmp(mono({1, 2, 0, 0}), mono({1, 1, 9, 0}), MonomialOrder::Lex) > 0);
}

TEST_CASE("the sphere polynomial leads with x0^2 under grevlex") {
  Polynomial sphere = P(v4(), "x0^2 + x1^2 + x2^2 + x3^2 - 1");
  CHECK(sphere.leading_monomial() == mono({2, 0, 0, 0}));
  CHECK(sphere.leading_coeff() == 1);
  CHECK(sphere.total_degree() == 2);
  CHECK(sphere.terms().size() == 5);
}

TEST_CASE("from_terms normalizes: merges duplicates, drops zeros, sorts") {
  VarsPtr vars = v4();
  std::vector<Term> terms{{mono({1, 0, 0, 0}), rat(2)},
                          {mono({0, 0, 0, 0}), rat(1)},
                          {mono({1, 0, 0, 0}), rat(-2)},
                          {mono({0, 1, 0, 0}), rat(3)}};
  Polynomial p = Polynomial::from_terms(vars, terms);
  CHECK(p == P(vars, "3*x1 + 1"));
  CHECK(p.terms().size() == 2);
  CHECK(p.leading_monomial() == mono({0, 1, 0, 0}));
}

TEST_CASE("representation equality is mathematical equality") {
  VarsPtr vars = v4();
  Polynomial a = P(vars, "(x0 + x1)^2");
  Polynomial b = P(vars, "x0^2 + 2*x0*x1 + x1^2");
  CHECK(a == b);
  CHECK(a.to_string() == b.to_string());
}

TEST_CASE("ring axioms on sample polynomials") {
  VarsPtr vars = v4();
  Polynomial p = P(vars, "x0^2*x1 - 3*x2 + 1/2");
  Polynomial q = P(vars, "x1*x3 - x0");
  Polynomial r = P(vars, "7*x2^3 + x1");
  CHECK(p + q == q + p);
  CHECK((p + q) + r == p + (q + r));
  CHECK(p * q == q * p);
  CHECK(p * (q + r) == p * q + p * r);
  CHECK((p + q) - q == p);
  CHECK(p - p == Polynomial::zero(vars));
  CHECK(p * Polynomial::constant(vars, rat(0)) == Polynomial::zero(vars));
  CHECK(-(-p) == p);
}

TEST_CASE("rational coefficients stay exact") {
  VarsPtr vars = v4();
  Polynomial p = P(vars, "1/3*x0 + 1/6*x0");
  CHECK(p == P(vars, "1/2*x0"));
  Polynomial q = P(vars, "2/7");
  CHECK(q.constant_value() == rat(2, 7));
  CHECK((q * rat(7, 2)).is_one());
}

TEST_CASE("pow expands exactly") {
  VarsPtr vars = v4();
  Polynomial p = P(vars, "x0 + 1");
  CHECK(p.pow(0).is_one());
  CHECK(p.pow(1) == p);
  CHECK(p.pow(3) == P(vars, "x0^3 + 3*x0^2 + 3*x0 + 1"));
  CHECK(Polynomial::zero(vars).pow(0).is_one());
}

TEST_CASE("zero polynomial conventions") {
  VarsPtr vars = v4();
  Polynomial z = Polynomial::zero(vars);
  CHECK(z.is_zero());
  CHECK(z.is_constant());
  CHECK(z.total_degree() == 0);
  CHECK(z.constant_value() == 0);
  CHECK(z.to_string() == "0");
  CHECK(z.content() == 0);
}

TEST_CASE("monic and content") {
  VarsPtr vars = v4();
  Polynomial p = P(vars, "4*x0^2 - 6*x1");
  CHECK(p.content() == rat(2));
  CHECK(p.monic() == P(vars, "x0^2 - 3/2*x1"));
  Polynomial n = P(vars, "-4*x0^2 + 6*x1");
  // content carries the sign of the leading coefficient
  CHECK(n.content() == rat(-2));
  CHECK(n.monic().leading_coeff() == 1);
}

TEST_CASE("monomial_gcd extracts the common monomial factor") {
  VarsPtr vars = v4();
  Polynomial p = P(vars, "x0^2*x1^3 + x0^3*x1^2*x2");
  CHECK(p.monomial_gcd() == mono({2, 2, 0, 0}));
  CHECK(P(vars, "x0 + 1").monomial_gcd() == mono({0, 0, 0, 0}));
}

TEST_CASE("uses_only respects the allowed-variable mask") {
  VarsPtr vars = v4();
  Polynomial p = P(vars, "x0*x2 + x2^2");
  CHECK(p.uses_only({true, false, true, false}));
  CHECK_FALSE(p.uses_only({true, true, false, true}));
  CHECK(Polynomial::zero(vars).uses_only({false, false, false, false}));
}

TEST_CASE("with_order re-sorts without changing the value") {
  VarsPtr vars = v4();
  Polynomial p = P(vars, "x3^5 + x0*x1");
  Polynomial lx = p.with_order(MonomialOrder::Lex);
  CHECK(lx.order() == MonomialOrder::Lex);
  CHECK(lx.leading_monomial() == mono({1, 1, 0, 0}));   // lex: x0 beats x3^5
  CHECK(p.leading_monomial() == mono({0, 0, 0, 5}));    // grevlex: degree first
  CHECK(lx.with_order(MonomialOrder::Grevlex) == p);
}

TEST_CASE("substitute expands compositions exactly") {
  VarsPtr vars = v4();
  Polynomial p = P(vars, "x0^2 + x1");
  std::vector<Polynomial> images{P(vars, "x2 + 1"), P(vars, "-x2^2"), P(vars, "x2"),
                                 P(vars, "x3")};
  CHECK(p.substitute(images) == P(vars, "2*x2 + 1"));
}

TEST_CASE("map_vars reinterprets over a superset variable list") {
  VarsPtr small = make_vars({"a", "b"});
  VarsPtr big = make_vars({"z", "a", "b"});
  Polynomial p = parse_polynomial("a^2 - b", small);
  Polynomial q = p.map_vars(big, {1, 2});
  CHECK(q == parse_polynomial("a^2 - b", big));
  CHECK(q.vars() == big);
}

TEST_CASE("mul_term multiplies by a coefficient and a monomial") {
  VarsPtr vars = v4();
  Polynomial p = P(vars, "x0 + x1");
  CHECK(p.mul_term(rat(3), mono({0, 0, 1, 0})) == P(vars, "3*x0*x2 + 3*x1*x2"));
}

TEST_CASE("require_compatible rejects foreign operands") {
  Polynomial a = P(v4(), "x0");
  Polynomial b = parse_polynomial("y", make_vars({"y"}));
  CHECK_THROWS_AS(a + b, VarMismatchError);
  Polynomial c = P(v4(), "x0", MonomialOrder::Lex);
  CHECK_THROWS_AS(a + c, VarMismatchError);
}

TEST_CASE("to_string formatting conventions") {
  VarsPtr vars = v4();
  CHECK(P(vars, "-x1^2 - x2^2 - x3^2 + 1").to_string() == "-x1^2 - x2^2 - x3^2 + 1");
  CHECK(P(vars, "3/4*x0*x1").to_string() == "3/4*x0*x1");
  CHECK(P(vars, "x0^2*x1").to_string() == "x0^2*x1");
  CHECK(P(vars, "5").to_string() == "5");
}
