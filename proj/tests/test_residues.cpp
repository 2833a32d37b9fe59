// Residue fields, square-class certificates, transition matrices, and the
// second-residue map on framed cycle components.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "testutil.hpp"
#include "witt/parser.hpp"
#include "witt/residues.hpp"

using namespace witt;

namespace {

RingPtr b3l() {
  RingPtr b3 = PresentedRing::make({"x0", "x1", "x2", "x3"}, {"x0^2 + x1^2 - x2*x3 + 1"});
  return localize(b3, b3->element("x2 + x3"));
}

RingPtr plane() { return PresentedRing::make({"x1", "x2"}, std::vector<std::string>{}); }

Polynomial pp(const RingPtr& r, const std::string& s) {
  return parse_polynomial(s, r->vars(), r->order());
}

// kappa(q2) at the codimension-two point (x1, x2): x0 is a constant with
// x0^2 = -1, so the field is treated as complex
PresentedField kappa_q2(const RingPtr& r) {
  return PresentedField::make(r, {r->element("x1"), r->element("x2")}, FieldKind::Complex,
                              {{"x0", pp(r, "x0^2 + 1")}});
}

}  // namespace

TEST_CASE("field construction: proper primes, constants, kind rules") {
  RingPtr r = b3l();
  PresentedField f = kappa_q2(r);
  CHECK(f.kind() == FieldKind::Complex);
  CHECK(f.describe() == "kappa(x1, x2) [complex]");
  CHECK(f.constant_vars()[0]);        // x0
  CHECK_FALSE(f.constant_vars()[3]);  // x3 stays a coordinate
  CHECK(f.nf(r->element("x0^2 + 1")).is_zero());
  CHECK(f.nf(r->element("x3")) == pp(r, "x3"));

  // 1 in the ideal: (x2, t_x2px3*(x2+x3)-1) forces x2+x3 invertible and x2=0,
  // adding x3 kills everything
  CHECK_THROWS_AS(
      PresentedField::make(r, {r->element("x2"), r->element("x3")}, FieldKind::Untyped),
      FieldError);

  // a constant whose minimal polynomial does not vanish
  CHECK_THROWS_AS(PresentedField::make(r, {r->element("x1")}, FieldKind::Complex,
                                       {{"x0", pp(r, "x0^2 + 1")}}),
                  FieldError);

  // constants with minimal polynomials are a complex-field feature
  CHECK_THROWS_AS(PresentedField::make(r, {r->element("x1"), r->element("x2")}, FieldKind::Real,
                                       {{"x0", pp(r, "x0^2 + 1")}}),
                  FieldError);

  CHECK_THROWS_AS(PresentedField::make(plane(), {b3l()->element("x1")}, FieldKind::Untyped),
                  RingMismatchError);
}

TEST_CASE("verify_square_class: witnessed identities in kappa(p1)") {
  // the complex residue field at p1 = (x0^2+1, x0*x1+x2, s^2-2) with both
  // x0 and the adjoined s constant
  RingPtr c2s = PresentedRing::make({"x0", "x1", "x2", "s"}, {"x0^2 + x1^2 + x2^2 + 1"});
  PresentedField f = PresentedField::make(
      c2s,
      {c2s->element("x0^2 + 1"), c2s->element("x0*x1 + x2"), c2s->element("s^2 - 2")},
      FieldKind::Complex, {{"x0", pp(c2s, "x0^2 + 1")}, {"s", pp(c2s, "s^2 - 2")}});

  // -1/2 * s^2 == x0^2 holds: both sides are -1
  SquareCheck ok = verify_square_class(f, c2s->constant(rat(-1, 2)),
                                       {pp(c2s, "x0"), pp(c2s, "s"), rat(1)});
  CHECK(ok.verified);

  CHECK(verify_square_class(f, c2s->one(), {pp(c2s, "1"), pp(c2s, "1"), rat(1)}).verified);

  // x1 is not witnessed to be a square by (1, 1)
  SquareCheck bad = verify_square_class(f, c2s->element("x1"), {pp(c2s, "1"), pp(c2s, "1"), rat(1)});
  CHECK_FALSE(bad.verified);
  CHECK(bad.reason == "u*b^2 - scale*a^2 does not vanish in the field");

  // degenerate witnesses are rejected with a named reason
  SquareCheck zero_b =
      verify_square_class(f, c2s->element("x1"), {pp(c2s, "1"), pp(c2s, "x0^2 + 1"), rat(1)});
  CHECK_FALSE(zero_b.verified);
  CHECK(zero_b.reason == "witness denominator vanishes in the field");
  SquareCheck zero_u =
      verify_square_class(f, c2s->element("x0^2 + 1"), {pp(c2s, "1"), pp(c2s, "1"), rat(1)});
  CHECK_FALSE(zero_u.verified);
  CHECK(zero_u.reason == "element vanishes in the field");
}

TEST_CASE("verify_square_class: scale rules depend on the field kind") {
  RingPtr q3 = PresentedRing::make({"x3"}, std::vector<std::string>{});
  PresentedField real = PresentedField::make(q3, {}, FieldKind::Real);

  // 9/4 is a real square: u*1 == (9/4)*(2/3 * x? ) -- use scale directly
  CHECK(verify_square_class(real, q3->constant(rat(9, 4)), {pp(q3, "3"), pp(q3, "2"), rat(1)})
            .verified);
  // a positive scale is absorbed by the real rule
  CHECK(verify_square_class(real, q3->constant(rat(5)), {pp(q3, "1"), pp(q3, "1"), rat(5)})
            .verified);
  SquareCheck neg = verify_square_class(real, q3->constant(rat(-5)),
                                        {pp(q3, "1"), pp(q3, "1"), rat(-5)});
  CHECK_FALSE(neg.verified);
  CHECK(neg.reason == "real field only absorbs positive scalars, got -5");

  // x3 is not a square in Q(x3)
  CHECK_FALSE(verify_square_class(real, q3->element("x3"), {pp(q3, "1"), pp(q3, "1"), rat(1)})
                  .verified);

  PresentedField untyped = PresentedField::make(q3, {}, FieldKind::Untyped);
  SquareCheck sc = verify_square_class(untyped, q3->constant(rat(2)),
                                       {pp(q3, "1"), pp(q3, "1"), rat(2)});
  CHECK_FALSE(sc.verified);
  CHECK(sc.reason == "untyped field cannot absorb the scalar 2");
}

TEST_CASE("normalize_unit: kind-dependent scalar extraction") {
  RingPtr q3 = PresentedRing::make({"x3"}, std::vector<std::string>{});
  PresentedField real = PresentedField::make(q3, {}, FieldKind::Real);
  PresentedField untyped = PresentedField::make(q3, {}, FieldKind::Untyped);
  RingPtr c2 = PresentedRing::make({"x0", "x1", "x2"}, {"x0^2 + x1^2 + x2^2 + 1"});
  PresentedField cplx = PresentedField::make(c2, {c2->element("x0^2 + 1")}, FieldKind::Complex,
                                             {{"x0", pp(c2, "x0^2 + 1")}});

  CHECK(normalize_unit(real, q3->constant(rat(9, 4))).is_trivial());
  NormalizedUnit m1 = normalize_unit(real, q3->constant(rat(-4)));
  CHECK(m1.unit == pp(q3, "-1"));
  CHECK(m1.c == rat(4));

  CHECK(normalize_unit(cplx, c2->constant(rat(-5))).is_trivial());
  CHECK(normalize_unit(cplx, c2->element("-x0")).is_trivial());  // constants drop

  CHECK(normalize_unit(untyped, q3->constant(rat(4))).is_trivial());
  CHECK(normalize_unit(untyped, q3->element("4/9*x3")).unit == pp(q3, "x3"));
  NormalizedUnit two = normalize_unit(untyped, q3->constant(rat(2)));
  CHECK_FALSE(two.is_trivial());
  CHECK(two.unit == pp(q3, "2"));
  CHECK(normalize_unit(untyped, q3->constant(rat(-1))).unit == pp(q3, "-1"));

  // monomial squares come out for every kind
  CHECK(normalize_unit(untyped, q3->element("x3^2")).is_trivial());
  NormalizedUnit odd = normalize_unit(untyped, q3->element("x3^3"));
  CHECK(odd.unit == pp(q3, "x3"));
  CHECK(odd.a == pp(q3, "x3"));

  CHECK_THROWS_AS(normalize_unit(real, q3->zero()), FieldError);
}

TEST_CASE("normalize_unit: odd inverter powers swap for their element") {
  RingPtr s3 = PresentedRing::make({"x0", "x1", "x2", "x3"}, {"x0^2 + x1^2 + x2^2 + x3^2 - 1"});
  RingPtr s3l = localize(s3, s3->element("x3"));
  PresentedField f = PresentedField::make(s3l, {}, FieldKind::Untyped);

  NormalizedUnit n = normalize_unit(f, s3l->element("t_x3"));
  CHECK(n.unit == pp(s3l, "x3"));
  CHECK(n.a == pp(s3l, "t_x3"));
  CHECK(check_normalization(f, pp(s3l, "t_x3"), n).verified);

  // <t^2> is trivial, <t*x3> = <1>
  CHECK(normalize_unit(f, s3l->element("t_x3^2")).is_trivial());
  CHECK(same_square_class(f, s3l->element("t_x3"), s3l->element("x3")));
}

TEST_CASE("check_normalization rejects broken certificates") {
  RingPtr q3 = PresentedRing::make({"x3"}, std::vector<std::string>{});
  PresentedField f = PresentedField::make(q3, {}, FieldKind::Untyped);
  NormalizedUnit n = normalize_unit(f, q3->element("4*x3"));
  CHECK(n.unit == pp(q3, "x3"));
  CHECK(check_normalization(f, pp(q3, "4*x3"), n).verified);

  NormalizedUnit tampered = n;
  tampered.unit = pp(q3, "2*x3");
  SquareCheck chk = check_normalization(f, pp(q3, "4*x3"), tampered);
  CHECK_FALSE(chk.verified);
  CHECK(chk.reason == "raw*b^2 != unit*a^2*c*mc in the field");

  NormalizedUnit scaled = n;
  scaled.c = rat(2);  // untyped fields may not carry a scalar
  CHECK_FALSE(check_normalization(f, pp(q3, "4*x3"), scaled).verified);
}

TEST_CASE("same_square_class: symmetric and respects witnessed squares") {
  RingPtr q3 = PresentedRing::make({"x3"}, std::vector<std::string>{});
  PresentedField real = PresentedField::make(q3, {}, FieldKind::Real);
  CHECK(same_square_class(real, q3->constant(rat(3)), q3->constant(rat(27))));
  CHECK(same_square_class(real, q3->element("x3"), q3->element("9*x3")));
  CHECK_FALSE(same_square_class(real, q3->one(), q3->constant(rat(-1))));
  CHECK_FALSE(same_square_class(real, q3->element("x3"), q3->one()));
}

TEST_CASE("transition_matrix reproduces the reference change of frame") {
  RingPtr r = b3l();
  PresentedField f = kappa_q2(r);
  std::vector<RingElement> from{r->element("x0^2 + 1"), r->element("x0*x1 + x2")};
  std::vector<RingElement> to{r->element("x1"), r->element("x2")};
  Transition tr = transition_matrix(f, from, to);
  REQUIRE(tr.status == TransitionStatus::Ok);

  RingMatrix expect = RingMatrix::from_rows(
      r, {{r->element("-x1"), r->element("x3")}, {r->element("x0"), r->element("1")}});
  CHECK(tr.matrix == expect);
  CHECK(tr.det == r->element("-x1 - x0*x3"));
  CHECK(tr.det_mod_prime == pp(r, "-x0*x3"));

  // the rewrite is certified: from_i == sum_j m_ij to_j in the ring
  for (std::size_t i = 0; i < 2; ++i) {
    RingElement acc = r->zero();
    for (std::size_t j = 0; j < 2; ++j) acc = acc + tr.matrix.at(i, j) * to[j];
    CHECK(acc == from[i]);
  }
}

TEST_CASE("transition_matrix: identity, swap, degenerate, not-expressible") {
  RingPtr r = plane();
  PresentedField f = PresentedField::make(r, {r->element("x1"), r->element("x2")},
                                          FieldKind::Untyped);
  std::vector<RingElement> gens{r->element("x1"), r->element("x2")};

  Transition id = transition_matrix(f, gens, gens);
  CHECK(id.status == TransitionStatus::Ok);
  CHECK(id.matrix == RingMatrix::identity(r, 2));
  CHECK(id.det == r->one());

  Transition swp = transition_matrix(f, {gens[1], gens[0]}, gens);
  CHECK(swp.status == TransitionStatus::Ok);
  CHECK(swp.det == -r->one());
  CHECK(swp.det_mod_prime == pp(r, "-1"));

  Transition deg = transition_matrix(f, {r->element("x1^2"), r->element("x2")}, gens);
  CHECK(deg.status == TransitionStatus::Degenerate);
  CHECK(f.nf(deg.det).is_zero());

  Transition ne = transition_matrix(f, {r->element("x2"), r->element("x1")},
                                    {r->element("x1"), r->element("x1")});
  CHECK(ne.status == TransitionStatus::NotExpressible);

  CHECK_THROWS_AS(transition_matrix(f, {r->element("x1")}, gens), DimensionError);
  CHECK_THROWS_AS(transition_matrix(f, {}, {}), DimensionError);
}

TEST_CASE("transition determinants compose along chains of frames") {
  RingPtr r = plane();
  PresentedField f = PresentedField::make(r, {r->element("x1"), r->element("x2")},
                                          FieldKind::Untyped);
  std::vector<RingElement> s1{r->element("x1"), r->element("x2")};
  std::vector<RingElement> s2{r->element("2*x1 + x2"), r->element("x2")};
  std::vector<RingElement> s3{r->element("x1"), r->element("x1 + x2")};
  Transition t12 = transition_matrix(f, s1, s2);
  Transition t23 = transition_matrix(f, s2, s3);
  Transition t13 = transition_matrix(f, s1, s3);
  REQUIRE(t12.status == TransitionStatus::Ok);
  REQUIRE(t23.status == TransitionStatus::Ok);
  REQUIRE(t13.status == TransitionStatus::Ok);
  CHECK(t13.det_mod_prime == f.nf(t12.det * t23.det));
}

TEST_CASE("permute_frame tracks signature") {
  RingPtr r = plane();
  KoszulSymbol sym{{pp(r, "x1"), pp(r, "x2"), pp(r, "x1 + x2")}, pp(r, "x1"), 1};
  KoszulSymbol swapped = permute_frame(sym, {1, 0, 2});
  CHECK(swapped.sign == -1);
  CHECK(swapped.frame[0] == pp(r, "x2"));
  CHECK(swapped.frame[1] == pp(r, "x1"));
  KoszulSymbol cyc = permute_frame(sym, {1, 2, 0});  // even permutation
  CHECK(cyc.sign == 1);
  CHECK(permute_frame(swapped, {1, 0, 2}).sign == 1);

  CHECK_THROWS_AS(permute_frame(sym, {0, 1}), DimensionError);
  CHECK_THROWS_AS(permute_frame(sym, {0, 0, 1}), Error);
}

TEST_CASE("residue_at: the two generator components at kappa(q2)") {
  RingPtr r = b3l();
  PresentedField f = kappa_q2(r);

  CycleComponent c1{{r->element("x0^2 + 1")}, r->element("x0*x1 + x2"),
                    {r->element("x0^2 + 1")}, 1};
  ResidueResult r1 = residue_at(c1, f);
  CHECK_FALSE(r1.symbol.is_zero());
  CHECK(r1.symbol.unit == pp(r, "x3"));
  CHECK(r1.symbol.sign == 1);
  REQUIRE(r1.transition.has_value());
  CHECK(r1.transition->det_mod_prime == pp(r, "-x0*x3"));
  REQUIRE(r1.cert.has_value());
  // the certificate re-verifies against its raw input, the transition det
  CHECK(check_normalization(f, r1.transition->det.poly(), *r1.cert).verified);
  // and is bound to it: another raw fails
  CHECK_FALSE(check_normalization(f, pp(r, "x3"), *r1.cert).verified);

  CycleComponent c2{{r->element("x2")}, r->element("x1*x3"), {r->element("x2")}, 1};
  ResidueResult r2 = residue_at(c2, f);
  CHECK(r2.symbol.unit == pp(r, "x3"));

  // the two residues cancel: <x3> and <x3> pair to <-x3^2> which is trivial
  // in the complex field
  CHECK(normalize_unit(f, -(r->element("x3") * r->element("x3"))).is_trivial());
}

TEST_CASE("residue_at: unramified components give the zero symbol") {
  RingPtr r = b3l();
  // on this locus x2*x3 = 1, so the component frame x2 is a unit there
  PresentedField p1 = PresentedField::make(
      r, {r->element("x0^2 + 1"), r->element("x1 - 1")}, FieldKind::Complex,
      {{"x0", pp(r, "x0^2 + 1")}});
  CycleComponent c2{{r->element("x2")}, r->element("x1*x3"), {r->element("x2")}, 1};
  ResidueResult res = residue_at(c2, p1);
  CHECK(res.symbol.is_zero());
  CHECK_FALSE(res.cert.has_value());
  CHECK_FALSE(res.transition.has_value());
  REQUIRE(res.symbol.frame.size() == 2);
  CHECK(res.symbol.frame[0] == r->element("x0^2 + 1").poly());
}

TEST_CASE("residue_at: sign flips negate the determinant input") {
  RingPtr r = b3l();
  PresentedField f = kappa_q2(r);
  CycleComponent plus{{r->element("x2")}, r->element("x1*x3"), {r->element("x2")}, 1};
  CycleComponent minus{{r->element("x2")}, r->element("x1*x3"), {r->element("x2")}, -1};
  ResidueResult rp = residue_at(plus, f);
  ResidueResult rm = residue_at(minus, f);
  // complex normalization absorbs -1 into the scalar certificate, so the
  // publishable units agree while the certified scalars differ by sign
  CHECK(rp.symbol.unit == rm.symbol.unit);
  CHECK(rp.cert->c == rat(-1));
  CHECK(rm.cert->c == rat(1));
}

TEST_CASE("residue_at: codimension mismatches are an error") {
  RingPtr r = b3l();
  PresentedField codim1 = PresentedField::make(r, {r->element("x1")}, FieldKind::Untyped);
  CycleComponent c1{{r->element("x0^2 + 1")}, r->element("x0*x1 + x2"),
                    {r->element("x0^2 + 1")}, 1};
  CHECK_THROWS_AS(residue_at(c1, codim1), CycleError);
}

TEST_CASE("frame antisymmetry: swapped reference generators negate the det") {
  RingPtr r = b3l();
  PresentedField f12 = kappa_q2(r);
  PresentedField f21 = PresentedField::make(r, {r->element("x2"), r->element("x1")},
                                            FieldKind::Complex, {{"x0", pp(r, "x0^2 + 1")}});
  CycleComponent c1{{r->element("x0^2 + 1")}, r->element("x0*x1 + x2"),
                    {r->element("x0^2 + 1")}, 1};
  Transition t12 = residue_at(c1, f12).transition.value();
  Transition t21 = residue_at(c1, f21).transition.value();
  CHECK(f12.nf(t12.det + t21.det).is_zero());
}

TEST_CASE("square factors never change a residue class") {
  RingPtr r = plane();
  PresentedField f = PresentedField::make(r, {}, FieldKind::Untyped);
  // monomial and rational squares via normalization
  CHECK(normalize_unit(f, r->element("9/4*x1*x2^2")).unit == pp(r, "x1"));
  // a general polynomial square via an explicit witness:
  // (u*b^2)*u == (u*b)^2 with u = x1+1, b = x2-3
  RingElement u = r->element("x1 + 1"), b = r->element("x2 - 3");
  SquareCheck chk = verify_square_class(f, u * b * b * u, {(u * b).poly(), pp(r, "1"), rat(1)});
  CHECK(chk.verified);
}
