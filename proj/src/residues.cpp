#include "witt/residues.hpp"

#include <algorithm>

namespace witt {

std::string kind_name(FieldKind k) {
  switch (k) {
    case FieldKind::Untyped: return "untyped";
    case FieldKind::Real: return "real";
    case FieldKind::Complex: return "complex";
  }
  return "?";
}

PresentedField PresentedField::make(RingPtr ambient, std::vector<RingElement> prime_gens,
                                    FieldKind kind, std::vector<FieldConstant> constants) {
  PresentedField f;
  f.ambient_ = std::move(ambient);
  f.kind_ = kind;
  for (const auto& g : prime_gens)
    if (!presentation_equal(g.ring(), f.ambient_))
      throw RingMismatchError("field: prime generator from a different ring");
  f.prime_ = std::move(prime_gens);
  std::vector<Polynomial> gens;
  for (const auto& g : f.prime_) gens.push_back(g.poly());
  for (const auto& r : f.ambient_->relations()) gens.push_back(r);
  f.gb_ = std::make_shared<const GroebnerBasis>(
      buchberger(f.ambient_->vars(), std::move(gens), f.ambient_->order()));
  if (f.gb_->is_trivial()) throw FieldError("field: the declared prime contains 1");
  f.constant_vars_.assign(f.ambient_->vars()->size(), false);
  for (auto& c : constants) {
    std::size_t idx = f.ambient_->var_index(c.var);
    if (!same_vars(c.minpoly.vars(), f.ambient_->vars()))
      throw VarMismatchError("field constant minpoly over different variables");
    if (!f.gb_->nf(c.minpoly).is_zero())
      throw FieldError("field constant '" + c.var + "': minimal polynomial " +
                       c.minpoly.to_string() + " does not vanish in the field");
    f.constant_vars_[idx] = true;
  }
  if (kind != FieldKind::Complex && !constants.empty())
    throw FieldError("field constants with minimal polynomials require a complex field");
  f.constants_ = std::move(constants);
  return f;
}

Polynomial PresentedField::nf(const Polynomial& p) const { return gb_->nf(p); }
Polynomial PresentedField::nf(const RingElement& x) const {
  if (!presentation_equal(x.ring(), ambient_))
    throw RingMismatchError("field nf: element of a different ring");
  return gb_->nf(x.poly());
}

std::string PresentedField::describe() const {
  std::string s = "kappa(";
  for (std::size_t i = 0; i < prime_.size(); ++i) {
    if (i) s += ", ";
    s += prime_[i].to_string();
  }
  s += ") [" + kind_name(kind_) + "]";
  return s;
}

namespace {

bool scale_ok(FieldKind kind, const Rational& c, const Polynomial& mc, const PresentedField& f,
              std::string& why) {
  switch (kind) {
    case FieldKind::Untyped:
      if (c != 1) {
        why = "untyped field cannot absorb the scalar " + to_string(c);
        return false;
      }
      if (!mc.is_one()) {
        why = "untyped field cannot absorb the constant factor " + mc.to_string();
        return false;
      }
      return true;
    case FieldKind::Real:
      if (sign(c) <= 0) {
        why = "real field only absorbs positive scalars, got " + to_string(c);
        return false;
      }
      if (!mc.is_one()) {
        why = "real field cannot absorb the constant factor " + mc.to_string();
        return false;
      }
      return true;
    case FieldKind::Complex: {
      if (c == 0) {
        why = "zero scalar";
        return false;
      }
      if (!mc.uses_only(f.constant_vars())) {
        why = "factor " + mc.to_string() + " is not built from the declared constants";
        return false;
      }
      if (f.nf(mc).is_zero()) {
        why = "constant factor " + mc.to_string() + " vanishes in the field";
        return false;
      }
      return true;
    }
  }
  why = "unknown field kind";
  return false;
}

Polynomial poly_one(const PresentedField& f) {
  return Polynomial::constant(f.ambient()->vars(), Rational(1), f.ambient()->order());
}

// divide every term by m (m must divide the monomial gcd)
Polynomial div_monomial(const Polynomial& p, const Monomial& m) {
  std::vector<Term> ts;
  ts.reserve(p.terms().size());
  for (const auto& t : p.terms()) ts.push_back({t.mono / m, t.coeff});
  return Polynomial::from_terms(p.vars(), std::move(ts), p.order());
}

// write q = s^2 * r with r a signed squarefree integer (the canonical
// representative of q in Q*/Q*^2, via sqfree(num*den)) and return s > 0
Rational squarefree_scale(const Rational& q) {
  mpz_class n = q.get_num(), d = q.get_den(), m, s;
  if (n < 0) n = -n;
  m = n * d;
  mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
  while (s > 1 && m % (s * s) != 0) --s;
  if (s == 0) s = 1;
  Rational r(s, d);
  r.canonicalize();
  return r;
}

}  // namespace

SquareCheck verify_square_class(const PresentedField& f, const RingElement& u,
                                const SquareWitness& wit) {
  if (!presentation_equal(u.ring(), f.ambient())) return {false, "element of a different ring"};
  if (f.nf(u).is_zero()) return {false, "element vanishes in the field"};
  if (f.nf(wit.b).is_zero()) return {false, "witness denominator vanishes in the field"};
  if (f.nf(wit.a).is_zero()) return {false, "witness numerator vanishes in the field"};
  std::string why;
  Polynomial mc_one = poly_one(f);
  if (!scale_ok(f.kind(), wit.scale, mc_one, f, why)) return {false, why};
  Polynomial lhs = u.poly() * wit.b * wit.b;
  Polynomial rhs = wit.a * wit.a * wit.scale;
  if (!f.nf(lhs - rhs).is_zero())
    return {false, "u*b^2 - scale*a^2 does not vanish in the field"};
  return {true, ""};
}

NormalizedUnit normalize_unit(const PresentedField& f, const RingElement& raw) {
  if (!presentation_equal(raw.ring(), f.ambient()))
    throw RingMismatchError("normalize_unit: element of a different ring");
  const VarsPtr& vars = f.ambient()->vars();
  const MonomialOrder ord = f.ambient()->order();
  const auto& inverters = f.ambient()->inverter_flags();

  NormalizedUnit n;
  n.a = poly_one(f);
  n.b = poly_one(f);
  n.mc = poly_one(f);
  Polynomial cur = f.nf(raw);
  if (cur.is_zero()) throw FieldError("normalize_unit: element vanishes in the field");

  // inverted elements, looked up by inverter variable index
  auto inverted_of = [&](std::size_t var) -> const Polynomial& {
    for (const auto& rec : f.ambient()->inverted())
      if (rec.inverter_var == var) return rec.element;
    throw InternalError("normalize_unit: unrecorded inverter variable");
  };

  for (int pass = 0; pass < 6; ++pass) {
    bool changed = false;

    // rational content
    Rational cont = cur.content();
    if (cont != 1) {
      switch (f.kind()) {
        case FieldKind::Real: {
          Rational mag = rat_abs(cont);
          if (mag != 1) {
            cur = cur * (1 / mag);
            n.c *= mag;
            changed = true;
          }
          break;
        }
        case FieldKind::Complex: {
          cur = cur * (1 / cont);
          n.c *= cont;
          changed = true;
          break;
        }
        case FieldKind::Untyped: {
          Rational s = squarefree_scale(cont);
          if (s != 1) {
            Rational s2 = s * s;
            cur = cur * (1 / s2);
            n.a = n.a * s;
            changed = true;
          }
          break;
        }
      }
    }

    // monomial factor: even exponents are squares; odd inverters swap to
    // their element; odd constant variables drop by the complex rule
    Monomial g = cur.monomial_gcd();
    if (!g.is_one()) {
      std::vector<std::uint32_t> sq(vars->size(), 0), keep(vars->size(), 0);
      Polynomial extra = poly_one(f);
      bool any = false;
      for (std::size_t i = 0; i < vars->size(); ++i) {
        std::uint32_t e = g.exp(i);
        if (!e) continue;
        sq[i] = e / 2;
        if (sq[i]) any = true;
        if (e % 2 == 0) continue;
        if (inverters[i]) {
          // t*f == 1: <t*r> = <f*r> with certificate factor t into a
          extra = extra * inverted_of(i);
          n.a = n.a * Polynomial::variable(vars, i, ord);
          any = true;
        } else if (f.constant_vars()[i]) {
          n.mc = n.mc * Polynomial::variable(vars, i, ord);
          any = true;
        } else {
          keep[i] = 1;
        }
      }
      if (any) {
        cur = div_monomial(cur, g);
        cur = cur * Polynomial::from_terms(vars, {{Monomial(std::move(keep)), Rational(1)}}, ord);
        cur = cur * extra;
        n.a = n.a * Polynomial::from_terms(vars, {{Monomial(std::move(sq)), Rational(1)}}, ord);
        changed = true;
      }
    }

    if (changed) {
      cur = f.nf(cur);
      if (cur.is_zero()) throw InternalError("normalize_unit: unit collapsed to zero");
    }

    // whole-polynomial constant contents
    if (f.kind() == FieldKind::Complex && !cur.is_one() && cur.uses_only(f.constant_vars())) {
      n.mc = n.mc * cur;
      cur = poly_one(f);
      changed = true;
    }
    if (f.kind() == FieldKind::Real && cur.is_constant() && !cur.is_one()) {
      Rational v = cur.constant_value();
      Rational mag = rat_abs(v);
      if (mag != 1) {
        n.c *= mag;
        cur = Polynomial::constant(vars, Rational(sign(v)), ord);
        changed = true;
      }
    }

    if (!changed) break;
  }

  n.unit = cur;
  SquareCheck chk = check_normalization(f, raw.poly(), n);
  if (!chk.verified) throw InternalError("normalize_unit: certificate failed: " + chk.reason);
  return n;
}

SquareCheck check_normalization(const PresentedField& f, const Polynomial& raw,
                                const NormalizedUnit& n) {
  std::string why;
  if (!scale_ok(f.kind(), n.c, n.mc, f, why)) return {false, why};
  if (f.nf(n.a).is_zero()) return {false, "certificate numerator vanishes in the field"};
  if (f.nf(n.b).is_zero()) return {false, "certificate denominator vanishes in the field"};
  if (f.nf(n.unit).is_zero()) return {false, "normalized unit vanishes in the field"};
  Polynomial lhs = raw * n.b * n.b;
  Polynomial rhs = n.unit * n.a * n.a * n.c;
  rhs = rhs * n.mc;
  if (!f.nf(lhs - rhs).is_zero())
    return {false, "raw*b^2 != unit*a^2*c*mc in the field"};
  return {true, ""};
}

bool same_square_class(const PresentedField& f, const RingElement& u, const RingElement& v) {
  return normalize_unit(f, u * v).is_trivial();
}

Transition transition_matrix(const PresentedField& f, const std::vector<RingElement>& from,
                             const std::vector<RingElement>& to) {
  if (from.size() != to.size()) throw DimensionError("transition: sequences of different lengths");
  if (from.empty()) throw DimensionError("transition: empty sequences");
  const RingPtr& ring = f.ambient();
  std::vector<Polynomial> gens;
  for (const auto& t : to) {
    if (!presentation_equal(t.ring(), ring)) throw RingMismatchError("transition: foreign element");
    gens.push_back(t.poly());
  }
  for (const auto& r : ring->relations()) gens.push_back(r);

  Transition tr;
  tr.matrix = RingMatrix(ring, from.size(), to.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (!presentation_equal(from[i].ring(), ring)) throw RingMismatchError("transition: foreign element");
    auto lift = lift_membership(from[i].poly(), gens, ring->order());
    if (!lift) {
      tr.status = TransitionStatus::NotExpressible;
      tr.det = ring->zero();
      tr.det_mod_prime = Polynomial::zero(ring->vars(), ring->order());
      return tr;
    }
    for (std::size_t j = 0; j < to.size(); ++j) tr.matrix.set(i, j, ring->element((*lift)[j]));
  }
  tr.det = tr.matrix.det();
  tr.det_mod_prime = f.nf(tr.det);
  tr.status = tr.det_mod_prime.is_zero() ? TransitionStatus::Degenerate : TransitionStatus::Ok;
  return tr;
}

KoszulSymbol permute_frame(const KoszulSymbol& sym, const std::vector<std::size_t>& perm) {
  if (perm.size() != sym.frame.size()) throw DimensionError("permute_frame: wrong permutation size");
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw Error("permute_frame: not a permutation");
    seen[p] = true;
  }
  // parity by counting inversions
  int sgn = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sgn = -sgn;
  KoszulSymbol out;
  out.frame.reserve(perm.size());
  for (auto p : perm) out.frame.push_back(sym.frame[p]);
  out.unit = sym.unit;
  out.sign = sym.sign * sgn;
  return out;
}

ResidueResult residue_at(const CycleComponent& comp, const PresentedField& f) {
  if (f.prime().size() != comp.frame.size() + 1)
    throw CycleError("residue_at: codimension mismatch (frame " +
                     std::to_string(comp.frame.size()) + " + 1 != prime " +
                     std::to_string(f.prime().size()) + ")");
  ResidueResult res;
  res.symbol.sign = 1;
  for (const auto& p : f.prime()) res.symbol.frame.push_back(p.poly());

  // the boundary module is ambient/(frame, unit): its support reaches the
  // prime only if every one of these lies inside it
  bool supported = true;
  for (const auto& z : comp.frame)
    if (!f.nf(z).is_zero()) supported = false;
  if (!f.nf(comp.unit).is_zero()) supported = false;
  if (!supported) {
    res.symbol.unit = Polynomial::zero(f.ambient()->vars(), f.ambient()->order());
    return res;
  }

  std::vector<RingElement> ext = comp.frame;
  ext.push_back(comp.unit);
  Transition tr = transition_matrix(f, ext, f.prime());
  if (tr.status == TransitionStatus::NotExpressible)
    throw CycleError("residue_at: frame+unit not expressible in the reference generators at " +
                     f.describe());
  if (tr.status == TransitionStatus::Degenerate)
    throw CycleError("residue_at: degenerate transition (det lies in the prime) at " +
                     f.describe() + "; the canned residue rule does not apply");
  RingElement scaled = comp.sign >= 0 ? tr.det : -tr.det;
  NormalizedUnit norm = normalize_unit(f, scaled);
  res.symbol.unit = norm.unit;
  res.cert = std::move(norm);
  res.transition = std::move(tr);
  return res;
}

}  // namespace witt
