#include "witt/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace witt {

DivisionResult divide(const Polynomial& p, std::span<const Polynomial> divisors) {
  for (const auto& d : divisors) {
    require_compatible(p, d);
    if (d.is_zero()) throw Error("division by zero polynomial");
  }
  const MonomialOrder ord = p.order();
  DivisionResult res;
  res.quotients.assign(divisors.size(), Polynomial::zero(p.vars(), ord));
  Polynomial work = p;
  std::vector<Term> rem_terms;
  while (!work.is_zero()) {
    const Term& lt = work.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Term& dlt = divisors[i].leading_term();
      if (dlt.mono.divides(lt.mono)) {
        Rational c = lt.coeff / dlt.coeff;
        Monomial m = lt.mono / dlt.mono;
        res.quotients[i] = res.quotients[i] + Polynomial::from_terms(p.vars(), {{m, c}}, ord);
        work = work - divisors[i].mul_term(c, m);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      // leading term irreducible: it is emitted in strictly decreasing order
      rem_terms.push_back(lt);
      work = work - Polynomial::from_terms(p.vars(), {lt}, ord);
    }
  }
  res.remainder = Polynomial::from_terms(p.vars(), std::move(rem_terms), ord);
  return res;
}

Polynomial GroebnerBasis::nf(const Polynomial& p) const {
  if (!same_vars(p.vars(), vars_))
    throw VarMismatchError("normal form: polynomial over different variables");
  Polynomial q = p.order() == order_ ? p : p.with_order(order_);
  if (gens_.empty()) return q;
  return divide(q, gens_).remainder;
}

namespace {

struct Tracked {
  Polynomial poly;
  std::vector<Polynomial> rep;  // poly == sum rep[j]*original[j]
};

// rep arithmetic mirrors the polynomial arithmetic exactly
std::vector<Polynomial> rep_sub_scaled(const std::vector<Polynomial>& a,
                                       const std::vector<Polynomial>& b, const Rational& c,
                                       const Monomial& m) {
  std::vector<Polynomial> out = a;
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = out[j] - b[j].mul_term(c, m);
  return out;
}

}  // namespace

GroebnerBasis buchberger(const VarsPtr& vars, std::vector<Polynomial> gens, MonomialOrder ord) {
  for (auto& g : gens) {
    if (!same_vars(g.vars(), vars)) throw VarMismatchError("buchberger: generator over different variables");
    g = g.with_order(ord);
  }
  const std::size_t n_orig = gens.size();
  auto zero_rep = [&] {
    return std::vector<Polynomial>(n_orig, Polynomial::zero(vars, ord));
  };

  std::vector<Tracked> basis;
  for (std::size_t j = 0; j < n_orig; ++j) {
    if (gens[j].is_zero()) continue;
    Tracked t{gens[j], zero_rep()};
    t.rep[j] = Polynomial::constant(vars, Rational(1), ord);
    basis.push_back(std::move(t));
  }

  // full reduction of a tracked polynomial against the current basis
  auto reduce = [&](Tracked t) {
    std::vector<Polynomial> divs;
    divs.reserve(basis.size());
    for (const auto& b : basis) divs.push_back(b.poly);
    DivisionResult d = divide(t.poly, divs);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (d.quotients[k].is_zero()) continue;
      for (const auto& term : d.quotients[k].terms())
        t.rep = rep_sub_scaled(t.rep, basis[k].rep, term.coeff, term.mono);
    }
    t.poly = d.remainder;
    return t;
  };

  // pair queue under the normal strategy: (deg lcm, i, j), i < j
  std::set<std::tuple<std::uint64_t, std::size_t, std::size_t>> queue;
  std::set<std::pair<std::size_t, std::size_t>> treated;
  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(basis[i].poly.leading_monomial(), basis[j].poly.leading_monomial());
      queue.insert({l.degree(), i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

  while (!queue.empty()) {
    auto [ldeg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    treated.insert({i, j});
    const Monomial& lmi = basis[i].poly.leading_monomial();
    const Monomial& lmj = basis[j].poly.leading_monomial();
    Monomial l = Monomial::lcm(lmi, lmj);
    // first criterion: coprime leading monomials
    if (Monomial::gcd(lmi, lmj).is_one()) continue;
    // second criterion: some g_k divides the lcm and both side pairs are done
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == i || k == j) continue;
      if (!basis[k].poly.leading_monomial().divides(l)) continue;
      auto key_ik = std::minmax(i, k);
      auto key_jk = std::minmax(j, k);
      if (treated.count({key_ik.first, key_ik.second}) && treated.count({key_jk.first, key_jk.second}))
        skip = true;
    }
    if (skip) continue;

    // S-polynomial with tracked representation
    Rational ci = 1 / basis[i].poly.leading_coeff();
    Rational cj = 1 / basis[j].poly.leading_coeff();
    Monomial mi = l / lmi;
    Monomial mj = l / lmj;
    Tracked s;
    s.poly = basis[i].poly.mul_term(ci, mi) - basis[j].poly.mul_term(cj, mj);
    s.rep = zero_rep();
    for (std::size_t t = 0; t < n_orig; ++t)
      s.rep[t] = basis[i].rep[t].mul_term(ci, mi) - basis[j].rep[t].mul_term(cj, mj);
    s = reduce(std::move(s));
    if (s.poly.is_zero()) continue;
    Rational lc_inv = 1 / s.poly.leading_coeff();
    s.poly = s.poly * lc_inv;
    for (auto& r : s.rep) r = r * lc_inv;
    basis.push_back(std::move(s));
    push_pairs_for(basis.size() - 1);
  }

  // minimalize: drop elements whose LM is divisible by another kept LM
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (basis[j].poly.leading_monomial().divides(basis[i].poly.leading_monomial())) keep[i] = false;
    }
  }
  std::vector<Tracked> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(basis[i]));

  // make monic, then tail-reduce to a fixpoint: the reduced basis is unique
  for (auto& t : minimal) {
    Rational inv = 1 / t.poly.leading_coeff();
    t.poly = t.poly * inv;
    for (auto& r : t.rep) r = r * inv;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j].poly);
      DivisionResult d = divide(minimal[i].poly, others);
      if (d.remainder == minimal[i].poly) continue;
      changed = true;
      std::size_t oj = 0;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j == i) continue;
        for (const auto& term : d.quotients[oj].terms())
          minimal[i].rep = rep_sub_scaled(minimal[i].rep, minimal[j].rep, term.coeff, term.mono);
        ++oj;
      }
      minimal[i].poly = d.remainder;
    }
  }

  std::sort(minimal.begin(), minimal.end(), [ord](const Tracked& a, const Tracked& b) {
    return cmp(a.poly.leading_monomial(), b.poly.leading_monomial(), ord) > 0;
  });

  std::vector<Polynomial> out_gens;
  std::vector<std::vector<Polynomial>> out_reps;
  for (auto& t : minimal) {
    // re-expand the representation; a mismatch is a bug, not a user error
    Polynomial check = Polynomial::zero(vars, ord);
    for (std::size_t j = 0; j < n_orig; ++j) check = check + t.rep[j] * gens[j];
    if (check != t.poly) throw InternalError("buchberger: cofactor representation failed re-expansion");
    out_gens.push_back(std::move(t.poly));
    out_reps.push_back(std::move(t.rep));
  }
  return GroebnerBasis(vars, ord, std::move(out_gens), std::move(out_reps), std::move(gens));
}

std::optional<std::vector<Polynomial>> lift_membership(const Polynomial& p,
                                                       const std::vector<Polynomial>& gens,
                                                       MonomialOrder ord) {
  if (gens.empty()) {
    if (p.is_zero()) return std::vector<Polynomial>{};
    return std::nullopt;
  }
  GroebnerBasis gb = buchberger(p.vars(), gens, ord);
  Polynomial q = p.with_order(ord);
  DivisionResult d = divide(q, gb.gens());
  if (!d.remainder.is_zero()) return std::nullopt;
  std::vector<Polynomial> cof(gens.size(), Polynomial::zero(p.vars(), ord));
  for (std::size_t i = 0; i < gb.gens().size(); ++i) {
    if (d.quotients[i].is_zero()) continue;
    for (std::size_t j = 0; j < gens.size(); ++j)
      cof[j] = cof[j] + d.quotients[i] * gb.reps()[i][j];
  }
  // certificate check by re-expansion, always on
  Polynomial check = Polynomial::zero(p.vars(), ord);
  for (std::size_t j = 0; j < gens.size(); ++j) check = check + cof[j] * gens[j].with_order(ord);
  if (check != q) throw InternalError("lift_membership: cofactors failed re-expansion");
  return cof;
}

}  // namespace witt
