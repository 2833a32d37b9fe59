#include "witt/polynomial.hpp"

#include <algorithm>

namespace witt {

void require_compatible(const Polynomial& a, const Polynomial& b) {
  if (!same_vars(a.vars(), b.vars()))
    throw VarMismatchError("polynomials over different variable lists");
  if (a.order() != b.order())
    throw VarMismatchError("polynomials under different monomial orders");
}

Polynomial Polynomial::zero(VarsPtr vars, MonomialOrder ord) {
  return Polynomial(std::move(vars), ord, {});
}

Polynomial Polynomial::constant(VarsPtr vars, Rational c, MonomialOrder ord) {
  std::vector<Term> ts;
  if (c != 0) ts.push_back({Monomial::one(vars->size()), std::move(c)});
  return Polynomial(std::move(vars), ord, std::move(ts));
}

Polynomial Polynomial::variable(VarsPtr vars, std::size_t index, MonomialOrder ord) {
  if (index >= vars->size()) throw VarMismatchError("variable index out of range");
  std::vector<std::uint32_t> e(vars->size(), 0);
  e[index] = 1;
  std::vector<Term> ts{{Monomial(std::move(e)), Rational(1)}};
  return Polynomial(std::move(vars), ord, std::move(ts));
}

Polynomial Polynomial::from_terms(VarsPtr vars, std::vector<Term> terms, MonomialOrder ord) {
  for (const auto& t : terms)
    if (t.mono.nvars() != vars->size())
      throw VarMismatchError("term exponent width does not match variable list");
  std::sort(terms.begin(), terms.end(), [ord](const Term& a, const Term& b) {
    return cmp(a.mono, b.mono, ord) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  return Polynomial(std::move(vars), ord, std::move(out));
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw Error("constant_value on non-constant polynomial");
  return terms_[0].coeff;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  return terms_[0];
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

// merge two descending term lists
Polynomial Polynomial::operator+(const Polynomial& q) const {
  require_compatible(*this, q);
  std::vector<Term> out;
  out.reserve(terms_.size() + q.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < q.terms_.size()) {
    int c = cmp(terms_[i].mono, q.terms_[j].mono, order_);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(q.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + q.terms_[j].coeff;
      if (s != 0) out.push_back({terms_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < q.terms_.size(); ++j) out.push_back(q.terms_[j]);
  return Polynomial(vars_, order_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return Polynomial(vars_, order_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& q) const { return *this + (-q); }

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
  if (c == 0) return zero(vars_, order_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational nc = t.coeff * c;
    out.push_back({t.mono * m, std::move(nc)});
  }
  // multiplying by a fixed monomial preserves relative order
  return Polynomial(vars_, order_, std::move(out));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  return mul_term(c, Monomial::one(vars_->size()));
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
  require_compatible(*this, q);
  Polynomial acc = zero(vars_, order_);
  // accumulate shorter-into-longer for fewer merges
  const Polynomial& a = terms_.size() <= q.terms_.size() ? *this : q;
  const Polynomial& b = terms_.size() <= q.terms_.size() ? q : *this;
  for (const auto& t : a.terms_) acc = acc + b.mul_term(t.coeff, t.mono);
  return acc;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial r = constant(vars_, Rational(1), order_);
  Polynomial base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& q) const {
  require_compatible(*this, q);
  if (terms_.size() != q.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != q.terms_[i].mono || terms_[i].coeff != q.terms_[i].coeff) return false;
  return true;
}

Polynomial Polynomial::monic() const {
  const Rational& lc = leading_coeff();
  Rational inv = 1 / lc;
  return *this * inv;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return Rational(0);
  Rational g(0);
  for (const auto& t : terms_) g = rat_gcd(g, t.coeff);
  if (sign(terms_[0].coeff) < 0) g = -g;
  return g;
}

Monomial Polynomial::monomial_gcd() const {
  if (terms_.empty()) return Monomial::one(vars_->size());
  Monomial g = terms_[0].mono;
  for (std::size_t i = 1; i < terms_.size(); ++i) g = Monomial::gcd(g, terms_[i].mono);
  return g;
}

bool Polynomial::uses_only(const std::vector<bool>& allowed) const {
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.mono.nvars(); ++i)
      if (t.mono.exp(i) && !allowed[i]) return false;
  return true;
}

Polynomial Polynomial::with_order(MonomialOrder ord) const {
  if (ord == order_) return *this;
  return from_terms(vars_, terms_, ord);
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != vars_->size())
    throw VarMismatchError("substitute: need one image per variable");
  for (const auto& im : images) require_compatible(images[0], im);
  VarsPtr tvars = images.empty() ? vars_ : images[0].vars();
  MonomialOrder tord = images.empty() ? order_ : images[0].order();
  // cache images[i]^k as needed
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, std::uint32_t k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(tvars, Rational(1), tord));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  Polynomial acc = Polynomial::zero(tvars, tord);
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(tvars, t.coeff, tord);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.mono.exp(i)) prod = prod * power(i, t.mono.exp(i));
    acc = acc + prod;
  }
  return acc;
}

Polynomial Polynomial::map_vars(const VarsPtr& new_vars, const std::vector<std::size_t>& old_to_new) const {
  if (old_to_new.size() != vars_->size())
    throw VarMismatchError("map_vars: index map has wrong size");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<std::uint32_t> e(new_vars->size(), 0);
    for (std::size_t i = 0; i < old_to_new.size(); ++i) {
      if (old_to_new[i] >= new_vars->size()) throw VarMismatchError("map_vars: target index out of range");
      e[old_to_new[i]] += t.mono.exp(i);
    }
    out.push_back({Monomial(std::move(e)), t.coeff});
  }
  return from_terms(new_vars, std::move(out), order_);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (sign(c) < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += sign(c) < 0 ? " - " : " + ";
      if (sign(c) < 0) c = -c;
    }
    std::string mono = t.mono.to_string(*vars_);
    if (mono == "1") {
      s += witt::to_string(c);
    } else if (c == 1) {
      s += mono;
    } else {
      s += witt::to_string(c) + "*" + mono;
    }
    first = false;
  }
  return s;
}

}  // namespace witt
