#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "witt/monomial.hpp"
#include "witt/rational.hpp"

namespace witt {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Exact multivariate polynomial over Q. Terms are kept sorted strictly
// descending under the stored order with no zero coefficients, so
// representation equality is mathematical equality.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial zero(VarsPtr vars, MonomialOrder ord = MonomialOrder::Grevlex);
  static Polynomial constant(VarsPtr vars, Rational c, MonomialOrder ord = MonomialOrder::Grevlex);
  static Polynomial variable(VarsPtr vars, std::size_t index, MonomialOrder ord = MonomialOrder::Grevlex);
  // normalizes: sorts, merges, drops zeros
  static Polynomial from_terms(VarsPtr vars, std::vector<Term> terms, MonomialOrder ord = MonomialOrder::Grevlex);

  const VarsPtr& vars() const { return vars_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t nvars() const { return vars_->size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  // requires is_constant()
  Rational constant_value() const;
  bool is_one() const { return is_constant() && !terms_.empty() && terms_[0].coeff == 1; }

  // requires !is_zero()
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coeff() const { return leading_term().coeff; }
  std::uint64_t total_degree() const;  // 0 for the zero polynomial

  Polynomial operator+(const Polynomial& q) const;
  Polynomial operator-(const Polynomial& q) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& q) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial mul_term(const Rational& c, const Monomial& m) const;
  Polynomial pow(std::uint32_t e) const;
  bool operator==(const Polynomial& q) const;
  bool operator!=(const Polynomial& q) const { return !(*this == q); }

  // monic version (divide by leading coefficient); requires !is_zero()
  Polynomial monic() const;

  // gcd of all coefficients carrying the sign of the leading one; 0 for zero
  Rational content() const;
  // componentwise min of all exponent vectors; the all-ones monomial for zero
  Monomial monomial_gcd() const;

  // true iff every monomial uses only variables flagged in `allowed`
  bool uses_only(const std::vector<bool>& allowed) const;

  // re-sort under a different order (same variables)
  Polynomial with_order(MonomialOrder ord) const;

  // substitute images[i] for variable i; images must all live over one
  // variable list (the result's). Exact expansion.
  Polynomial substitute(std::span<const Polynomial> images) const;

  // reinterpret over a superset variable list: old_to_new[i] = index of
  // var i in the new list
  Polynomial map_vars(const VarsPtr& new_vars, const std::vector<std::size_t>& old_to_new) const;

  std::string to_string() const;

 private:
  Polynomial(VarsPtr vars, MonomialOrder ord, std::vector<Term> sorted_terms)
      : vars_(std::move(vars)), order_(ord), terms_(std::move(sorted_terms)) {}

  VarsPtr vars_;
  MonomialOrder order_ = MonomialOrder::Grevlex;
  std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

void require_compatible(const Polynomial& a, const Polynomial& b);

}  // namespace witt
