#pragma once

#include <optional>
#include <span>
#include <vector>

#include "witt/polynomial.hpp"

namespace witt {

// Multivariate division with remainder: p = sum quotients[i]*divisors[i] + remainder,
// no remainder term divisible by any divisor's leading monomial. Deterministic:
// the smallest-index divisor whose LM divides the current leading term wins.
struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};
DivisionResult divide(const Polynomial& p, std::span<const Polynomial> divisors);

// A reduced Groebner basis together with cofactor representations of each
// basis element in terms of the original generators:
//   gens()[i] == sum_j reps()[i][j] * original()[j]     (verified on build)
// gens() is monic, inter-reduced, sorted by decreasing leading monomial, so
// it is *the* reduced basis of the ideal: permutation-invariant.
class GroebnerBasis {
 public:
  GroebnerBasis(VarsPtr vars, MonomialOrder ord, std::vector<Polynomial> gens,
                std::vector<std::vector<Polynomial>> reps, std::vector<Polynomial> original)
      : vars_(std::move(vars)),
        order_(ord),
        gens_(std::move(gens)),
        reps_(std::move(reps)),
        original_(std::move(original)) {}

  const VarsPtr& vars() const { return vars_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  const std::vector<std::vector<Polynomial>>& reps() const { return reps_; }
  const std::vector<Polynomial>& original() const { return original_; }

  // the ideal is (1): the presented ring would be zero
  bool is_trivial() const { return gens_.size() == 1 && gens_[0].is_one(); }

  Polynomial nf(const Polynomial& p) const;
  bool contains(const Polynomial& p) const { return nf(p).is_zero(); }

 private:
  VarsPtr vars_;
  MonomialOrder order_;
  std::vector<Polynomial> gens_;
  std::vector<std::vector<Polynomial>> reps_;
  std::vector<Polynomial> original_;
};

// Buchberger with the normal selection strategy (minimal lcm degree, ties by
// pair index), first and second criteria, and cofactor tracking throughout.
// Zero generators are dropped (their cofactor columns stay, identically 0).
GroebnerBasis buchberger(const VarsPtr& vars, std::vector<Polynomial> gens,
                         MonomialOrder ord = MonomialOrder::Grevlex);

// Ideal membership with certificate: cofactors c with p == sum c[j]*gens[j],
// re-expanded and checked before returning. nullopt when p is not a member.
std::optional<std::vector<Polynomial>> lift_membership(
    const Polynomial& p, const std::vector<Polynomial>& gens,
    MonomialOrder ord = MonomialOrder::Grevlex);

}  // namespace witt
