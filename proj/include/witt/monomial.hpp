#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "witt/errors.hpp"

namespace witt {

// Shared, immutable variable list. Polynomials over the "same" variables in
// the mathematical sense may still hold different pointers; equality of the
// pointed-to lists is what matters.
using VarList = std::vector<std::string>;
using VarsPtr = std::shared_ptr<const VarList>;

inline VarsPtr make_vars(VarList names) {
  return std::make_shared<const VarList>(std::move(names));
}

inline bool same_vars(const VarsPtr& a, const VarsPtr& b) {
  return a == b || *a == *b;
}

enum class MonomialOrder { Grevlex, Lex };

inline std::string order_name(MonomialOrder o) {
  return o == MonomialOrder::Grevlex ? "grevlex" : "lex";
}

// Exponent vector; the variable list lives in the owning polynomial.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
  static Monomial one(std::size_t nvars) {
    return Monomial(std::vector<std::uint32_t>(nvars, 0));
  }

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t exp(std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exps() const { return exps_; }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  bool is_one() const {
    for (auto e : exps_)
      if (e) return false;
    return true;
  }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > m.exps_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    std::vector<std::uint32_t> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = exps_[i] + m.exps_[i];
    return Monomial(std::move(e));
  }

  // caller guarantees m.divides(*this)
  Monomial operator/(const Monomial& m) const {
    std::vector<std::uint32_t> e(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (m.exps_[i] > exps_[i]) throw InternalError("monomial division underflow");
      e[i] = exps_[i] - m.exps_[i];
    }
    return Monomial(std::move(e));
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<std::uint32_t> e(a.exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      e[i] = a.exps_[i] > b.exps_[i] ? a.exps_[i] : b.exps_[i];
    return Monomial(std::move(e));
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    std::vector<std::uint32_t> e(a.exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      e[i] = a.exps_[i] < b.exps_[i] ? a.exps_[i] : b.exps_[i];
    return Monomial(std::move(e));
  }

  bool operator==(const Monomial& m) const { return exps_ == m.exps_; }
  bool operator!=(const Monomial& m) const { return exps_ != m.exps_; }

  std::string to_string(const VarList& vars) const;

 private:
  std::vector<std::uint32_t> exps_;
};

// three-way compare: >0 iff a > b under ord.
// grevlex: higher total degree wins; on ties the monomial with the SMALLER
// exponent at the rightmost differing variable is the larger one.
// lex: leftmost differing variable, larger exponent wins.
int cmp(const Monomial& a, const Monomial& b, MonomialOrder ord);

}  // namespace witt
