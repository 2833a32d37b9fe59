#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "witt/groebner.hpp"
#include "witt/parser.hpp"

namespace witt {

class PresentedRing;
using RingPtr = std::shared_ptr<const PresentedRing>;
class RingElement;

// A finitely presented Q-algebra Q[vars]/(relations), normal forms taken
// against the reduced Groebner basis of the relation ideal. Localizations
// are presented rings too: inverting f adjoins a fresh variable t with
// relation t*f - 1, and the ring remembers which variables are inverters.
class PresentedRing : public std::enable_shared_from_this<PresentedRing> {
 public:
  struct Inverted {
    Polynomial element;        // the inverted element, over this ring's vars
    std::size_t inverter_var;  // index of its inverse variable
  };

  // throws ZeroRingError when 1 lies in the relation ideal
  static RingPtr make(VarList vars, const std::vector<std::string>& relation_exprs,
                      MonomialOrder ord = MonomialOrder::Grevlex);
  static RingPtr make(VarsPtr vars, std::vector<Polynomial> relations,
                      MonomialOrder ord = MonomialOrder::Grevlex);

  const VarsPtr& vars() const { return vars_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const GroebnerBasis& gb() const { return *gb_; }
  const std::vector<Inverted>& inverted() const { return inverted_; }
  const std::vector<bool>& inverter_flags() const { return is_inverter_; }
  bool has_inverters() const { return !inverted_.empty(); }

  Polynomial nf(const Polynomial& p) const { return gb_->nf(p); }

  RingElement element(const std::string& expr) const;
  RingElement element(const Polynomial& p) const;
  RingElement var(std::size_t i) const;
  RingElement var(const std::string& name) const;
  RingElement constant(const Rational& c) const;
  RingElement zero() const;
  RingElement one() const;

  std::size_t var_index(const std::string& name) const;

  std::string describe() const;

 private:
  friend RingPtr localize(const RingPtr&, const RingElement&);
  friend RingPtr restore_ring(VarsPtr, std::vector<Polynomial>, MonomialOrder,
                              std::vector<Inverted>);
  PresentedRing() = default;

  VarsPtr vars_;
  MonomialOrder order_ = MonomialOrder::Grevlex;
  std::vector<Polynomial> relations_;
  std::shared_ptr<const GroebnerBasis> gb_;
  std::vector<Inverted> inverted_;
  std::vector<bool> is_inverter_;
};

// two handles present the same ring: equal vars, order and reduced basis
bool presentation_equal(const RingPtr& a, const RingPtr& b);

// Element of a presented ring, stored in normal form; representation
// equality is therefore equality in the ring.
class RingElement {
 public:
  RingElement() = default;
  RingElement(RingPtr ring, const Polynomial& p);

  const RingPtr& ring() const { return ring_; }
  const Polynomial& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  bool is_one() const { return poly_.is_one(); }

  RingElement operator+(const RingElement& b) const;
  RingElement operator-(const RingElement& b) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement& b) const;
  RingElement operator*(const Rational& c) const;
  RingElement pow(std::uint32_t e) const;
  bool operator==(const RingElement& b) const;
  bool operator!=(const RingElement& b) const { return !(*this == b); }

  std::string to_string() const { return poly_.to_string(); }

 private:
  RingPtr ring_;
  Polynomial poly_;
};

inline RingElement operator*(const Rational& c, const RingElement& a) { return a * c; }

bool element_eq(const RingElement& a, const RingElement& b);

// inverse with certificate (inv*a == 1 rechecked); nullopt if a is not a unit
std::optional<RingElement> try_invert(const RingElement& a);

// adjoin an inverse for f: fresh variable named from f's display string,
// relation t*f - 1. Throws ZeroRingError if the localization collapses
// and Error when f == 0.
RingPtr localize(const RingPtr& ring, const RingElement& f);

// Rebuilds a ring together with its localization bookkeeping (session
// loading). Validates that inverter indices are in range and distinct and
// that each t*f - 1 lies in the relation ideal; throws SessionError.
RingPtr restore_ring(VarsPtr vars, std::vector<Polynomial> relations, MonomialOrder ord,
                     std::vector<PresentedRing::Inverted> inverted);

// Ring hom defined on generators, validated at construction: every source
// relation must map to 0 (IllDefinedHomError carries the offender). Images
// of inverted elements are automatically units: the inverter relation maps
// to witness*image - 1 == 0.
class RingHom {
 public:
  RingHom(RingPtr source, RingPtr target, std::vector<RingElement> images);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const std::vector<RingElement>& images() const { return images_; }

  RingElement apply(const RingElement& x) const;
  RingElement apply_poly(const Polynomial& p) const;  // p over source vars

 private:
  RingPtr source_, target_;
  std::vector<RingElement> images_;
};

RingHom define_hom(const RingPtr& source, const RingPtr& target,
                   const std::vector<std::string>& image_exprs);
RingHom define_hom(const RingPtr& source, const RingPtr& target,
                   std::vector<RingElement> images);

struct MutualInverseResult {
  bool verified;
  std::string failing_generator;  // empty when verified
};
// checks g(f(x)) == x and f(g(y)) == y on all generators of both rings
MutualInverseResult verify_mutually_inverse(const RingHom& f, const RingHom& g);

}  // namespace witt
