#pragma once

#include <optional>
#include <string>
#include <vector>

#include "witt/matrix.hpp"
#include "witt/ring.hpp"

namespace witt {

// How scalars behave in a residue field. The model works over Q while the
// intended constants are R or C, so square-class checks accept, by rule:
//   Real:    positive rationals are trivial (squares in R)
//   Complex: any nonzero element of the declared constant subfield is
//            trivial (squares in C)
//   Untyped: nothing is assumed; only witnessed squares are trivial
enum class FieldKind { Untyped, Real, Complex };

std::string kind_name(FieldKind k);

struct FieldConstant {
  std::string var;     // an ambient variable that is constant in the field
  Polynomial minpoly;  // its relation, must vanish in the field
};

// kappa(q): the residue field of a presented ring at a declared prime.
// Primality of the ideal is declared by the caller, not decided here; all
// computations happen in the quotient presentation ambient/(prime + rels).
class PresentedField {
 public:
  static PresentedField make(RingPtr ambient, std::vector<RingElement> prime_gens,
                             FieldKind kind, std::vector<FieldConstant> constants = {});

  const RingPtr& ambient() const { return ambient_; }
  const std::vector<RingElement>& prime() const { return prime_; }
  FieldKind kind() const { return kind_; }
  const std::vector<FieldConstant>& constants() const { return constants_; }
  const std::vector<bool>& constant_vars() const { return constant_vars_; }
  const GroebnerBasis& gb() const { return *gb_; }

  Polynomial nf(const Polynomial& p) const;
  Polynomial nf(const RingElement& x) const;
  bool is_zero(const RingElement& x) const { return nf(x).is_zero(); }

  std::string describe() const;

 private:
  PresentedField() = default;
  RingPtr ambient_;
  std::vector<RingElement> prime_;
  FieldKind kind_ = FieldKind::Untyped;
  std::vector<FieldConstant> constants_;
  std::vector<bool> constant_vars_;
  std::shared_ptr<const GroebnerBasis> gb_;  // prime + ambient relations
};

// witness for "u is the square class of scale": u*b^2 == scale*a^2 in the
// field, with scale accepted by the field's rule
struct SquareWitness {
  Polynomial a, b;
  Rational scale = Rational(1);
};

struct SquareCheck {
  bool verified;
  std::string reason;  // empty when verified
};

SquareCheck verify_square_class(const PresentedField& f, const RingElement& u,
                                const SquareWitness& wit);

// Certified normalization of a unit class. Invariant (checked by
// check_normalization, and self-checked before returning):
//   raw * b^2 == unit * a^2 * c * mc      (mod the field ideal)
// where c is a rational and mc a polynomial in the declared constant
// variables, both trivial under the field's rule (c == 1 and mc == 1 for
// untyped fields). Steps performed: normal form, extraction of square
// rational/monomial factors, swapping an odd inverter t for its element f
// (t*f == 1), and rule-based dropping of scalar/constant content.
struct NormalizedUnit {
  Polynomial unit;
  Polynomial a, b;
  Rational c = Rational(1);
  Polynomial mc;
  bool is_trivial() const { return unit.is_one(); }
};

NormalizedUnit normalize_unit(const PresentedField& f, const RingElement& raw);
SquareCheck check_normalization(const PresentedField& f, const Polynomial& raw,
                                const NormalizedUnit& n);

// u and v lie in the same square class: normalize(u*v) is trivial. The
// certificate inside the result makes the claim checkable.
bool same_square_class(const PresentedField& f, const RingElement& u, const RingElement& v);

enum class TransitionStatus { Ok, NotExpressible, Degenerate };

// from_i == sum_j matrix[i][j] * to_j in the ambient ring (certified by the
// membership lift). det_mod_prime is canonical: it does not depend on the
// choice of lift. Degenerate means det lies in the prime.
struct Transition {
  TransitionStatus status = TransitionStatus::Ok;
  RingMatrix matrix;
  RingElement det;
  Polynomial det_mod_prime;
};

Transition transition_matrix(const PresentedField& f, const std::vector<RingElement>& from,
                             const std::vector<RingElement>& to);

// One component of a framed cycle: the class <unit> * Kos(frame) supported
// on V(prime). Invariants checked by FramedCycle: unit is nonzero mod the
// prime and the frame is declared regular (each f_i nonzero modulo the
// earlier ones + relations; this nf check is what "declared" means here).
struct CycleComponent {
  std::vector<RingElement> prime;
  RingElement unit;
  std::vector<RingElement> frame;
  int sign = 1;
};

// <unit> * Kos(frame) over a residue field; unit == 0 encodes the zero symbol
struct KoszulSymbol {
  std::vector<Polynomial> frame;
  Polynomial unit;
  int sign = 1;
  bool is_zero() const { return unit.is_zero(); }
};

// permutation of the frame multiplies by its signature
KoszulSymbol permute_frame(const KoszulSymbol& sym, const std::vector<std::size_t>& perm);

struct ResidueResult {
  KoszulSymbol symbol;
  std::optional<NormalizedUnit> cert;
  std::optional<Transition> transition;
};

// Second residue of a component at the prime of f (codim = frame size + 1):
// zero unless every element of frame+{unit} lies in the prime; otherwise
// <sign * det(T)> * Kos(f.prime()) where T rewrites frame+{unit} in the
// reference generators. Transition failures throw CycleError.
ResidueResult residue_at(const CycleComponent& comp, const PresentedField& f);

}  // namespace witt
