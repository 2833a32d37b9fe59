#pragma once

#include "witt/residues.hpp"

namespace witt {

// A formal sum of components <unit>*Kos(frame) on V(prime), all over one
// ring. Construction validates each component:
//   prime generators nonzero, frame elements lie in the prime,
//   unit nonzero mod prime, frame declared regular (each f_i nonzero
//   modulo the earlier ones + relations), sign in {+1,-1}.
class FramedCycle {
 public:
  FramedCycle(RingPtr ring, std::vector<CycleComponent> comps);

  const RingPtr& ring() const { return ring_; }
  const std::vector<CycleComponent>& components() const { return comps_; }

 private:
  RingPtr ring_;
  std::vector<CycleComponent> comps_;
};

enum class Verdict { Zero, Nonzero, Undetermined };

std::string verdict_name(Verdict v);

struct ResidueLine {
  std::size_t component;  // index into the cycle
  KoszulSymbol symbol;    // nonzero residue, frame = the field's generators
};

struct PrimeReport {
  std::string prime_label;
  Verdict verdict;
  std::vector<ResidueLine> residues;
  std::string note;
};

// Computes all residues of the cycle at each candidate prime and decides:
//   no nonzero residues                      -> Zero
//   an odd number of them                    -> Nonzero (rank mod 2)
//   an even number, fully paired by          -> Zero
//     witnessed cancellations <u>+<v>=0
//     (normalize(-u*v) trivial)
//   otherwise, or any residue error          -> Undetermined, with a note
// The verdicts are relative to the supplied candidate list; completeness of
// that list is the caller's claim, and the report records it.
std::vector<PrimeReport> differential_check(const FramedCycle& cycle,
                                            const std::vector<PresentedField>& primes);

// Optional per-component overrides for transport_cycle: replacement prime
// generators (verified to generate the image ideal), a reference frame to
// rewrite the mapped frame in (det of the transition multiplies the unit),
// and the field type used to normalize the resulting unit.
struct ImageSpec {
  std::optional<std::vector<RingElement>> prime;
  std::optional<std::vector<RingElement>> frame;
  FieldKind kind = FieldKind::Untyped;
  std::vector<FieldConstant> constants;
};

// Pushes a cycle through a verified ring hom. Throws CycleError when a
// supplied prime does not match the image ideal or when an image unit
// vanishes on the image component.
FramedCycle transport_cycle(const RingHom& h, const FramedCycle& cycle,
                            const std::vector<ImageSpec>& specs = {});

struct BoundaryHint {
  unsigned valuation;
  std::string unit_expr;  // parsed over the de-localized core ring
};

// Connecting-map boundary along f into the quotient presentation. Works in
// the core ring (inverter variables stripped; all component data and f must
// be expressible without them): computes the f-adic valuation of each unit
// by iterated certified division (bound 8, or a verified hint), keeps the
// odd-valuation components, and rewrites them in the quotient.
FramedCycle boundary_along(const FramedCycle& cycle, const RingElement& f, const RingPtr& quotient,
                           const std::vector<std::optional<BoundaryHint>>& hints = {});

}  // namespace witt
