#pragma once

#include <optional>

#include "witt/matrix.hpp"

namespace witt {

// Finitely generated projective module presented by an idempotent frame
// e (n x n, e^2 == e), optionally with a declared rank (checked against
// trace(e), which must be a constant for the check to pass).
struct FramedModule {
  RingPtr ring;
  RingMatrix frame;
  std::optional<unsigned> rank;
};

// Alternating form on a framed module, with an explicit witness for
// nondegeneracy on the image of the frame. Validated on construction:
//   e^2 == e                 (frame idempotent)
//   trace(e) == rank         (when a rank is declared)
//   g^T == -g                (alternating; char 0, so skew == alternating)
//   e^T g e == g             (g lives on the framed summand)
//   e gi e^T == gi           (so does the witness)
//   gi g e == e              (witness inverts g on the summand)
class FramedAlternatingForm {
 public:
  FramedAlternatingForm(FramedModule module, RingMatrix gram, RingMatrix witness);

  const FramedModule& module() const { return module_; }
  const RingPtr& ring() const { return module_.ring; }
  const RingMatrix& frame() const { return module_.frame; }
  const RingMatrix& gram() const { return gram_; }
  const RingMatrix& witness() const { return witness_; }
  std::size_t ambient() const { return gram_.rows(); }

  bool operator==(const FramedAlternatingForm& o) const;

 private:
  FramedModule module_;
  RingMatrix gram_, witness_;
};

// H(A^k): free of rank 2k, frame I, gram the standard symplectic J
FramedAlternatingForm hyperbolic(const RingPtr& ring, std::size_t k);

FramedAlternatingForm orthogonal_sum(const FramedAlternatingForm& a,
                                     const FramedAlternatingForm& b);

// An isometry claim source -> target given by an ambient matrix (columns
// indexed by the source, rows by the target), optionally invertible.
struct IsometryCertificate {
  FramedAlternatingForm source;
  FramedAlternatingForm target;
  RingMatrix map;
  std::optional<RingMatrix> inverse;
};

struct IsometryReport {
  bool verified;
  std::string reason;  // empty when verified
};

// Checks, all exact:
//   e_t (T e_s) == T e_s                     (frame compatibility)
//   e_s^T T^T g_t T e_s == g_s               (pullback of the form)
// and when an inverse is supplied:
//   Tinv T e_s == e_s,  T Tinv e_t == e_t,  e_s (Tinv e_t) == Tinv e_t
IsometryReport verify_isometry(const IsometryCertificate& cert);

// The form Q(v) attached to a certified unimodular row of even length n:
//   u = h^{-1} v^T,  a = w^T h,  pi = I - u a - w v,
//   Q = (frame pi, gram pi^T h pi, witness pi h^{-1} pi^T),  rank n-2
// Postconditions (validated): pi^2 == pi, pi u == 0, pi w == 0,
// trace(pi) == n-2, and the form axioms.
struct QvConstruction {
  UnimodularRow row;
  std::vector<RingElement> u;  // column
  std::vector<RingElement> a;  // row
  RingMatrix projector;
  FramedAlternatingForm form;
};
QvConstruction construct_qv(const UnimodularRow& row);

// The canned decomposition H(A) \perp Q(v) ~ H(A^{n/2}) via
//   T = [w | u | pi]  (n x (n+2)),   Tinv = rows [v; a; pi]  ((n+2) x n);
// verified before returning.
IsometryCertificate decomposition_certificate(const QvConstruction& qv);

// Euler form of a rank-2 framed module with a chosen trivialization:
// free case frame I_2, gram lambda*J_2 (lambda must be a unit).
FramedAlternatingForm euler_form(const RingPtr& ring, const RingElement& lambda);
FramedAlternatingForm euler_form(const FramedModule& module, const RingMatrix& gram,
                                 const RingMatrix& witness);

// Reads the unimodular row back off a verified decomposition certificate
// whose source is H(A) \perp Q: v = first row of the inverse, cofactor =
// first column of the map. The returned row re-validates v.w == 1.
UnimodularRow symplectic_class(const FramedAlternatingForm& q, const IsometryCertificate& cert);

// F1 and F2 become isometric after adding H(A^k) to both sides; the
// certificate's endpoints are checked to be exactly those sums.
IsometryReport verify_stable_isometry(const FramedAlternatingForm& f1,
                                      const FramedAlternatingForm& f2, std::size_t k,
                                      const IsometryCertificate& cert);

}  // namespace witt
