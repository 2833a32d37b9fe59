#include "witt/forms.hpp"

namespace witt {

namespace {

RingElement trace(const RingMatrix& m) {
  RingElement t = m.ring()->zero();
  for (std::size_t i = 0; i < m.rows(); ++i) t = t + m.at(i, i);
  return t;
}

RingMatrix outer(const RingPtr& ring, const std::vector<RingElement>& col,
                 const std::vector<RingElement>& row) {
  RingMatrix m(ring, col.size(), row.size());
  for (std::size_t i = 0; i < col.size(); ++i)
    for (std::size_t j = 0; j < row.size(); ++j) m.set(i, j, col[i] * row[j]);
  return m;
}

}  // namespace

FramedAlternatingForm::FramedAlternatingForm(FramedModule module, RingMatrix gram,
                                             RingMatrix witness)
    : module_(std::move(module)), gram_(std::move(gram)), witness_(std::move(witness)) {
  const RingMatrix& e = module_.frame;
  std::size_t n = e.rows();
  if (e.cols() != n || gram_.rows() != n || gram_.cols() != n || witness_.rows() != n ||
      witness_.cols() != n)
    throw FormError("framed form: all matrices must be square of one size");
  if (!presentation_equal(gram_.ring(), module_.ring) ||
      !presentation_equal(witness_.ring(), module_.ring))
    throw FormError("framed form: ring mismatch");
  if (e * e != e) throw FormError("frame is not idempotent");
  if (module_.rank) {
    RingElement t = trace(e);
    if (t != module_.ring->constant(Rational(static_cast<long>(*module_.rank))))
      throw FormError("declared rank does not match trace of the frame");
  }
  if (gram_.transpose() != gram_ * -module_.ring->one()) throw FormError("gram is not alternating");
  if (e.transpose() * gram_ * e != gram_) throw FormError("gram does not restrict to the frame");
  if (e * witness_ * e.transpose() != witness_) throw FormError("witness does not restrict to the frame");
  if (witness_ * gram_ * e != e) throw FormError("witness does not invert the gram on the frame");
}

bool FramedAlternatingForm::operator==(const FramedAlternatingForm& o) const {
  return module_.frame == o.module_.frame && gram_ == o.gram_ && witness_ == o.witness_ &&
         module_.rank == o.module_.rank;
}

FramedAlternatingForm hyperbolic(const RingPtr& ring, std::size_t k) {
  RingMatrix j = symplectic_gram(ring, k);
  // J^2 = -I, so J^{-1} = -J
  RingMatrix jinv = j * -ring->one();
  FramedModule m{ring, RingMatrix::identity(ring, 2 * k), static_cast<unsigned>(2 * k)};
  return FramedAlternatingForm(std::move(m), j, jinv);
}

FramedAlternatingForm orthogonal_sum(const FramedAlternatingForm& a,
                                     const FramedAlternatingForm& b) {
  if (!presentation_equal(a.ring(), b.ring())) throw RingMismatchError("orthogonal_sum: ring mismatch");
  std::optional<unsigned> rank;
  if (a.module().rank && b.module().rank) rank = *a.module().rank + *b.module().rank;
  FramedModule m{a.ring(), RingMatrix::diag_blocks(a.frame(), b.frame()), rank};
  return FramedAlternatingForm(std::move(m), RingMatrix::diag_blocks(a.gram(), b.gram()),
                               RingMatrix::diag_blocks(a.witness(), b.witness()));
}

IsometryReport verify_isometry(const IsometryCertificate& cert) {
  const auto& s = cert.source;
  const auto& t = cert.target;
  const RingMatrix& T = cert.map;
  if (!presentation_equal(s.ring(), t.ring())) return {false, "source and target over different rings"};
  if (T.rows() != t.ambient() || T.cols() != s.ambient())
    return {false, "map shape does not match the forms"};
  RingMatrix te = T * s.frame();
  if (t.frame() * te != te) return {false, "map does not respect the frames"};
  RingMatrix pulled = s.frame().transpose() * T.transpose() * t.gram() * T * s.frame();
  if (pulled != s.gram()) return {false, "pullback of the target form differs from the source form"};
  if (cert.inverse) {
    const RingMatrix& ti = *cert.inverse;
    if (ti.rows() != s.ambient() || ti.cols() != t.ambient())
      return {false, "inverse shape does not match the forms"};
    if (ti * te != s.frame()) return {false, "inverse is not left-inverse on the source frame"};
    RingMatrix tie = ti * t.frame();
    if (T * tie != t.frame()) return {false, "inverse is not right-inverse on the target frame"};
    if (s.frame() * tie != tie) return {false, "inverse does not respect the frames"};
  }
  return {true, ""};
}

QvConstruction construct_qv(const UnimodularRow& row) {
  const RingPtr& ring = row.ring();
  std::size_t n = row.size();
  if (n % 2 != 0) throw FormError("construct_qv: row length must be even");
  RingMatrix h = symplectic_gram(ring, n / 2);
  RingMatrix hinv = h * -ring->one();

  // u = hinv v^T (column), a = w^T h (row)
  std::vector<RingElement> u, a;
  u.reserve(n);
  a.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RingElement ui = ring->zero();
    for (std::size_t j = 0; j < n; ++j) ui = ui + hinv.at(i, j) * row.v[j];
    u.push_back(ui);
  }
  for (std::size_t j = 0; j < n; ++j) {
    RingElement aj = ring->zero();
    for (std::size_t i = 0; i < n; ++i) aj = aj + row.w[i] * h.at(i, j);
    a.push_back(aj);
  }

  RingMatrix pi = RingMatrix::identity(ring, n) - outer(ring, u, a) - outer(ring, row.w, row.v);

  // postconditions, all exact
  if (pi * pi != pi) throw InternalError("construct_qv: projector not idempotent");
  for (std::size_t i = 0; i < n; ++i) {
    RingElement pu = ring->zero(), pw = ring->zero();
    for (std::size_t j = 0; j < n; ++j) {
      pu = pu + pi.at(i, j) * u[j];
      pw = pw + pi.at(i, j) * row.w[j];
    }
    if (!pu.is_zero()) throw InternalError("construct_qv: projector does not kill u");
    if (!pw.is_zero()) throw InternalError("construct_qv: projector does not kill w");
  }

  RingMatrix g = pi.transpose() * h * pi;
  RingMatrix gi = pi * hinv * pi.transpose();
  FramedModule mod{ring, pi, static_cast<unsigned>(n - 2)};
  FramedAlternatingForm form(std::move(mod), std::move(g), std::move(gi));
  return QvConstruction{row, std::move(u), std::move(a), std::move(pi), std::move(form)};
}

IsometryCertificate decomposition_certificate(const QvConstruction& qv) {
  const RingPtr& ring = qv.row.ring();
  std::size_t n = qv.row.size();
  // T = [w | u | pi] : A^{n+2} -> A^n, Tinv = [v; a; pi] stacked as rows
  RingMatrix T(ring, n, n + 2);
  RingMatrix Ti(ring, n + 2, n);
  for (std::size_t i = 0; i < n; ++i) {
    T.set(i, 0, qv.row.w[i]);
    T.set(i, 1, qv.u[i]);
    for (std::size_t j = 0; j < n; ++j) T.set(i, 2 + j, qv.projector.at(i, j));
    Ti.set(0, i, qv.row.v[i]);
    Ti.set(1, i, qv.a[i]);
    for (std::size_t j = 0; j < n; ++j) Ti.set(2 + j, i, qv.projector.at(j, i));
  }
  IsometryCertificate cert{orthogonal_sum(hyperbolic(ring, 1), qv.form),
                           hyperbolic(ring, n / 2), std::move(T), std::move(Ti)};
  IsometryReport rep = verify_isometry(cert);
  if (!rep.verified) throw InternalError("decomposition_certificate: self-check failed: " + rep.reason);
  return cert;
}

FramedAlternatingForm euler_form(const RingPtr& ring, const RingElement& lambda) {
  auto inv = try_invert(lambda);
  if (!inv) throw FormError("euler_form: trivialization scalar is not a unit");
  RingMatrix j = symplectic_gram(ring, 1);
  FramedModule m{ring, RingMatrix::identity(ring, 2), 2u};
  return FramedAlternatingForm(std::move(m), j * lambda, (j * -ring->one()) * *inv);
}

FramedAlternatingForm euler_form(const FramedModule& module, const RingMatrix& gram,
                                 const RingMatrix& witness) {
  if (module.rank && *module.rank != 2) throw FormError("euler_form: module must have rank 2");
  FramedModule m = module;
  if (!m.rank) m.rank = 2u;
  return FramedAlternatingForm(std::move(m), gram, witness);
}

UnimodularRow symplectic_class(const FramedAlternatingForm& q, const IsometryCertificate& cert) {
  IsometryReport rep = verify_isometry(cert);
  if (!rep.verified) throw FormError("symplectic_class: certificate does not verify: " + rep.reason);
  if (!cert.inverse) throw FormError("symplectic_class: certificate must carry an inverse");
  FramedAlternatingForm expected_source = orthogonal_sum(hyperbolic(q.ring(), 1), q);
  if (!(cert.source == expected_source))
    throw FormError("symplectic_class: certificate source is not H(A) \\perp Q");
  std::size_t n = cert.target.ambient();
  if (!(cert.target == hyperbolic(q.ring(), n / 2)))
    throw FormError("symplectic_class: certificate target is not hyperbolic");
  // e_1^* composed with the inverse picks the first row; the image of the
  // source e_1 is the matching cofactor column
  return UnimodularRow(cert.inverse->row(0), cert.map.col(0));
}

IsometryReport verify_stable_isometry(const FramedAlternatingForm& f1,
                                      const FramedAlternatingForm& f2, std::size_t k,
                                      const IsometryCertificate& cert) {
  if (k > 0) {
    FramedAlternatingForm s = orthogonal_sum(f1, hyperbolic(f1.ring(), k));
    FramedAlternatingForm t = orthogonal_sum(f2, hyperbolic(f2.ring(), k));
    if (!(cert.source == s)) return {false, "certificate source is not F1 \\perp H(A^k)"};
    if (!(cert.target == t)) return {false, "certificate target is not F2 \\perp H(A^k)"};
  } else {
    if (!(cert.source == f1)) return {false, "certificate source is not F1"};
    if (!(cert.target == f2)) return {false, "certificate target is not F2"};
  }
  return verify_isometry(cert);
}

}  // namespace witt
