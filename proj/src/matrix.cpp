#include "witt/matrix.hpp"

namespace witt {

RingMatrix::RingMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  e_.assign(rows_ * cols_, ring_->zero());
}

RingMatrix RingMatrix::identity(const RingPtr& ring, std::size_t n) {
  RingMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, ring->one());
  return m;
}

RingMatrix RingMatrix::from_rows(const RingPtr& ring, std::vector<std::vector<RingElement>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  RingMatrix m(ring, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

const RingElement& RingMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
  return e_[r * cols_ + c];
}

void RingMatrix::set(std::size_t r, std::size_t c, const RingElement& v) {
  if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
  if (!presentation_equal(v.ring(), ring_)) throw RingMismatchError("matrix entry from a different ring");
  e_[r * cols_ + c] = v;
}

RingMatrix RingMatrix::operator+(const RingMatrix& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionError("matrix sum: shape mismatch");
  RingMatrix m(ring_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + b.e_[i];
  return m;
}

RingMatrix RingMatrix::operator-(const RingMatrix& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionError("matrix difference: shape mismatch");
  RingMatrix m(ring_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - b.e_[i];
  return m;
}

RingMatrix RingMatrix::operator*(const RingMatrix& b) const {
  if (cols_ != b.rows_) throw DimensionError("matrix product: shape mismatch");
  RingMatrix m(ring_, rows_, b.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      RingElement s = ring_->zero();
      for (std::size_t k = 0; k < cols_; ++k) s = s + at(i, k) * b.at(k, j);
      m.set(i, j, s);
    }
  return m;
}

RingMatrix RingMatrix::operator*(const RingElement& c) const {
  RingMatrix m(ring_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * c;
  return m;
}

RingMatrix RingMatrix::transpose() const {
  RingMatrix m(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.set(j, i, at(i, j));
  return m;
}

bool RingMatrix::operator==(const RingMatrix& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != b.e_[i]) return false;
  return true;
}

RingMatrix RingMatrix::submatrix_dropping(std::size_t r, std::size_t c) const {
  RingMatrix m(ring_, rows_ - 1, cols_ - 1);
  std::size_t mi = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i == r) continue;
    std::size_t mj = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j == c) continue;
      m.set(mi, mj, at(i, j));
      ++mj;
    }
    ++mi;
  }
  return m;
}

RingElement RingMatrix::det() const {
  if (rows_ != cols_) throw DimensionError("determinant of non-square matrix");
  if (rows_ == 0) return ring_->one();
  if (rows_ == 1) return at(0, 0);
  RingElement acc = ring_->zero();
  for (std::size_t j = 0; j < cols_; ++j) {
    if (at(0, j).is_zero()) continue;
    RingElement minor = submatrix_dropping(0, j).det();
    RingElement term = at(0, j) * minor;
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

std::vector<RingElement> RingMatrix::row(std::size_t r) const {
  std::vector<RingElement> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(at(r, j));
  return out;
}

std::vector<RingElement> RingMatrix::col(std::size_t c) const {
  std::vector<RingElement> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, c));
  return out;
}

RingMatrix RingMatrix::diag_blocks(const RingMatrix& a, const RingMatrix& b) {
  if (!presentation_equal(a.ring(), b.ring())) throw RingMismatchError("diag_blocks: ring mismatch");
  RingMatrix m(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m.set(a.rows() + i, a.cols() + j, b.at(i, j));
  return m;
}

std::string RingMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ", ";
      s += at(i, j).to_string();
    }
    s += "]";
  }
  return s + "]";
}

std::vector<RingElement> mul_row_matrix(const std::vector<RingElement>& v, const RingMatrix& m) {
  if (v.size() != m.rows()) throw DimensionError("row-matrix product: shape mismatch");
  std::vector<RingElement> out;
  out.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    RingElement s = m.ring()->zero();
    for (std::size_t i = 0; i < v.size(); ++i) s = s + v[i] * m.at(i, j);
    out.push_back(s);
  }
  return out;
}

UnimodularRow::UnimodularRow(std::vector<RingElement> v_, std::vector<RingElement> w_)
    : v(std::move(v_)), w(std::move(w_)) {
  if (v.empty() || v.size() != w.size()) throw DimensionError("unimodular row: size mismatch");
  RingElement s = v[0].ring()->zero();
  for (std::size_t i = 0; i < v.size(); ++i) s = s + v[i] * w[i];
  if (!s.is_one()) throw Error("unimodular row: cofactor certificate does not sum to 1");
}

std::optional<UnimodularRow> check_unimodular(const RingPtr& ring,
                                              const std::vector<RingElement>& v) {
  if (v.empty()) return std::nullopt;
  std::vector<Polynomial> gens;
  gens.reserve(v.size() + ring->relations().size());
  for (const auto& vi : v) {
    if (!presentation_equal(vi.ring(), ring)) throw RingMismatchError("check_unimodular: foreign entry");
    gens.push_back(vi.poly());
  }
  for (const auto& r : ring->relations()) gens.push_back(r);
  Polynomial one = Polynomial::constant(ring->vars(), Rational(1), ring->order());
  auto lift = lift_membership(one, gens, ring->order());
  if (!lift) return std::nullopt;
  std::vector<RingElement> w;
  w.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w.push_back(ring->element((*lift)[i]));
  return UnimodularRow(v, std::move(w));  // ctor rechecks v.w == 1
}

RingMatrix symplectic_gram(const RingPtr& ring, std::size_t k) {
  RingMatrix j(ring, 2 * k, 2 * k);
  for (std::size_t b = 0; b < k; ++b) {
    j.set(2 * b, 2 * b + 1, ring->one());
    j.set(2 * b + 1, 2 * b, -ring->one());
  }
  return j;
}

bool is_symplectic(const RingMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0)
    throw DimensionError("is_symplectic: need a square even-dimensional matrix");
  RingMatrix j = symplectic_gram(m.ring(), m.rows() / 2);
  return m.transpose() * j * m == j;
}

TransvectionResult apply_transvections(const std::vector<RingElement>& row,
                                       const std::vector<Transvection>& ops) {
  if (row.empty()) throw DimensionError("apply_transvections: empty row");
  const RingPtr& ring = row[0].ring();
  TransvectionResult res{row, RingMatrix::identity(ring, row.size())};
  for (const auto& op : ops) {
    if (op.from >= row.size() || op.to >= row.size() || op.from == op.to)
      throw DimensionError("transvection indices out of range");
    // E = I + a*E_{from,to}; acting on the right sends row[to] += a*row[from]
    RingMatrix e = RingMatrix::identity(ring, row.size());
    e.set(op.from, op.to, op.scalar);
    res.row[op.to] = res.row[op.to] + op.scalar * res.row[op.from];
    res.certificate = res.certificate * e;
  }
  return res;
}

OrbitCheck verify_orbit_certificate(const std::vector<RingElement>& v,
                                    const std::vector<RingElement>& target,
                                    const OrbitCertificate& cert) {
  if (v.size() != target.size()) return {false, "row sizes differ"};
  if (cert.g.rows() != v.size() || cert.g.cols() != v.size())
    return {false, "certificate matrix shape does not match the rows"};
  std::vector<RingElement> image = mul_row_matrix(v, cert.g);
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != target[i]) return {false, "v*G differs from target at position " + std::to_string(i)};
  switch (cert.kind) {
    case OrbitKind::Sp:
      if (!is_symplectic(cert.g)) return {false, "matrix is not symplectic"};
      break;
    case OrbitKind::SL:
      if (!cert.g.det().is_one()) return {false, "matrix determinant is not 1"};
      break;
    case OrbitKind::EProd: {
      TransvectionResult r = apply_transvections(v, cert.ops);
      if (!(r.certificate == cert.g)) return {false, "elementary product does not reproduce the matrix"};
      break;
    }
  }
  return {true, ""};
}

}  // namespace witt
