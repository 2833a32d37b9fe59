#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "witt/ring.hpp"

namespace witt {

// Dense matrix over a presented ring, row-major. All entries share the ring.
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static RingMatrix identity(const RingPtr& ring, std::size_t n);
  static RingMatrix from_rows(const RingPtr& ring, std::vector<std::vector<RingElement>> rows);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const RingElement& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const RingElement& v);

  RingMatrix operator+(const RingMatrix& b) const;
  RingMatrix operator-(const RingMatrix& b) const;
  RingMatrix operator*(const RingMatrix& b) const;
  RingMatrix operator*(const RingElement& c) const;
  RingMatrix transpose() const;
  bool operator==(const RingMatrix& b) const;
  bool operator!=(const RingMatrix& b) const { return !(*this == b); }

  // cofactor expansion along the first row; exact, fine for small sizes
  RingElement det() const;

  RingMatrix submatrix_dropping(std::size_t r, std::size_t c) const;
  std::vector<RingElement> row(std::size_t r) const;
  std::vector<RingElement> col(std::size_t c) const;

  // block-diagonal concatenation
  static RingMatrix diag_blocks(const RingMatrix& a, const RingMatrix& b);

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<RingElement> e_;
};

std::vector<RingElement> mul_row_matrix(const std::vector<RingElement>& v, const RingMatrix& m);

// A row v together with a certified cofactor column w, v.w == 1 (checked).
struct UnimodularRow {
  std::vector<RingElement> v;
  std::vector<RingElement> w;

  UnimodularRow(std::vector<RingElement> v_, std::vector<RingElement> w_);
  std::size_t size() const { return v.size(); }
  const RingPtr& ring() const { return v.front().ring(); }
};

// Decide unimodularity by lifting 1 into (v) + relations; the certificate is
// reduced mod the relations and rechecked. nullopt when 1 is not reachable.
std::optional<UnimodularRow> check_unimodular(const RingPtr& ring,
                                              const std::vector<RingElement>& v);

// Standard symplectic Gram matrix: orthogonal sum of k blocks [[0,1],[-1,0]].
RingMatrix symplectic_gram(const RingPtr& ring, std::size_t k);

// M^T J M == J for the standard J of matching size (even dimension required)
bool is_symplectic(const RingMatrix& m);

// Elementary symplectic-compatible row operation: row[to] += a * row[from].
// Indices are 0-based everywhere (API, CLI, JSON).
struct Transvection {
  std::size_t from, to;
  RingElement scalar;
};

struct TransvectionResult {
  std::vector<RingElement> row;
  RingMatrix certificate;  // product of the elementary matrices applied
};
TransvectionResult apply_transvections(const std::vector<RingElement>& row,
                                       const std::vector<Transvection>& ops);

enum class OrbitKind { Sp, SL, EProd };

struct OrbitCertificate {
  RingMatrix g;
  OrbitKind kind;
  std::vector<Transvection> ops;  // used when kind == EProd
};

struct OrbitCheck {
  bool verified;
  std::string reason;  // set when !verified
};

// verifies v * G == target and the membership claim for G itself
OrbitCheck verify_orbit_certificate(const std::vector<RingElement>& v,
                                    const std::vector<RingElement>& target,
                                    const OrbitCertificate& cert);

}  // namespace witt
