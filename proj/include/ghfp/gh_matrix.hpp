#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ghfp/cocycle.hpp"
#include "ghfp/group.hpp"
#include "ghfp/matrix.hpp"

namespace ghfp {

struct GhWitness {
  std::uint32_t i, j;  // row pair (or column pair when transposed)
  Elem u;
  std::uint32_t count;
  bool transposed = false;
};

struct GhCheck {
  bool ok = false;
  std::optional<GhWitness> witness;
};

/// For every row pair i < j, each u in F_q occurs v/q times among
/// h_ik - h_jk. Optionally repeats the check on the transpose. Throws
/// NotSquare or DivisibilityViolated.
GhCheck is_gh(const FieldMatrix& m, bool check_transpose = false);

/// A verified GH(q, v/q) matrix over F_q.
class GHMatrix {
 public:
  /// Runs is_gh; throws NotGH with the witness in the message.
  static GHMatrix verified(FieldMatrix m);

  /// Verified through orthogonality of psi (equivalent to the row condition).
  static GHMatrix from_orthogonal_cocycle(const Cocycle& psi);

  /// Construction paths that guarantee the property (Sylvester, Kronecker
  /// sums of GH matrices). Only shape and divisibility are checked, and a
  /// 1x1 matrix is accepted as is.
  static GHMatrix trusted(FieldMatrix m);

  const FieldMatrix& matrix() const { return m_; }
  const FieldPtr& field() const { return m_.field(); }
  std::uint32_t v() const { return m_.rows(); }
  std::uint32_t q() const { return m_.field()->q(); }
  std::uint32_t lambda() const { return v() / q(); }
  Elem operator()(std::uint32_t i, std::uint32_t j) const { return m_(i, j); }
  std::span<const Elem> row(std::uint32_t i) const { return m_.row(i); }

  bool is_normalized() const;

 private:
  explicit GHMatrix(FieldMatrix m) : m_(std::move(m)) {}
  FieldMatrix m_;
};

/// Subtract the first row from every row, then the first column from every
/// column.
GHMatrix normalize(const GHMatrix& h);

/// S_q: entry (i,j) = g_i * g_j for the field elements in the given order.
GHMatrix sylvester(const FieldPtr& field, OrderMode mode = OrderMode::Encoding);

/// S^1 = S_q, S^t = S_q (+) S^{t-1}.
GHMatrix sylvester_power(const FieldPtr& field, std::uint32_t t);

/// D_(p,m,k) = [x . y] over V = GF(q)^k, lexicographic indexing of V.
GHMatrix gen_sylvester(std::uint32_t p, std::uint32_t m, std::uint32_t k);
GHMatrix gen_sylvester(const FieldPtr& field, std::uint32_t k);

/// Cocycles realizing the matrices above: psi(g,h) = g*h on (F_q,+) and the
/// dot product on (F_q^k,+). Both are bilinear, hence cocycles.
Cocycle sylvester_cocycle(const FieldPtr& field, OrderMode mode = OrderMode::Encoding);
Cocycle gen_sylvester_cocycle(const FieldPtr& field, std::uint32_t k);

/// Block (i,j) equals h_ij + B_i. Block rows laid out row-major: global row
/// index i*v' + s. Throws FieldMismatch or OrderMismatch.
GHMatrix kronecker_sum(const GHMatrix& h, std::span<const GHMatrix> blocks);
GHMatrix kronecker_sum(const GHMatrix& h, const GHMatrix& b);

/// Plain Kronecker sum of matrices over one field, no GH assumption.
FieldMatrix kronecker_sum_matrix(const FieldMatrix& h, const FieldMatrix& b);

}  // namespace ghfp
