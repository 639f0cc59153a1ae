#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghfp/gh_matrix.hpp"
#include "ghfp/perm.hpp"
#include "ghfp/propelinear.hpp"

namespace ghfp {

// K, the multiplicative copy of (F_q, +), is carried additively: the entry
// phi(k) is stored as the encoding k and products in K are field additions.

/// Monomial matrix over K: row i has its single entry diag[i] in column
/// perm(i).
struct MonomialMatrix {
  Perm perm;
  std::vector<Elem> diag;

  std::uint32_t size() const { return perm.size(); }
  static MonomialMatrix scalar(std::uint32_t n, Elem k);
  bool operator==(const MonomialMatrix&) const = default;
};

/// Dense pattern over Z[K] with at most one term per entry: nullopt is the
/// zero of the group ring.
using PatternMatrix = std::vector<std::vector<std::optional<Elem>>>;

PatternMatrix to_pattern(const MonomialMatrix& m);

struct MonomialFactors {
  std::vector<Elem> d;  // D = diag(d)
  Perm p;               // P has its 1 in row i at column p(i)
};

/// M = D P. Throws NotMonomial.
MonomialFactors factor_monomial(const PatternMatrix& m);

/// M1 M2 as monomial matrices.
MonomialMatrix multiply(const Field& f, const MonomialMatrix& a, const MonomialMatrix& b);

/// M* = transpose with every entry inverted.
MonomialMatrix star_transpose(const Field& f, const MonomialMatrix& m);

/// P H Q* = H with (P H Q*)_{ij} = dP_i + h_{pP(i), pQ(j)} - dQ_j. Throws
/// OrderMismatch.
bool is_matrix_automorphism(const MonomialMatrix& p, const MonomialMatrix& q, const GHMatrix& h);
bool is_matrix_automorphism(const MonomialMatrix& p, const MonomialMatrix& q, const FieldMatrix& h);

/// The pair attached to codeword a: N_a = (pi_a^{-1}, -a) and the row-side M_a.
struct AutPair {
  MonomialMatrix m, n;
};
AutPair automorphism_pair(const PropelinearCode& p, std::uint64_t a);

struct AutomorphismReport {
  std::uint64_t checked = 0;
  std::uint64_t verified = 0;
  bool sampled = false;
  bool homomorphism = true;
  bool transitive_on_rows = true;
  bool scalar_pairs = true;  // a = lambda 1 -> (phi(-lambda) I, phi(-lambda) I)
  std::string witness;
  bool all_pass() const { return verified == checked && homomorphism && transitive_on_rows && scalar_pairs; }
};

struct AutOptions {
  bool full = false;
  std::uint64_t sample = 512;
  std::uint64_t full_limit = 4096;  // on |C|
  std::uint64_t seed = 0;
};

AutomorphismReport automorphisms_from_star(const PropelinearCode& p, const AutOptions& opt = {});

/// E with block (i,j) = k_i + k_j + H, order qv. Throws SizeGateExceeded
/// when qv > 10^4.
FieldMatrix expanded_matrix(const GHMatrix& h);

struct RegularActionReport {
  bool automorphisms = true;  // every Theta image preserves E
  bool transitive = true;
  bool free = true;           // trivial stabilizers
  bool closed = true;         // images compose inside the set
  bool sampled = false;
  std::string witness;
  bool regular() const { return automorphisms && transitive && free && closed; }
};

/// Theta(M_a, N_a): row (d, i) -> (d + dM_i, pM(i)), column (e, j) ->
/// (e - dN_j, pN(j)). Checks the induced row action of (C, *) on the qv row
/// labels of E is regular.
RegularActionReport regular_row_action_check(const PropelinearCode& p, std::uint64_t seed = 0);

/// Brute-force product over Z[K] for small n: entries are integer vectors
/// indexed by K.
using GroupRingMatrix = std::vector<std::vector<std::vector<std::int64_t>>>;
GroupRingMatrix to_group_ring(const Field& f, const PatternMatrix& m);
GroupRingMatrix to_group_ring(const Field& f, const FieldMatrix& m);
GroupRingMatrix group_ring_multiply(const Field& f, const GroupRingMatrix& a, const GroupRingMatrix& b);

}  // namespace ghfp
