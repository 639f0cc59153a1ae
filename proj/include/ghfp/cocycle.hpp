#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ghfp/field.hpp"
#include "ghfp/group.hpp"
#include "ghfp/matrix.hpp"

namespace ghfp {

// Cocycles psi: G x G -> U with U = (F_q, +). The multiplicative notation of
// the cocycle identity maps to F_q addition: u^{-1} -> -u, uv -> u + v, so the
// identity reads psi(g,h) + psi(gh,k) = psi(g,hk) + psi(h,k).

struct Triple {
  std::uint32_t g, h, k;
};

/// Exhaustive scan for v <= 256, otherwise 10^6 seeded random triples.
std::optional<Triple> find_cocycle_violation(const Group& group, const FieldMatrix& table,
                                             std::uint64_t seed = 0);

class Cocycle {
 public:
  /// Validates normalization and the cocycle identity. Throws SizeMismatch,
  /// NotNormalized or CocycleIdentityViolated (message names the triple).
  static Cocycle checked(Group group, FieldMatrix table, std::uint64_t seed = 0);

  /// For construction paths that guarantee the identity (coboundaries,
  /// tensor products, bilinear forms). Normalization is still checked.
  static Cocycle trusted(Group group, FieldMatrix table);

  static Cocycle trivial(Group group, FieldPtr field);

  const Group& group() const { return group_; }
  const FieldPtr& field() const { return table_.field(); }
  std::uint32_t v() const { return group_.order(); }
  std::uint32_t q() const { return table_.field()->q(); }

  Elem operator()(std::uint32_t g, std::uint32_t h) const { return table_(g, h); }
  const FieldMatrix& table() const { return table_; }

 private:
  Cocycle(Group group, FieldMatrix table) : group_(std::move(group)), table_(std::move(table)) {}

  Group group_;
  FieldMatrix table_;
};

Cocycle check_cocycle(const FieldMatrix& table, const Group& group, std::uint64_t seed = 0);

struct Coboundary {
  Cocycle cocycle;
  Elem offset;  // phi(1) subtracted to normalize phi; 0 when phi was normalized
};

/// d(phi)(g,h) = phi(gh) - phi(g) - phi(h). Throws DomainMismatch when
/// phi.size() != |G|.
Coboundary coboundary(const Group& group, const FieldPtr& field, std::span<const Elem> phi);

struct OrthogonalityWitness {
  std::uint32_t g;
  Elem u;
  std::uint32_t count;
};

struct OrthogonalityResult {
  bool orthogonal = false;
  std::optional<OrthogonalityWitness> witness;  // first failure in row-major order
};

/// Every non-identity row hits each u exactly v/q times. Throws
/// DivisibilityViolated when q does not divide v.
OrthogonalityResult is_orthogonal(const Cocycle& psi);

/// (psi x psi')((g,g'),(h,h')) = psi(g,h) + psi'(g',h') over G x G' with
/// G-major indexing, so the matrix is the Kronecker sum M_psi (+) M_psi'.
Cocycle tensor(const Cocycle& left, const Cocycle& right);

/// The v x v table as a matrix over F_q, rows and columns in G's indexing.
FieldMatrix matrix_of(const Cocycle& psi);

bool is_symmetric(const Cocycle& psi);

}  // namespace ghfp
