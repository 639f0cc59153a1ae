#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ghfp/code.hpp"
#include "ghfp/cocycle.hpp"
#include "ghfp/group.hpp"
#include "ghfp/perm.hpp"

namespace ghfp {

/// Element (k, g) of the extension E_psi, indexed g * q + k.
struct ExtPoint {
  Elem k;
  std::uint32_t g;
  bool operator==(const ExtPoint&) const = default;
};

/// The full propelinear structure on C_H, H = M_psi, for an orthogonal psi.
///
/// Codeword id r * q + c is x = c 1 + (row r of H). With this labelling
///   x * y = (c_x + c_y + psi(r_y, r_x)) 1 + row(r_y r_x)
/// and pi_x depends only on the row r: pi_r(l) = j where g_l = r g_j.
/// Permutations act on vectors by pi(v)_i = v_{pi^{-1}(i)}.
class PropelinearCode {
 public:
  static constexpr std::uint32_t kCachedPiLimit = 2187;

  /// Throws NotOrthogonal.
  static PropelinearCode from_cocycle(const Cocycle& psi);

  const Cocycle& cocycle() const { return psi_; }
  const GHCode& code() const { return code_; }
  const Group& group() const { return psi_.group(); }
  const FieldPtr& field() const { return psi_.field(); }
  std::uint32_t v() const { return psi_.v(); }
  std::uint32_t q() const { return psi_.q(); }
  std::uint64_t size() const { return static_cast<std::uint64_t>(q()) * v(); }

  static std::uint32_t row_of_id(std::uint64_t id, std::uint32_t q) { return static_cast<std::uint32_t>(id / q); }
  std::uint32_t row_of_id(std::uint64_t id) const { return row_of_id(id, q()); }
  Elem const_of_id(std::uint64_t id) const { return static_cast<Elem>(id % q()); }
  std::uint64_t make_id(std::uint32_t r, Elem c) const { return static_cast<std::uint64_t>(r) * q() + c; }

  Word word(std::uint64_t id) const { return code_.word(id); }
  std::optional<std::uint64_t> find(std::span<const Elem> y) const { return code_.find(y); }

  /// Closed-form group law on ids.
  std::uint64_t star(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t star_inverse(std::uint64_t x) const;

  /// x + pi_x(y) for any vector y. Throws NotACodeword when x is not in C.
  Word star_vec(std::span<const Elem> x, std::span<const Elem> y) const;
  Word star_vec(std::uint64_t x, std::span<const Elem> y) const;

  /// Permutation attached to the coset of row r (overrides included).
  Perm pi_row(std::uint32_t r) const;
  Perm pi(std::uint64_t id) const { return pi_row(row_of_id(id)); }

  /// The listing keyed by the extension element g: the coset of row g^{-1}.
  Perm pi_listing(std::uint32_t g) const { return pi_row(group().inv(g)); }

  /// Replace pi on one coset (used to exercise the verifiers).
  void override_pi(std::uint32_t r, Perm p);
  bool has_overrides() const { return !overrides_.empty(); }

  /// Phi: E_psi -> C and its inverse.
  std::uint64_t phi(ExtPoint e) const;
  ExtPoint phi_inverse(std::uint64_t id) const;
  /// [Phi(k,g)]_j computed literally from the defining formula.
  Word phi_word(ExtPoint e) const;

 private:
  PropelinearCode(Cocycle psi, GHCode code) : psi_(std::move(psi)), code_(std::move(code)) {}
  Perm compute_pi(std::uint32_t r) const;

  Cocycle psi_;
  GHCode code_;
  std::vector<Perm> cache_;
  std::map<std::uint32_t, Perm> overrides_;
};

/// Group views over ids, cosets and Pi for the abelian.hpp algorithms.
struct StarGroupView {
  const PropelinearCode* p;
  std::uint64_t order() const { return p->size(); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>(p->star(a, b)); }
  std::uint32_t inv(std::uint32_t a) const { return static_cast<std::uint32_t>(p->star_inverse(a)); }
};

/// C / C_1 on row indices: r * s = row(s r).
struct QuotientGroupView {
  const Group* g;
  std::uint64_t order() const { return g->order(); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return g->mul(b, a); }
  std::uint32_t inv(std::uint32_t a) const { return g->inv(a); }
};

/// Pi as an abstract group: element i is the i-th distinct permutation and
/// multiplication is composition.
class PiGroup {
 public:
  static constexpr std::size_t kMaxTabulated = 729;

  explicit PiGroup(const PropelinearCode& p);
  std::uint64_t order() const { return perms_.size(); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[static_cast<std::size_t>(a) * perms_.size() + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
  const std::vector<Perm>& perms() const { return perms_; }
  /// False when a composite fell outside the set (Pi is not closed).
  bool closed() const { return closed_; }

 private:
  std::vector<Perm> perms_;
  std::vector<std::uint32_t> table_, inverse_;
  bool closed_ = true;
};

struct CheckItem {
  std::string name;
  bool pass = true;
  std::string witness;
  bool sampled = false;
};

struct PropelinearReport {
  std::vector<CheckItem> items;
  GroupStructure code_group;
  GroupStructure pi_group;
  GroupStructure quotient_group;
  bool all_pass() const;
  const CheckItem* find(const std::string& name) const;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::uint64_t exhaustive_limit = 10000;  // on |C|
  std::uint64_t samples = 100000;
  bool structures = true;
};

/// Group axioms, axioms (i) and (ii), fullness, constancy of pi on cosets,
/// the coordinate-injectivity lemma and Pi ~ C/C_1. Every check runs on the
/// vector rule x + pi_x(y), so overridden permutations are caught.
PropelinearReport verify_full_propelinear(const PropelinearCode& p, const VerifyOptions& opt = {});

/// rho_x(y) = x * y: rho_x rho_y = rho_{x*y}, transitive, trivial stabilizers.
bool regular_subgroup_check(const PropelinearCode& p, const VerifyOptions& opt = {});

/// Structure on C_{H1 (+) H2}: built from psi1 x psi2.
PropelinearCode kronecker_propelinear(const PropelinearCode& a, const PropelinearCode& b);

/// pi_{a (+) b} acting blockwise: (l1, l2) -> (pi_a(l1), pi_b(l2)).
Perm blockwise_pi(const PropelinearCode& a, const PropelinearCode& b, std::uint32_t ra, std::uint32_t rb);

}  // namespace ghfp
