#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ghfp/abelian.hpp"
#include "ghfp/cocycle.hpp"
#include "ghfp/error.hpp"
#include "ghfp/propelinear.hpp"

namespace ghfp {

/// E_psi on U x G with (u,g)(v,h) = (u + v + psi(g,h), gh). Element (u,g) has
/// index g * q + u, so (0,1) is index 0 and U x {1} is 0..q-1.
class ExtensionGroup {
 public:
  explicit ExtensionGroup(Cocycle psi) : psi_(std::move(psi)) {}

  const Cocycle& cocycle() const { return psi_; }
  std::uint64_t order() const { return static_cast<std::uint64_t>(psi_.v()) * psi_.q(); }

  std::uint32_t index(ExtPoint e) const { return e.g * psi_.q() + e.k; }
  ExtPoint point(std::uint32_t i) const { return {static_cast<Elem>(i % psi_.q()), i / psi_.q()}; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const Field& f = *psi_.field();
    const auto x = point(a), y = point(b);
    const Elem u = f.add(f.add(x.k, y.k), psi_(x.g, y.g));
    return index({u, psi_.group().mul(x.g, y.g)});
  }
  std::uint32_t inv(std::uint32_t a) const {
    const Field& f = *psi_.field();
    const auto x = point(a);
    const std::uint32_t gi = psi_.group().inv(x.g);
    return index({f.neg(f.add(x.k, psi_(x.g, gi))), gi});
  }

  /// T(psi) = {(0, g)}.
  std::vector<std::uint32_t> transversal() const;
  /// U x {1}.
  std::vector<std::uint32_t> central_subgroup() const;
  /// U x {1} commutes with every element (exhaustive up to 10^4 elements).
  bool is_central(std::uint64_t seed = 0) const;

 private:
  Cocycle psi_;
};

ExtensionGroup extension_group(const Cocycle& psi);

struct RDSParams {
  std::uint64_t v = 0, m = 0, k = 0, lambda = 0;
};

struct RdsResult {
  bool ok = false;
  std::uint64_t forbidden_hits = 0;  // differences landing in Z \ {1}
  std::uint64_t min_hits = 0, max_hits = 0;  // over E \ Z
  bool counting_identity = false;  // k(k-1) = lambda (|E| - m)
  std::string witness;
};

/// {r1 r2^{-1} : r1 != r2} must miss Z \ {1} and cover E \ Z exactly lambda
/// times. Throws SizeMismatch when |R| != k and NotNormal when Z is not a
/// normal subgroup.
template <FiniteGroup G>
RdsResult is_relative_difference_set(const G& e, std::span<const std::uint32_t> r,
                                     std::span<const std::uint32_t> z, const RDSParams& params) {
  const std::uint64_t n = e.order();
  if (r.size() != params.k) throw Error(ErrorKind::SizeMismatch, "|R| differs from k");
  if (z.size() != params.m) throw Error(ErrorKind::SizeMismatch, "|Z| differs from m");
  std::vector<char> in_z(n, 0);
  for (auto x : z) in_z[x] = 1;
  if (!in_z[0]) throw Error(ErrorKind::NotNormal, "Z does not contain the identity");
  for (auto a : z) {
    for (auto b : z) {
      if (!in_z[e.mul(a, e.inv(b))]) throw Error(ErrorKind::NotNormal, "Z is not a subgroup");
    }
  }
  for (std::uint32_t g = 0; g < n; ++g) {
    const std::uint32_t gi = e.inv(g);
    for (auto a : z) {
      if (!in_z[e.mul(e.mul(g, a), gi)]) throw Error(ErrorKind::NotNormal, "Z is not normal");
    }
  }
  std::vector<std::uint32_t> hits(n, 0);
  for (auto a : r) {
    for (auto b : r) {
      if (a != b) ++hits[e.mul(a, e.inv(b))];
    }
  }
  RdsResult res;
  res.min_hits = ~0ULL;
  for (std::uint32_t g = 0; g < n; ++g) {
    if (in_z[g]) {
      if (g != 0) res.forbidden_hits += hits[g];
      continue;
    }
    res.min_hits = std::min<std::uint64_t>(res.min_hits, hits[g]);
    res.max_hits = std::max<std::uint64_t>(res.max_hits, hits[g]);
    if (hits[g] != params.lambda && res.witness.empty()) {
      res.witness = "element " + std::to_string(g) + " hit " + std::to_string(hits[g]) + " times";
    }
  }
  if (res.min_hits == ~0ULL) res.min_hits = 0;
  if (res.forbidden_hits != 0 && res.witness.empty()) {
    res.witness = std::to_string(res.forbidden_hits) + " differences in the forbidden subgroup";
  }
  res.counting_identity = params.k * (params.k - (params.k > 0)) == params.lambda * (n - params.m);
  res.ok = res.forbidden_hits == 0 && res.min_hits == params.lambda && res.max_hits == params.lambda;
  return res;
}

/// T(psi) inside E_psi relative to U x {1} with (v, q, v, v/q).
RdsResult transversal_rds(const Cocycle& psi);

/// F_H inside (C, *) relative to C_1 with (v, q, v, v/q).
RdsResult fh_rds(const PropelinearCode& p);

struct IntersectionProfile {
  std::map<std::uint64_t, std::uint64_t> histogram;  // |F_H cap x*F_H| -> number of x
  bool cases_hold = true;  // v at 0, 0 on C_1 \ {0}, v/q elsewhere
  std::string witness;
};

/// |F_H cap x*F_H| for every codeword x.
IntersectionProfile fh_intersection_profile(const PropelinearCode& p);
std::uint64_t fh_intersection(const PropelinearCode& p, std::uint64_t x);

/// psi_{F_H}(g,h) = k when s(g)*s(h) lies in k1*F_H, over G = C/C_1 with the
/// section s choosing the F_H representative. Throws SectionUndefined or
/// SizeGateExceeded (v > 4096).
Cocycle cocycle_from_code(const PropelinearCode& p, std::uint64_t seed = 0);

struct ZeroSetReport {
  bool d1_is_fh = true;
  bool sizes_ok = true;           // |D_j| = v
  bool column_counts_ok = true;   // each alpha appears v/q times in column j > 1
  std::string witness;
};

/// D_j = {x in C : x_j = 0}; j is 0-based.
std::vector<std::uint64_t> zero_set(const PropelinearCode& p, std::uint32_t j);
ZeroSetReport coset_zero_sets(const PropelinearCode& p);

}  // namespace ghfp
