#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghfp/cocycle.hpp"
#include "ghfp/field.hpp"

namespace ghfp {

struct PlanarParams {
  std::uint32_t a = 4;
  std::uint32_t b = 3;
  std::uint64_t exponent() const;  // (3^b + 1) / 2
};

bool is_admissible(const PlanarParams& params);

/// b odd, gcd(a, b) = 1, 3 <= b <= a - 1.
std::vector<std::uint32_t> admissible_pairs(std::uint32_t a);

/// phi(g) = g^e over GF(3^a), indexed by encoding. Throws InadmissibleParams
/// (also when the field is not GF(3^a)).
std::vector<Elem> planar_map(const PlanarParams& params, const Field& field);

/// d(phi) over (GF(3^a), +) in encoding order.
Cocycle planar_coboundary(const PlanarParams& params, const FieldPtr& field);
Cocycle planar_coboundary(const PlanarParams& params);  // pinned polynomial

/// For every h != 0, g -> phi(g + h) - phi(g) is a bijection.
bool is_planar(std::span<const Elem> phi, const Field& field);

/// 3 * 2^{b-1} - 1.
std::uint64_t conjectured_rank(std::uint32_t b);

enum class CellStatus { Computed, Inadmissible, SkippedBudget };

struct Table1Cell {
  std::uint32_t a = 0, b = 0;
  std::uint64_t v = 0;
  CellStatus status = CellStatus::Computed;
  std::uint32_t rank = 0, kernel = 0;
  std::uint64_t conjecture = 0;
  bool match = false;
  double seconds = 0;
};

struct Table1Options {
  std::uint32_t a_min = 4, a_max = 7;
  std::uint32_t budget_a = 6;  // largest a attempted
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

/// One row per odd b in [3, a-1] for each a in range.
std::vector<Table1Cell> table1(const Table1Options& opt);

std::string to_string(CellStatus s);

}  // namespace ghfp
