#include "ghfp/planar.hpp"

#include <chrono>
#include <numeric>

#include "ghfp/code.hpp"
#include "ghfp/error.hpp"
#include "ghfp/gh_matrix.hpp"

namespace ghfp {

std::uint64_t PlanarParams::exponent() const {
  std::uint64_t p = 1;
  for (std::uint32_t i = 0; i < b; ++i) p *= 3;
  return (p + 1) / 2;
}

bool is_admissible(const PlanarParams& params) {
  return params.a >= 4 && params.b % 2 == 1 && params.b >= 3 && params.b + 1 <= params.a &&
         std::gcd(params.a, params.b) == 1;
}

std::vector<std::uint32_t> admissible_pairs(std::uint32_t a) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t b = 3; b + 1 <= a; b += 2)
    if (std::gcd(a, b) == 1) out.push_back(b);
  return out;
}

std::vector<Elem> planar_map(const PlanarParams& params, const Field& field) {
  if (!is_admissible(params)) {
    throw Error(ErrorKind::InadmissibleParams,
                "(a,b)=(" + std::to_string(params.a) + "," + std::to_string(params.b) + ")");
  }
  if (field.p() != 3 || field.m() != params.a) {
    throw Error(ErrorKind::InadmissibleParams, "field must be GF(3^" + std::to_string(params.a) + ")");
  }
  const auto e = static_cast<std::int64_t>(params.exponent());
  std::vector<Elem> phi(field.q());
  for (std::uint32_t g = 1; g < field.q(); ++g) phi[g] = field.pow(static_cast<Elem>(g), e);
  return phi;
}

Cocycle planar_coboundary(const PlanarParams& params, const FieldPtr& field) {
  const auto phi = planar_map(params, *field);
  return coboundary(additive_group_of(*field, OrderMode::Encoding), field, phi).cocycle;
}

Cocycle planar_coboundary(const PlanarParams& params) {
  return planar_coboundary(params, Field::make_default(3, params.a));
}

bool is_planar(std::span<const Elem> phi, const Field& field) {
  const std::uint32_t q = field.q();
  if (phi.size() != q) throw Error(ErrorKind::DomainMismatch, "phi must have q values");
  std::vector<std::uint32_t> seen(q, 0);
  for (std::uint32_t h = 1; h < q; ++h) {
    for (std::uint32_t g = 0; g < q; ++g) {
      const Elem d = field.sub(phi[field.add(static_cast<Elem>(g), static_cast<Elem>(h))], phi[g]);
      if (seen[d] == h) return false;
      seen[d] = h;
    }
  }
  return true;
}

std::uint64_t conjectured_rank(std::uint32_t b) { return 3ULL * (1ULL << (b - 1)) - 1; }

std::string to_string(CellStatus s) {
  switch (s) {
    case CellStatus::Computed:
      return "computed";
    case CellStatus::Inadmissible:
      return "inadmissible";
    case CellStatus::SkippedBudget:
      return "skipped(budget)";
  }
  return "?";
}

std::vector<Table1Cell> table1(const Table1Options& opt) {
  std::vector<Table1Cell> cells;
  for (std::uint32_t a = std::max(4u, opt.a_min); a <= opt.a_max; ++a) {
    for (std::uint32_t b = 3; b + 1 <= a; b += 2) {
      Table1Cell c;
      c.a = a;
      c.b = b;
      c.v = 1;
      for (std::uint32_t i = 0; i < a; ++i) c.v *= 3;
      c.conjecture = conjectured_rank(b);
      if (!is_admissible({a, b})) {
        c.status = CellStatus::Inadmissible;
      } else if (a > opt.budget_a) {
        c.status = CellStatus::SkippedBudget;
      } else {
        const auto t0 = std::chrono::steady_clock::now();
        const Cocycle psi = planar_coboundary({a, b});
        const auto code = GHCode::from_matrix(GHMatrix::trusted(matrix_of(psi)));
        c.rank = code.rank();
        c.kernel = code.kernel(opt.seed, opt.threads).info.dimension;
        c.match = c.rank == c.conjecture;
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      }
      cells.push_back(c);
    }
  }
  return cells;
}

}  // namespace ghfp
