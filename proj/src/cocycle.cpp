#include "ghfp/cocycle.hpp"

#include <random>
#include <string>

#include "ghfp/error.hpp"

namespace ghfp {

namespace {

void require_normalized(const FieldMatrix& t) {
  for (std::uint32_t i = 0; i < t.rows(); ++i) {
    if (t(0, i) != 0 || t(i, 0) != 0) {
      throw Error(ErrorKind::NotNormalized, "row 0 and column 0 must be zero (entry " + std::to_string(i) + ")");
    }
  }
}

void require_shape(const Group& group, const FieldMatrix& t) {
  if (!t.square() || t.rows() != group.order()) {
    throw Error(ErrorKind::SizeMismatch, "cocycle table must be |G| x |G|");
  }
}

}  // namespace

std::optional<Triple> find_cocycle_violation(const Group& group, const FieldMatrix& t, std::uint64_t seed) {
  const Field& f = *t.field();
  const std::uint32_t v = group.order();
  auto holds = [&](std::uint32_t g, std::uint32_t h, std::uint32_t k) {
    const Elem lhs = f.add(t(g, h), t(group.mul(g, h), k));
    const Elem rhs = f.add(t(g, group.mul(h, k)), t(h, k));
    return lhs == rhs;
  };
  if (v <= 256) {
    for (std::uint32_t g = 0; g < v; ++g)
      for (std::uint32_t h = 0; h < v; ++h)
        for (std::uint32_t k = 0; k < v; ++k)
          if (!holds(g, h, k)) return Triple{g, h, k};
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, v - 1);
  for (int i = 0; i < 1000000; ++i) {
    const auto g = pick(rng), h = pick(rng), k = pick(rng);
    if (!holds(g, h, k)) return Triple{g, h, k};
  }
  return std::nullopt;
}

Cocycle Cocycle::checked(Group group, FieldMatrix table, std::uint64_t seed) {
  require_shape(group, table);
  require_normalized(table);
  if (auto bad = find_cocycle_violation(group, table, seed)) {
    throw Error(ErrorKind::CocycleIdentityViolated, "(g,h,k)=(" + std::to_string(bad->g) + "," +
                                                        std::to_string(bad->h) + "," + std::to_string(bad->k) + ")");
  }
  return Cocycle(std::move(group), std::move(table));
}

Cocycle Cocycle::trusted(Group group, FieldMatrix table) {
  require_shape(group, table);
  require_normalized(table);
  return Cocycle(std::move(group), std::move(table));
}

Cocycle Cocycle::trivial(Group group, FieldPtr field) {
  const std::uint32_t v = group.order();
  return Cocycle(std::move(group), FieldMatrix(std::move(field), v, v));
}

Cocycle check_cocycle(const FieldMatrix& table, const Group& group, std::uint64_t seed) {
  return Cocycle::checked(group, table, seed);
}

Coboundary coboundary(const Group& group, const FieldPtr& field, std::span<const Elem> phi) {
  const std::uint32_t v = group.order();
  if (phi.size() != v) throw Error(ErrorKind::DomainMismatch, "phi must have one value per group element");
  const Field& f = *field;
  const Elem offset = phi[0];
  std::vector<Elem> norm(phi.begin(), phi.end());
  for (auto& x : norm) x = f.sub(x, offset);
  FieldMatrix t(field, v, v);
  for (std::uint32_t g = 0; g < v; ++g) {
    for (std::uint32_t h = 0; h < v; ++h) {
      t(g, h) = f.sub(f.sub(norm[group.mul(g, h)], norm[g]), norm[h]);
    }
  }
  return {Cocycle::trusted(group, std::move(t)), offset};
}

OrthogonalityResult is_orthogonal(const Cocycle& psi) {
  const std::uint32_t v = psi.v();
  const std::uint32_t q = psi.q();
  if (v % q != 0) {
    throw Error(ErrorKind::DivisibilityViolated, "q=" + std::to_string(q) + " does not divide v=" + std::to_string(v));
  }
  const std::uint32_t lambda = v / q;
  std::vector<std::uint32_t> count(q);
  for (std::uint32_t g = 1; g < v; ++g) {
    std::fill(count.begin(), count.end(), 0);
    for (std::uint32_t h = 0; h < v; ++h) ++count[psi(g, h)];
    for (std::uint32_t u = 0; u < q; ++u) {
      if (count[u] != lambda) {
        return {false, OrthogonalityWitness{g, static_cast<Elem>(u), count[u]}};
      }
    }
  }
  return {true, std::nullopt};
}

Cocycle tensor(const Cocycle& left, const Cocycle& right) {
  require_same_field(left.field(), right.field());
  const Field& f = *left.field();
  Group g = Group::direct_product(left.group(), right.group());
  const std::uint32_t n = right.v();
  const std::uint32_t v = left.v() * n;
  FieldMatrix t(left.field(), v, v);
  for (std::uint32_t a = 0; a < v; ++a) {
    for (std::uint32_t b = 0; b < v; ++b) {
      t(a, b) = f.add(left(a / n, b / n), right(a % n, b % n));
    }
  }
  return Cocycle::trusted(std::move(g), std::move(t));
}

FieldMatrix matrix_of(const Cocycle& psi) { return psi.table(); }

bool is_symmetric(const Cocycle& psi) {
  for (std::uint32_t g = 0; g < psi.v(); ++g)
    for (std::uint32_t h = g + 1; h < psi.v(); ++h)
      if (psi(g, h) != psi(h, g)) return false;
  return true;
}

}  // namespace ghfp
