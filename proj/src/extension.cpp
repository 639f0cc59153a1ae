#include "ghfp/extension.hpp"

#include <random>

namespace ghfp {

std::vector<std::uint32_t> ExtensionGroup::transversal() const {
  std::vector<std::uint32_t> t(psi_.v());
  for (std::uint32_t g = 0; g < psi_.v(); ++g) t[g] = index({0, g});
  return t;
}

std::vector<std::uint32_t> ExtensionGroup::central_subgroup() const {
  std::vector<std::uint32_t> z(psi_.q());
  for (std::uint32_t u = 0; u < psi_.q(); ++u) z[u] = u;
  return z;
}

bool ExtensionGroup::is_central(std::uint64_t seed) const {
  const auto n = static_cast<std::uint32_t>(order());
  const auto z = central_subgroup();
  if (order() <= 10000) {
    for (auto a : z)
      for (std::uint32_t b = 0; b < n; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, n - 1), pick_z(0, psi_.q() - 1);
  for (int i = 0; i < 100000; ++i) {
    const auto a = pick_z(rng), b = pick(rng);
    if (mul(a, b) != mul(b, a)) return false;
  }
  return true;
}

ExtensionGroup extension_group(const Cocycle& psi) { return ExtensionGroup(psi); }

RdsResult transversal_rds(const Cocycle& psi) {
  const ExtensionGroup e(psi);
  const auto t = e.transversal();
  const auto z = e.central_subgroup();
  if (psi.v() % psi.q() != 0) {
    throw Error(ErrorKind::DivisibilityViolated, "q does not divide v");
  }
  return is_relative_difference_set(e, t, z, {psi.v(), psi.q(), psi.v(), psi.v() / psi.q()});
}

RdsResult fh_rds(const PropelinearCode& p) {
  if (p.size() > 0xffffffffULL) throw Error(ErrorKind::SizeGateExceeded, "code too large");
  const StarGroupView view{&p};
  std::vector<std::uint32_t> r(p.v()), z(p.q());
  for (std::uint32_t s = 0; s < p.v(); ++s) r[s] = static_cast<std::uint32_t>(p.make_id(s, 0));
  for (std::uint32_t c = 0; c < p.q(); ++c) z[c] = c;
  return is_relative_difference_set(view, r, z, {p.v(), p.q(), p.v(), p.v() / p.q()});
}

std::uint64_t fh_intersection(const PropelinearCode& p, std::uint64_t x) {
  std::uint64_t n = 0;
  for (std::uint32_t s = 0; s < p.v(); ++s) n += p.const_of_id(p.star(x, p.make_id(s, 0))) == 0;
  return n;
}

IntersectionProfile fh_intersection_profile(const PropelinearCode& p) {
  IntersectionProfile prof;
  const std::uint64_t v = p.v(), lambda = v / p.q();
  for (std::uint64_t x = 0; x < p.size(); ++x) {
    const std::uint64_t n = fh_intersection(p, x);
    ++prof.histogram[n];
    const std::uint64_t expect = x == 0 ? v : (p.row_of_id(x) == 0 ? 0 : lambda);
    if (n != expect && prof.cases_hold) {
      prof.cases_hold = false;
      prof.witness = "x=" + std::to_string(x) + " gives " + std::to_string(n);
    }
  }
  return prof;
}

Cocycle cocycle_from_code(const PropelinearCode& p, std::uint64_t seed) {
  const std::uint32_t v = p.v();
  if (v > Group::kMaxTabulated) throw Error(ErrorKind::SizeGateExceeded, "quotient group too large to tabulate");
  const Field& f = *p.field();
  const auto& h = p.code().matrix();
  std::vector<std::uint32_t> table(static_cast<std::size_t>(v) * v);
  FieldMatrix psi(p.field(), v, v);
  Word s(v);
  for (std::uint32_t g = 0; g < v; ++g) {
    const auto sg = p.make_id(g, 0);  // s(g): the F_H member of coset g
    for (std::uint32_t k = 0; k < v; ++k) {
      const Word z = p.star_vec(sg, h.row(k));
      const Elem lead = z[0];
      for (std::uint32_t j = 0; j < v; ++j) s[j] = f.sub(z[j], lead);
      const auto row = p.code().row_of(s);
      if (!row) {
        throw Error(ErrorKind::SectionUndefined,
                    "coset of s(" + std::to_string(g) + ")*s(" + std::to_string(k) + ") has no F_H member");
      }
      table[static_cast<std::size_t>(g) * v + k] = *row;
      psi(g, k) = lead;
    }
  }
  Group quotient = Group::from_table(v, std::move(table), {}, seed);
  return Cocycle::checked(std::move(quotient), std::move(psi), seed);
}

std::vector<std::uint64_t> zero_set(const PropelinearCode& p, std::uint32_t j) {
  std::vector<std::uint64_t> d;
  for (std::uint64_t x = 0; x < p.size(); ++x) {
    const Elem xj = p.field()->add(p.const_of_id(x), p.code().matrix()(p.row_of_id(x), j));
    if (xj == 0) d.push_back(x);
  }
  return d;
}

ZeroSetReport coset_zero_sets(const PropelinearCode& p) {
  ZeroSetReport rep;
  const std::uint32_t v = p.v(), q = p.q();
  const auto& h = p.code().matrix();
  const auto d1 = zero_set(p, 0);
  if (d1.size() != v) rep.d1_is_fh = false;
  for (auto x : d1)
    if (p.const_of_id(x) != 0) rep.d1_is_fh = false;
  if (!rep.d1_is_fh) rep.witness = "D_1 differs from F_H";
  std::vector<std::uint32_t> count(q);
  for (std::uint32_t j = 0; j < v; ++j) {
    if (j > 0 && zero_set(p, j).size() != v) {
      rep.sizes_ok = false;
      if (rep.witness.empty()) rep.witness = "|D_" + std::to_string(j + 1) + "| != v";
    }
    if (j == 0) continue;
    std::fill(count.begin(), count.end(), 0);
    for (std::uint32_t r = 0; r < v; ++r) ++count[h(r, j)];
    for (std::uint32_t a = 0; a < q; ++a) {
      if (count[a] != v / q) {
        rep.column_counts_ok = false;
        if (rep.witness.empty()) rep.witness = "column " + std::to_string(j + 1) + " has a skewed count";
        break;
      }
    }
  }
  return rep;
}

}  // namespace ghfp
