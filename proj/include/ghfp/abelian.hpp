#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "ghfp/group.hpp"

namespace ghfp {

namespace detail {

inline std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> f;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    std::uint32_t e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    f.emplace_back(d, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

template <FiniteGroup G>
std::uint32_t power(const G& g, std::uint32_t x, std::uint64_t e) {
  std::uint32_t result = 0;
  std::uint32_t base = x;
  while (e) {
    if (e & 1) result = g.mul(result, base);
    base = g.mul(base, base);
    e >>= 1;
  }
  return result;
}

}  // namespace detail

inline constexpr std::uint64_t kExhaustiveCommutativity = 10000;

template <FiniteGroup G>
std::uint64_t element_order(const G& g, std::uint32_t x,
                            const std::vector<std::pair<std::uint64_t, std::uint32_t>>& factors) {
  std::uint64_t ord = g.order();
  for (const auto& [p, e] : factors) {
    for (std::uint32_t i = 0; i < e; ++i) {
      if (detail::power(g, x, ord / p) != 0) break;
      ord /= p;
    }
  }
  return ord;
}

/// Exhaustive for order <= 10^4; above that, 10^6 seeded random pairs.
template <FiniteGroup G>
bool is_abelian(const G& g, std::uint64_t seed = 0) {
  const std::uint64_t n = g.order();
  if (n <= kExhaustiveCommutativity) {
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = a + 1; b < n; ++b) {
        if (g.mul(a, b) != g.mul(b, a)) return false;
      }
    }
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
  for (int i = 0; i < 1000000; ++i) {
    const auto a = static_cast<std::uint32_t>(pick(rng));
    const auto b = static_cast<std::uint32_t>(pick(rng));
    if (g.mul(a, b) != g.mul(b, a)) return false;
  }
  return true;
}

/// Elementary divisors (prime powers, descending) from counting elements of
/// each p-power order. Caller guarantees the group is abelian.
template <FiniteGroup G>
std::vector<std::uint64_t> elementary_divisors(const G& g) {
  const std::uint64_t n = g.order();
  const auto factors = detail::factorize(n);
  std::vector<std::uint64_t> orders(n);
  for (std::uint32_t x = 0; x < n; ++x) orders[x] = element_order(g, x, factors);

  std::vector<std::uint64_t> result;
  for (const auto& [p, e] : factors) {
    // at_most[k] = #{x : p-part of ord(x) divides p^k}
    std::vector<std::uint64_t> at_most(e + 2, 0);
    for (auto o : orders) {
      std::uint32_t k = 0;
      while (o % p == 0) {
        o /= p;
        ++k;
      }
      for (std::uint32_t j = k; j <= e + 1; ++j) ++at_most[j];
    }
    // Number of cyclic factors of order >= p^k is log_p(at_most[k]/at_most[k-1]).
    std::vector<std::uint32_t> at_least(e + 2, 0);
    for (std::uint32_t k = 1; k <= e + 1; ++k) {
      std::uint64_t ratio = at_most[k] / at_most[k - 1];
      std::uint32_t c = 0;
      while (ratio > 1) {
        ratio /= p;
        ++c;
      }
      at_least[k] = c;
    }
    for (std::uint32_t k = e; k >= 1; --k) {
      const std::uint32_t exact = at_least[k] - (k + 1 <= e ? at_least[k + 1] : 0);
      std::uint64_t pk = 1;
      for (std::uint32_t i = 0; i < k; ++i) pk *= p;
      for (std::uint32_t i = 0; i < exact; ++i) result.push_back(pk);
    }
  }
  std::sort(result.rbegin(), result.rend());
  return result;
}

/// Elementary divisors when abelian, nullopt otherwise.
template <FiniteGroup G>
std::optional<std::vector<std::uint64_t>> abelian_invariants(const G& g, std::uint64_t seed = 0) {
  if (!is_abelian(g, seed)) return std::nullopt;
  return elementary_divisors(g);
}

template <FiniteGroup G>
std::uint64_t exponent(const G& g) {
  const auto factors = detail::factorize(g.order());
  std::uint64_t e = 1;
  for (std::uint32_t x = 0; x < g.order(); ++x) e = std::lcm(e, element_order(g, x, factors));
  return e;
}

template <FiniteGroup G>
std::uint64_t center_order(const G& g) {
  std::uint64_t count = 0;
  for (std::uint32_t z = 0; z < g.order(); ++z) {
    bool central = true;
    for (std::uint32_t x = 0; x < g.order() && central; ++x) central = g.mul(z, x) == g.mul(x, z);
    if (central) ++count;
  }
  return count;
}

/// Order of the subgroup generated by all commutators (closure by BFS).
template <FiniteGroup G>
std::uint64_t derived_subgroup_order(const G& g) {
  const std::uint32_t n = static_cast<std::uint32_t>(g.order());
  std::vector<char> in(n, 0);
  std::vector<std::uint32_t> gens;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const std::uint32_t c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (!in[c]) {
        in[c] = 1;
        gens.push_back(c);
      }
    }
  }
  std::vector<std::uint32_t> members(gens);
  in.assign(n, 0);
  for (auto x : members) in[x] = 1;
  if (!in[0]) {
    in[0] = 1;
    members.push_back(0);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto s : gens) {
      const std::uint32_t y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  return members.size();
}

inline constexpr std::uint64_t kMaxStructureScan = 4096;

/// Full descriptor. Non-abelian groups get center and (when order <= 4096)
/// derived subgroup orders.
template <FiniteGroup G>
GroupStructure describe(const G& g, std::uint64_t seed = 0) {
  GroupStructure s;
  s.order = g.order();
  s.exponent = exponent(g);
  s.abelian = is_abelian(g, seed);
  if (s.abelian) {
    s.invariants = elementary_divisors(g);
    s.center_order = s.order;
    s.derived_order = 1;
  } else if (s.order <= kMaxStructureScan) {
    s.center_order = center_order(g);
    s.derived_order = derived_subgroup_order(g);
  }
  return s;
}

/// Cayley-table view used for ad-hoc tables (quotients, permutation groups).
struct TableGroupView {
  std::uint32_t n;
  const std::vector<std::uint32_t>* table;
  std::vector<std::uint32_t> inverse;

  TableGroupView(std::uint32_t order, const std::vector<std::uint32_t>& t) : n(order), table(&t), inverse(order) {
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        if ((*table)[static_cast<std::size_t>(a) * n + b] == 0) {
          inverse[a] = b;
          break;
        }
      }
    }
  }
  std::uint64_t order() const { return n; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return (*table)[static_cast<std::size_t>(a) * n + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inverse[a]; }
};

}  // namespace ghfp
