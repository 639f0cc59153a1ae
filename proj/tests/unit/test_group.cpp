#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ghfp/abelian.hpp"
#include "ghfp/error.hpp"
#include "ghfp/group.hpp"
#include "ghfp/perm.hpp"
#include "support.hpp"

using namespace ghfp;

namespace {

Group s3_group() {
  // permutations of {0,1,2} in lexicographic order, composition (a*b)(i) = a(b(i))
  std::vector<std::vector<std::uint32_t>> el;
  std::vector<std::uint32_t> x = {0, 1, 2};
  do el.push_back(x);
  while (std::next_permutation(x.begin(), x.end()));
  std::vector<std::uint32_t> t;
  for (auto& a : el)
    for (auto& b : el) {
      std::vector<std::uint32_t> c = {a[b[0]], a[b[1]], a[b[2]]};
      t.push_back(static_cast<std::uint32_t>(std::find(el.begin(), el.end(), c) - el.begin()));
    }
  return Group::from_table(6, t);
}

Group relabel(const Group& g, std::mt19937_64& rng) {
  const std::uint32_t n = g.order();
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  std::vector<std::uint32_t> t(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) t[perm[a] * n + perm[b]] = perm[g.mul(a, b)];
  return Group::from_table(n, t);
}

}  // namespace

TEST_CASE("elementary abelian groups") {
  auto g = Group::elementary_abelian(3, 2);
  CHECK(g.order() == 9);
  for (std::uint32_t a = 1; a < 9; ++a) {
    CHECK(g.mul(a, g.mul(a, a)) == 0);
    CHECK(g.mul(a, a) != 0);
  }
  // lexicographic: (0,1) + (1,0) = (1,1)
  CHECK(g.mul(1, 3) == 4);
  CHECK(g.mul(2, 2) == 1);
  auto g81 = Group::elementary_abelian(3, 4);
  CHECK(g81.order() == 81);
  CHECK(g81.mul(1, 2) == 0);
  CHECK(g81.mul(2, 1) == 0);
  CHECK(g81.mul(3, 1) == 4);  // 0010 + 0001 = 0011
  CHECK_THROWS_AS(Group::elementary_abelian(4, 2), Error);
}

TEST_CASE("Cayley table validation") {
  CHECK_THROWS_AS(Group::from_table(2, {0, 1, 1, 1}), Error);
  CHECK_THROWS_AS(Group::from_table(2, {1, 0, 0, 1}), Error);
  // Latin square with identity 0 but not associative (order 5 loop)
  std::vector<std::uint32_t> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS_AS(Group::from_table(5, loop), Error);
  auto g = Group::elementary_abelian(2, 2);
  auto t = Group::from_table(4, g.cayley_table(), {"1", "a", "b", "ab"});
  CHECK(t.label(3) == "ab");
  CHECK(t.same_as(g));
}

TEST_CASE("additive group in primitive-power order") {
  auto f8 = testing::gf(2, 3);
  auto g = additive_group_of(*f8, OrderMode::PrimitivePower);
  // index: 0, 1, x, x^2, x^3, ... ; 1 + x = x^3
  CHECK(g.label(2) == "x");
  CHECK(g.mul(1, 2) == 4);
  CHECK(g.label(4) == "x^3");
  // the rest of the printed table
  CHECK(g.mul(1, 3) == 7);  // 1 + x^2 = x^6
  CHECK(g.mul(2, 3) == 5);  // x + x^2 = x^4
  CHECK(g.mul(6, 7) == 2);  // x^5 + x^6 = x
  auto enc = additive_group_of(*f8, OrderMode::Encoding);
  for (std::uint32_t i = 0; i < 8; ++i) CHECK(enc.mul(i, 0) == i);

  // GF(4): the two orders give the same group after relabeling by element_at
  auto f4 = testing::gf(2, 2);
  auto p4 = additive_group_of(*f4, OrderMode::PrimitivePower);
  auto e4 = additive_group_of(*f4, OrderMode::Encoding);
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) {
      const Elem x = element_at(*f4, OrderMode::PrimitivePower, a);
      const Elem y = element_at(*f4, OrderMode::PrimitivePower, b);
      CHECK(element_at(*f4, OrderMode::PrimitivePower, p4.mul(a, b)) == e4.mul(x, y));
    }
}

TEST_CASE("direct products") {
  auto g = Group::direct_product(Group::elementary_abelian(3, 1), Group::elementary_abelian(3, 1));
  CHECK(g.kind() == Group::Kind::ElementaryAbelian);
  CHECK(g.same_as(Group::elementary_abelian(3, 2)));
  auto h = Group::direct_product(s3_group(), Group::elementary_abelian(2, 1));
  CHECK(h.kind() == Group::Kind::Product);
  CHECK(h.order() == 12);
  CHECK(h.mul(h.inv(7), 7) == 0);
}

TEST_CASE("permutations") {
  Perm p({1, 0, 3, 2});
  CHECK(p.cycle_form() == "(1,2)(3,4)");
  CHECK(Perm::identity(4).cycle_form() == "()");
  CHECK(p.fixed_points() == 0);
  CHECK_THROWS_AS(Perm({0, 0, 1}), Error);
  CHECK_THROWS_AS(compose(p, Perm::identity(3)), Error);

  auto pi = parse_cycle_form("(1,2,3)(4,5,6)(7,8,9)", 9);
  std::vector<Elem> row = {0, 1, 2, 0, 1, 2, 0, 1, 2};
  auto out = apply_to_vector<Elem>(pi, row);
  CHECK(out == std::vector<Elem>{2, 0, 1, 2, 0, 1, 2, 0, 1});

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint32_t> a(9), b(9);
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), 0);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    Perm f(a), g(b);
    std::vector<std::uint32_t> v(9);
    std::iota(v.begin(), v.end(), 10);
    auto lhs = apply_to_vector<std::uint32_t>(compose(f, g), v);
    auto mid = apply_to_vector<std::uint32_t>(g, v);
    auto rhs = apply_to_vector<std::uint32_t>(f, mid);
    CHECK(lhs == rhs);
    CHECK(compose(f, f.inverse()).is_identity());
    CHECK(parse_cycle_form(f.cycle_form(), 9) == f);
  }
}

TEST_CASE("abelian invariants") {
  CHECK(elementary_divisors(Group::elementary_abelian(3, 3)) == std::vector<std::uint64_t>{3, 3, 3});
  // Z_4 x Z_2 from a table
  std::vector<std::uint32_t> t;
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b) t.push_back(((a / 2 + b / 2) % 4) * 2 + (a + b) % 2);
  auto z42 = Group::from_table(8, t);
  CHECK(elementary_divisors(z42) == std::vector<std::uint64_t>{4, 2});

  std::mt19937_64 rng(3);
  for (auto g : {z42, Group::from_table(9, Group::elementary_abelian(3, 2).cayley_table()),
                 Group::from_table(81, Group::elementary_abelian(3, 4).cayley_table())}) {
    const auto base = elementary_divisors(g);
    for (int i = 0; i < 3; ++i) CHECK(elementary_divisors(relabel(g, rng)) == base);
  }

  auto s3 = s3_group();
  auto d = describe(s3);
  CHECK_FALSE(d.abelian);
  CHECK(d.order == 6);
  CHECK(d.exponent == 6);
  CHECK(d.center_order == 1);
  CHECK(d.derived_order == 3);
  CHECK_FALSE(abelian_invariants(s3).has_value());
}
