#include <doctest.h>

#include <random>

#include "ghfp/code.hpp"
#include "ghfp/error.hpp"
#include "ghfp/planar.hpp"
#include "support.hpp"

using namespace ghfp;

namespace {

// x -> phi(x + h) - phi(x) is a bijection for every h != 0
bool planar_brute(const std::vector<Elem>& phi, const Field& f) {
  for (Elem h = 1; h < f.q(); ++h) {
    std::vector<bool> hit(f.q(), false);
    for (Elem x = 0; x < f.q(); ++x) {
      const Elem d = f.sub(phi[f.add(x, h)], phi[x]);
      if (hit[d]) return false;
      hit[d] = true;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("admissible parameters") {
  CHECK(admissible_pairs(4) == std::vector<std::uint32_t>{3});
  CHECK(admissible_pairs(5) == std::vector<std::uint32_t>{3});
  CHECK(admissible_pairs(6) == std::vector<std::uint32_t>{5});
  CHECK(admissible_pairs(7) == std::vector<std::uint32_t>{3, 5});
  CHECK(admissible_pairs(10) == std::vector<std::uint32_t>{3, 7, 9});
  CHECK(PlanarParams{4, 3}.exponent() == 14);
  CHECK(PlanarParams{6, 5}.exponent() == 122);
  CHECK_FALSE(is_admissible({6, 3}));
  CHECK_FALSE(is_admissible({4, 5}));
  CHECK_FALSE(is_admissible({5, 2}));
  CHECK_THROWS_AS(planar_map({6, 3}, *testing::gf(3, 6)), Error);
  CHECK_THROWS_AS(planar_map({4, 3}, *testing::gf(3, 5)), Error);
  CHECK(conjectured_rank(3) == 11);
  CHECK(conjectured_rank(5) == 47);
}

TEST_CASE("the planar map is even and planar") {
  auto f = testing::gf(3, 5);
  auto phi = planar_map({5, 3}, *f);
  for (Elem g = 0; g < f->q(); ++g) CHECK(phi[f->neg(g)] == phi[g]);
  CHECK(is_planar(phi, *f));
  CHECK(planar_brute(phi, *f));
  CHECK(is_symmetric(planar_coboundary({5, 3}, f)));

  auto f81 = testing::gf(3, 4);
  auto phi81 = planar_map({4, 3}, *f81);
  CHECK(is_planar(phi81, *f81));
  // phi(x) = x^14 directly by repeated multiplication
  for (Elem g = 0; g < 81; g += 7) {
    Elem acc = 1;
    for (int i = 0; i < 14; ++i) acc = f81->mul(acc, g);
    CHECK(phi81[g] == (g == 0 ? 0 : acc));
  }
}

TEST_CASE("planarity agrees with orthogonality of the coboundary") {
  std::mt19937_64 rng(23);
  for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 2}, {5, 1}, {3, 3}, {7, 1}}) {
    auto f = testing::gf(p, m);
    auto g = additive_group_of(*f, OrderMode::Encoding);
    std::vector<std::vector<Elem>> maps;
    std::vector<Elem> sq(f->q()), frob(f->q()), cube(f->q());
    for (Elem x = 0; x < f->q(); ++x) {
      sq[x] = f->mul(x, x);
      frob[x] = f->pow(x, p);
      cube[x] = f->mul(x, sq[x]);
    }
    maps.push_back(sq);
    maps.push_back(frob);
    maps.push_back(cube);
    for (int t = 0; t < 20; ++t) {
      std::vector<Elem> r(f->q());
      for (auto& x : r) x = static_cast<Elem>(rng() % f->q());
      maps.push_back(r);
    }
    for (const auto& phi : maps) {
      const bool planar = planar_brute(phi, *f);
      CHECK(is_planar(phi, *f) == planar);
      CHECK(is_orthogonal(coboundary(g, f, phi).cocycle).orthogonal == planar);
    }
    CHECK(is_planar(sq, *f));
  }
}

TEST_CASE("the smallest planar cell") {
  auto psi = planar_coboundary({4, 3});
  auto code = GHCode::from_matrix(GHMatrix::from_orthogonal_cocycle(psi));
  CHECK(code.rank() == 11);
  CHECK(code.kernel().info.dimension == 1);
  Table1Options opt;
  opt.a_min = 4;
  opt.a_max = 5;
  auto cells = table1(opt);
  REQUIRE(cells.size() == 2);
  for (const auto& c : cells) {
    CHECK(c.status == CellStatus::Computed);
    CHECK(c.rank == 11);
    CHECK(c.kernel == 1);
    CHECK(c.match);
  }
  opt.a_max = 7;
  opt.a_min = 7;
  opt.budget_a = 6;
  cells = table1(opt);
  REQUIRE(cells.size() == 2);
  CHECK(cells[0].status == CellStatus::SkippedBudget);
  CHECK(to_string(cells[0].status) == "skipped(budget)");
}
