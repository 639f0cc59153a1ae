#include <doctest.h>

#include "ghfp/error.hpp"
#include "ghfp/field.hpp"
#include "support.hpp"

using namespace ghfp;

TEST_CASE("field construction and errors") {
  auto f81 = Field::make(3, 4, {2, 1, 0, 0, 1});
  CHECK(f81->q() == 81);
  CHECK(f81->header() == "p=3 m=4 poly=2,1,0,0,1");

  auto f3 = Field::make(3, 1, {0, 1});
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) CHECK(f3->mul(a, b) == (a * b) % 3);

  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind_of([] { Field::make(3, 4, {1, 0, 0, 0, 1}); }) == ErrorKind::NotIrreducible);
  CHECK(kind_of([] { Field::make(4, 1, {0, 1}); }) == ErrorKind::NotPrime);
  CHECK(kind_of([] { Field::make(3, 2, {1, 0, 2}); }) == ErrorKind::NotMonic);
  CHECK(kind_of([] { Field::make(3, 1, {0, 1})->inv(0); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("oracle facts for GF(81) and GF(3)") {
  const auto& facts = testing::oracle().at("facts");
  auto f81 = testing::gf(3, 4);
  CHECK(f81->poly() == std::vector<std::uint32_t>{2, 1, 0, 0, 1});
  // x * x^3 in encoding: x = 3, x^3 = 27
  CHECK(f81->mul(3, 27) == facts.at("gf81_x_times_x3").get<int>());
  CHECK(f81->mul(3, 27) == 7);
  CHECK(is_irreducible(3, std::vector<std::uint32_t>{1, 0, 0, 0, 1}) == facts.at("gf3_x4_plus_1_irreducible").get<bool>());
  CHECK(is_irreducible(3, std::vector<std::uint32_t>{2, 1, 0, 0, 1}) == facts.at("gf81_poly_irreducible").get<bool>());
  for (Elem g = 1; g < 81; ++g) CHECK(f81->pow(g, 80) == 1);
  auto f3 = testing::gf(3, 1);
  const auto table = facts.at("gf3_mul_table");
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) CHECK(f3->mul(a, b) == table[a][b].get<int>());
}

TEST_CASE("field axioms are exhaustive for small fields") {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {2, 4}, {3, 3}}) {
    auto f = testing::gf(p, m);
    const auto q = f->q();
    for (Elem a = 0; a < q; ++a) {
      CHECK(f->add(a, 0) == a);
      CHECK(f->mul(a, 1) == a);
      CHECK(f->add(a, f->neg(a)) == 0);
      Elem pa = 0;
      for (int i = 0; i < p; ++i) pa = f->add(pa, a);
      CHECK(pa == 0);
      CHECK(f->from_coeffs(f->coeffs(a)) == a);
      if (a) CHECK(f->mul(a, f->inv(a)) == 1);
      for (Elem b = 0; b < q; ++b) {
        CHECK(f->mul(a, b) == f->mul_slow(a, b));
        for (Elem c = 0; c < q; c += 3) {
          REQUIRE(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
          REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("GF(81) multiplication matches the schoolbook product everywhere") {
  auto f = testing::gf(3, 4);
  for (Elem a = 0; a < 81; ++a)
    for (Elem b = 0; b < 81; ++b) REQUIRE(f->mul(a, b) == f->mul_slow(a, b));
}

TEST_CASE("pow with negative exponents and FieldElement mixing") {
  auto f = testing::gf(2, 3);
  for (Elem a = 1; a < 8; ++a) {
    CHECK(f->mul(f->pow(a, -1), a) == 1);
    CHECK(f->pow(a, -3) == f->inv(f->pow(a, 3)));
  }
  FieldElement x(f, 2), y(f, 5);
  CHECK((x * y).value() == f->mul(2, 5));
  CHECK((x / y * y) == x);
  FieldElement z(testing::gf(2, 2), 1);
  CHECK_THROWS_AS(x + z, Error);
}

TEST_CASE("power labels round trip") {
  auto f = testing::gf(2, 3);
  CHECK(f->power_label(0) == "0");
  CHECK(f->power_label(1) == "1");
  CHECK(f->power_label(2) == "x");
  for (Elem a = 0; a < 8; ++a) CHECK(f->parse_power_label(f->power_label(a)) == a);
}

TEST_CASE("default polynomials are the smallest irreducibles") {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 4}, {3, 5}, {5, 2}}) {
    CHECK(pinned_default_poly(p, m) == smallest_irreducible(p, m));
  }
}
