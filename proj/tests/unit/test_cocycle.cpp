#include <doctest.h>

#include <random>

#include "ghfp/cocycle.hpp"
#include "ghfp/error.hpp"
#include "ghfp/gh_matrix.hpp"
#include "ghfp/planar.hpp"
#include "support.hpp"

using namespace ghfp;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::InvalidArgument;
}

FieldMatrix ex42_matrix() {
  auto f3 = testing::gf(3, 1);
  return FieldMatrix(f3, 9, 9,
                     {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 2, 1, 0, 2, 1, 0, 2, 1,
                      0, 0, 0, 1, 1, 1, 2, 2, 2, 0, 1, 2, 1, 2, 0, 2, 0, 1, 0, 2, 1, 1, 0, 2, 2, 1, 0,
                      0, 0, 0, 2, 2, 2, 1, 1, 1, 0, 1, 2, 2, 0, 1, 1, 2, 0, 0, 2, 1, 2, 1, 0, 1, 0, 2});
}

}  // namespace

TEST_CASE("check_cocycle on the 9x9 example") {
  auto g = Group::elementary_abelian(3, 2);
  auto psi = Cocycle::checked(g, ex42_matrix());
  CHECK(psi.v() == 9);
  CHECK(is_orthogonal(psi).orthogonal);

  auto zero = FieldMatrix(testing::gf(3, 1), 9, 9);
  CHECK_FALSE(is_orthogonal(Cocycle::checked(g, zero)).orthogonal);

  auto bad = ex42_matrix();
  bad(1, 1) = 2;
  CHECK(kind_of([&] { Cocycle::checked(g, bad); }) == ErrorKind::CocycleIdentityViolated);
  auto violation = find_cocycle_violation(g, bad);
  REQUIRE(violation.has_value());
  const auto [a, b, c] = *violation;
  const Field& f = *bad.field();
  CHECK(f.add(bad(a, b), bad(g.mul(a, b), c)) != f.add(bad(a, g.mul(b, c)), bad(b, c)));

  auto unnormalized = ex42_matrix();
  unnormalized(0, 3) = 1;
  CHECK(kind_of([&] { Cocycle::checked(g, unnormalized); }) == ErrorKind::NotNormalized);
  CHECK(kind_of([&] { Cocycle::checked(Group::elementary_abelian(3, 1), ex42_matrix()); }) == ErrorKind::SizeMismatch);
}

TEST_CASE("coboundaries") {
  auto f81 = testing::gf(3, 4);
  auto g = additive_group_of(*f81, OrderMode::Encoding);
  std::vector<Elem> zero(81, 0);
  auto t = coboundary(g, f81, zero).cocycle;
  CHECK(matrix_of(t) == FieldMatrix(f81, 81, 81));

  auto phi = planar_map({4, 3}, *f81);
  auto d = coboundary(g, f81, phi);
  CHECK(d.offset == 0);
  CHECK(is_orthogonal(d.cocycle).orthogonal);
  CHECK(is_symmetric(d.cocycle));
  CHECK_NOTHROW(Cocycle::checked(g, matrix_of(d.cocycle)));

  // arbitrary phi, normalized on the way in
  std::mt19937_64 rng(11);
  auto f9 = testing::gf(3, 2);
  auto g9 = additive_group_of(*f9, OrderMode::Encoding);
  std::vector<Elem> rnd(9);
  for (auto& x : rnd) x = static_cast<Elem>(rng() % 9);
  rnd[0] = 4;
  auto r = coboundary(g9, f9, rnd);
  CHECK(r.offset == 4);
  CHECK_NOTHROW(Cocycle::checked(g9, matrix_of(r.cocycle)));
  CHECK(is_symmetric(r.cocycle));
  CHECK(kind_of([&] { coboundary(g9, f9, std::vector<Elem>(3)); }) == ErrorKind::DomainMismatch);
}

TEST_CASE("orthogonality witnesses") {
  auto t = testing::trivial(3, 2);
  auto res = is_orthogonal(t);
  CHECK_FALSE(res.orthogonal);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->g == 1);
  CHECK(res.witness->u == 0);
  CHECK(res.witness->count == 9);
  CHECK(is_orthogonal(testing::corpus("s3")).orthogonal);
  auto g = Group::elementary_abelian(2, 1);
  CHECK(kind_of([&] { is_orthogonal(Cocycle::trivial(g, testing::gf(3, 1))); }) == ErrorKind::DivisibilityViolated);
}

TEST_CASE("tensor products") {
  auto s3 = testing::corpus("s3");
  auto s2 = tensor(s3, s3);
  CHECK(matrix_of(s2) == ex42_matrix());
  CHECK(matrix_of(s2) == kronecker_sum_matrix(matrix_of(s3), matrix_of(s3)));

  auto one = Cocycle::trivial(Group::elementary_abelian(3, 0), testing::gf(3, 1));
  CHECK(matrix_of(tensor(one, s3)) == matrix_of(s3));
  CHECK(matrix_of(tensor(s3, one)) == matrix_of(s3));

  // orthogonal iff both factors are, over {trivial, S_3}
  std::vector<Cocycle> set = {testing::trivial(3, 1), s3};
  for (const auto& a : set)
    for (const auto& b : set)
      CHECK(is_orthogonal(tensor(a, b)).orthogonal == (is_orthogonal(a).orthogonal && is_orthogonal(b).orthogonal));

  // over GF(81): {trivial on Z_3^4, S_81, dphi}
  auto f81 = testing::gf(3, 4);
  std::vector<Cocycle> big = {Cocycle::trivial(Group::elementary_abelian(3, 4), f81), testing::corpus("s81"),
                              testing::corpus("dphi_4_3")};
  for (const auto& a : big)
    for (const auto& b : big)
      CHECK(is_orthogonal(tensor(a, b)).orthogonal == (is_orthogonal(a).orthogonal && is_orthogonal(b).orthogonal));

  // associativity up to the (canonical) index identification at order 27
  auto lhs = matrix_of(tensor(tensor(s3, s3), s3));
  auto rhs = matrix_of(tensor(s3, tensor(s3, s3)));
  CHECK(lhs == rhs);

  CHECK(kind_of([&] { tensor(s3, testing::corpus("dphi_4_3")); }) == ErrorKind::FieldMismatch);
}
