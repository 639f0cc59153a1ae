#pragma once

// Shared fixtures: the test corpus under the names used by oracle/oracle.py,
// and access to the frozen oracle values.

#include <json.hpp>

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "ghfp/cocycle.hpp"
#include "ghfp/gh_matrix.hpp"
#include "ghfp/planar.hpp"

namespace ghfp::testing {

inline const nlohmann::json& oracle() {
  static const nlohmann::json j = [] {
    std::ifstream in(GHFP_ORACLE_JSON);
    return nlohmann::json::parse(in);
  }();
  return j;
}

inline const nlohmann::json& oracle_case(const std::string& name) { return oracle().at("cases").at(name); }

inline FieldPtr gf(std::uint32_t p, std::uint32_t m) { return Field::make_default(p, m); }

inline Cocycle ex41() {
  auto f4 = gf(2, 2);
  FieldMatrix m(f4, 4, 4, {0, 0, 0, 0, 0, 1, 3, 2, 0, 3, 2, 1, 0, 2, 1, 3});
  return Cocycle::checked(Group::elementary_abelian(2, 2).with_labels({"1", "a", "b", "ab"}), m);
}

inline Cocycle trivial(std::uint32_t p, std::uint32_t k) {
  return Cocycle::trivial(Group::elementary_abelian(p, k), gf(p, 1));
}

/// Every corpus entry from the oracle, rebuilt through the library.
inline Cocycle corpus(const std::string& name) {
  const auto s3 = [] { return sylvester_cocycle(gf(3, 1)); };
  const auto s2 = [&] { return tensor(s3(), s3()); };
  if (name == "trivial_z3") return trivial(3, 1);
  if (name == "trivial_z3_2") return trivial(3, 2);
  if (name == "s3") return s3();
  if (name == "s4") return sylvester_cocycle(gf(2, 2));
  if (name == "s8") return sylvester_cocycle(gf(2, 3));
  if (name == "s8_primitive") return sylvester_cocycle(gf(2, 3), OrderMode::PrimitivePower);
  if (name == "ex41") return ex41();
  if (name == "s2") return s2();
  if (name == "gen_sylvester_3_1_2") return gen_sylvester_cocycle(gf(3, 1), 2);
  if (name == "gen_sylvester_2_2_2") return gen_sylvester_cocycle(gf(2, 2), 2);
  if (name == "s3_x_s2") return tensor(s3(), s2());
  if (name == "s2_x_s3") return tensor(s2(), s3());
  if (name == "s2_x_s2") return tensor(s2(), s2());
  if (name == "s3_x_trivial") return tensor(s3(), trivial(3, 1));
  if (name == "dphi_4_3") return planar_coboundary({4, 3});
  if (name == "s81") return sylvester_cocycle(gf(3, 4));
  throw std::invalid_argument("unknown corpus entry " + name);
}

inline std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : oracle().at("cases").items()) names.push_back(k);
  return names;
}

// Cycle forms listed in the examples, keyed by coset (C_1, C_2, ...).
inline const std::vector<std::string> kEx41Pi = {"()", "(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"};
inline const std::vector<std::string> kEx42Pi = {
    "()",
    "(1,2,3)(4,5,6)(7,8,9)",
    "(1,3,2)(4,6,5)(7,9,8)",
    "(1,4,7)(2,5,8)(3,6,9)",
    "(1,5,9)(2,6,7)(3,4,8)",
    "(1,6,8)(2,4,9)(3,5,7)",
    "(1,7,4)(2,8,5)(3,9,6)",
    "(1,8,6)(2,9,4)(3,7,5)",
    "(1,9,5)(2,7,6)(3,8,4)",
};
inline const std::vector<std::string> kEx43Pi = {
    "()",
    "(1,2)(3,5)(4,8)(6,7)",
    "(1,3)(2,5)(4,6)(7,8)",
    "(1,4)(2,8)(3,6)(5,7)",
    "(1,5)(2,3)(4,7)(6,8)",
    "(1,6)(2,7)(3,4)(5,8)",
    "(1,7)(2,6)(3,8)(4,5)",
    "(1,8)(2,4)(3,7)(5,6)",
};

}  // namespace ghfp::testing
