#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ghfp/error.hpp"
#include "ghfp/io.hpp"
#include "support.hpp"

using namespace ghfp;

namespace {

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("cocycle files round trip") {
  for (const auto& name : {"s3", "s2", "s8", "gen_sylvester_2_2_2", "dphi_4_3"}) {
    CAPTURE(name);
    auto psi = testing::corpus(name);
    std::stringstream ss;
    write_coc(ss, psi);
    auto back = read_coc(ss, name);
    CHECK(matrix_of(back.cocycle) == matrix_of(psi));
    CHECK(back.cocycle.group().same_as(psi.group()));
    CHECK_FALSE(back.group_path.has_value());
  }
}

TEST_CASE("GH matrix and Cayley files round trip") {
  auto m = matrix_of(testing::corpus("s8_primitive"));
  std::stringstream ss;
  write_ghm(ss, m);
  CHECK(read_ghm(ss) == m);

  auto g = testing::ex41().group();
  std::stringstream cs;
  write_cay(cs, g);
  auto back = read_cay(cs);
  CHECK(back.same_as(g));
  CHECK(back.label(3) == "ab");
}

TEST_CASE("parse errors carry line and column") {
  std::istringstream bad("coc 1\np=3 m=1 poly=0,1\nv=3\n0 0 0\n0 1 x\n0 2 1\n");
  const auto msg = error_of([&] { read_coc(bad, "bad.coc"); });
  CHECK(msg.find("ParseError") == 0);
  CHECK(msg.find("bad.coc:5:5") != std::string::npos);

  std::istringstream short_rows("coc 1\np=3 m=1 poly=0,1\nv=3\n0 0 0\n0 1 2\n");
  CHECK(error_of([&] { read_coc(short_rows, "s.coc"); }).find("ParseError") == 0);

  std::istringstream not_cocycle("coc 1\np=3 m=1 poly=0,1\nv=3\n0 0 0\n0 1 2\n0 2 2\n");
  CHECK(error_of([&] { read_coc(not_cocycle); }).find("ParseError") != 0);

  std::istringstream reducible("ghm 1\np=3 m=2 poly=2,0,1\nv=1\n0\n");
  const auto red = error_of([&] { read_ghm(reducible); });
  CHECK(red.find("ParseError") == 0);
  CHECK(red.find("NotIrreducible") != std::string::npos);
}

TEST_CASE("group paths resolve next to the cocycle file") {
  const auto dir = std::filesystem::temp_directory_path() / "ghfp_io_test";
  std::filesystem::create_directories(dir / "sub");
  auto psi = testing::ex41();
  {
    std::ofstream cay(dir / "sub" / "g.cay");
    write_cay(cay, psi.group());
    std::ofstream coc(dir / "sub" / "x.coc");
    write_coc(coc, psi, std::string("g.cay"));
  }
  auto back = read_coc_file((dir / "sub" / "x.coc").string());
  REQUIRE(back.group_path.has_value());
  CHECK(*back.group_path == "g.cay");
  CHECK(back.cocycle.group().label(1) == "a");
  CHECK(matrix_of(back.cocycle) == matrix_of(psi));
  CHECK(sniff_format((dir / "sub" / "x.coc").string()) == "coc");
  CHECK(sniff_format((dir / "sub" / "g.cay").string()) == "cay");
  const auto h1 = file_hash((dir / "sub" / "x.coc").string());
  CHECK(h1.size() == 16);
  CHECK(h1 == file_hash((dir / "sub" / "x.coc").string()));
  CHECK(h1 != file_hash((dir / "sub" / "g.cay").string()));
  std::filesystem::remove_all(dir);
}

TEST_CASE("shipped examples load") {
  const std::string data = GHFP_DATA_DIR;
  auto ex41 = read_coc_file(data + "/examples/ex41.coc");
  CHECK(matrix_of(ex41.cocycle) == matrix_of(testing::ex41()));
  auto ex42 = read_coc_file(data + "/examples/ex42.coc");
  CHECK(matrix_of(ex42.cocycle) == matrix_of(testing::corpus("s2")));
  auto ex43 = read_coc_file(data + "/examples/ex43.coc");
  CHECK(matrix_of(ex43.cocycle) == matrix_of(testing::corpus("s8_primitive")));
  auto ex44 = read_ghm_file(data + "/examples/ex44.ghm");
  CHECK(ex44 == matrix_of(testing::corpus("dphi_4_3")));
}
