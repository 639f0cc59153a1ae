#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ghfp/cocycle.hpp"
#include "ghfp/gh_matrix.hpp"
#include "ghfp/group.hpp"

namespace ghfp {

// Text formats, one record per file:
//   .cay  "cay 1", "v=<v>", optional "labels=<l_0> ... <l_{v-1}>", v rows
//   .coc  "coc 1", field header, "v=<v>", optional "group=<path.cay>", v rows
//   .ghm  "ghm 1", field header, "v=<v>", v rows
// Field header: "p=<p> m=<m> poly=<c_0>,...,<c_m>". Rows hold integer
// encodings separated by blanks. '#' starts a comment. Without a group line
// the group is Z_p^k in lexicographic order (v must be a power of p).
// Parse failures throw ParseError with "<source>:<line>:<col>: ".

Group read_cay(std::istream& in, const std::string& source = "<input>");
Group read_cay_file(const std::string& path);
void write_cay(std::ostream& out, const Group& g);

struct CocFile {
  Cocycle cocycle;
  std::optional<std::string> group_path;
};
CocFile read_coc(std::istream& in, const std::string& source = "<input>", const std::string& base_dir = ".");
CocFile read_coc_file(const std::string& path);
void write_coc(std::ostream& out, const Cocycle& psi, const std::optional<std::string>& group_path = std::nullopt);

FieldMatrix read_ghm(std::istream& in, const std::string& source = "<input>");
FieldMatrix read_ghm_file(const std::string& path);
void write_ghm(std::ostream& out, const FieldMatrix& m);

/// "coc", "ghm", "cay" from the first token of the file.
std::string sniff_format(const std::string& path);

/// 64-bit FNV-1a of the file bytes, as 16 hex digits.
std::string file_hash(const std::string& path);

}  // namespace ghfp
