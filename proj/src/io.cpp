#include "ghfp/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "ghfp/error.hpp"

namespace ghfp {

namespace {

struct Token {
  std::string text;
  std::size_t col;  // 1-based
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

class Reader {
 public:
  Reader(std::istream& in, std::string source) : source_(std::move(source)) {
    std::string s;
    std::size_t n = 0;
    while (std::getline(in, s)) {
      ++n;
      if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
      Line line{n, {}};
      std::size_t i = 0;
      while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i >= s.size()) break;
        const std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        line.tokens.push_back({s.substr(start, i - start), start + 1});
      }
      if (!line.tokens.empty()) lines_.push_back(std::move(line));
    }
    last_line_ = n;
  }

  [[noreturn]] void fail(std::size_t line, std::size_t col, const std::string& msg) const {
    throw Error(ErrorKind::ParseError, source_ + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const {
    if (done()) fail(last_line_ + 1, 1, "unexpected end of file");
    return lines_[pos_];
  }
  const Line& next() {
    const Line& l = peek();
    ++pos_;
    return l;
  }

  void expect_magic(const std::string& magic) {
    const Line& l = next();
    if (l.tokens.size() != 2 || l.tokens[0].text != magic || l.tokens[1].text != "1") {
      fail(l.number, 1, "expected '" + magic + " 1'");
    }
  }

  // "key=value" as the only token on a line, or one of several.
  std::string value_of(const Line& l, const Token& t, const std::string& key) const {
    const std::string prefix = key + "=";
    if (t.text.rfind(prefix, 0) != 0) fail(l.number, t.col, "expected " + prefix);
    return t.text.substr(prefix.size());
  }

  std::uint64_t number(const Line& l, const Token& t, const std::string& text, std::size_t offset = 0) const {
    std::uint64_t x = 0;
    const auto* b = text.data();
    const auto* e = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(b, e, x);
    if (ec != std::errc() || ptr != e || text.empty()) fail(l.number, t.col + offset, "expected an integer, got '" + text + "'");
    return x;
  }

  std::uint32_t read_v() {
    const Line& l = next();
    if (l.tokens.size() != 1) fail(l.number, 1, "expected v=<order>");
    const auto& t = l.tokens[0];
    const auto x = number(l, t, value_of(l, t, "v"), 2);
    if (x == 0 || x > 65536) fail(l.number, t.col, "order out of range");
    return static_cast<std::uint32_t>(x);
  }

  FieldPtr read_field() {
    const Line& l = next();
    if (l.tokens.size() != 3) fail(l.number, 1, "expected 'p=<p> m=<m> poly=<c_0>,...,<c_m>'");
    const auto p = number(l, l.tokens[0], value_of(l, l.tokens[0], "p"), 2);
    const auto m = number(l, l.tokens[1], value_of(l, l.tokens[1], "m"), 2);
    const auto& pt = l.tokens[2];
    const std::string list = value_of(l, pt, "poly");
    std::vector<std::uint32_t> poly;
    std::size_t start = 0;
    while (true) {
      const auto comma = list.find(',', start);
      const std::string item = list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      poly.push_back(static_cast<std::uint32_t>(number(l, pt, item, 5 + start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    try {
      return Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m), std::move(poly));
    } catch (const Error& e) {
      fail(l.number, 1, e.what());
    }
  }

  std::vector<std::uint32_t> read_rows(std::uint32_t v, std::uint32_t bound) {
    std::vector<std::uint32_t> data;
    data.reserve(static_cast<std::size_t>(v) * v);
    for (std::uint32_t r = 0; r < v; ++r) {
      const Line& l = next();
      if (l.tokens.size() != v) {
        fail(l.number, l.tokens.size() > v ? l.tokens[v].col : 1,
             "row " + std::to_string(r + 1) + " has " + std::to_string(l.tokens.size()) + " entries, expected " +
                 std::to_string(v));
      }
      for (const auto& t : l.tokens) {
        const auto x = number(l, t, t.text);
        if (x >= bound) fail(l.number, t.col, "entry " + t.text + " out of range");
        data.push_back(static_cast<std::uint32_t>(x));
      }
    }
    if (!done()) fail(peek().number, 1, "trailing content");
    return data;
  }

  std::size_t current_line() const { return done() ? last_line_ : lines_[pos_].number; }

 private:
  std::string source_;
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t last_line_ = 0;
};

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path + ":0:0: cannot open file");
  return in;
}

Group default_group(const Field& f, std::uint32_t v) {
  std::uint32_t k = 0;
  std::uint64_t x = 1;
  while (x < v) {
    x *= f.p();
    ++k;
  }
  if (x != v) throw Error(ErrorKind::InvalidArgument, "v is not a power of p; a group= line is required");
  return Group::elementary_abelian(f.p(), k);
}

FieldMatrix to_matrix(const FieldPtr& f, std::uint32_t v, const std::vector<std::uint32_t>& data) {
  std::vector<Elem> e(data.begin(), data.end());
  return FieldMatrix(f, v, v, std::move(e));
}

void write_rows(std::ostream& out, std::uint32_t v, auto&& at) {
  for (std::uint32_t i = 0; i < v; ++i) {
    for (std::uint32_t j = 0; j < v; ++j) {
      if (j) out << ' ';
      out << at(i, j);
    }
    out << '\n';
  }
}

}  // namespace

Group read_cay(std::istream& in, const std::string& source) {
  Reader rd(in, source);
  rd.expect_magic("cay");
  const std::uint32_t v = rd.read_v();
  std::vector<std::string> labels;
  if (!rd.done() && rd.peek().tokens[0].text.rfind("labels=", 0) == 0) {
    const Line& l = rd.next();
    labels.push_back(l.tokens[0].text.substr(7));
    for (std::size_t i = 1; i < l.tokens.size(); ++i) labels.push_back(l.tokens[i].text);
    if (labels.size() != v) rd.fail(l.number, 1, "expected " + std::to_string(v) + " labels");
  }
  const std::size_t first = rd.current_line();
  auto table = rd.read_rows(v, v);
  try {
    return Group::from_table(v, std::move(table), std::move(labels));
  } catch (const Error& e) {
    rd.fail(first, 1, e.what());
  }
}

Group read_cay_file(const std::string& path) {
  auto in = open(path);
  return read_cay(in, path);
}

void write_cay(std::ostream& out, const Group& g) {
  out << "cay 1\nv=" << g.order() << '\n';
  if (!g.labels().empty()) {
    out << "labels=";
    for (std::size_t i = 0; i < g.labels().size(); ++i) out << (i ? " " : "") << g.labels()[i];
    out << '\n';
  }
  write_rows(out, g.order(), [&](std::uint32_t a, std::uint32_t b) { return g.mul(a, b); });
}

CocFile read_coc(std::istream& in, const std::string& source, const std::string& base_dir) {
  Reader rd(in, source);
  rd.expect_magic("coc");
  const FieldPtr f = rd.read_field();
  const std::uint32_t v = rd.read_v();
  std::optional<std::string> gpath;
  std::optional<Group> group;
  if (!rd.done() && rd.peek().tokens[0].text.rfind("group=", 0) == 0) {
    const Line& l = rd.next();
    gpath = l.tokens[0].text.substr(6);
    std::filesystem::path full = *gpath;
    if (full.is_relative()) full = std::filesystem::path(base_dir) / full;
    group = read_cay_file(full.string());
    if (group->order() != v) rd.fail(l.number, l.tokens[0].col, "group order differs from v");
  }
  const std::size_t first = rd.current_line();
  const auto data = rd.read_rows(v, f->q());
  try {
    if (!group) group = default_group(*f, v);
    return {Cocycle::checked(std::move(*group), to_matrix(f, v, data)), gpath};
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) rd.fail(first, 1, e.what());
    throw;
  }
}

CocFile read_coc_file(const std::string& path) {
  auto in = open(path);
  return read_coc(in, path, std::filesystem::path(path).parent_path().string().empty()
                                ? "."
                                : std::filesystem::path(path).parent_path().string());
}

void write_coc(std::ostream& out, const Cocycle& psi, const std::optional<std::string>& group_path) {
  out << "coc 1\n" << psi.field()->header() << "\nv=" << psi.v() << '\n';
  if (group_path) out << "group=" << *group_path << '\n';
  write_rows(out, psi.v(), [&](std::uint32_t a, std::uint32_t b) { return psi(a, b); });
}

FieldMatrix read_ghm(std::istream& in, const std::string& source) {
  Reader rd(in, source);
  rd.expect_magic("ghm");
  const FieldPtr f = rd.read_field();
  const std::uint32_t v = rd.read_v();
  return to_matrix(f, v, rd.read_rows(v, f->q()));
}

FieldMatrix read_ghm_file(const std::string& path) {
  auto in = open(path);
  return read_ghm(in, path);
}

void write_ghm(std::ostream& out, const FieldMatrix& m) {
  out << "ghm 1\n" << m.field()->header() << "\nv=" << m.rows() << '\n';
  write_rows(out, m.rows(), [&](std::uint32_t a, std::uint32_t b) { return m(a, b); });
}

std::string sniff_format(const std::string& path) {
  auto in = open(path);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') {
      std::getline(in, tok);
      continue;
    }
    if (tok == "coc" || tok == "ghm" || tok == "cay") return tok;
    break;
  }
  throw Error(ErrorKind::ParseError, path + ":1:1: unknown file format");
}

std::string file_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path + ":0:0: cannot open file");
  std::uint64_t h = 1469598103934665603ULL;
  char buf[65536];
  while (in) {
    in.read(buf, sizeof buf);
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ULL;
    }
  }
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[i] = hex[h & 15];
  return s;
}

}  // namespace ghfp
