#include "ghfp/perm.hpp"

#include <sstream>

#include "ghfp/error.hpp"

namespace ghfp {

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw Error(ErrorKind::InvalidArgument, "images are not a bijection");
    seen[x] = 1;
  }
}

Perm Perm::identity(std::uint32_t n) {
  std::vector<std::uint32_t> img(n);
  for (std::uint32_t i = 0; i < n; ++i) img[i] = i;
  Perm p;
  p.images_ = std::move(img);
  return p;
}

bool Perm::is_identity() const { return fixed_points() == size(); }

std::uint32_t Perm::fixed_points() const {
  std::uint32_t c = 0;
  for (std::uint32_t i = 0; i < size(); ++i) c += images_[i] == i;
  return c;
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t i = 0; i < size(); ++i) inv[images_[i]] = i;
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

std::string Perm::cycle_form() const {
  std::ostringstream os;
  std::vector<char> done(images_.size(), 0);
  bool any = false;
  for (std::uint32_t s = 0; s < size(); ++s) {
    if (done[s] || images_[s] == s) continue;
    any = true;
    os << '(';
    std::uint32_t x = s;
    bool first = true;
    while (!done[x]) {
      done[x] = 1;
      if (!first) os << ',';
      os << x + 1;
      first = false;
      x = images_[x];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

Perm compose(const Perm& f, const Perm& g) {
  if (f.size() != g.size()) throw Error(ErrorKind::LengthMismatch, "compose: sizes differ");
  std::vector<std::uint32_t> img(f.size());
  for (std::uint32_t i = 0; i < f.size(); ++i) img[i] = f(g(i));
  return Perm(std::move(img));
}

template <class T>
std::vector<T> apply_to_vector(const Perm& pi, std::span<const T> v) {
  if (v.size() != pi.size()) throw Error(ErrorKind::LengthMismatch, "apply_to_vector: sizes differ");
  std::vector<T> out(v.size());
  for (std::uint32_t l = 0; l < pi.size(); ++l) out[pi(l)] = v[l];
  return out;
}

template std::vector<Elem> apply_to_vector<Elem>(const Perm&, std::span<const Elem>);
template std::vector<std::uint32_t> apply_to_vector<std::uint32_t>(const Perm&, std::span<const std::uint32_t>);

Perm parse_cycle_form(const std::string& text, std::uint32_t n) {
  std::vector<std::uint32_t> img(n);
  for (std::uint32_t i = 0; i < n; ++i) img[i] = i;
  if (text == "I" || text == "()") return Perm(img);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw Error(ErrorKind::ParseError, "cycle form: expected '('");
    const auto close = text.find(')', pos);
    if (close == std::string::npos) throw Error(ErrorKind::ParseError, "cycle form: missing ')'");
    std::vector<std::uint32_t> cyc;
    std::stringstream ss(text.substr(pos + 1, close - pos - 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      const auto x = std::stoul(tok);
      if (x < 1 || x > n) throw Error(ErrorKind::ParseError, "cycle form: point out of range");
      cyc.push_back(static_cast<std::uint32_t>(x - 1));
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) img[cyc[i]] = cyc[(i + 1) % cyc.size()];
    pos = close + 1;
  }
  return Perm(img);
}

}  // namespace ghfp
