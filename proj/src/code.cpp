#include "ghfp/code.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <thread>

#include "ghfp/error.hpp"

namespace ghfp {

namespace {

std::uint32_t exact_log(std::uint64_t n, std::uint32_t base, const char* what) {
  std::uint32_t k = 0;
  std::uint64_t x = 1;
  while (x < n) {
    x *= base;
    ++k;
  }
  if (x != n) throw Error(ErrorKind::InvalidArgument, std::string(what) + " size is not a power of the base");
  return k;
}

}  // namespace

std::uint64_t hash_word(std::span<const Elem> w) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ w.size();
  for (Elem e : w) {
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return h ^ (h >> 33);
}

std::uint32_t hamming_distance(std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::LengthMismatch, "words differ in length");
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

// ---------------------------------------------------------------- RowReducer

bool RowReducer::insert(std::span<const Elem> w) {
  if (w.size() != n_) throw Error(ErrorKind::LengthMismatch, "vector length differs from reducer length");
  const Field& f = *field_;
  Word r(w.begin(), w.end());
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const Elem c = r[pivots_[b]];
    if (c == 0) continue;
    const Word& bv = basis_[b];
    for (std::uint32_t k = pivots_[b]; k < n_; ++k) {
      if (bv[k] != 0) r[k] = f.sub(r[k], f.mul(c, bv[k]));
    }
  }
  std::uint32_t piv = 0;
  while (piv < n_ && r[piv] == 0) ++piv;
  if (piv == n_) return false;
  const Elem s = f.inv(r[piv]);
  for (std::uint32_t k = piv; k < n_; ++k) r[k] = f.mul(r[k], s);
  basis_.push_back(std::move(r));
  pivots_.push_back(piv);
  return true;
}

// ---------------------------------------------------------------------- Code

Code::Code(FieldPtr field, std::uint32_t n, std::vector<Word> words) : field_(std::move(field)), n_(n) {
  for (auto& w : words) {
    if (w.size() != n_) throw Error(ErrorKind::LengthMismatch, "codeword length differs from n");
    if (contains(w)) continue;
    index_.emplace(hash_word(w), static_cast<std::uint32_t>(words_.size()));
    words_.push_back(std::move(w));
  }
}

bool Code::contains(std::span<const Elem> w) const {
  auto [lo, hi] = index_.equal_range(hash_word(w));
  for (auto it = lo; it != hi; ++it) {
    const Word& x = words_[it->second];
    if (std::equal(x.begin(), x.end(), w.begin(), w.end())) return true;
  }
  return false;
}

std::uint32_t rank(const Code& c) {
  RowReducer red(c.field(), c.length());
  for (const auto& w : c.words()) {
    red.insert(w);
    if (red.rank() == c.length()) break;
  }
  return red.rank();
}

namespace {

bool translate_invariant(const Code& c, std::span<const Elem> x) {
  const Field& f = *c.field();
  Word s(c.length());
  for (const auto& y : c.words()) {
    for (std::uint32_t k = 0; k < c.length(); ++k) s[k] = f.add(y[k], x[k]);
    if (!c.contains(s)) return false;
  }
  return true;
}

void require_zero(const Code& c) {
  if (!c.contains(Word(c.length(), 0))) throw Error(ErrorKind::ZeroNotInCode, "code does not contain 0");
}

}  // namespace

KernelInfo kernel(const Code& c) {
  require_zero(c);
  const Field& f = *c.field();
  std::vector<const Word*> kp;
  for (const auto& x : c.words())
    if (translate_invariant(c, x)) kp.push_back(&x);
  Word ax(c.length());
  RowReducer red(c.field(), c.length());
  std::uint64_t kcount = 0;
  for (const Word* x : kp) {
    bool all = true;
    for (std::uint32_t a = 2; a < f.q() && all; ++a) {
      for (std::uint32_t k = 0; k < c.length(); ++k) ax[k] = f.mul(static_cast<Elem>(a), (*x)[k]);
      all = translate_invariant(c, ax);
    }
    if (!all) continue;
    ++kcount;
    red.insert(*x);
  }
  KernelInfo info;
  info.dimension = exact_log(kcount, f.q(), "kernel");
  info.p_dimension = exact_log(kp.size(), f.p(), "p-kernel");
  info.basis = red.basis();
  return info;
}

std::uint32_t p_kernel(const Code& c) { return kernel(c).p_dimension; }

std::uint32_t min_distance(const Code& c) {
  if (c.size() < 2) throw Error(ErrorKind::InvalidArgument, "minimum distance needs two codewords");
  std::uint32_t best = c.length();
  const auto& w = c.words();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) best = std::min(best, hamming_distance(w[i], w[j]));
  return best;
}

bool is_linear(const Code& c) {
  const auto info = kernel(c);
  return info.dimension == rank(c);
}

// -------------------------------------------------------------------- GHCode

GHCode GHCode::from_matrix(const GHMatrix& h) {
  if (!h.is_normalized()) throw Error(ErrorKind::NotNormalized, "GH code needs a normalized matrix");
  GHCode c(h);
  for (std::uint32_t r = 0; r < h.v(); ++r) {
    const auto row = h.row(r);
    if (c.row_of(row)) throw Error(ErrorKind::DuplicateRows, "row " + std::to_string(r) + " repeats an earlier row");
    c.rows_.emplace(hash_word(row), r);
  }
  return c;
}

Word GHCode::word(std::uint64_t id) const {
  const auto r = static_cast<std::uint32_t>(id / q());
  const auto c = static_cast<Elem>(id % q());
  const Field& f = *field();
  Word w(h_.row(r).begin(), h_.row(r).end());
  if (c != 0)
    for (auto& x : w) x = f.add(x, c);
  return w;
}

std::optional<std::uint32_t> GHCode::row_of(std::span<const Elem> y) const {
  auto [lo, hi] = rows_.equal_range(hash_word(y));
  for (auto it = lo; it != hi; ++it) {
    const auto row = h_.row(it->second);
    if (std::equal(row.begin(), row.end(), y.begin(), y.end())) return it->second;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> GHCode::find(std::span<const Elem> y) const {
  if (y.size() != v()) return std::nullopt;
  const Elem c = y[0];
  std::optional<std::uint32_t> r;
  if (c == 0) {
    r = row_of(y);
  } else {
    const Field& f = *field();
    Word s(y.begin(), y.end());
    for (auto& x : s) x = f.sub(x, c);
    r = row_of(s);
  }
  if (!r) return std::nullopt;
  return static_cast<std::uint64_t>(*r) * q() + c;
}

std::uint32_t GHCode::rank() const {
  RowReducer red(field(), v());
  red.insert(Word(v(), 1));
  for (std::uint32_t r = 1; r < v() && red.rank() < v(); ++r) red.insert(h_.row(r));
  return red.rank();
}

bool GHCode::sum_in_code(std::uint32_t f, std::uint32_t g, Word& s) const {
  const Field& fld = *field();
  const auto a = h_.row(f), b = h_.row(g);
  for (std::uint32_t k = 0; k < v(); ++k) s[k] = fld.add(a[k], b[k]);
  return row_of(s).has_value();  // s_0 = 0, so membership is a row lookup
}

KernelStats GHCode::kernel(std::uint64_t seed, unsigned threads) const {
  const Field& fld = *field();
  const std::uint32_t n = v();
  constexpr int kEarlyTests = 8;

  // Random early rejection, in parallel over candidate rows.
  std::vector<char> survive(n, 0);
  survive[0] = 1;
  auto screen = [&](std::uint32_t begin, std::uint32_t end) {
    Word s(n);
    for (std::uint32_t f = begin; f < end; ++f) {
      if (f == 0) continue;
      std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (f + 1)));
      std::uniform_int_distribution<std::uint32_t> pick(1, n - 1);
      bool ok = true;
      for (int t = 0; t < kEarlyTests && ok; ++t) ok = sum_in_code(f, pick(rng), s);
      survive[f] = ok;
    }
  };
  threads = std::max(1u, std::min(threads, n));
  if (threads == 1) {
    screen(0, n);
  } else {
    std::vector<std::thread> pool;
    const std::uint32_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint32_t b = std::min(n, t * chunk), e = std::min(n, b + chunk);
      pool.emplace_back(screen, b, e);
    }
    for (auto& th : pool) th.join();
  }

  KernelStats st;
  st.seed = seed;
  // S = rows f with f + F_H contained in C, closed under addition.
  std::vector<char> in_s(n, 0);
  std::vector<std::uint32_t> members{0};
  in_s[0] = 1;
  Word s(n);
  for (std::uint32_t f = 1; f < n; ++f) {
    if (!survive[f]) continue;
    ++st.screened;
    if (in_s[f]) continue;
    ++st.full_sweeps;
    bool ok = true;
    for (std::uint32_t g = 1; g < n && ok; ++g) ok = sum_in_code(f, g, s);
    if (!ok) continue;
    const std::size_t old = members.size();
    for (std::size_t i = 0; i < old; ++i) {
      std::uint32_t cur = members[i];
      for (std::uint32_t t = 1; t < fld.p(); ++t) {
        sum_in_code(cur, f, s);
        cur = *row_of(s);
        if (!in_s[cur]) {
          in_s[cur] = 1;
          members.push_back(cur);
        }
      }
    }
  }

  // K_0 = members closed under multiplication by an F_p-basis of F_q.
  RowReducer red(field(), n);
  red.insert(Word(n, 1));
  std::uint64_t k0 = 0;
  for (std::uint32_t f : members) {
    bool ok = true;
    const auto row = h_.row(f);
    for (std::uint32_t i = 1, a = fld.p(); i < fld.m() && ok; ++i, a *= fld.p()) {
      for (std::uint32_t k = 0; k < n; ++k) s[k] = fld.mul(static_cast<Elem>(a), row[k]);
      const auto r = row_of(s);
      ok = r && in_s[*r];
    }
    if (!ok) continue;
    ++k0;
    red.insert(row);
  }
  st.info.dimension = exact_log(k0, q(), "kernel") + 1;
  st.info.p_dimension = exact_log(members.size(), fld.p(), "p-kernel") + fld.m();
  st.info.basis = red.basis();
  return st;
}

DistanceResult GHCode::min_distance() const {
  const Field& f = *field();
  const std::uint32_t n = v();
  std::vector<std::uint32_t> count(q());
  auto pair_best = [&](std::uint32_t i, std::uint32_t j) {
    std::fill(count.begin(), count.end(), 0);
    const auto a = h_.row(i), b = h_.row(j);
    for (std::uint32_t k = 0; k < n; ++k) ++count[f.sub(a[k], b[k])];
    return n - *std::max_element(count.begin(), count.end());
  };
  DistanceResult res;
  if (n == 1) {
    res.value = 1;
    return res;
  }
  res.value = n;  // distinct constants on one row differ everywhere
  if (size() <= kExactDistanceLimit) {
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j) res.value = std::min(res.value, pair_best(i, j));
    return res;
  }
  res.mode = DistanceMode::VerifiedTheoretical;
  // Weights of all words: row 0 against every other row covers 0 vs C.
  for (std::uint32_t j = 1; j < n; ++j) res.value = std::min(res.value, pair_best(0, j));
  if (n > 2) res.value = std::min(res.value, pair_best(1, 2));
  return res;
}

Code GHCode::row_code() const {
  std::vector<Word> w;
  w.reserve(v());
  for (std::uint32_t r = 0; r < v(); ++r) w.emplace_back(h_.row(r).begin(), h_.row(r).end());
  return Code(field(), v(), std::move(w));
}

Code GHCode::full_code() const {
  if (size() > 1000000) throw Error(ErrorKind::SizeGateExceeded, "explicit code limited to 10^6 words");
  std::vector<Word> w;
  w.reserve(size());
  for (std::uint64_t id = 0; id < size(); ++id) w.push_back(word(id));
  return Code(field(), v(), std::move(w));
}

CodePair code_from_gh(const GHMatrix& h) {
  const GHCode c = GHCode::from_matrix(h);
  return {c.row_code(), c.full_code()};
}

PKernelBound p_kernel_bound(std::uint32_t p, std::uint32_t q, std::uint32_t v) {
  PKernelBound b;
  for (std::uint32_t x = q; x > 1; x /= p) ++b.e;
  for (std::uint32_t x = v; x % p == 0; x /= p) ++b.t;
  return b;
}

}  // namespace ghfp
