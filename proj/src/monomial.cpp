#include "ghfp/monomial.hpp"

#include <random>
#include <unordered_map>

#include "ghfp/error.hpp"

namespace ghfp {

MonomialMatrix MonomialMatrix::scalar(std::uint32_t n, Elem k) { return {Perm::identity(n), std::vector<Elem>(n, k)}; }

PatternMatrix to_pattern(const MonomialMatrix& m) {
  const std::uint32_t n = m.size();
  PatternMatrix out(n, std::vector<std::optional<Elem>>(n));
  for (std::uint32_t i = 0; i < n; ++i) out[i][m.perm(i)] = m.diag[i];
  return out;
}

MonomialFactors factor_monomial(const PatternMatrix& m) {
  const auto n = static_cast<std::uint32_t>(m.size());
  std::vector<std::uint32_t> col(n);
  std::vector<char> used(n, 0);
  MonomialFactors f;
  f.d.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error(ErrorKind::NotMonomial, "matrix is not square");
    int found = 0;
    for (std::uint32_t j = 0; j < n; ++j) {
      if (!m[i][j]) continue;
      ++found;
      col[i] = j;
      f.d[i] = *m[i][j];
    }
    if (found != 1) throw Error(ErrorKind::NotMonomial, "row " + std::to_string(i) + " has " + std::to_string(found) + " entries");
    if (used[col[i]]) throw Error(ErrorKind::NotMonomial, "column " + std::to_string(col[i]) + " used twice");
    used[col[i]] = 1;
  }
  f.p = Perm(std::move(col));
  return f;
}

MonomialMatrix multiply(const Field& f, const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::OrderMismatch, "monomial matrices differ in order");
  const std::uint32_t n = a.size();
  std::vector<std::uint32_t> img(n);
  std::vector<Elem> d(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    img[i] = b.perm(a.perm(i));
    d[i] = f.add(a.diag[i], b.diag[a.perm(i)]);
  }
  return {Perm(std::move(img)), std::move(d)};
}

MonomialMatrix star_transpose(const Field& f, const MonomialMatrix& m) {
  const Perm inv = m.perm.inverse();
  std::vector<Elem> d(m.size());
  for (std::uint32_t j = 0; j < m.size(); ++j) d[j] = f.neg(m.diag[inv(j)]);
  return {inv, std::move(d)};
}

bool is_matrix_automorphism(const MonomialMatrix& p, const MonomialMatrix& q, const FieldMatrix& h) {
  if (p.size() != h.rows() || q.size() != h.cols()) throw Error(ErrorKind::OrderMismatch, "monomial order differs from H");
  const Field& f = *h.field();
  for (std::uint32_t i = 0; i < h.rows(); ++i) {
    const auto src = h.row(p.perm(i));
    for (std::uint32_t j = 0; j < h.cols(); ++j) {
      if (f.sub(f.add(p.diag[i], src[q.perm(j)]), q.diag[j]) != h(i, j)) return false;
    }
  }
  return true;
}

bool is_matrix_automorphism(const MonomialMatrix& p, const MonomialMatrix& q, const GHMatrix& h) {
  return is_matrix_automorphism(p, q, h.matrix());
}

AutPair automorphism_pair(const PropelinearCode& p, std::uint64_t a) {
  const Field& f = *p.field();
  const Group& g = p.group();
  const std::uint32_t v = p.v(), r = p.row_of_id(a), ri = g.inv(r);
  const Elem c = p.const_of_id(a);
  const Word aw = p.word(a);
  AutPair out;
  out.n.perm = p.pi(a).inverse();
  out.n.diag.resize(v);
  for (std::uint32_t j = 0; j < v; ++j) out.n.diag[j] = f.neg(aw[j]);
  // a * f_s = (c + psi(s, r)) 1 + row(s r): row i of H comes from s = g_i r^{-1}.
  std::vector<std::uint32_t> img(v);
  out.m.diag.resize(v);
  for (std::uint32_t i = 0; i < v; ++i) {
    const std::uint32_t s = g.mul(i, ri);
    img[i] = s;
    out.m.diag[i] = f.neg(f.add(c, p.cocycle()(s, r)));
  }
  out.m.perm = Perm(std::move(img));
  return out;
}

AutomorphismReport automorphisms_from_star(const PropelinearCode& p, const AutOptions& opt) {
  AutomorphismReport rep;
  const Field& f = *p.field();
  const auto& h = p.code().matrix();
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, p.size() - 1);

  std::vector<std::uint64_t> ids;
  if (opt.full || p.size() <= opt.full_limit) {
    for (std::uint64_t a = 0; a < p.size(); ++a) ids.push_back(a);
  } else {
    rep.sampled = true;
    for (std::uint64_t i = 0; i < opt.sample; ++i) ids.push_back(pick(rng));
  }
  for (auto a : ids) {
    ++rep.checked;
    const auto pr = automorphism_pair(p, a);
    if (is_matrix_automorphism(pr.m, pr.n, h)) {
      ++rep.verified;
    } else if (rep.witness.empty()) {
      rep.witness = "pair of codeword " + std::to_string(a) + " is not an automorphism";
    }
  }

  for (std::uint32_t c = 0; c < p.q(); ++c) {
    const auto pr = automorphism_pair(p, c);
    const auto expect = MonomialMatrix::scalar(p.v(), f.neg(static_cast<Elem>(c)));
    if (!(pr.m == expect) || !(pr.n == expect)) {
      rep.scalar_pairs = false;
      if (rep.witness.empty()) rep.witness = "lambda=" + std::to_string(c) + " does not give a scalar pair";
    }
  }

  std::vector<char> hit(p.v(), 0);
  for (std::uint32_t r = 0; r < p.v(); ++r) hit[automorphism_pair(p, p.make_id(r, 0)).m.perm(0)] = 1;
  for (auto x : hit)
    if (!x) rep.transitive_on_rows = false;
  if (!rep.transitive_on_rows && rep.witness.empty()) rep.witness = "row action is not transitive";

  auto hom = [&](std::uint64_t a, std::uint64_t b) {
    const auto pa = automorphism_pair(p, a), pb = automorphism_pair(p, b), pab = automorphism_pair(p, p.star(a, b));
    return multiply(f, pa.m, pb.m) == pab.m && multiply(f, pa.n, pb.n) == pab.n;
  };
  if (p.size() * p.size() <= 100000) {
    for (std::uint64_t a = 0; a < p.size() && rep.homomorphism; ++a)
      for (std::uint64_t b = 0; b < p.size() && rep.homomorphism; ++b)
        if (!hom(a, b)) {
          rep.homomorphism = false;
          rep.witness = "pairs of " + std::to_string(a) + "*" + std::to_string(b) + " do not multiply";
        }
  } else {
    for (int i = 0; i < 256 && rep.homomorphism; ++i) {
      const auto a = pick(rng), b = pick(rng);
      if (!hom(a, b)) {
        rep.homomorphism = false;
        rep.witness = "pairs of " + std::to_string(a) + "*" + std::to_string(b) + " do not multiply";
      }
    }
  }
  return rep;
}

FieldMatrix expanded_matrix(const GHMatrix& h) {
  const std::uint32_t v = h.v(), q = h.q();
  if (static_cast<std::uint64_t>(q) * v > 10000) throw Error(ErrorKind::SizeGateExceeded, "expanded matrix needs qv <= 10^4");
  const Field& f = *h.field();
  FieldMatrix e(h.field(), q * v, q * v);
  for (std::uint32_t i = 0; i < q; ++i)
    for (std::uint32_t j = 0; j < q; ++j) {
      const Elem k = f.add(static_cast<Elem>(i), static_cast<Elem>(j));
      for (std::uint32_t r = 0; r < v; ++r)
        for (std::uint32_t s = 0; s < v; ++s) e(i * v + r, j * v + s) = f.add(k, h(r, s));
    }
  return e;
}

RegularActionReport regular_row_action_check(const PropelinearCode& p, std::uint64_t seed) {
  const std::uint32_t v = p.v(), q = p.q();
  const std::uint64_t n = static_cast<std::uint64_t>(q) * v;
  if (n > 10000) throw Error(ErrorKind::SizeGateExceeded, "row action check needs qv <= 10^4");
  const Field& f = *p.field();
  const FieldMatrix e = expanded_matrix(p.code().matrix());
  RegularActionReport rep;
  const bool exhaustive = n * n * n <= 50000000ULL;
  rep.sampled = !exhaustive;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));

  auto images = [&](std::uint64_t a, std::vector<std::uint32_t>& rimg, std::vector<std::uint32_t>& cimg) {
    const auto pr = automorphism_pair(p, a);
    rimg.resize(n);
    cimg.resize(n);
    for (std::uint32_t d = 0; d < q; ++d) {
      for (std::uint32_t i = 0; i < v; ++i) {
        rimg[d * v + i] = f.add(static_cast<Elem>(d), pr.m.diag[i]) * v + pr.m.perm(i);
        cimg[d * v + i] = f.sub(static_cast<Elem>(d), pr.n.diag[i]) * v + pr.n.perm(i);
      }
    }
  };
  std::vector<std::uint32_t> by_image(n, ~0u);
  std::vector<std::uint32_t> rimg, cimg;
  for (std::uint64_t a = 0; a < n; ++a) {
    images(a, rimg, cimg);
    auto holds = [&](std::uint32_t x, std::uint32_t y) { return e(rimg[x], cimg[y]) == e(x, y); };
    bool ok = true;
    if (exhaustive) {
      for (std::uint32_t x = 0; x < n && ok; ++x)
        for (std::uint32_t y = 0; y < n && ok; ++y) ok = holds(x, y);
    } else {
      for (int t = 0; t < 2000 && ok; ++t) ok = holds(pick(rng), pick(rng));
    }
    if (!ok) {
      rep.automorphisms = false;
      if (rep.witness.empty()) rep.witness = "Theta of codeword " + std::to_string(a) + " moves an entry";
    }
    if (a != 0) {
      for (std::uint32_t x = 0; x < n; ++x) {
        if (rimg[x] == x) {
          rep.free = false;
          if (rep.witness.empty()) rep.witness = "codeword " + std::to_string(a) + " fixes row label " + std::to_string(x);
          break;
        }
      }
    }
    if (by_image[rimg[0]] != ~0u) {
      rep.transitive = false;
    } else {
      by_image[rimg[0]] = static_cast<std::uint32_t>(a);
    }
  }
  for (auto x : by_image)
    if (x == ~0u) rep.transitive = false;
  if (!rep.transitive && rep.witness.empty()) rep.witness = "orbit of the first row label is not everything";

  if (rep.transitive) {
    std::vector<std::uint32_t> ra, rb, rc, scratch;
    auto closed = [&](std::uint64_t a, std::uint64_t b) {
      images(a, ra, scratch);
      images(b, rb, scratch);
      std::vector<std::uint32_t> comp(n);
      for (std::uint32_t x = 0; x < n; ++x) comp[x] = ra[rb[x]];
      images(by_image[comp[0]], rc, scratch);
      return comp == rc;
    };
    if (exhaustive) {
      for (std::uint64_t a = 0; a < n && rep.closed; ++a)
        for (std::uint64_t b = 0; b < n && rep.closed; ++b) rep.closed = closed(a, b);
    } else {
      for (int t = 0; t < 2000 && rep.closed; ++t) rep.closed = closed(pick(rng), pick(rng));
    }
    if (!rep.closed && rep.witness.empty()) rep.witness = "row images do not compose inside the set";
  }
  return rep;
}

GroupRingMatrix to_group_ring(const Field& f, const PatternMatrix& m) {
  GroupRingMatrix out(m.size(), std::vector<std::vector<std::int64_t>>(m.size(), std::vector<std::int64_t>(f.q(), 0)));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (m[i][j]) out[i][j][*m[i][j]] = 1;
  return out;
}

GroupRingMatrix to_group_ring(const Field& f, const FieldMatrix& m) {
  GroupRingMatrix out(m.rows(), std::vector<std::vector<std::int64_t>>(m.cols(), std::vector<std::int64_t>(f.q(), 0)));
  for (std::uint32_t i = 0; i < m.rows(); ++i)
    for (std::uint32_t j = 0; j < m.cols(); ++j) out[i][j][m(i, j)] = 1;
  return out;
}

GroupRingMatrix group_ring_multiply(const Field& f, const GroupRingMatrix& a, const GroupRingMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  const std::uint32_t q = f.q();
  GroupRingMatrix out(n, std::vector<std::vector<std::int64_t>>(m, std::vector<std::int64_t>(q, 0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < k; ++l)
        for (std::uint32_t s = 0; s < q; ++s) {
          if (a[i][l][s] == 0) continue;
          for (std::uint32_t t = 0; t < q; ++t) {
            if (b[l][j][t] == 0) continue;
            out[i][j][f.add(static_cast<Elem>(s), static_cast<Elem>(t))] += a[i][l][s] * b[l][j][t];
          }
        }
  return out;
}

}  // namespace ghfp
