#include "ghfp/gh_matrix.hpp"

#include <string>

#include "ghfp/error.hpp"

namespace ghfp {

namespace {

void require_gh_shape(const FieldMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::NotSquare, "GH matrix must be square");
  const std::uint32_t q = m.field()->q();
  if (m.rows() % q != 0) {
    throw Error(ErrorKind::DivisibilityViolated,
                "q=" + std::to_string(q) + " does not divide v=" + std::to_string(m.rows()));
  }
}

std::optional<GhWitness> scan_rows(const FieldMatrix& m) {
  const Field& f = *m.field();
  const std::uint32_t v = m.rows(), q = f.q(), lambda = v / q;
  std::vector<std::uint32_t> count(q);
  for (std::uint32_t i = 0; i < v; ++i) {
    const auto ri = m.row(i);
    for (std::uint32_t j = i + 1; j < v; ++j) {
      const auto rj = m.row(j);
      std::fill(count.begin(), count.end(), 0);
      for (std::uint32_t k = 0; k < v; ++k) ++count[f.sub(ri[k], rj[k])];
      for (std::uint32_t u = 0; u < q; ++u) {
        if (count[u] != lambda) return GhWitness{i, j, static_cast<Elem>(u), count[u]};
      }
    }
  }
  return std::nullopt;
}

// Index of V = F_q^k lexicographically: digit i (most significant first) is
// the encoding of coordinate i.
std::vector<Elem> coords_of(std::uint32_t index, std::uint32_t q, std::uint32_t k) {
  std::vector<Elem> c(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    c[k - 1 - i] = static_cast<Elem>(index % q);
    index /= q;
  }
  return c;
}

}  // namespace

GhCheck is_gh(const FieldMatrix& m, bool check_transpose) {
  require_gh_shape(m);
  if (auto w = scan_rows(m)) return {false, w};
  if (check_transpose) {
    if (auto w = scan_rows(m.transpose())) {
      w->transposed = true;
      return {false, w};
    }
  }
  return {true, std::nullopt};
}

GHMatrix GHMatrix::verified(FieldMatrix m) {
  const auto check = is_gh(m);
  if (!check.ok) {
    const auto& w = *check.witness;
    throw Error(ErrorKind::NotGH, "rows " + std::to_string(w.i) + "," + std::to_string(w.j) + ": element " +
                                      std::to_string(w.u) + " occurs " + std::to_string(w.count) + " times");
  }
  return GHMatrix(std::move(m));
}

GHMatrix GHMatrix::from_orthogonal_cocycle(const Cocycle& psi) {
  const auto r = is_orthogonal(psi);
  if (!r.orthogonal) throw Error(ErrorKind::NotOrthogonal, "cocyclic matrix is not GH");
  return GHMatrix(matrix_of(psi));
}

GHMatrix GHMatrix::trusted(FieldMatrix m) {
  // 1x1 is let through: it carries the degenerate code C_1 of length 1.
  if (m.rows() != 1 || m.cols() != 1) require_gh_shape(m);
  return GHMatrix(std::move(m));
}

bool GHMatrix::is_normalized() const {
  for (std::uint32_t i = 0; i < v(); ++i)
    if (m_(0, i) != 0 || m_(i, 0) != 0) return false;
  return true;
}

GHMatrix normalize(const GHMatrix& h) {
  const Field& f = *h.field();
  FieldMatrix m = h.matrix();
  const std::uint32_t v = m.rows();
  std::vector<Elem> first(m.row(0).begin(), m.row(0).end());
  for (std::uint32_t i = 0; i < v; ++i)
    for (std::uint32_t j = 0; j < v; ++j) m(i, j) = f.sub(m(i, j), first[j]);
  for (std::uint32_t i = 0; i < v; ++i) {
    const Elem c = m(i, 0);
    for (std::uint32_t j = 0; j < v; ++j) m(i, j) = f.sub(m(i, j), c);
  }
  return GHMatrix::trusted(std::move(m));
}

Cocycle sylvester_cocycle(const FieldPtr& field, OrderMode mode) {
  const Field& f = *field;
  const std::uint32_t q = f.q();
  Group g = additive_group_of(f, mode);
  FieldMatrix t(field, q, q);
  for (std::uint32_t i = 0; i < q; ++i) {
    const Elem a = element_at(f, mode, i);
    for (std::uint32_t j = 0; j < q; ++j) t(i, j) = f.mul(a, element_at(f, mode, j));
  }
  return Cocycle::trusted(std::move(g), std::move(t));
}

GHMatrix sylvester(const FieldPtr& field, OrderMode mode) {
  return GHMatrix::trusted(matrix_of(sylvester_cocycle(field, mode)));
}

GHMatrix sylvester_power(const FieldPtr& field, std::uint32_t t) {
  if (t == 0) throw Error(ErrorKind::InvalidArgument, "sylvester_power needs t >= 1");
  const GHMatrix s = sylvester(field);
  GHMatrix acc = s;
  for (std::uint32_t i = 1; i < t; ++i) acc = kronecker_sum(s, acc);
  return acc;
}

Cocycle gen_sylvester_cocycle(const FieldPtr& field, std::uint32_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "gen_sylvester needs k >= 1");
  const Field& f = *field;
  const std::uint32_t q = f.q();
  std::uint64_t v64 = 1;
  for (std::uint32_t i = 0; i < k; ++i) v64 *= q;
  if (v64 > 65536) throw Error(ErrorKind::SizeGateExceeded, "generalized Sylvester order too large");
  const auto v = static_cast<std::uint32_t>(v64);
  std::vector<std::vector<Elem>> coords(v);
  for (std::uint32_t x = 0; x < v; ++x) coords[x] = coords_of(x, q, k);
  FieldMatrix t(field, v, v);
  for (std::uint32_t x = 0; x < v; ++x) {
    for (std::uint32_t y = 0; y < v; ++y) {
      Elem dot = 0;
      for (std::uint32_t i = 0; i < k; ++i) dot = f.add(dot, f.mul(coords[x][i], coords[y][i]));
      t(x, y) = dot;
    }
  }
  return Cocycle::trusted(Group::elementary_abelian(f.p(), f.m() * k), std::move(t));
}

GHMatrix gen_sylvester(const FieldPtr& field, std::uint32_t k) {
  return GHMatrix::trusted(matrix_of(gen_sylvester_cocycle(field, k)));
}

GHMatrix gen_sylvester(std::uint32_t p, std::uint32_t m, std::uint32_t k) {
  return gen_sylvester(Field::make_default(p, m), k);
}

FieldMatrix kronecker_sum_matrix(const FieldMatrix& h, const FieldMatrix& b) {
  require_same_field(h.field(), b.field());
  const Field& f = *h.field();
  const std::uint32_t n = b.rows(), m = b.cols();
  FieldMatrix out(h.field(), h.rows() * n, h.cols() * m);
  for (std::uint32_t i = 0; i < h.rows(); ++i)
    for (std::uint32_t j = 0; j < h.cols(); ++j)
      for (std::uint32_t s = 0; s < n; ++s)
        for (std::uint32_t t = 0; t < m; ++t) out(i * n + s, j * m + t) = f.add(h(i, j), b(s, t));
  return out;
}

GHMatrix kronecker_sum(const GHMatrix& h, std::span<const GHMatrix> blocks) {
  if (blocks.size() != h.v()) throw Error(ErrorKind::SizeMismatch, "need one block per row of H");
  const std::uint32_t n = blocks.front().v();
  for (const auto& b : blocks) {
    require_same_field(h.field(), b.field());
    if (b.v() != n) throw Error(ErrorKind::OrderMismatch, "all blocks must have the same order");
  }
  const Field& f = *h.field();
  const std::uint32_t v = h.v();
  FieldMatrix out(h.field(), v * n, v * n);
  for (std::uint32_t i = 0; i < v; ++i)
    for (std::uint32_t j = 0; j < v; ++j)
      for (std::uint32_t s = 0; s < n; ++s)
        for (std::uint32_t t = 0; t < n; ++t) out(i * n + s, j * n + t) = f.add(h(i, j), blocks[i](s, t));
  return GHMatrix::trusted(std::move(out));
}

GHMatrix kronecker_sum(const GHMatrix& h, const GHMatrix& b) {
  require_same_field(h.field(), b.field());
  return GHMatrix::trusted(kronecker_sum_matrix(h.matrix(), b.matrix()));
}

}  // namespace ghfp
