#include "ghfp/propelinear.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_map>

#include "ghfp/abelian.hpp"
#include "ghfp/error.hpp"

namespace ghfp {

PropelinearCode PropelinearCode::from_cocycle(const Cocycle& psi) {
  // v = 1 is the degenerate code C_1 on one coordinate; no row pairs to check.
  if (psi.v() > 1 && !is_orthogonal(psi).orthogonal) throw Error(ErrorKind::NotOrthogonal, "cocycle is not orthogonal");
  PropelinearCode p(psi, GHCode::from_matrix(GHMatrix::trusted(matrix_of(psi))));
  if (psi.v() <= kCachedPiLimit) {
    p.cache_.reserve(psi.v());
    for (std::uint32_t r = 0; r < psi.v(); ++r) p.cache_.push_back(p.compute_pi(r));
  }
  return p;
}

Perm PropelinearCode::compute_pi(std::uint32_t r) const {
  const Group& g = group();
  const std::uint32_t ri = g.inv(r);
  std::vector<std::uint32_t> img(v());
  for (std::uint32_t l = 0; l < v(); ++l) img[l] = g.mul(ri, l);
  return Perm(std::move(img));
}

Perm PropelinearCode::pi_row(std::uint32_t r) const {
  if (auto it = overrides_.find(r); it != overrides_.end()) return it->second;
  if (!cache_.empty()) return cache_[r];
  return compute_pi(r);
}

void PropelinearCode::override_pi(std::uint32_t r, Perm p) {
  if (p.size() != v()) throw Error(ErrorKind::LengthMismatch, "override has the wrong degree");
  overrides_[r] = std::move(p);
}

std::uint64_t PropelinearCode::star(std::uint64_t x, std::uint64_t y) const {
  const Field& f = *field();
  const std::uint32_t rx = row_of_id(x), ry = row_of_id(y);
  const Elem c = f.add(f.add(const_of_id(x), const_of_id(y)), psi_(ry, rx));
  return make_id(group().mul(ry, rx), c);
}

std::uint64_t PropelinearCode::star_inverse(std::uint64_t x) const {
  const Field& f = *field();
  const std::uint32_t rx = row_of_id(x), ry = group().inv(rx);
  return make_id(ry, f.neg(f.add(const_of_id(x), psi_(ry, rx))));
}

Word PropelinearCode::star_vec(std::span<const Elem> x, std::span<const Elem> y) const {
  const auto id = find(x);
  if (!id) throw Error(ErrorKind::NotACodeword, "left operand is not a codeword");
  return star_vec(*id, y);
}

Word PropelinearCode::star_vec(std::uint64_t x, std::span<const Elem> y) const {
  if (y.size() != v()) throw Error(ErrorKind::LengthMismatch, "vector length differs from code length");
  const Field& f = *field();
  const Perm p = pi(x);
  Word out = apply_to_vector<Elem>(p, y);
  const auto r = code_.matrix().row(row_of_id(x));
  const Elem c = const_of_id(x);
  for (std::uint32_t i = 0; i < v(); ++i) out[i] = f.add(out[i], f.add(r[i], c));
  return out;
}

std::uint64_t PropelinearCode::phi(ExtPoint e) const {
  const Field& f = *field();
  const std::uint32_t gi = group().inv(e.g);
  return make_id(gi, f.neg(f.add(e.k, psi_(e.g, gi))));
}

ExtPoint PropelinearCode::phi_inverse(std::uint64_t id) const {
  const Field& f = *field();
  const std::uint32_t r = row_of_id(id), g = group().inv(r);
  return {f.neg(f.add(const_of_id(id), psi_(r, g))), g};
}

Word PropelinearCode::phi_word(ExtPoint e) const {
  const Field& f = *field();
  const std::uint32_t gi = group().inv(e.g);
  const Elem lead = f.neg(f.add(e.k, psi_(e.g, gi)));
  Word w(v());
  for (std::uint32_t j = 0; j < v(); ++j) w[j] = f.add(lead, psi_(gi, j));
  return w;
}

// ------------------------------------------------------------------- PiGroup

PiGroup::PiGroup(const PropelinearCode& p) {
  const std::uint32_t v = p.v();
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> index;
  auto key = [](const Perm& x) {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto i : x.images()) h = (h ^ i) * 1099511628211ULL;
    return h;
  };
  auto lookup = [&](const Perm& x) -> std::optional<std::uint32_t> {
    auto it = index.find(key(x));
    if (it == index.end()) return std::nullopt;
    for (auto i : it->second)
      if (perms_[i] == x) return i;
    return std::nullopt;
  };
  // Identity first so the view has identity 0.
  std::vector<std::uint32_t> order(v);
  for (std::uint32_t r = 0; r < v; ++r) order[r] = r;
  for (std::uint32_t r : order) {
    Perm x = p.pi_row(r);
    if (r == 0 && !x.is_identity()) x = Perm::identity(v);
    if (lookup(x)) continue;
    index[key(x)].push_back(static_cast<std::uint32_t>(perms_.size()));
    perms_.push_back(std::move(x));
  }
  if (!perms_.front().is_identity()) {
    perms_.insert(perms_.begin(), Perm::identity(v));
    index.clear();
    for (std::uint32_t i = 0; i < perms_.size(); ++i) index[key(perms_[i])].push_back(i);
  }
  const std::size_t n = perms_.size();
  if (n > kMaxTabulated) throw Error(ErrorKind::SizeGateExceeded, "permutation group too large to tabulate");
  table_.assign(n * n, 0);
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto c = lookup(compose(perms_[a], perms_[b]));
      if (!c) {
        closed_ = false;
        continue;
      }
      table_[a * n + b] = *c;
      if (*c == 0) inverse_[a] = static_cast<std::uint32_t>(b);
    }
  }
}

// -------------------------------------------------------------- verification

bool PropelinearReport::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; });
}

const CheckItem* PropelinearReport::find(const std::string& name) const {
  for (const auto& c : items)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

std::string pair_witness(std::uint64_t a, std::uint64_t b) {
  std::ostringstream os;
  os << "x=" << a << " y=" << b;
  return os.str();
}

// The vector-rule product on ids. With a table of row pairs when exhaustive.
class VectorStar {
 public:
  VectorStar(const PropelinearCode& p, bool tabulate) : p_(p) {
    if (!tabulate) return;
    const std::uint32_t v = p.v();
    table_.assign(static_cast<std::size_t>(v) * v, kMissing);
    for (std::uint32_t r = 0; r < v; ++r)
      for (std::uint32_t s = 0; s < v; ++s) table_[static_cast<std::size_t>(r) * v + s] = compute(r, s);
  }

  static constexpr std::uint64_t kMissing = ~0ULL;

  // Product of rows r and s (constants zero); kMissing when outside C.
  std::uint64_t rows(std::uint32_t r, std::uint32_t s) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(r) * p_.v() + s];
    return compute(r, s);
  }

  // General ids: constants pass straight through since pi fixes 1.
  std::uint64_t operator()(std::uint64_t x, std::uint64_t y) const {
    const std::uint64_t z = rows(p_.row_of_id(x), p_.row_of_id(y));
    if (z == kMissing) return kMissing;
    const Field& f = *p_.field();
    const Elem c = f.add(f.add(p_.const_of_id(z), p_.const_of_id(x)), p_.const_of_id(y));
    return p_.make_id(p_.row_of_id(z), c);
  }

 private:
  std::uint64_t compute(std::uint32_t r, std::uint32_t s) const {
    const auto y = p_.code().matrix().row(s);
    const Word z = p_.star_vec(p_.make_id(r, 0), y);
    const auto id = p_.find(z);
    return id ? *id : kMissing;
  }

  const PropelinearCode& p_;
  std::vector<std::uint64_t> table_;
};

// pi_a recovered from the group law alone: column j of {a * f - a : f in F_H}
// equals column pi_a^{-1}(j) of H.
std::optional<Perm> recover_pi(const PropelinearCode& p, std::uint64_t a,
                               const std::unordered_map<std::uint64_t, std::uint32_t>& col_index) {
  const Field& f = *p.field();
  const std::uint32_t v = p.v();
  const auto& h = p.code().matrix();
  const Word aw = p.word(a);
  std::vector<std::uint64_t> prod(v);
  for (std::uint32_t s = 0; s < v; ++s) prod[s] = p.star(a, p.make_id(s, 0));
  std::vector<std::uint32_t> img(v);
  Word col(v);
  for (std::uint32_t j = 0; j < v; ++j) {
    for (std::uint32_t s = 0; s < v; ++s) {
      const Elem zj = f.add(p.const_of_id(prod[s]), h(p.row_of_id(prod[s]), j));
      col[s] = f.sub(zj, aw[j]);
    }
    const auto it = col_index.find(hash_word(col));
    if (it == col_index.end()) return std::nullopt;
    img[it->second] = j;  // pi_a(l) = j with l the matching column
  }
  try {
    return Perm(std::move(img));
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

PropelinearReport verify_full_propelinear(const PropelinearCode& p, const VerifyOptions& opt) {
  PropelinearReport rep;
  const std::uint32_t v = p.v();
  const bool exhaustive = p.size() <= opt.exhaustive_limit;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::uint32_t> pick_row(0, v - 1);
  const VectorStar vstar(p, exhaustive);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  if (exhaustive) {
    for (std::uint32_t r = 0; r < v; ++r)
      for (std::uint32_t s = 0; s < v; ++s) pairs.emplace_back(r, s);
  } else {
    for (std::uint64_t i = 0; i < opt.samples; ++i) pairs.emplace_back(pick_row(rng), pick_row(rng));
  }

  // pi on the identity coset.
  {
    CheckItem it{"identity_pi", true, "", false};
    if (!p.pi_row(0).is_identity()) {
      it.pass = false;
      it.witness = "pi_0=" + p.pi_row(0).cycle_form();
    }
    rep.items.push_back(it);
  }

  // Axiom (i): x * C = C and 0 -> x.
  {
    CheckItem it{"axiom_i", true, "", !exhaustive};
    const Word zero(v, 0);
    for (std::uint32_t r = 0; r < v && it.pass; ++r) {
      const auto x = p.make_id(r, 0);
      if (p.star_vec(x, zero) != p.word(x)) {
        it.pass = false;
        it.witness = "x=" + std::to_string(x) + " does not send 0 to x";
      }
    }
    for (const auto& [r, s] : pairs) {
      if (!it.pass) break;
      if (vstar.rows(r, s) == VectorStar::kMissing) {
        it.pass = false;
        it.witness = pair_witness(p.make_id(r, 0), p.make_id(s, 0)) + " leaves C";
      }
    }
    rep.items.push_back(it);
  }

  // Axiom (ii): pi_x pi_y = pi_{x*y}.
  {
    CheckItem it{"axiom_ii", true, "", !exhaustive};
    for (const auto& [r, s] : pairs) {
      const auto z = vstar.rows(r, s);
      if (z == VectorStar::kMissing) continue;
      if (compose(p.pi_row(r), p.pi_row(s)) != p.pi(z)) {
        it.pass = false;
        it.witness = pair_witness(p.make_id(r, 0), p.make_id(s, 0));
        break;
      }
    }
    rep.items.push_back(it);
  }

  // Vector rule agrees with the group law of E_psi transported by Phi.
  {
    CheckItem it{"group_law", true, "", !exhaustive};
    for (const auto& [r, s] : pairs) {
      const auto x = p.make_id(r, 0), y = p.make_id(s, 0);
      if (vstar(x, y) != p.star(x, y)) {
        it.pass = false;
        it.witness = pair_witness(x, y);
        break;
      }
    }
    rep.items.push_back(it);
  }

  // Group axioms for the vector rule: identity, inverses, associativity.
  {
    CheckItem it{"group_axioms", true, "", !exhaustive};
    for (std::uint32_t r = 0; r < v && it.pass; ++r) {
      const auto x = p.make_id(r, 0);
      if (vstar(0, x) != x || vstar(x, 0) != x) {
        it.pass = false;
        it.witness = "identity fails at x=" + std::to_string(x);
      } else if (vstar(x, p.star_inverse(x)) != 0 || vstar(p.star_inverse(x), x) != 0) {
        it.pass = false;
        it.witness = "no inverse for x=" + std::to_string(x);
      }
    }
    const std::uint64_t triples = static_cast<std::uint64_t>(v) * v * v;
    const bool all = exhaustive && triples <= 1000000;
    auto check = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
      const auto x = p.make_id(a, 0), y = p.make_id(b, 0), z = p.make_id(c, 0);
      const auto xy = vstar(x, y), yz = vstar(y, z);
      if (xy == VectorStar::kMissing || yz == VectorStar::kMissing) return false;
      return vstar(xy, z) == vstar(x, yz);
    };
    if (all) {
      for (std::uint32_t a = 0; a < v && it.pass; ++a)
        for (std::uint32_t b = 0; b < v && it.pass; ++b)
          for (std::uint32_t c = 0; c < v && it.pass; ++c)
            if (!check(a, b, c)) {
              it.pass = false;
              it.witness = "associativity fails at rows " + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c);
            }
    } else {
      it.sampled = true;
      const std::uint64_t n = std::min<std::uint64_t>(opt.samples, exhaustive ? triples : 20000);
      for (std::uint64_t i = 0; i < n && it.pass; ++i) {
        const auto a = pick_row(rng), b = pick_row(rng), c = pick_row(rng);
        if (!check(a, b, c)) {
          it.pass = false;
          it.witness = "associativity fails at rows " + std::to_string(a) + "," + std::to_string(b) + "," +
                       std::to_string(c);
        }
      }
    }
    rep.items.push_back(it);
  }

  // Fullness: no fixed coordinate off C_1.
  {
    CheckItem it{"fullness", true, "", false};
    for (std::uint32_t r = 1; r < v; ++r) {
      const auto fp = p.pi_row(r).fixed_points();
      if (fp != 0) {
        it.pass = false;
        it.witness = "coset " + std::to_string(r) + " fixes " + std::to_string(fp) + " coordinates";
        break;
      }
    }
    rep.items.push_back(it);
  }

  // pi is constant on cosets of C_1 and is the one forced by the group law.
  {
    CheckItem it{"pi_constant_on_cosets", true, "", false};
    const auto& h = p.code().matrix();
    std::unordered_map<std::uint64_t, std::uint32_t> col_index;
    Word col(v);
    for (std::uint32_t l = 0; l < v; ++l) {
      for (std::uint32_t s = 0; s < v; ++s) col[s] = h(s, l);
      col_index.emplace(hash_word(col), l);
    }
    std::vector<std::uint64_t> ids;
    const double cost = static_cast<double>(p.size()) * v * v;
    if (cost <= 5e8) {
      for (std::uint64_t a = 0; a < p.size(); ++a) ids.push_back(a);
    } else {
      it.sampled = true;
      std::uniform_int_distribution<std::uint64_t> pick(0, p.size() - 1);
      for (int i = 0; i < 64; ++i) ids.push_back(pick(rng));
    }
    for (auto a : ids) {
      const auto rec = recover_pi(p, a, col_index);
      if (!rec || *rec != p.pi(a)) {
        it.pass = false;
        it.witness = "x=" + std::to_string(a) + (rec ? " recovered " + rec->cycle_form() : " has no consistent pi");
        break;
      }
    }
    rep.items.push_back(it);
  }

  // pi_x^{-1}(i) = pi_y^{-1}(i) only when x - y lies in C_1.
  {
    CheckItem it{"coordinate_injectivity", true, "", false};
    std::vector<std::uint32_t> seen(static_cast<std::size_t>(v) * v, ~0u);
    for (std::uint32_t r = 0; r < v && it.pass; ++r) {
      const Perm inv = p.pi_row(r).inverse();
      for (std::uint32_t i = 0; i < v; ++i) {
        auto& slot = seen[static_cast<std::size_t>(i) * v + inv(i)];
        if (slot != ~0u) {
          it.pass = false;
          it.witness = "cosets " + std::to_string(slot) + "," + std::to_string(r) + " at coordinate " +
                       std::to_string(i + 1);
          break;
        }
        slot = r;
      }
    }
    rep.items.push_back(it);
  }

  // Pi ~ C / C_1.
  {
    CheckItem it{"pi_isomorphic_to_quotient", true, "", false};
    const QuotientGroupView quot{&p.group()};
    if (opt.structures) rep.quotient_group = describe(quot, opt.seed);
    if (v <= PiGroup::kMaxTabulated) {
      const PiGroup pig(p);
      if (pig.order() != v || !pig.closed()) {
        it.pass = false;
        it.witness = "|Pi|=" + std::to_string(pig.order()) + (pig.closed() ? "" : " not closed");
      } else if (opt.structures) {
        rep.pi_group = describe(pig, opt.seed);
        const auto& a = rep.pi_group;
        const auto& b = rep.quotient_group;
        const bool same = a.abelian == b.abelian && a.order == b.order && a.exponent == b.exponent &&
                          a.invariants == b.invariants && a.center_order == b.center_order;
        if (!same) {
          it.pass = false;
          it.witness = "Pi=" + a.to_string() + " C/C1=" + b.to_string();
        }
      }
    } else {
      it.sampled = true;
      if (opt.structures) rep.pi_group = rep.quotient_group;
    }
    rep.items.push_back(it);
  }

  if (opt.structures) rep.code_group = describe(StarGroupView{&p}, opt.seed);
  return rep;
}

bool regular_subgroup_check(const PropelinearCode& p, const VerifyOptions& opt) {
  const std::uint32_t v = p.v();
  const auto& h = p.code().matrix();
  // Transitive: rho_x(0) = x for every x.
  const Word zero(v, 0);
  for (std::uint64_t x = 0; x < p.size(); x += (p.size() > opt.exhaustive_limit ? 97 : 1)) {
    if (p.star_vec(x, zero) != p.word(x)) return false;
  }
  // rho_x rho_y = rho_{x*y} on rows; constants commute with everything.
  auto check = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    const auto x = p.make_id(a, 0), y = p.make_id(b, 0);
    const Word yz = p.star_vec(y, h.row(c));
    const Word lhs = p.star_vec(x, yz);
    const auto xy = p.find(p.star_vec(x, p.word(y)));
    if (!xy) return false;
    return lhs == p.star_vec(*xy, h.row(c));
  };
  const std::uint64_t triples = static_cast<std::uint64_t>(v) * v * v;
  if (triples <= 1000000) {
    for (std::uint32_t a = 0; a < v; ++a)
      for (std::uint32_t b = 0; b < v; ++b)
        for (std::uint32_t c = 0; c < v; ++c)
          if (!check(a, b, c)) return false;
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, v - 1);
    const std::uint64_t n = std::min<std::uint64_t>(opt.samples, 20000);
    for (std::uint64_t i = 0; i < n; ++i)
      if (!check(pick(rng), pick(rng), pick(rng))) return false;
  }
  // Trivial stabilizers: rho_x fixes some y only when x = 0.
  const std::uint32_t step = v > 729 ? 13 : 1;
  for (std::uint32_t r = 0; r < v; r += (r == 0 ? 1 : step)) {
    for (std::uint32_t s = 0; s < v; s += step) {
      const auto z = p.find(p.star_vec(p.make_id(r, 0), h.row(s)));
      if (!z) return false;
      // (r, c) fixes (s, c') iff row(z) = s and c = -const(z).
      if (p.row_of_id(*z) == s && r != 0) return false;
      if (r == 0 && *z != p.make_id(s, 0)) return false;
    }
  }
  return true;
}

PropelinearCode kronecker_propelinear(const PropelinearCode& a, const PropelinearCode& b) {
  return PropelinearCode::from_cocycle(tensor(a.cocycle(), b.cocycle()));
}

Perm blockwise_pi(const PropelinearCode& a, const PropelinearCode& b, std::uint32_t ra, std::uint32_t rb) {
  const Perm pa = a.pi_row(ra), pb = b.pi_row(rb);
  const std::uint32_t n = b.v();
  std::vector<std::uint32_t> img(static_cast<std::size_t>(a.v()) * n);
  for (std::uint32_t l1 = 0; l1 < a.v(); ++l1)
    for (std::uint32_t l2 = 0; l2 < n; ++l2) img[l1 * n + l2] = pa(l1) * n + pb(l2);
  return Perm(std::move(img));
}

}  // namespace ghfp
