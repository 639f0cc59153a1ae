#include "ghfp/field.hpp"

#include <algorithm>
#include <sstream>

#include "ghfp/error.hpp"

namespace ghfp {

namespace {

using Poly = std::vector<std::uint32_t>;

std::uint32_t ipow(std::uint32_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return static_cast<std::uint32_t>(r);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b, coefficients mod p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
    }
    trim(a);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------- DigitArith

DigitArith::DigitArith(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    n *= p;
    if (n > (1ULL << 31)) throw Error(ErrorKind::InvalidArgument, "elementary abelian order too large");
  }
  order_ = static_cast<std::uint32_t>(n);
  if (p == 2) return;
  const std::uint32_t lo = k / 2;
  lo_size_ = ipow(p, lo);
  hi_size_ = ipow(p, k - lo);
  add_lo_ = build_add(p, lo);
  add_hi_ = build_add(p, k - lo);
  neg_lo_ = build_neg(p, lo);
  neg_hi_ = build_neg(p, k - lo);
}

std::vector<std::uint32_t> DigitArith::build_add(std::uint32_t p, std::uint32_t digits) {
  const std::uint32_t n = ipow(p, digits);
  std::vector<std::uint32_t> t(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      std::uint32_t x = a, y = b, r = 0, place = 1;
      for (std::uint32_t d = 0; d < digits; ++d) {
        r += ((x % p + y % p) % p) * place;
        x /= p;
        y /= p;
        place *= p;
      }
      t[static_cast<std::size_t>(a) * n + b] = r;
    }
  }
  return t;
}

std::vector<std::uint32_t> DigitArith::build_neg(std::uint32_t p, std::uint32_t digits) {
  const std::uint32_t n = ipow(p, digits);
  std::vector<std::uint32_t> t(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint32_t x = a, r = 0, place = 1;
    for (std::uint32_t d = 0; d < digits; ++d) {
      r += ((p - x % p) % p) * place;
      x /= p;
      place *= p;
    }
    t[a] = r;
  }
  return t;
}

std::uint32_t DigitArith::scale(std::uint32_t a, std::uint32_t t) const {
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < t % p_; ++i) r = add(r, a);
  return r;
}

// --------------------------------------------------------------------- Field

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
  if (m == 1) return true;
  // Every monic divisor candidate of degree d, 1 <= d <= m/2.
  for (std::uint32_t d = 1; d <= m / 2; ++d) {
    const std::uint32_t count = ipow(p, d);
    for (std::uint32_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint32_t c = code;
      for (std::uint32_t i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "degree must be positive");
  const std::uint64_t count = ipow(p, m);
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(m + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[m] = 1;
    if (is_irreducible(p, f)) return f;
  }
  throw Error(ErrorKind::NotIrreducible, "no irreducible polynomial found");
}

std::vector<std::uint32_t> pinned_default_poly(std::uint32_t p, std::uint32_t m) {
  struct Entry {
    std::uint32_t p, m;
    std::vector<std::uint32_t> poly;
  };
  // Smallest monic irreducible by encoding value; regenerated by
  // smallest_irreducible() and compared in the unit tests.
  static const std::vector<Entry> table = {
#include "default_polys.inc"
  };
  for (const auto& e : table) {
    if (e.p == p && e.m == m) return e.poly;
  }
  return {};
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> poly)
    : p_(p), m_(m), q_(ipow(p, m)), poly_(std::move(poly)), digits_(p, m) {
  // Find the smallest-encoding element of multiplicative order q-1.
  log_.assign(q_, 0);
  exp_.assign(q_ - 1 > 0 ? q_ - 1 : 1, 1);
  if (q_ == 2) {
    exp_ = {1};
    log_[1] = 0;
    return;
  }
  for (std::uint32_t g = 2; g < q_; ++g) {
    std::vector<Elem> powers;
    powers.reserve(q_ - 1);
    Elem x = 1;
    bool primitive = true;
    for (std::uint32_t k = 0; k < q_ - 1; ++k) {
      if (k > 0 && x == 1) {
        primitive = false;
        break;
      }
      powers.push_back(x);
      x = mul_slow(x, static_cast<Elem>(g));
    }
    if (!primitive || x != 1) continue;
    exp_ = std::move(powers);
    for (std::uint32_t k = 0; k < q_ - 1; ++k) log_[exp_[k]] = k;
    return;
  }
  throw Error(ErrorKind::NotIrreducible, "no primitive element; polynomial cannot be irreducible");
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t m,
                                         std::vector<std::uint32_t> poly) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "degree m must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) q *= p;
  if (q > kMaxOrder) throw Error(ErrorKind::InvalidArgument, "field order exceeds 65536");
  if (poly.size() != m + 1) {
    throw Error(ErrorKind::InvalidArgument, "polynomial must have m+1 coefficients");
  }
  for (auto c : poly) {
    if (c >= p) throw Error(ErrorKind::InvalidArgument, "coefficient out of range [0,p)");
  }
  if (poly[m] != 1) throw Error(ErrorKind::NotMonic, "leading coefficient must be 1");
  if (!is_irreducible(p, poly)) throw Error(ErrorKind::NotIrreducible, "polynomial is reducible over GF(p)");
  return std::shared_ptr<const Field>(new Field(p, m, std::move(poly)));
}

std::shared_ptr<const Field> Field::make_default(std::uint32_t p, std::uint32_t m) {
  auto poly = pinned_default_poly(p, m);
  if (poly.empty()) poly = smallest_irreducible(p, m);
  return make(p, m, std::move(poly));
}

Elem Field::mul_slow(Elem a, Elem b) const {
  const auto ca = coeffs(a);
  const auto cb = coeffs(b);
  Poly prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    for (std::uint32_t j = 0; j < m_; ++j) {
      prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    }
  }
  Poly r = poly_mod(prod, poly_, p_);
  r.resize(m_, 0);
  return from_coeffs(r);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (e == 0) return 1;
  if (a == 0) {
    if (e < 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    return 0;
  }
  const std::int64_t order = q_ - 1;
  std::int64_t k = (static_cast<std::int64_t>(log_[a]) * (e % order)) % order;
  if (k < 0) k += order;
  return exp_[static_cast<std::size_t>(k)];
}

Elem Field::from_coeffs(std::span<const std::uint32_t> c) const {
  std::uint32_t e = 0, place = 1;
  for (std::size_t i = 0; i < c.size() && i < m_; ++i) {
    e += (c[i] % p_) * place;
    place *= p_;
  }
  return static_cast<Elem>(e);
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
  std::vector<std::uint32_t> c(m_);
  std::uint32_t x = a;
  for (std::uint32_t i = 0; i < m_; ++i) {
    c[i] = x % p_;
    x /= p_;
  }
  return c;
}

std::uint32_t Field::log(Elem a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "log of zero");
  return log_[a];
}

Elem Field::exp(std::int64_t k) const {
  const std::int64_t order = q_ - 1;
  k %= order;
  if (k < 0) k += order;
  return exp_[static_cast<std::size_t>(k)];
}

std::string Field::power_label(Elem a) const {
  if (a == 0) return "0";
  const std::uint32_t l = log_[a];
  if (l == 0) return "1";
  const std::string var = (q_ > 2 && primitive() == p_ && m_ > 1) ? "x" : "w";
  return l == 1 ? var : var + "^" + std::to_string(l);
}

std::optional<Elem> Field::parse_power_label(const std::string& label) const {
  for (std::uint32_t e = 0; e < q_; ++e) {
    if (power_label(static_cast<Elem>(e)) == label) return static_cast<Elem>(e);
  }
  return std::nullopt;
}

std::string Field::header() const {
  std::ostringstream os;
  os << "p=" << p_ << " m=" << m_ << " poly=";
  for (std::size_t i = 0; i < poly_.size(); ++i) {
    if (i) os << ',';
    os << poly_[i];
  }
  return os.str();
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!same_field(a, b)) {
    throw Error(ErrorKind::FieldMismatch,
                (a ? a->header() : "null") + " vs " + (b ? b->header() : "null"));
  }
}

// -------------------------------------------------------------- FieldElement

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_ || value_ >= field_->q()) {
    throw Error(ErrorKind::InvalidArgument, "encoding outside [0,q)");
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_->div(value_, o.value_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }

FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }

FieldElement FieldElement::pow(std::int64_t e) const { return {field_, field_->pow(value_, e)}; }

}  // namespace ghfp
