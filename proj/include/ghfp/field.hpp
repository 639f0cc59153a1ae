#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ghfp/digits.hpp"

namespace ghfp {

// Canonical integer encoding of an element of GF(p^m): e = sum c_i p^i over the
// polynomial-basis coefficients. Every field in scope has q <= 65536.
using Elem = std::uint16_t;

bool is_prime(std::uint64_t n);

/// GF(p^m) defined by an explicit monic irreducible polynomial.
///
/// Elements are handled as their integer encodings. Addition is digitwise
/// mod p; multiplication goes through log/antilog tables built from a
/// primitive element found at construction. Immutable after construction.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = 65536;

  /// `poly` is c_0..c_m, little-endian, monic. Throws NotPrime, NotMonic,
  /// NotIrreducible or InvalidArgument.
  static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t m,
                                           std::vector<std::uint32_t> poly);

  /// Uses the pinned default polynomial for (p, m): the monic irreducible of
  /// degree m whose encoding sum c_i p^i is smallest.
  static std::shared_ptr<const Field> make_default(std::uint32_t p, std::uint32_t m);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& poly() const { return poly_; }

  Elem add(Elem a, Elem b) const { return static_cast<Elem>(digits_.add(a, b)); }
  Elem sub(Elem a, Elem b) const { return static_cast<Elem>(digits_.sub(a, b)); }
  Elem neg(Elem a) const { return static_cast<Elem>(digits_.neg(a)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;

  Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem a) const;

  /// Smallest-encoding primitive element and the discrete-log tables it
  /// induces. Only used for printing and for the multiplication fast path.
  Elem primitive() const { return exp_.size() > 1 ? exp_[1] : Elem{1}; }
  std::uint32_t log(Elem a) const;
  Elem exp(std::int64_t k) const;

  /// "0", "1", "x", "x^2", ... in powers of the primitive element (named x
  /// when the primitive element is the polynomial variable, w otherwise).
  std::string power_label(Elem a) const;
  std::optional<Elem> parse_power_label(const std::string& label) const;

  /// `p=<p> m=<m> poly=<c_0>,...,<c_m>`
  std::string header() const;

  bool operator==(const Field& other) const {
    return p_ == other.p_ && m_ == other.m_ && poly_ == other.poly_;
  }

  /// Schoolbook polynomial multiplication reduced modulo poly. Slow; the
  /// table path above is checked against it.
  Elem mul_slow(Elem a, Elem b) const;

 private:
  Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> poly);

  std::uint32_t p_, m_, q_;
  std::vector<std::uint32_t> poly_;
  DigitArith digits_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool same_field(const FieldPtr& a, const FieldPtr& b);
void require_same_field(const FieldPtr& a, const FieldPtr& b);

/// Irreducibility over GF(p) by trial division against every monic
/// polynomial of degree <= m/2.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

/// Smallest monic irreducible of degree m by encoding value (exhaustive search).
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t m);

/// Pinned defaults; empty when (p, m) is not in the table.
std::vector<std::uint32_t> pinned_default_poly(std::uint32_t p, std::uint32_t m);

/// Value type pairing an encoding with its field. Mixing fields throws
/// FieldMismatch.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::int64_t e) const;

  bool operator==(const FieldElement& o) const {
    return same_field(field_, o.field_) && value_ == o.value_;
  }

 private:
  FieldPtr field_;
  Elem value_;
};

}  // namespace ghfp
