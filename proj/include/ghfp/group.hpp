#pragma once

#include <concepts>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ghfp/digits.hpp"
#include "ghfp/field.hpp"

namespace ghfp {

/// Anything with indexed elements 0..order()-1, identity 0, mul and inv.
template <class G>
concept FiniteGroup = requires(const G& g, std::uint32_t a, std::uint32_t b) {
  { g.order() } -> std::convertible_to<std::uint64_t>;
  { g.mul(a, b) } -> std::convertible_to<std::uint32_t>;
  { g.inv(a) } -> std::convertible_to<std::uint32_t>;
};

/// A finite group with elements indexed 0..v-1 and g_0 the identity.
///
/// Three representations share one interface: an explicit Cayley table, Z_p^k
/// with lexicographic tuple indexing (digitwise arithmetic, never tabulated),
/// and the direct product of two groups with left-major indexing
/// (a, b) -> a * |right| + b. Products of elementary abelian groups over the
/// same prime collapse to a single elementary abelian group, since the
/// left-major index is then just the concatenated digit string.
class Group {
 public:
  enum class Kind { Table, ElementaryAbelian, Product };

  /// Largest order for which cayley_table() is allowed to materialize.
  static constexpr std::uint32_t kMaxTabulated = 4096;

  /// Validates identity row/column, the Latin-square property and
  /// associativity (exhaustive for v <= 512, 10^6 seeded random triples
  /// above). Throws NotAGroup.
  static Group from_table(std::uint32_t order, std::vector<std::uint32_t> table,
                          std::vector<std::string> labels = {}, std::uint64_t seed = 0);

  /// Z_p^k, tuples ordered lexicographically (last coordinate fastest).
  static Group elementary_abelian(std::uint32_t p, std::uint32_t k);

  static Group direct_product(const Group& left, const Group& right);

  Kind kind() const { return kind_; }
  std::uint32_t order() const { return order_; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    switch (kind_) {
      case Kind::Table:
        return table_[static_cast<std::size_t>(a) * order_ + b];
      case Kind::ElementaryAbelian:
        return digits_.add(a, b);
      case Kind::Product: {
        const std::uint32_t n = right_->order();
        return left_->mul(a / n, b / n) * n + right_->mul(a % n, b % n);
      }
    }
    return 0;
  }

  std::uint32_t inv(std::uint32_t a) const {
    switch (kind_) {
      case Kind::Table:
        return inverse_[a];
      case Kind::ElementaryAbelian:
        return digits_.neg(a);
      case Kind::Product: {
        const std::uint32_t n = right_->order();
        return left_->inv(a / n) * n + right_->inv(a % n);
      }
    }
    return 0;
  }

  /// For elementary abelian groups: (p, k). Otherwise nullopt.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> elementary_params() const;

  /// Row-major v*v table. Throws SizeGateExceeded above kMaxTabulated.
  std::vector<std::uint32_t> cayley_table() const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(std::uint32_t g) const;
  Group with_labels(std::vector<std::string> labels) const;

  /// Same order and identical multiplication on every pair (exhaustive).
  bool same_as(const Group& other) const;

 private:
  Group() = default;

  Kind kind_ = Kind::Table;
  std::uint32_t order_ = 1;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  DigitArith digits_;
  std::shared_ptr<const Group> left_, right_;
  std::vector<std::string> labels_;
};

enum class OrderMode { Encoding, PrimitivePower };

/// (F_q, +). Encoding order is Z_p^m with the encoding as index; primitive
/// power order is 0, 1, w, w^2, ..., w^{q-2} (tabulated, labelled).
Group additive_group_of(const Field& field, OrderMode mode);

/// Index of the field element placed at position i by additive_group_of.
Elem element_at(const Field& field, OrderMode mode, std::uint32_t index);

/// Structure descriptor: elementary divisors when abelian, otherwise
/// order/exponent/center (and derived subgroup order when computed).
struct GroupStructure {
  bool abelian = true;
  std::uint64_t order = 1;
  std::uint64_t exponent = 1;
  std::vector<std::uint64_t> invariants;  // prime powers, descending
  std::uint64_t center_order = 0;
  std::optional<std::uint64_t> derived_order;

  std::string to_string() const;
};

std::string format_invariants(const std::vector<std::uint64_t>& inv);

}  // namespace ghfp
