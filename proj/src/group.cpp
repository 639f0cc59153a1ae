#include "ghfp/group.hpp"

#include <random>
#include <sstream>

#include "ghfp/error.hpp"

namespace ghfp {

Group Group::from_table(std::uint32_t order, std::vector<std::uint32_t> table,
                        std::vector<std::string> labels, std::uint64_t seed) {
  const std::size_t v = order;
  if (order == 0 || table.size() != v * v) {
    throw Error(ErrorKind::NotAGroup, "table must be v*v with v >= 1");
  }
  if (!labels.empty() && labels.size() != v) {
    throw Error(ErrorKind::SizeMismatch, "label count differs from group order");
  }
  for (std::size_t i = 0; i < v; ++i) {
    if (table[i] != i || table[i * v] != i) {
      throw Error(ErrorKind::NotAGroup, "row 0 and column 0 must be the identity permutation");
    }
  }
  std::vector<char> seen(v);
  for (std::size_t i = 0; i < v; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < v; ++j) {
      const auto x = table[i * v + j];
      if (x >= v || seen[x]) {
        throw Error(ErrorKind::NotAGroup, "row " + std::to_string(i) + " is not a permutation");
      }
      seen[x] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < v; ++j) {
      const auto x = table[j * v + i];
      if (seen[x]) throw Error(ErrorKind::NotAGroup, "column " + std::to_string(i) + " is not a permutation");
      seen[x] = 1;
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return table[a * v + b]; };
  auto assoc_fail = [](std::size_t a, std::size_t b, std::size_t c) {
    throw Error(ErrorKind::NotAGroup, "associativity fails at (" + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (v <= 512) {
    for (std::size_t a = 0; a < v; ++a)
      for (std::size_t b = 0; b < v; ++b)
        for (std::size_t c = 0; c < v; ++c)
          if (at(at(a, b), c) != at(a, at(b, c))) assoc_fail(a, b, c);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, v - 1);
    for (int i = 0; i < 1000000; ++i) {
      const auto a = pick(rng), b = pick(rng), c = pick(rng);
      if (at(at(a, b), c) != at(a, at(b, c))) assoc_fail(a, b, c);
    }
  }
  Group g;
  g.kind_ = Kind::Table;
  g.order_ = order;
  g.inverse_.assign(v, 0);
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = 0; b < v; ++b) {
      if (at(a, b) == 0) {
        g.inverse_[a] = static_cast<std::uint32_t>(b);
        break;
      }
    }
  }
  g.table_ = std::move(table);
  g.labels_ = std::move(labels);
  return g;
}

Group Group::elementary_abelian(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  Group g;
  g.kind_ = Kind::ElementaryAbelian;
  g.digits_ = DigitArith(p, k);
  g.order_ = g.digits_.order();
  return g;
}

Group Group::direct_product(const Group& left, const Group& right) {
  const auto le = left.elementary_params();
  const auto re = right.elementary_params();
  if (le && re && le->first == re->first && left.labels_.empty() && right.labels_.empty()) {
    return elementary_abelian(le->first, le->second + re->second);
  }
  if (static_cast<std::uint64_t>(left.order()) * right.order() > (1ULL << 31)) {
    throw Error(ErrorKind::InvalidArgument, "direct product order too large");
  }
  Group g;
  g.kind_ = Kind::Product;
  g.order_ = left.order() * right.order();
  g.left_ = std::make_shared<const Group>(left);
  g.right_ = std::make_shared<const Group>(right);
  if (!left.labels_.empty() || !right.labels_.empty()) {
    g.labels_.reserve(g.order_);
    for (std::uint32_t a = 0; a < left.order(); ++a)
      for (std::uint32_t b = 0; b < right.order(); ++b)
        g.labels_.push_back("(" + left.label(a) + "," + right.label(b) + ")");
  }
  return g;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> Group::elementary_params() const {
  if (kind_ != Kind::ElementaryAbelian) return std::nullopt;
  return std::make_pair(digits_.p(), digits_.k());
}

std::vector<std::uint32_t> Group::cayley_table() const {
  if (kind_ == Kind::Table) return table_;
  if (order_ > kMaxTabulated) {
    throw Error(ErrorKind::SizeGateExceeded, "Cayley table of order " + std::to_string(order_));
  }
  std::vector<std::uint32_t> t(static_cast<std::size_t>(order_) * order_);
  for (std::uint32_t a = 0; a < order_; ++a)
    for (std::uint32_t b = 0; b < order_; ++b) t[static_cast<std::size_t>(a) * order_ + b] = mul(a, b);
  return t;
}

std::string Group::label(std::uint32_t g) const {
  if (g < labels_.size()) return labels_[g];
  return std::to_string(g);
}

Group Group::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != order_) {
    throw Error(ErrorKind::SizeMismatch, "label count differs from group order");
  }
  Group g = *this;
  g.labels_ = std::move(labels);
  return g;
}

bool Group::same_as(const Group& other) const {
  if (order_ != other.order_) return false;
  if (kind_ == Kind::ElementaryAbelian && other.kind_ == Kind::ElementaryAbelian) {
    return digits_.p() == other.digits_.p();
  }
  for (std::uint32_t a = 0; a < order_; ++a)
    for (std::uint32_t b = 0; b < order_; ++b)
      if (mul(a, b) != other.mul(a, b)) return false;
  return true;
}

Elem element_at(const Field& field, OrderMode mode, std::uint32_t index) {
  if (mode == OrderMode::Encoding || index == 0) return static_cast<Elem>(index);
  return field.exp(index - 1);
}

Group additive_group_of(const Field& field, OrderMode mode) {
  if (mode == OrderMode::Encoding) return Group::elementary_abelian(field.p(), field.m());
  const std::uint32_t q = field.q();
  std::vector<std::uint32_t> index_of(q);
  std::vector<std::string> labels(q);
  for (std::uint32_t i = 0; i < q; ++i) {
    const Elem e = element_at(field, mode, i);
    index_of[e] = i;
    labels[i] = field.power_label(e);
  }
  std::vector<std::uint32_t> table(static_cast<std::size_t>(q) * q);
  for (std::uint32_t i = 0; i < q; ++i) {
    for (std::uint32_t j = 0; j < q; ++j) {
      const Elem s = field.add(element_at(field, mode, i), element_at(field, mode, j));
      table[static_cast<std::size_t>(i) * q + j] = index_of[s];
    }
  }
  return Group::from_table(q, std::move(table), std::move(labels));
}

std::string format_invariants(const std::vector<std::uint64_t>& inv) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < inv.size(); ++i) {
    if (i) os << ',';
    os << inv[i];
  }
  os << ']';
  return os.str();
}

std::string GroupStructure::to_string() const {
  if (abelian) return format_invariants(invariants);
  std::ostringstream os;
  os << "nonabelian(order=" << order << ",exponent=" << exponent;
  if (center_order) os << ",center=" << center_order;
  if (derived_order) os << ",derived=" << *derived_order;
  os << ')';
  return os.str();
}

}  // namespace ghfp
