#pragma once

#include <cstdint>
#include <vector>

namespace ghfp {

// Digitwise arithmetic on integers read as k base-p digits (little-endian),
// i.e. the additive group Z_p^k with its lexicographic indexing. Addition is
// split into a low and a high half so the lookup tables stay at O(p^k) size.
class DigitArith {
 public:
  DigitArith() = default;
  DigitArith(std::uint32_t p, std::uint32_t k);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t order() const { return order_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    const std::uint32_t al = a % lo_size_, ah = a / lo_size_;
    const std::uint32_t bl = b % lo_size_, bh = b / lo_size_;
    return add_lo_[al * lo_size_ + bl] + lo_size_ * add_hi_[ah * hi_size_ + bh];
  }

  std::uint32_t neg(std::uint32_t a) const {
    if (p_ == 2) return a;
    return neg_lo_[a % lo_size_] + lo_size_ * neg_hi_[a / lo_size_];
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

  // t * a for an integer multiplier t (repeated addition in Z_p^k).
  std::uint32_t scale(std::uint32_t a, std::uint32_t t) const;

 private:
  static std::vector<std::uint32_t> build_add(std::uint32_t p, std::uint32_t digits);
  static std::vector<std::uint32_t> build_neg(std::uint32_t p, std::uint32_t digits);

  std::uint32_t p_ = 2;
  std::uint32_t k_ = 0;
  std::uint32_t order_ = 1;
  std::uint32_t lo_size_ = 1;
  std::uint32_t hi_size_ = 1;
  std::vector<std::uint32_t> add_lo_, add_hi_, neg_lo_, neg_hi_;
};

}  // namespace ghfp
