#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ghfp/field.hpp"

namespace ghfp {

/// Permutation of {0, ..., n-1}, stored as images[i] = pi(i).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint32_t> images);  // throws InvalidArgument unless bijective
  static Perm identity(std::uint32_t n);

  std::uint32_t size() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t operator()(std::uint32_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;
  std::uint32_t fixed_points() const;
  Perm inverse() const;

  /// 1-based disjoint cycles, e.g. "(1,2)(3,4)"; the identity prints "()".
  std::string cycle_form() const;

  bool operator==(const Perm&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// (f o g)(i) = f(g(i)). Throws LengthMismatch.
Perm compose(const Perm& f, const Perm& g);

/// pi(v)_i = v_{pi^{-1}(i)}: the entry at coordinate l moves to pi(l).
template <class T>
std::vector<T> apply_to_vector(const Perm& pi, std::span<const T> v);

Perm parse_cycle_form(const std::string& text, std::uint32_t n);

}  // namespace ghfp
