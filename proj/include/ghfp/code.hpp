#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ghfp/field.hpp"
#include "ghfp/gh_matrix.hpp"

namespace ghfp {

using Word = std::vector<Elem>;

std::uint64_t hash_word(std::span<const Elem> w);

/// Incremental Gaussian elimination over F_q. Basis vectors are kept with a
/// unit pivot; insert() reduces a vector against them and keeps the remainder
/// if it is nonzero.
class RowReducer {
 public:
  RowReducer(FieldPtr field, std::uint32_t n) : field_(std::move(field)), n_(n) {}

  /// True when w was independent of the current basis.
  bool insert(std::span<const Elem> w);
  std::uint32_t rank() const { return static_cast<std::uint32_t>(basis_.size()); }
  const std::vector<Word>& basis() const { return basis_; }

 private:
  FieldPtr field_;
  std::uint32_t n_;
  std::vector<Word> basis_;
  std::vector<std::uint32_t> pivots_;
};

/// A code given by its explicit word list. Used for small codes and as the
/// brute-force reference for GHCode.
class Code {
 public:
  /// Duplicate words are dropped. Throws LengthMismatch.
  Code(FieldPtr field, std::uint32_t n, std::vector<Word> words);

  const FieldPtr& field() const { return field_; }
  std::uint32_t length() const { return n_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }
  bool contains(std::span<const Elem> w) const;

 private:
  FieldPtr field_;
  std::uint32_t n_;
  std::vector<Word> words_;
  std::unordered_multimap<std::uint64_t, std::uint32_t> index_;
};

struct KernelInfo {
  std::uint32_t dimension = 0;    // over F_q
  std::uint32_t p_dimension = 0;  // of the p-kernel, over GF(p)
  std::vector<Word> basis;        // F_q-basis of K(C)
};

/// Brute-force structural parameters of an explicit code.
std::uint32_t rank(const Code& c);
KernelInfo kernel(const Code& c);  // throws ZeroNotInCode
std::uint32_t p_kernel(const Code& c);
std::uint32_t min_distance(const Code& c);
bool is_linear(const Code& c);

std::uint32_t hamming_distance(std::span<const Elem> a, std::span<const Elem> b);

enum class DistanceMode { Exact, VerifiedTheoretical };

struct DistanceResult {
  std::uint32_t value = 0;
  DistanceMode mode = DistanceMode::Exact;
};

struct KernelStats {
  KernelInfo info;
  std::uint64_t seed = 0;
  std::uint32_t screened = 0;    // candidates that survived the random tests
  std::uint32_t full_sweeps = 0;
};

/// C_H = union of F_H + alpha 1 for a normalized GH matrix H, kept implicit.
/// Codeword ids: id = r * q + c is row r of H plus c * 1.
class GHCode {
 public:
  static constexpr std::uint64_t kExactDistanceLimit = 10000;

  /// Throws NotNormalized or DuplicateRows.
  static GHCode from_matrix(const GHMatrix& h);

  const GHMatrix& matrix() const { return h_; }
  const FieldPtr& field() const { return h_.field(); }
  std::uint32_t v() const { return h_.v(); }
  std::uint32_t q() const { return h_.q(); }
  std::uint64_t size() const { return static_cast<std::uint64_t>(q()) * v(); }

  Word word(std::uint64_t id) const;
  std::optional<std::uint32_t> row_of(std::span<const Elem> y) const;
  /// y is in C_H iff y - y_0 1 is a row of H.
  std::optional<std::uint64_t> find(std::span<const Elem> y) const;
  bool contains(std::span<const Elem> y) const { return find(y).has_value(); }

  /// dim span(rows of H and the all-one vector).
  std::uint32_t rank() const;
  KernelStats kernel(std::uint64_t seed = 0, unsigned threads = 1) const;
  DistanceResult min_distance() const;

  Code row_code() const;
  Code full_code() const;  // throws SizeGateExceeded above 10^6 words

 private:
  explicit GHCode(GHMatrix h) : h_(std::move(h)) {}
  bool sum_in_code(std::uint32_t f, std::uint32_t g, Word& scratch) const;

  GHMatrix h_;
  std::unordered_multimap<std::uint64_t, std::uint32_t> rows_;
};

struct CodePair {
  Code f_h;
  Code c_h;
};

/// Explicit F_H and C_H. Throws NotNormalized or DuplicateRows.
CodePair code_from_gh(const GHMatrix& h);

/// q = p^e and v = p^t s with gcd(p, s) = 1. The p-kernel dimension over
/// GF(p) lies in [e * ker, e + t].
struct PKernelBound {
  std::uint32_t e = 0;
  std::uint32_t t = 0;
  std::uint32_t upper() const { return e + t; }
};
PKernelBound p_kernel_bound(std::uint32_t p, std::uint32_t q, std::uint32_t v);

}  // namespace ghfp
