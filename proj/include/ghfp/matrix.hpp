#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ghfp/field.hpp"

namespace ghfp {

/// Dense row-major matrix of field encodings.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(FieldPtr field, std::uint32_t rows, std::uint32_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}
  FieldMatrix(FieldPtr field, std::uint32_t rows, std::uint32_t cols, std::vector<Elem> data);

  const FieldPtr& field() const { return field_; }
  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Elem operator()(std::uint32_t i, std::uint32_t j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  Elem& operator()(std::uint32_t i, std::uint32_t j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::span<const Elem> row(std::uint32_t i) const {
    return {data_.data() + static_cast<std::size_t>(i) * cols_, cols_};
  }
  const std::vector<Elem>& data() const { return data_; }

  FieldMatrix transpose() const;

  bool operator==(const FieldMatrix& o) const {
    return same_field(field_, o.field_) && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  FieldPtr field_;
  std::uint32_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

}  // namespace ghfp
