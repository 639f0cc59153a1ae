#include "ghfp/matrix.hpp"

#include "ghfp/error.hpp"

namespace ghfp {

FieldMatrix::FieldMatrix(FieldPtr field, std::uint32_t rows, std::uint32_t cols, std::vector<Elem> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != static_cast<std::size_t>(rows) * cols) {
    throw Error(ErrorKind::SizeMismatch, "matrix data does not match rows*cols");
  }
  for (auto e : data_) {
    if (e >= field_->q()) throw Error(ErrorKind::InvalidArgument, "matrix entry outside [0,q)");
  }
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(field_, cols_, rows_);
  for (std::uint32_t i = 0; i < rows_; ++i)
    for (std::uint32_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

}  // namespace ghfp
