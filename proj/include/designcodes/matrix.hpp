#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "designcodes/finite_field.hpp"

namespace dcodes {

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows, std::size_t cols);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<Elem> row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
  }

  void append_row(std::span<const Elem> values);
  /// Keeps only the first `n` rows.
  void truncate_rows(std::size_t n);
  void swap_rows(std::size_t a, std::size_t b);

  Matrix transpose() const;
  /// Columns selected in the given order.
  Matrix select_columns(std::span<const std::size_t> cols) const;

  bool operator==(const Matrix& o) const {
    return field_->same_as(*o.field_) && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

/// Reduces `m` to reduced row-echelon form in place, dropping zero rows.
/// Returns the pivot column of each remaining row.
std::vector<std::size_t> rref(Matrix& m);

/// Rank without modifying the argument.
std::size_t rank(Matrix m);

/// Basis (as rows, in RREF) of { x : m x^T = 0 }.
Matrix nullspace(const Matrix& m);

}  // namespace dcodes
