#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "surfaut/common.hpp"

namespace surfaut {

// Dense integer matrix, row-major, arbitrary-precision entries.
// Empty shapes (0 x n, n x 0) are legal and behave as expected.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
  // Columns given as vectors of length `rows`.
  static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Int>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool operator==(const IntMatrix&) const = default;

  IntMatrix operator*(const IntMatrix& rhs) const;
  std::vector<Int> apply(const std::vector<Int>& v) const;  // M * v

  bool is_zero() const;
  bool is_diagonal() const;

  // Fraction-free (Bareiss) determinant; matrix must be square.
  // det of the 0 x 0 matrix is 1.
  Int determinant() const;

  // Elementary operations used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& q);  // row dst += q * row src
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& q);
  void negate_row(std::size_t r);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

}  // namespace surfaut
