#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace parreg {

using Int = mpz_class;
using IntVector = std::vector<Int>;

/// Floor division / remainder. floor_mod(a, m) lies in [0, m) for m > 0.
Int floor_div(const Int& a, const Int& b);
Int floor_mod(const Int& a, const Int& m);

/// a == 0 (mod m), with m == 0 meaning a == 0 exactly.
bool divides_exactly(const Int& m, const Int& a);

Int dot(const IntVector& a, const IntVector& b);
bool is_zero_vector(const IntVector& v);

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static IntMatrix from_int_rows(const std::vector<IntVector>& rows);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector col(std::size_t c) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row i += q * row j
  void add_row_multiple(std::size_t i, std::size_t j, const Int& q);
  /// col i += q * col j
  void add_col_multiple(std::size_t i, std::size_t j, const Int& q);
  void negate_row(std::size_t i);

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntVector apply(const IntVector& v) const;

  /// Stack two matrices with equal column counts, top over bottom.
  static IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);
  /// Block-diagonal repetition of one block.
  static IntMatrix block_diagonal(const IntMatrix& block, std::size_t copies);

  bool is_zero() const;
  bool operator==(const IntMatrix& other) const;
  bool operator!=(const IntMatrix& other) const { return !(*this == other); }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

}  // namespace parreg
