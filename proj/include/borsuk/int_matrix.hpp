#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace borsuk {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers. Zero rows or
/// columns are allowed: a rows x 0 matrix presents a free group of rank
/// `rows`.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<Integer>& diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<Integer>& entries() const noexcept { return entries_; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  bool is_diagonal() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Result of a Smith normal form reduction: U * M * V == D.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  /// The first min(rows, cols) diagonal entries of D.
  std::vector<Integer> diagonal() const;
};

/// Smith normal form with minimal-absolute-value pivoting. U and V are
/// unimodular; D is diagonal with d1 | d2 | ... and nonnegative entries,
/// zeros last.
SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace borsuk
