#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace trsbound {

/// Exact unbounded integer scalar used by the whole matrix layer.
using Int = boost::multiprecision::cpp_int;

/// Dense row-major matrix over exact integers.  Supports the elementary
/// row/column operations needed by Smith reduction plus multiplication and
/// exact determinants for verification.  Either dimension may be zero.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(checked_len(rows, cols)) {}
  IntMatrix(int rows, int cols, std::vector<Int> data);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int r, int c) { return data_[index(r, c)]; }
  const Int& operator()(int r, int c) const { return data_[index(r, c)]; }

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  /// row[dst] += k * row[src]
  void add_row_multiple(int dst, int src, const Int& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(int dst, int src, const Int& k);
  void negate_row(int r);
  void negate_col(int c);

  bool is_zero() const;
  bool operator==(const IntMatrix& other) const;

  IntMatrix operator*(const IntMatrix& other) const;

  /// Exact determinant (square matrices) via fraction-free elimination.
  Int determinant() const;

  std::string to_string() const;

 private:
  static std::size_t checked_len(int rows, int cols);
  std::size_t index(int r, int c) const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

}  // namespace trsbound
