#include "trsbound/int_matrix.hpp"

#include <sstream>
#include <utility>

#include "trsbound/errors.hpp"

namespace trsbound {

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != checked_len(rows, cols))
    throw MatrixError("matrix data length does not match dimensions");
}

std::size_t IntMatrix::checked_len(int rows, int cols) {
  if (rows < 0 || cols < 0) throw MatrixError("matrix dimensions must be non-negative");
  return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
}

std::size_t IntMatrix::index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw MatrixError("matrix index out of range");
  return static_cast<std::size_t>(r) * cols_ + c;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& k) {
  if (k == 0) return;
  for (int c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& k) {
  if (k == 0) return;
  for (int r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(int r) {
  for (int c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(int c) {
  for (int r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

bool IntMatrix::is_zero() const {
  for (const Int& v : data_)
    if (v != 0) return false;
  return true;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw MatrixError("matrix product dimension mismatch");
  IntMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& v = (*this)(i, k);
      if (v == 0) continue;
      for (int j = 0; j < other.cols_; ++j) out(i, j) += v * other(k, j);
    }
  return out;
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw MatrixError("determinant of a non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination: exact over the integers.
  IntMatrix a = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (a(r, k) != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      a.swap_rows(k, pivot);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = num / prev;  // division is exact (Bareiss invariant)
      }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (c) out << ' ';
      out << (*this)(r, c);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace trsbound
