#include "trsbound/smith.hpp"

#include <algorithm>

#include "trsbound/errors.hpp"

namespace trsbound {

bool is_prime_number(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

Ring Ring::prime_field(long long p) {
  if (!is_prime_number(p))
    throw MatrixError("modulus " + std::to_string(p) + " is not prime");
  return Ring{Kind::PrimeField, p};
}

std::string Ring::to_string() const {
  if (kind == Kind::Integers) return "Z";
  return "GF(" + std::to_string(p) + ")";
}

IntMatrix SnfResult::diagonal(int rows, int cols) const {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < divisors.size(); ++i)
    d(static_cast<int>(i), static_cast<int>(i)) = divisors[i];
  return d;
}

namespace {

Int int_abs(const Int& v) { return v < 0 ? Int(-v) : v; }

// Position of the entry with the smallest nonzero absolute value in the
// trailing submatrix starting at (k, k); first hit in row-major order.
bool find_pivot(const IntMatrix& d, int k, int& pr, int& pc) {
  bool found = false;
  Int best = 0;
  for (int r = k; r < d.rows(); ++r)
    for (int c = k; c < d.cols(); ++c) {
      if (d(r, c) == 0) continue;
      Int a = int_abs(d(r, c));
      if (!found || a < best) {
        found = true;
        best = a;
        pr = r;
        pc = c;
      }
    }
  return found;
}

}  // namespace

SnfResult snf(const IntMatrix& a, bool with_transforms) {
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const int bound = std::min(d.rows(), d.cols());

  auto row_op = [&](int dst, int src, const Int& f) {
    d.add_row_multiple(dst, src, f);
    if (with_transforms) u.add_row_multiple(dst, src, f);
  };
  auto col_op = [&](int dst, int src, const Int& f) {
    d.add_col_multiple(dst, src, f);
    if (with_transforms) v.add_col_multiple(dst, src, f);
  };

  int k = 0;
  for (; k < bound; ++k) {
    int pr = 0, pc = 0;
    if (!find_pivot(d, k, pr, pc)) break;  // trailing submatrix is zero
    d.swap_rows(k, pr);
    if (with_transforms) u.swap_rows(k, pr);
    d.swap_cols(k, pc);
    if (with_transforms) v.swap_cols(k, pc);

    while (true) {
      // Clear column k below the pivot and row k right of the pivot.  Each
      // sweep leaves remainders smaller than the pivot, so re-selecting the
      // minimal entry terminates.
      bool dirty = false;
      for (int r = k + 1; r < d.rows(); ++r) {
        if (d(r, k) == 0) continue;
        Int q = d(r, k) / d(k, k);
        row_op(r, k, -q);
        if (d(r, k) != 0) dirty = true;
      }
      for (int c = k + 1; c < d.cols(); ++c) {
        if (d(k, c) == 0) continue;
        Int q = d(k, c) / d(k, k);
        col_op(c, k, -q);
        if (d(k, c) != 0) dirty = true;
      }
      if (dirty) {
        int rr = 0, cc = 0;
        find_pivot(d, k, rr, cc);
        d.swap_rows(k, rr);
        if (with_transforms) u.swap_rows(k, rr);
        d.swap_cols(k, cc);
        if (with_transforms) v.swap_cols(k, cc);
        continue;
      }
      // Pivot now alone in its row and column.  Repair divisibility: the
      // pivot must divide every remaining entry.
      bool repaired = false;
      for (int r = k + 1; r < d.rows() && !repaired; ++r)
        for (int c = k + 1; c < d.cols() && !repaired; ++c)
          if (d(r, c) % d(k, k) != 0) {
            row_op(k, r, 1);  // pulls the offending row up; gcd shrinks next sweep
            repaired = true;
          }
      if (!repaired) break;
    }

    if (d(k, k) < 0) {
      d.negate_row(k);
      if (with_transforms) u.negate_row(k);
    }
  }

  SnfResult out;
  out.rank = k;
  out.divisors.reserve(k);
  for (int i = 0; i < k; ++i) out.divisors.push_back(d(i, i));
  if (with_transforms) {
    out.left = std::move(u);
    out.right = std::move(v);
  }
  return out;
}

namespace {

long long mod_norm(long long v, long long p) {
  long long m = v % p;
  return m < 0 ? m + p : m;
}

long long mod_inverse(long long a, long long p) {
  // Extended Euclid; a nonzero mod prime p.
  long long t = 0, new_t = 1, r = p, new_r = mod_norm(a, p);
  while (new_r != 0) {
    long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return mod_norm(t, p);
}

}  // namespace

int rank_mod_p(const IntMatrix& a, long long p) {
  if (!is_prime_number(p))
    throw MatrixError("modulus " + std::to_string(p) + " is not prime");
  const int rows = a.rows(), cols = a.cols();
  std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m[r][c] = mod_norm(static_cast<long long>(a(r, c) % p), p);

  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    long long inv = mod_inverse(m[rank][c], p);
    for (int j = c; j < cols; ++j) m[rank][j] = mod_norm(m[rank][j] * inv, p);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      long long f = m[r][c];
      for (int j = c; j < cols; ++j) m[r][j] = mod_norm(m[r][j] - f * m[rank][j], p);
    }
    ++rank;
  }
  return rank;
}

int e_of(const SnfResult& s, const Ring& ring) {
  if (ring.is_field())
    throw MatrixError("over a field, e is the matrix rank; pass the rank instead");
  int count = 0;
  for (const Int& d : s.divisors)
    if (d == 1) ++count;
  return count;
}

int e_of(int rank_over_field, const Ring& ring) {
  if (!ring.is_field())
    throw MatrixError("over the integers, e is counted from the Smith divisors");
  return rank_over_field;
}

}  // namespace trsbound
