#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trsbound/int_matrix.hpp"

namespace trsbound {

/// Coefficient ring: the integers, or the field of integers mod a prime.
struct Ring {
  enum class Kind { Integers, PrimeField };

  static Ring integers() { return Ring{Kind::Integers, 0}; }
  /// Throws MatrixError unless p is prime.
  static Ring prime_field(long long p);

  bool is_field() const { return kind == Kind::PrimeField; }
  std::string to_string() const;

  Kind kind = Kind::Integers;
  long long p = 0;

  bool operator==(const Ring&) const = default;
};

bool is_prime_number(long long n);

/// Prime factorization with multiplicity, ascending (n >= 2).
std::vector<long long> prime_factors(long long n);

/// Smith normal form of an integer matrix.
///
/// divisors are the nonzero diagonal entries d_1 | d_2 | ... | d_r, positive,
/// each dividing the next; rank is r.  When transforms are requested, left
/// and right hold unimodular U, V with U * A * V = the diagonal form.
struct SnfResult {
  std::vector<Int> divisors;
  int rank = 0;
  std::optional<IntMatrix> left;   // U
  std::optional<IntMatrix> right;  // V

  /// The full diagonal matrix of the given shape.
  IntMatrix diagonal(int rows, int cols) const;
};

/// Computes the Smith normal form by exact elementary row/column operations
/// (minimum-pivot selection, divisibility repair).  Deterministic.
SnfResult snf(const IntMatrix& a, bool with_transforms = false);

/// Rank of a over the field of integers mod p; throws unless p is prime.
int rank_mod_p(const IntMatrix& a, long long p);

/// Number of invertible elementary divisors over the ring: over the integers
/// the count of divisors equal to 1.
int e_of(const SnfResult& s, const Ring& ring);
/// Field variant: e is the rank of the matrix over GF(p).
int e_of(int rank_over_field, const Ring& ring);

}  // namespace trsbound
