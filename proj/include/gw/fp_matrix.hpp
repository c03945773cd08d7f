#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gw/error.hpp"

namespace gw {

using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_prime(u64 n);

/// Inverse of a mod p, p prime, a not divisible by p.
u64 fp_inv(u64 a, u64 p);

struct RrefResult;

/// Dense matrix over the prime field GF(p).  Entries are stored reduced in
/// [0, p).  Every operation is a pure function returning a fresh matrix;
/// operations on operands with different moduli throw contract_error.
class FpMatrix {
public:
  FpMatrix() : p_(2), rows_(0), cols_(0) {}
  FpMatrix(u64 p, std::size_t rows, std::size_t cols);

  static FpMatrix identity(u64 p, std::size_t n);
  static FpMatrix from_rows(u64 p, const std::vector<std::vector<i64>>& rows);

  u64 p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  u64 at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, i64 v);

  bool operator==(const FpMatrix& o) const {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const FpMatrix& o) const { return !(*this == o); }

  /// Entries flattened row-major; total order used for canonical sorting.
  const std::vector<u64>& flat() const { return e_; }
  bool lex_less(const FpMatrix& o) const;

  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix scalar_mul(i64 c) const;
  FpMatrix transpose() const;
  FpMatrix kron(const FpMatrix& o) const;
  FpMatrix direct_sum(const FpMatrix& o) const;
  FpMatrix pow(u64 e) const;

  bool is_zero() const;
  bool is_identity() const;

  /// Reduced row echelon form with deterministic pivoting: leftmost pivot
  /// column, first row with a nonzero entry in it.
  RrefResult rref() const;

  std::size_t rank() const;
  bool is_invertible() const;
  /// True when A^n = 0 for n = rows (square matrices only).
  bool is_nilpotent() const;

  /// Basis of { x : A x = 0 } as matrix columns; cols() - rank() of them.
  FpMatrix nullspace() const;

  /// Solves A X = B for X; nullopt when inconsistent.  Free variables are
  /// set to zero, so the result is deterministic.
  std::optional<FpMatrix> solve(const FpMatrix& b) const;
  std::optional<FpMatrix> inverse() const;

  FpMatrix hstack(const FpMatrix& o) const;
  FpMatrix vstack(const FpMatrix& o) const;
  FpMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  FpMatrix col(std::size_t j) const { return submatrix(0, j, rows_, 1); }
  FpMatrix select_rows(const std::vector<std::size_t>& idx) const;
  FpMatrix select_cols(const std::vector<std::size_t>& idx) const;

private:
  u64 p_;
  std::size_t rows_, cols_;
  std::vector<u64> e_;

  void check_same_p(const FpMatrix& o) const;
};

struct RrefResult {
  FpMatrix r;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Row-major flattening of a into a single column vector.
FpMatrix vec_rm(const FpMatrix& a);
/// Inverse of vec_rm for the given shape.
FpMatrix unvec_rm(const FpMatrix& v, std::size_t rows, std::size_t cols);

} // namespace gw
