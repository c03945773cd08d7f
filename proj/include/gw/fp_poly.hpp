#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gw/fp_matrix.hpp"

namespace gw {

/// Dense polynomial over GF(p); coefficients ascending, no trailing zeros.
class FpPoly {
public:
  explicit FpPoly(u64 p);
  FpPoly(u64 p, const std::vector<i64>& coeffs);
  static FpPoly x(u64 p);
  static FpPoly constant(u64 p, i64 c);

  u64 p() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree of a nonzero polynomial; querying the zero polynomial throws.
  std::size_t degree() const;
  u64 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<u64>& coeffs() const { return c_; }

  bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const FpPoly& o) const { return !(*this == o); }

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly scaled(i64 c) const;
  FpPoly monic() const;
  /// Quotient and remainder by a nonzero divisor.
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const;
  FpPoly derivative() const;

  u64 eval(u64 x) const;
  FpMatrix eval_matrix(const FpMatrix& m) const;

private:
  void trim();
  u64 p_;
  std::vector<u64> c_;
};

/// Monic gcd (zero when both inputs are zero).
FpPoly poly_gcd(FpPoly a, FpPoly b);
/// base^e modulo mod.
FpPoly poly_powmod(FpPoly base, u64 e, const FpPoly& mod);
/// Monic minimal polynomial of a square matrix.
FpPoly min_poly(const FpMatrix& m);
/// A nontrivial monic factor of a monic polynomial of degree >= 1, or
/// nullopt exactly when it is irreducible.  Deterministic: root scan, then
/// square part, then distinct-degree splitting.
std::optional<FpPoly> proper_factor(const FpPoly& mu);

} // namespace gw
