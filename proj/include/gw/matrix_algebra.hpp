#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gw/fp_matrix.hpp"

namespace gw {

/// Unital subalgebra of Mat_n(GF(p)), stored by a linearly independent basis
/// whose span contains the identity and is closed under multiplication.
struct MatrixAlgebra {
  u64 p = 2;
  std::size_t ambient = 0;
  std::vector<FpMatrix> basis;

  std::size_t dim() const { return basis.size(); }
};

/// Closes span(gens + {I}) under multiplication; basis comes out in the
/// canonical reduced-echelon order of the flattened matrices.
MatrixAlgebra algebra_from_generators(u64 p, std::size_t ambient,
                                      const std::vector<FpMatrix>& gens);

/// Wraps a spanning set that is already known to be closed and unital
/// (e.g. an endomorphism-space basis); verifies both properties.
MatrixAlgebra algebra_from_closed_span(u64 p, std::size_t ambient,
                                       const std::vector<FpMatrix>& span);

/// Coefficients of x over a.basis, or nullopt when x lies outside the span.
std::optional<std::vector<u64>> algebra_coords(const MatrixAlgebra& a,
                                               const FpMatrix& x);
bool algebra_contains(const MatrixAlgebra& a, const FpMatrix& x);

/// Basis of {z in a : zb = bz for every b in a}.
std::vector<FpMatrix> center_basis(const MatrixAlgebra& a);

/// Jacobson radical via the divided p-power trace filtration.  The result is
/// certified at runtime: it is a two-sided ideal, it is nilpotent, and the
/// filtration re-run on the quotient vanishes.
std::vector<FpMatrix> radical_basis(const MatrixAlgebra& a);

struct QuotientAlgebra {
  /// Left regular representation of a/ideal on itself.
  MatrixAlgebra alg;
  /// lifts[i] is a preimage of alg.basis[i] in the ambient of a.
  std::vector<FpMatrix> lifts;
};

/// Quotient by a two-sided ideal given by a basis of elements of a.
QuotientAlgebra quotient_modulo(const MatrixAlgebra& a,
                                const std::vector<FpMatrix>& ideal);

/// Number of simple blocks of a semisimple algebra: the dimension of the
/// fixed space of z -> z^p on its center.
std::size_t block_count_semisimple(const MatrixAlgebra& q);

struct LocalSplit {
  /// True when a modulo its radical is a division algebra.
  bool is_local = false;
  /// Otherwise: a nontrivial idempotent of a (e^2 = e, e != 0, e != 1).
  std::optional<FpMatrix> idempotent;
};

/// Either certifies that the algebra is local or produces a nontrivial
/// idempotent, by splitting the semisimple quotient and lifting.
LocalSplit split_or_certify_local(const MatrixAlgebra& a);

} // namespace gw
