#pragma once

#include <vector>

#include "gw/gmodule.hpp"

namespace gw {

struct SummandPiece {
  GModule module;       // certified indecomposable
  FpMatrix injection;   // original.dim x module.dim
  FpMatrix projection;  // module.dim x original.dim
};

struct IsoClass {
  GModule representative;
  std::size_t multiplicity;
};

struct Decomposition {
  GModule original;
  /// Indecomposable summands in canonical (dim, entries) order, with
  /// injections and projections satisfying proj_i inj_j = delta_ij and
  /// sum_i inj_i proj_i = id.
  std::vector<SummandPiece> summands;
  /// Summands grouped up to isomorphism.
  std::vector<IsoClass> factors;
};

/// Complete direct-sum decomposition into indecomposables.  The seed steers
/// the optional randomized splitting attempts only; every returned summand is
/// certified indecomposable and the identities above are checked.
Decomposition decompose(const GModule& m, u64 seed = 0x9e3779b97f4a7c15ull);

/// Certified: the endomorphism ring is local.  Zero modules are not
/// indecomposable.
bool is_indecomposable(const GModule& m);

/// Isomorphism over a common group; decides via a direct search first and a
/// factor-by-factor match otherwise.
bool is_isomorphic(const GModule& a, const GModule& b);

/// Explicit invertible intertwiner from a to b, found by a deterministic
/// search over hom-basis pairs; complete when both modules are
/// indecomposable.  Returns nothing when the search fails.
std::optional<FpMatrix> find_isomorphism(const GModule& a, const GModule& b);

/// True when `part` is isomorphic to a direct summand of `whole`.
bool is_direct_summand(const GModule& part, const GModule& whole);

/// Multiplicity of an indecomposable in the decomposition of `of`.
std::size_t multiplicity_in(const GModule& indec, const GModule& of);

} // namespace gw
