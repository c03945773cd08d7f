#pragma once

#include "gw/gmodule.hpp"

namespace gw {

/// Restriction of m along a subgroup handed over as its own enumerated group;
/// every element of hgrp must be a permutation lying in m's group.
GModule restrict_module(const GModule& m, const GroupPtr& hgrp);

/// kG ⊗_{kH} N together with the data needed to talk about its basis:
/// basis vectors are r_i ⊗ n_t, laid out block-by-coset at index
/// i * dim(N) + t, with r_0 the identity.
struct InducedModule {
  GModule module;                        // over the parent group
  Subgroup from;                         // H as a subgroup of the parent
  GroupPtr from_group;                   // enumerated copy of H the source lives over
  GModule source;                        // N, a module over from_group
  std::vector<std::uint32_t> coset_reps; // parent positions, identity first
};

/// Induction of n (a module over an enumerated copy of h) up to h's parent.
InducedModule induce_from(const GModule& n, const Subgroup& h);

/// True when f (an n.dim x m.dim matrix) intertwines the actions of every
/// element of h on the restrictions of m and n.
bool is_hom_over_subgroup(const Subgroup& h, const GModule& m, const GModule& n,
                          const FpMatrix& f);

/// The adjunction Hom_H(N, res M) ≅ Hom_G(ind N, M), explicitly:
/// phi ↦ phi-hat with block column i equal to action_M(r_i) · phi.
FpMatrix adjoint_to_induced(const InducedModule& ind, const GModule& m,
                            const FpMatrix& phi);
/// Inverse direction: evaluation at the identity coset block.
FpMatrix adjoint_from_induced(const InducedModule& ind, const GModule& m,
                              const FpMatrix& psi);

/// Unit N → res ind N, n ↦ 1 ⊗ n (identity block over zeros).
FpMatrix unit_map(const InducedModule& ind);
/// Counit ind res M → M, r_i ⊗ m ↦ r_i · m; requires ind.source to be the
/// restriction of m to ind.from_group.
FpMatrix counit_map(const InducedModule& ind, const GModule& m);

/// Relative trace Σ_i action_n(r_i) · f · action_m(r_i^{-1}) over a left
/// transversal of h; f must be a hom over h, the result is a hom over G.
FpMatrix relative_trace(const Subgroup& h, const GModule& m, const GModule& n,
                        const FpMatrix& f);

/// The same underlying sequence with all three modules restricted to hgrp;
/// the inclusion and projection matrices are reused unchanged.
ShortExactSeq restrict_ses(const ShortExactSeq& s, const GroupPtr& hgrp);
/// Whether the sequence splits after restriction to h.
bool is_split_over_subgroup(const ShortExactSeq& s, const Subgroup& h);

/// Checks that res_H(ind N) decomposes against the coset grading: the
/// identity-coset block carries a copy of N and its complement is H-stable.
bool ts_decomposition_check(const InducedModule& ind);

struct MackeyPiece {
  std::uint32_t rep;     // double-coset representative (parent position)
  Subgroup intersection; // h ∩ rep·K·rep^{-1} as a subgroup of the parent
  GModule twisted;       // source conjugated by rep, over as_group(intersection)
  InducedModule induced; // twisted module induced up to h (inside h_group)
};

struct MackeyDecomposition {
  GroupPtr h_group;               // enumerated copy of h
  GModule restricted;             // res_h(ind.module)
  std::vector<MackeyPiece> pieces;
  FpMatrix iso;                   // verified H-isomorphism ⊕ pieces → restricted
};

/// Double-coset decomposition of res_h(kG ⊗_K N), with an explicit verified
/// isomorphism from the direct sum of the induced pieces.
MackeyDecomposition mackey_decomposition(const InducedModule& ind, const Subgroup& h);

} // namespace gw
