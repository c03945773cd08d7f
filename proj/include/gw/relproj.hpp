#pragma once

#include "gw/decompose.hpp"
#include "gw/functors.hpp"

namespace gw {

/// Verdict and certificates for projectivity of m relative to the subgroup h.
/// The decision comes from solving for an h-intertwiner f on m with
/// relative_trace(h, f) == id; when a solution exists the counit section
/// built from it is verified as well.  On small instances an independent
/// splitting test of the counit sequence cross-checks the verdict.
struct RelProjResult {
  bool projective;
  std::optional<FpMatrix> trace_preimage; // f with Tr_h(f) = id, hom over h
  std::optional<FpMatrix> counit_section; // verified section of the counit
};

RelProjResult relative_projectivity(const GModule& m, const Subgroup& h,
                                    bool force_split_check = false);
bool is_relatively_projective(const GModule& m, const Subgroup& h);

/// The exact sequence 0 -> ker -> induce(restrict m) -> m -> 0 along the
/// counit; ind must have been built from the restriction of m.
ShortExactSeq counit_sequence(const InducedModule& ind, const GModule& m);

struct VertexResult {
  GModule module;                    // the input, indecomposable
  Subgroup vertex;                   // minimal subgroup, unique up to conjugacy
  std::vector<Subgroup> vertex_class; // all conjugates of the vertex
  GModule source;                    // indecomposable over as_group(vertex)
  GroupPtr vertex_group;             // the enumerated copy source lives over
  FpMatrix counit_section;           // section of the counit at the vertex
  FpMatrix source_embedding;         // split embedding module -> induce(source)
  FpMatrix source_retraction;        // retraction with retraction*embedding = id
};

/// Minimal subgroup (up to conjugacy) relative to which m is projective,
/// found by descending the p-subgroup class poset from a Sylow subgroup,
/// plus an indecomposable source module over the vertex.  Minimality is
/// certified against every maximal-subgroup class of the vertex.
VertexResult vertex_and_source(const GModule& m);

/// True when every indecomposable factor of m occurs, with multiplicity,
/// among the factors of w (x) dual(w) (x) m.
bool is_w_projective(const GModule& m, const GModule& w);

struct QuotientHomSpace {
  GModule source;
  GModule target;
  std::size_t full_dim = 0;
  std::size_t ideal_dim = 0;
  std::size_t quotient_dim = 0;
  std::vector<FpMatrix> quotient_basis; // representatives of nonzero classes
};

/// Hom space modulo the ideal spanned by relative traces from the listed
/// subgroups: the hom set of the quotient category that kills everything
/// projective relative to the family.
QuotientHomSpace quotient_hom(const GModule& m, const GModule& n,
                              const std::vector<Subgroup>& family);
QuotientHomSpace quotient_hom(const GModule& m, const GModule& n,
                              const SubgroupFamily& family);

/// Basis of the subspace of hom_space(m, n) of maps factoring through a
/// finite direct sum of copies of w: the span of all compositions h∘g.
std::vector<FpMatrix> factor_through_add(const GModule& m, const GModule& n,
                                         const GModule& w);

struct Ext1KernelEntry {
  GModule target;
  std::size_t ext_dim_over_g = 0; // dim Ext^1 over the full group
  std::size_t kernel_dim = 0;     // dim of the kernel of restriction to h
};

struct Ext1RestrictionReport {
  bool relatively_projective = false;
  std::vector<Ext1KernelEntry> entries;
  bool found_nonzero_kernel = false;
};

/// Kernel of Ext^1(m, n) -> Ext^1(res m, res n) for each test target n,
/// computed from a free presentation of m (whose restriction stays free).
/// When m is relatively h-projective every kernel must vanish; otherwise the
/// report records which sampled targets witness a nonzero kernel.
Ext1RestrictionReport ext1_restriction_injectivity_check(
    const GModule& m, const Subgroup& h, const std::vector<GModule>& targets);

} // namespace gw
