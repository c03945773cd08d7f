#pragma once

#include "gw/relproj.hpp"

namespace gw {

/// A correspondence setup: a p-subgroup d of g and an intermediate subgroup h
/// containing the normalizer of d, together with the intersection families
/// that house the vertices of all non-correspondent factors.
struct GreenContext {
  GroupPtr g;
  u64 p = 0;
  Subgroup d;
  Subgroup h;
  SubgroupFamily x_family; // d ∩ (conjugates of d), conjugator outside h
  SubgroupFamily y_family; // h ∩ (conjugates of d), conjugator outside h
  GroupPtr h_group;        // enumerated copy of h; modules on the h side live here
  GroupPtr d_group;        // enumerated copy of d
  Subgroup d_in_h;         // d re-expressed inside h_group
  std::vector<Subgroup> y_in_h; // y_family members re-expressed inside h_group
};

GreenContext make_green_context(const GroupPtr& g, u64 p, const Subgroup& d,
                                const Subgroup& h);

struct ClassifiedFactor {
  GModule module;     // indecomposable factor
  Subgroup vertex;    // its vertex, expressed in the top group
  bool correspondent; // vertex conjugate to the context's d
  bool vertex_in_family;
};

struct CorrespondenceReport {
  bool restriction_side; // true for green_f, false for green_g
  GModule input;
  GModule correspondent;
  std::vector<ClassifiedFactor> other_factors;
};

/// The unique vertex-d factor of the restriction of m to h; every other
/// factor must have vertex in the y family, or the call aborts.
CorrespondenceReport green_f(const GreenContext& ctx, const GModule& m);
/// The unique vertex-d factor of the induction of n (over ctx.h_group) to g;
/// every other factor must have vertex in the x family.
CorrespondenceReport green_g(const GreenContext& ctx, const GModule& n);

struct RoundtripReport {
  bool g_after_f; // g(f(m)) isomorphic to m
  bool f_after_g; // f(g(n)) isomorphic to n
};
RoundtripReport verify_roundtrip(const GreenContext& ctx, const GModule& m,
                                 const GModule& n);

struct VertexDLists {
  std::vector<GModule> over_g;
  std::vector<GModule> over_h;
};

/// All isomorphism classes with vertex d on both sides, obtained by inducing
/// each indecomposable module of the cyclic group d and collecting the
/// vertex-d factors.  Requires d cyclic of prime order.
VertexDLists enumerate_vertex_d_modules(const GreenContext& ctx);

struct BijectionReport {
  VertexDLists lists;
  std::vector<std::size_t> forward; // over_g[i] corresponds to over_h[forward[i]]
  bool hom_dims_match = false;
};

/// Checks that green_f bijects the two enumerated lists with green_g as its
/// inverse, and that stable-hom dimensions (modulo the y family) match.
BijectionReport verify_bijection(const GreenContext& ctx);

struct HigmanReport {
  bool trace_route = false;           // id is a relative trace from h
  bool summand_of_ind_res = false;    // m | induce(restrict m)
  bool summand_of_some_induced = false;
  bool counit_splits = false;
  bool all_agree = false;
};

/// Evaluates the four equivalent characterizations of projectivity relative
/// to h independently and aborts if they ever disagree.
HigmanReport adjoint_higman_check(const GModule& m, const Subgroup& h);

struct AkViolation {
  GModule generator;
  GModule factor;
  Subgroup vertex;
};

struct AkReport {
  std::size_t generators_checked = 0;
  std::size_t factors_checked = 0;
  std::size_t dimension_cap = 0;
  bool ts_hypothesis = false; // restriction of each induction carried 1 ⊕ U
  std::vector<AkViolation> violations;
  bool holds() const { return ts_hypothesis && violations.empty(); }
};

/// For finitely many generators A of ind(res(:, d), h) applied to modules
/// induced from the y family, decomposes restrict(induce(A, g), h) and checks
/// every factor is projective relative to the y family.
AkReport check_ak_condition(const GreenContext& ctx);

} // namespace gw
