#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gw/error.hpp"
#include "gw/green.hpp"

using namespace gw;

namespace {

// S3 at p=2 with d = h = a Sylow C2: trivial-intersection situation.
GreenContext s3_context() {
  auto s3 = PermGroup::preset("S3");
  auto c2 = sylow_subgroup(s3, 2);
  return make_green_context(s3, 2, c2, c2);
}

// S4 at p=2 with d = h = a Sylow D8; intersections of distinct Sylows are V4.
GreenContext s4_context() {
  auto s4 = PermGroup::preset("S4");
  auto d8 = sylow_subgroup(s4, 2);
  return make_green_context(s4, 2, d8, d8);
}

} // namespace

TEST_CASE("context construction and validation") {
  auto ctx = s3_context();
  CHECK(ctx.p == 2);
  CHECK(ctx.d.order() == 2);
  CHECK(ctx.h.order() == 2);
  REQUIRE(ctx.x_family.members.size() == 1);
  CHECK(ctx.x_family.members[0].is_trivial());
  REQUIRE(ctx.y_family.members.size() == 1);
  CHECK(ctx.y_family.members[0].is_trivial());
  CHECK(ctx.d_in_h.order() == 2);
  CHECK(ctx.h_group->order() == 2);

  // h must contain the normalizer of d.
  auto c4 = PermGroup::preset("C4");
  std::uint32_t sq = 0;
  for (std::uint32_t pos = 0; pos < c4->order(); ++pos)
    if (c4->element_order(pos) == 2) sq = pos;
  auto c2_in_c4 = Subgroup::generated_by_positions(c4, {sq});
  CHECK_THROWS_AS(make_green_context(c4, 2, c2_in_c4, c2_in_c4), contract_error);

  // d must be a p-group.
  auto s3 = PermGroup::preset("S3");
  CHECK_THROWS_AS(make_green_context(s3, 2, sylow_subgroup(s3, 3), Subgroup::whole(s3)),
                  contract_error);

  // The S4 context sees the V4 intersection of distinct Sylow subgroups.
  auto ctx4 = s4_context();
  REQUIRE(ctx4.x_family.members.size() == 1);
  CHECK(ctx4.x_family.members[0].order() == 4);
  REQUIRE(ctx4.y_family.members.size() == 1);
  CHECK(ctx4.y_family.members[0].order() == 4);
}

TEST_CASE("green_f of the trivial module") {
  auto ctx = s3_context();
  auto k = GModule::trivial(ctx.g, 2);
  auto rep = green_f(ctx, k);
  CHECK(rep.restriction_side);
  CHECK(rep.correspondent.dim() == 1);
  CHECK(rep.other_factors.empty());
  CHECK(is_isomorphic(rep.correspondent, GModule::trivial(ctx.h_group, 2)));

  auto ctx4 = s4_context();
  auto k4 = GModule::trivial(ctx4.g, 2);
  auto rep4 = green_f(ctx4, k4);
  CHECK(rep4.correspondent.dim() == 1);
  CHECK(rep4.other_factors.empty());

  // Precondition: the input's vertex must be conjugate to d.
  auto m2_class = decompose(GModule::regular(ctx.g, 2));
  for (const auto& cls : m2_class.factors)
    if (cls.multiplicity == 2)
      CHECK_THROWS_AS(green_f(ctx, cls.representative), contract_error);
}

TEST_CASE("green_g of the trivial module over h") {
  auto ctx = s3_context();
  auto n = GModule::trivial(ctx.h_group, 2);
  auto rep = green_g(ctx, n);
  CHECK_FALSE(rep.restriction_side);
  CHECK(is_isomorphic(rep.correspondent, GModule::trivial(ctx.g, 2)));
  REQUIRE(rep.other_factors.size() == 1);
  CHECK(rep.other_factors[0].module.dim() == 2);
  CHECK(rep.other_factors[0].vertex.is_trivial());
  CHECK(rep.other_factors[0].vertex_in_family);
  CHECK_FALSE(rep.other_factors[0].correspondent);

  // S4: inducing the trivial module from D8 gives k plus a 2-dim factor whose
  // vertex is the V4 intersection, inside the x family.
  auto ctx4 = s4_context();
  auto n4 = GModule::trivial(ctx4.h_group, 2);
  auto rep4 = green_g(ctx4, n4);
  CHECK(is_isomorphic(rep4.correspondent, GModule::trivial(ctx4.g, 2)));
  REQUIRE(rep4.other_factors.size() == 1);
  CHECK(rep4.other_factors[0].module.dim() == 2);
  CHECK(rep4.other_factors[0].vertex.order() == 4);
  CHECK(rep4.other_factors[0].vertex_in_family);
}

TEST_CASE("roundtrip both ways") {
  auto ctx = s3_context();
  auto m = GModule::trivial(ctx.g, 2);
  auto n = GModule::trivial(ctx.h_group, 2);
  auto rt = verify_roundtrip(ctx, m, n);
  CHECK(rt.g_after_f);
  CHECK(rt.f_after_g);

  auto ctx4 = s4_context();
  auto rt4 = verify_roundtrip(ctx4, GModule::trivial(ctx4.g, 2),
                              GModule::trivial(ctx4.h_group, 2));
  CHECK(rt4.g_after_f);
  CHECK(rt4.f_after_g);
}

TEST_CASE("enumeration of vertex-d modules in the TI situation") {
  auto ctx = s3_context();
  auto lists = enumerate_vertex_d_modules(ctx);
  REQUIRE(lists.over_g.size() == 1);
  REQUIRE(lists.over_h.size() == 1);
  CHECK(is_isomorphic(lists.over_g[0], GModule::trivial(ctx.g, 2)));
  CHECK(is_isomorphic(lists.over_h[0], GModule::trivial(ctx.h_group, 2)));
}

TEST_CASE("bijection with matching stable-hom dimensions") {
  auto ctx = s3_context();
  auto rep = verify_bijection(ctx);
  REQUIRE(rep.forward.size() == 1);
  CHECK(rep.forward[0] == 0);
  CHECK(rep.hom_dims_match);
}

TEST_CASE("degenerate context with h equal to the whole group") {
  auto s3 = PermGroup::preset("S3");
  auto ctx = make_green_context(s3, 2, sylow_subgroup(s3, 2), Subgroup::whole(s3));
  CHECK(ctx.x_family.members.empty());
  CHECK(ctx.h_group->order() == 6);

  auto k = GModule::trivial(s3, 2);
  auto rep = green_f(ctx, k);
  CHECK(rep.other_factors.empty());
  CHECK(is_isomorphic(rep.correspondent, GModule::trivial(ctx.h_group, 2)));

  auto rg = green_g(ctx, GModule::trivial(ctx.h_group, 2));
  CHECK(is_isomorphic(rg.correspondent, k));
  CHECK(rg.other_factors.empty());

  auto lists = enumerate_vertex_d_modules(ctx);
  CHECK(lists.over_g.size() == lists.over_h.size());
  auto bij = verify_bijection(ctx);
  CHECK(bij.hom_dims_match);

  // No conjugator lies outside h, so the condition holds vacuously.
  auto ak = check_ak_condition(ctx);
  CHECK(ak.generators_checked == 0);
  CHECK(ak.holds());
}

TEST_CASE("four-route projectivity agreement") {
  auto s3 = PermGroup::preset("S3");
  auto k = GModule::trivial(s3, 2);
  auto syl = sylow_subgroup(s3, 2);

  auto r1 = adjoint_higman_check(k, syl);
  CHECK(r1.all_agree);
  CHECK(r1.trace_route);
  CHECK(r1.summand_of_ind_res);
  CHECK(r1.summand_of_some_induced);
  CHECK(r1.counit_splits);

  auto r2 = adjoint_higman_check(k, Subgroup::trivial(s3));
  CHECK(r2.all_agree);
  CHECK_FALSE(r2.trace_route);
  CHECK_FALSE(r2.summand_of_ind_res);
  CHECK_FALSE(r2.summand_of_some_induced);
  CHECK_FALSE(r2.counit_splits);

  auto r3 = adjoint_higman_check(k, Subgroup::whole(s3));
  CHECK(r3.all_agree);
  CHECK(r3.trace_route);

  auto r4 = adjoint_higman_check(GModule::regular(s3, 2), Subgroup::trivial(s3));
  CHECK(r4.all_agree);
  CHECK(r4.trace_route);

  // A decomposable module: the permutation module of S3 splits as k ⊕ M2
  // and is Sylow-projective but not projective.
  auto r5 = adjoint_higman_check(GModule::permutation(s3, 2), syl);
  CHECK(r5.all_agree);
  CHECK(r5.trace_route);
  auto r6 = adjoint_higman_check(GModule::permutation(s3, 2), Subgroup::trivial(s3));
  CHECK(r6.all_agree);
  CHECK_FALSE(r6.trace_route);
}

TEST_CASE("auslander-kleiner condition on the catalog contexts") {
  auto ctx = s3_context();
  auto ak = check_ak_condition(ctx);
  CHECK(ak.generators_checked >= 1);
  CHECK(ak.factors_checked >= 1);
  CHECK(ak.ts_hypothesis);
  CHECK(ak.violations.empty());
  CHECK(ak.holds());

  auto ctx4 = s4_context();
  auto ak4 = check_ak_condition(ctx4);
  CHECK(ak4.generators_checked >= 2);
  CHECK(ak4.ts_hypothesis);
  CHECK(ak4.violations.empty());
}
