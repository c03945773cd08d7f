#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gw/error.hpp"
#include "gw/functors.hpp"

using namespace gw;

namespace {

Subgroup s3_c2() {
  GroupPtr s3 = PermGroup::preset("S3");
  return Subgroup::generated_by(s3, {perm_from_cycles(3, "(0 1)")});
}

GModule sum_zero_s3(u64 p) {
  GModule perm = GModule::permutation(PermGroup::preset("S3"), p);
  FpMatrix span(p, 3, 2);
  span.set(0, 0, 1);
  span.set(1, 0, -1);
  span.set(1, 1, 1);
  span.set(2, 1, -1);
  return submodule_from_basis(perm, span).module;
}

} // namespace

TEST_CASE("restriction") {
  GroupPtr s3 = PermGroup::preset("S3");
  Subgroup c2 = s3_c2();
  GroupPtr c2g = as_group(c2);

  GModule m2 = sum_zero_s3(2);
  GModule res = restrict_module(m2, c2g);
  CHECK(res.dim() == 2);
  CHECK(res.group() == c2g);
  // the 2-dimensional simple restricts to the regular module of C2
  CHECK(equal_presentation(res, GModule::regular(c2g, 2)));

  // restriction to the whole group returns the same presentation
  CHECK(equal_presentation(restrict_module(m2, s3), m2));

  // a group that is not made of elements of S3 is rejected
  CHECK_THROWS_AS(restrict_module(m2, PermGroup::preset("C2")), contract_error);

  // restriction respects direct sums and doesn't change hom counts over H
  GModule k = GModule::trivial(s3, 2);
  CHECK(restrict_module(direct_sum(k, m2), c2g).dim() == 3);
}

TEST_CASE("induction: construction and degenerate cases") {
  GroupPtr s3 = PermGroup::preset("S3");
  Subgroup c2 = s3_c2();
  GroupPtr c2g = as_group(c2);

  InducedModule ind = induce_from(GModule::trivial(c2g, 2), c2);
  CHECK(ind.module.dim() == 3);
  CHECK(ind.coset_reps.size() == 3);
  CHECK(ind.coset_reps[0] == 0);

  // inducing from the trivial subgroup rebuilds the regular module on the nose
  Subgroup one = Subgroup::trivial(s3);
  InducedModule free = induce_from(GModule::trivial(as_group(one), 2), one);
  CHECK(equal_presentation(free.module, GModule::regular(s3, 2)));

  // inducing from the whole group changes nothing
  Subgroup whole = Subgroup::whole(s3);
  GModule m2 = sum_zero_s3(2);
  CHECK(equal_presentation(induce_from(m2, whole).module, m2));

  // dimension scales with the index
  GroupPtr a5 = PermGroup::preset("A5");
  Subgroup d10 = normalizer(sylow_subgroup(a5, 5));
  InducedModule ia5 = induce_from(GModule::trivial(as_group(d10), 2), d10);
  CHECK(ia5.module.dim() == 6);

  // module over an unrelated group is rejected
  CHECK_THROWS_AS(induce_from(GModule::trivial(PermGroup::preset("C2"), 2), c2),
                  contract_error);
}

TEST_CASE("adjunction between induction and restriction") {
  GroupPtr s3 = PermGroup::preset("S3");
  Subgroup c2 = s3_c2();
  GroupPtr c2g = as_group(c2);
  GModule m = GModule::permutation(s3, 2);
  GModule n = GModule::trivial(c2g, 2);
  InducedModule ind = induce_from(n, c2);

  std::vector<FpMatrix> hom_h = hom_space(n, restrict_module(m, c2g));
  std::vector<FpMatrix> hom_g = hom_space(ind.module, m);
  CHECK(hom_h.size() == 2);
  CHECK(hom_h.size() == hom_g.size());

  // the two maps are mutually inverse bijections
  FpMatrix images(2, m.dim() * ind.module.dim(), hom_h.size());
  for (std::size_t i = 0; i < hom_h.size(); ++i) {
    FpMatrix up = adjoint_to_induced(ind, m, hom_h[i]);
    CHECK(is_module_hom(ind.module, m, up));
    CHECK(adjoint_from_induced(ind, m, up) == hom_h[i]);
    FpMatrix v = vec_rm(up);
    for (std::size_t r = 0; r < v.rows(); ++r)
      images.set(r, i, static_cast<i64>(v.at(r, 0)));
  }
  CHECK(images.rank() == hom_h.size()); // injective, hence bijective on equal dims

  for (const FpMatrix& psi : hom_g) {
    FpMatrix down = adjoint_from_induced(ind, m, psi);
    CHECK(adjoint_to_induced(ind, m, down) == psi);
  }

  // non-equivariant inputs are rejected
  FpMatrix junk(2, m.dim(), n.dim());
  junk.set(0, 0, 1);
  CHECK_THROWS_AS(adjoint_to_induced(ind, m, junk), contract_error);
  CHECK_THROWS_AS(adjoint_from_induced(ind, m, FpMatrix(2, 4, 3)), contract_error);
}

TEST_CASE("unit and counit") {
  GroupPtr s3 = PermGroup::preset("S3");
  Subgroup c2 = s3_c2();
  GroupPtr c2g = as_group(c2);
  GModule n = GModule::regular(c2g, 2);
  InducedModule ind = induce_from(n, c2);

  FpMatrix eps = unit_map(ind);
  CHECK(eps.rows() == 6);
  CHECK(eps.cols() == 2);
  GModule res_ind = restrict_module(ind.module, c2g);
  CHECK(is_module_hom(n, res_ind, eps));
  // first-block projection retracts the unit
  FpMatrix p1(2, 2, 6);
  p1.set(0, 0, 1);
  p1.set(1, 1, 1);
  CHECK((p1 * eps).is_identity());

  GModule m = GModule::permutation(s3, 2);
  InducedModule indres = induce_from(restrict_module(m, c2g), c2);
  FpMatrix eta = counit_map(indres, m);
  CHECK(eta.rows() == 3);
  CHECK(eta.cols() == 9);
  CHECK(is_module_hom(indres.module, m, eta));
  CHECK(eta.submatrix(0, 0, 3, 3).is_identity()); // identity coset acts trivially
  CHECK(eta.rank() == 3);                         // counit is surjective

  CHECK_THROWS_AS(counit_map(ind, m), contract_error); // source is not res m
}

TEST_CASE("relative trace") {
  GroupPtr s3 = PermGroup::preset("S3");
  Subgroup c2 = s3_c2();
  GModule perm = GModule::permutation(s3, 2);

  // index 3 is invertible mod 2: the trace of the identity is the identity
  FpMatrix tr_id = relative_trace(c2, perm, perm, FpMatrix::identity(2, 3));
  CHECK(tr_id.is_identity());

  // trace of the transposition's action sums the three transpositions: the
  // all-ones matrix
  FpMatrix f = perm.action(s3->position(perm_from_cycles(3, "(0 1)")));
  FpMatrix tr = relative_trace(c2, perm, perm, f);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(tr.at(i, j) == 1);
  CHECK(is_module_hom(perm, perm, tr));

  // trace over the whole group of a hom is just the hom
  FpMatrix same = relative_trace(Subgroup::whole(s3), perm, perm, tr);
  CHECK(same == tr);

  // input must be equivariant over the subgroup
  FpMatrix not_equi(2, 3, 3);
  not_equi.set(0, 1, 1);
  CHECK_THROWS_AS(relative_trace(c2, perm, perm, not_equi), contract_error);
}

TEST_CASE("identity-coset block of a restricted induction") {
  GroupPtr s3 = PermGroup::preset("S3");
  Subgroup c2 = s3_c2();
  GroupPtr c2g = as_group(c2);
  CHECK(ts_decomposition_check(induce_from(GModule::trivial(c2g, 2), c2)));
  CHECK(ts_decomposition_check(induce_from(GModule::regular(c2g, 2), c2)));

  GroupPtr a5 = PermGroup::preset("A5");
  Subgroup d10 = normalizer(sylow_subgroup(a5, 5));
  GroupPtr d10g = as_group(d10);
  CHECK(ts_decomposition_check(induce_from(GModule::permutation(d10g, 2), d10)));

  Subgroup whole = Subgroup::whole(s3);
  CHECK(ts_decomposition_check(induce_from(GModule::permutation(s3, 3), whole)));
}

TEST_CASE("double-coset decomposition of a restricted induction") {
  GroupPtr s3 = PermGroup::preset("S3");
  Subgroup c3 = Subgroup::generated_by(s3, {perm_from_cycles(3, "(0 1 2)")});
  Subgroup c2 = s3_c2();

  // H = C2, K = C3: one double coset, the piece is free of rank 1 over C2
  InducedModule ind = induce_from(GModule::trivial(as_group(c3), 2), c3);
  MackeyDecomposition md = mackey_decomposition(ind, c2);
  REQUIRE(md.pieces.size() == 1);
  CHECK(md.pieces[0].intersection.is_trivial());
  CHECK(md.pieces[0].induced.module.dim() == 2);
  CHECK(md.restricted.dim() == 2);

  // H = K = C3 normal: two double cosets; the conjugate piece twists the
  // character c ↦ c^{-1}.  Over GF(7), 2 is a primitive cube root of unity.
  GroupPtr c3g = as_group(c3);
  GModule chi(c3g, 7, 1, {FpMatrix::from_rows(7, {{2}})});
  MackeyDecomposition md2 = mackey_decomposition(induce_from(chi, c3), c3);
  REQUIRE(md2.pieces.size() == 2);
  std::multiset<u64> vals;
  for (const MackeyPiece& piece : md2.pieces) {
    CHECK(piece.intersection.order() == 3);
    CHECK(piece.induced.module.dim() == 1);
    vals.insert(piece.induced.module.generator_matrices()[0].at(0, 0));
  }
  CHECK(vals == std::multiset<u64>{2, 4});

  // A5 restricted to the Sylow-5 normalizer: trivial intersections force one
  // free piece of rank 5 next to the identity piece
  GroupPtr a5 = PermGroup::preset("A5");
  Subgroup d10 = normalizer(sylow_subgroup(a5, 5));
  InducedModule ia5 = induce_from(GModule::trivial(as_group(d10), 2), d10);
  MackeyDecomposition md3 = mackey_decomposition(ia5, d10);
  REQUIRE(md3.pieces.size() == 2);
  std::multiset<std::size_t> dims, orders;
  for (const MackeyPiece& piece : md3.pieces) {
    dims.insert(piece.induced.module.dim());
    orders.insert(piece.intersection.order());
  }
  CHECK(dims == std::multiset<std::size_t>{1, 5});
  CHECK(orders == std::multiset<std::size_t>{2, 10});
  CHECK(md3.iso.is_invertible());
}
