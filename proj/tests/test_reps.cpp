#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gw/error.hpp"
#include "gw/gmodule.hpp"

using namespace gw;

namespace {

// 2-dimensional simple for S3 in characteristic 2: the coordinate-sum-zero
// subspace of the natural permutation module.
GModule sum_zero_s3_mod2() {
  GroupPtr s3 = PermGroup::preset("S3");
  GModule perm = GModule::permutation(s3, 2);
  FpMatrix span = FpMatrix::from_rows(2, {{1, 0}, {1, 1}, {0, 1}});
  return submodule_from_basis(perm, span).module;
}

} // namespace

TEST_CASE("module construction validates the group relations") {
  GroupPtr c2 = PermGroup::preset("C2");
  // rho(g) = [2] over GF(3) squares to the identity: a valid representation
  CHECK_NOTHROW(GModule(c2, 3, 1, {FpMatrix::from_rows(3, {{2}})}));
  // rho(g) = [2] over GF(5) has order 4, not 2
  CHECK_THROWS_AS(GModule(c2, 5, 1, {FpMatrix::from_rows(5, {{2}})}), contract_error);
  // wrong matrix count / shape / characteristic
  CHECK_THROWS_AS(GModule(c2, 2, 1, {}), contract_error);
  CHECK_THROWS_AS(GModule(c2, 2, 2, {FpMatrix::identity(2, 1)}), contract_error);
  CHECK_THROWS_AS(GModule(c2, 2, 1, {FpMatrix::identity(3, 1)}), contract_error);
  CHECK_THROWS_AS(GModule(c2, 4, 1, {FpMatrix::identity(4, 1)}), contract_error);

  GroupPtr s3 = PermGroup::preset("S3");
  GModule reg = GModule::regular(s3, 2);
  CHECK(reg.dim() == 6);
  for (std::uint32_t a = 0; a < 6; ++a) {
    CHECK(reg.action(a).is_invertible());
    // left regular action sends the identity basis vector to e_a
    CHECK(reg.action(a).at(a, 0) == 1);
    for (std::uint32_t b = 0; b < 6; ++b)
      CHECK(reg.action(a) * reg.action(b) == reg.action(s3->multiply(a, b)));
  }
  CHECK(reg.action(0).is_identity());
}

TEST_CASE("preset modules") {
  GroupPtr s3 = PermGroup::preset("S3");
  CHECK(GModule::trivial(s3, 5).dim() == 1);
  CHECK(GModule::zero(s3, 5).dim() == 0);
  CHECK(GModule::permutation(s3, 5).dim() == 3);
  CHECK(GModule::regular(s3, 5).dim() == 6);

  GModule sgn = GModule::sign(s3, 3);
  CHECK(sgn.dim() == 1);
  CHECK(sgn.generator_matrices()[0].at(0, 0) == 2); // transposition acts by -1
  CHECK(sgn.generator_matrices()[1].at(0, 0) == 1); // 3-cycle is even
  CHECK(equal_presentation(GModule::sign(s3, 2), GModule::trivial(s3, 2)));

  GroupPtr c4 = PermGroup::preset("C4");
  for (std::size_t r = 1; r <= 4; ++r) CHECK(GModule::jordan(c4, 2, r).dim() == r);
  CHECK_THROWS_AS(GModule::jordan(c4, 2, 5), contract_error);
  CHECK_THROWS_AS(GModule::jordan(c4, 3, 2), contract_error);  // wrong p
  CHECK_THROWS_AS(GModule::jordan(PermGroup::preset("V4"), 2, 2), contract_error);
  CHECK_THROWS_AS(GModule::jordan(s3, 3, 1), contract_error);
  CHECK(equal_presentation(GModule::jordan(c4, 2, 1), GModule::trivial(c4, 2)));
}

TEST_CASE("hom spaces") {
  GroupPtr c2 = PermGroup::preset("C2");
  GModule k2 = GModule::trivial(c2, 2);
  GModule reg2 = GModule::regular(c2, 2);
  CHECK(hom_space(k2, k2).size() == 1);
  CHECK(hom_space(reg2, reg2).size() == 2); // endomorphisms of kC2 = kC2
  CHECK(hom_space(reg2, k2).size() == 1);
  CHECK(hom_space(k2, reg2).size() == 1);

  GroupPtr s3 = PermGroup::preset("S3");
  GModule m2 = sum_zero_s3_mod2();
  GModule k = GModule::trivial(s3, 2);
  CHECK(m2.dim() == 2);
  CHECK(hom_space(m2, k).empty());
  CHECK(hom_space(k, m2).empty());
  CHECK(hom_space(m2, m2).size() == 1);
  CHECK(hom_space(GModule::permutation(s3, 2), GModule::permutation(s3, 2)).size() == 2);

  for (const FpMatrix& f : hom_space(GModule::regular(s3, 2), m2))
    CHECK(is_module_hom(GModule::regular(s3, 2), m2, f));
  CHECK(hom_space(GModule::regular(s3, 2), m2).size() == 2); // dim Hom(kG, M) = dim M

  CHECK(hom_space(GModule::zero(s3, 2), k).empty());
  CHECK_THROWS_AS(hom_space(k2, k), contract_error); // different groups
}

TEST_CASE("invariant subspaces") {
  CHECK(invariants(GModule::regular(PermGroup::preset("C2"), 2)).cols() == 1);
  CHECK(invariants(GModule::regular(PermGroup::preset("S3"), 3)).cols() == 1);
  GModule perm3 = GModule::permutation(PermGroup::preset("S3"), 3);
  FpMatrix fix = invariants(perm3);
  REQUIRE(fix.cols() == 1);
  CHECK(fix.at(0, 0) == fix.at(1, 0));
  CHECK(fix.at(1, 0) == fix.at(2, 0));
  CHECK(invariants(GModule::sign(PermGroup::preset("S3"), 3)).cols() == 0);
  CHECK(invariants(GModule::trivial(PermGroup::preset("trivial"), 2)).cols() == 1);
}

TEST_CASE("sums, tensors, duals, base change") {
  GroupPtr s3 = PermGroup::preset("S3");
  GModule k = GModule::trivial(s3, 3);
  GModule sgn = GModule::sign(s3, 3);
  GModule perm = GModule::permutation(s3, 3);

  CHECK(direct_sum(k, perm).dim() == 4);
  CHECK(hom_space(direct_sum(k, k), direct_sum(k, k)).size() == 4);
  CHECK(tensor(perm, perm).dim() == 9);
  CHECK(equal_presentation(tensor(k, perm), perm));
  CHECK(equal_presentation(tensor(sgn, sgn), k));
  CHECK(equal_presentation(dual(dual(perm)), perm));
  CHECK(equal_presentation(dual(k), k));
  CHECK(equal_presentation(dual(sgn), sgn));

  GModule parts = direct_sum_many(s3, 3, {k, sgn, perm});
  CHECK(parts.dim() == 5);
  CHECK(direct_sum_many(s3, 3, {}).dim() == 0);

  FpMatrix u = FpMatrix::from_rows(3, {{1, 1, 0}, {0, 1, 2}, {0, 0, 1}});
  GModule moved = conjugated_module(perm, u);
  CHECK(hom_space(moved, moved).size() == hom_space(perm, perm).size());
  CHECK(invariants(moved).cols() == invariants(perm).cols());
  CHECK_THROWS_AS(conjugated_module(perm, FpMatrix(3, 3, 3)), contract_error);

  CHECK(module_lex_less(k, perm));
  CHECK_FALSE(module_lex_less(perm, k));
  CHECK_FALSE(module_lex_less(k, k));
}

TEST_CASE("submodules, quotients, kernels, images") {
  GroupPtr s3 = PermGroup::preset("S3");
  GModule perm = GModule::permutation(s3, 2);

  FpMatrix span = FpMatrix::from_rows(2, {{1, 0}, {1, 1}, {0, 1}});
  Submodule sub = submodule_from_basis(perm, span);
  CHECK(sub.module.dim() == 2);
  CHECK(sub.inclusion.rows() == 3);
  CHECK(sub.inclusion.cols() == 2);
  // inclusion intertwines the actions
  for (std::size_t j = 0; j < 2; ++j)
    CHECK(perm.generator_matrices()[j] * sub.inclusion ==
          sub.inclusion * sub.module.generator_matrices()[j]);

  Quotient quo = quotient_by(perm, span);
  CHECK(quo.module.dim() == 1);
  for (const FpMatrix& a : quo.module.generator_matrices()) CHECK(a.is_identity());
  for (std::size_t j = 0; j < 2; ++j)
    CHECK(quo.projection * perm.generator_matrices()[j] ==
          quo.module.generator_matrices()[j] * quo.projection);

  // e_0 alone does not span a stable subspace
  FpMatrix e0 = FpMatrix::from_rows(2, {{1}, {0}, {0}});
  CHECK_THROWS_AS(submodule_from_basis(perm, e0), contract_error);
  CHECK(spin(perm, e0).module.dim() == 3);

  FpMatrix allones = FpMatrix::from_rows(2, {{1}, {1}, {1}});
  CHECK(spin(perm, allones).module.dim() == 1);
  CHECK(spin(perm, FpMatrix(2, 3, 0)).module.dim() == 0);
  CHECK(spin(GModule::regular(PermGroup::preset("C3"), 3),
             FpMatrix::from_rows(3, {{1}, {0}, {0}}))
            .module.dim() == 3);

  GModule reg2 = GModule::regular(PermGroup::preset("C2"), 2);
  GModule k2 = GModule::trivial(PermGroup::preset("C2"), 2);
  FpMatrix aug = FpMatrix::from_rows(2, {{1, 1}});
  REQUIRE(is_module_hom(reg2, k2, aug));
  CHECK(kernel_of_hom(reg2, k2, aug).module.dim() == 1);
  CHECK(image_of_hom(reg2, k2, aug).module.dim() == 1);
  CHECK_THROWS_AS(kernel_of_hom(reg2, k2, FpMatrix::from_rows(2, {{1, 0}})),
                  contract_error);
}

TEST_CASE("short exact sequences and splitting") {
  GroupPtr c2 = PermGroup::preset("C2");
  GModule reg = GModule::regular(c2, 2);
  ShortExactSeq ses = ses_from_submodule(reg, FpMatrix::from_rows(2, {{1}, {1}}));
  CHECK(is_exact(ses));
  CHECK_FALSE(is_split(ses)); // kC2 is indecomposable in characteristic 2

  GroupPtr s3 = PermGroup::preset("S3");
  ShortExactSeq split_seq = ses_from_submodule(
      GModule::permutation(s3, 2), FpMatrix::from_rows(2, {{1, 0}, {1, 1}, {0, 1}}));
  CHECK(is_exact(split_seq));
  CHECK(is_split(split_seq)); // complement spanned by (1,1,1)

  // natural module for S3 at p = 3 is uniserial: the fixed line does not split off
  ShortExactSeq ses3 = ses_from_submodule(GModule::permutation(s3, 3),
                                          FpMatrix::from_rows(3, {{1}, {1}, {1}}));
  CHECK(is_exact(ses3));
  CHECK_FALSE(is_split(ses3));

  // away from the group order everything splits
  ShortExactSeq ses5 = ses_from_submodule(GModule::permutation(s3, 5),
                                          FpMatrix::from_rows(5, {{1}, {1}, {1}}));
  CHECK(is_split(ses5));

  // tampered sequence is rejected
  ShortExactSeq bad = ses;
  bad.projection = FpMatrix(2, 1, 2);
  CHECK_FALSE(is_exact(bad));
  CHECK_THROWS_AS(is_split(bad), contract_error);
}

TEST_CASE("free presentations") {
  GroupPtr c2 = PermGroup::preset("C2");
  GModule k = GModule::trivial(c2, 2);
  FreePresentation fp = free_presentation(k);
  CHECK(fp.free.dim() == 2);
  CHECK(fp.omega.module.dim() == 1);
  CHECK(is_module_hom(fp.free, k, fp.projection));
  CHECK(fp.projection.rank() == 1);

  GModule m2 = sum_zero_s3_mod2();
  FreePresentation fp2 = free_presentation(m2);
  CHECK(fp2.free.dim() == 12);
  CHECK(fp2.omega.module.dim() == 10);
  CHECK(is_module_hom(fp2.free, m2, fp2.projection));
}

TEST_CASE("ext groups against known cohomology") {
  auto ext_kk = [](const char* grp, u64 p) {
    GroupPtr g = PermGroup::preset(grp);
    GModule k = GModule::trivial(g, p);
    return ext1_dim(k, k);
  };
  CHECK(ext_kk("C2", 2) == 1);
  CHECK(ext_kk("C3", 3) == 1);
  CHECK(ext_kk("C4", 2) == 1);
  CHECK(ext_kk("V4", 2) == 2); // rank of the elementary abelian group
  CHECK(ext_kk("C2", 3) == 0); // group order invertible
  CHECK(ext_kk("S3", 3) == 0); // top of rad P(k) is the sign module
  CHECK(ext_kk("S3", 2) == 1);

  GroupPtr s3 = PermGroup::preset("S3");
  GModule k3 = GModule::trivial(s3, 3);
  GModule sgn = GModule::sign(s3, 3);
  CHECK(ext1_dim(k3, sgn) == 1);
  CHECK(ext1_dim(sgn, k3) == 1);
  CHECK(ext1_dim(sgn, sgn) == 0);

  // extensions vanish on projectives in both arguments
  GModule m2 = sum_zero_s3_mod2();
  GModule k2 = GModule::trivial(s3, 2);
  CHECK(ext1_dim(m2, m2) == 0);
  CHECK(ext1_dim(m2, k2) == 0);
  CHECK(ext1_dim(GModule::regular(s3, 2), k2) == 0);
}
