#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gw/error.hpp"
#include "gw/perm.hpp"
#include "gw/perm_group.hpp"

using namespace gw;

TEST_CASE("permutation arithmetic and cycle notation") {
  Perm a = perm_from_cycles(3, "(0 1)");
  Perm b = perm_from_cycles(3, "(0 1 2)");
  // (a.compose(b))(x) = a(b(x)): 0 -> b 1 -> a 0, so 0 maps to 0
  Perm ab = a.compose(b);
  CHECK(ab(0) == 0);
  CHECK(ab(1) == 2);
  CHECK(ab(2) == 1);
  CHECK(ab == perm_from_cycles(3, "(1 2)"));

  CHECK(a.inverse() == a);
  CHECK(b.inverse() == perm_from_cycles(3, "(0 2 1)"));
  CHECK(b.compose(b.inverse()).is_identity());
  CHECK(a.order() == 2);
  CHECK(b.order() == 3);
  CHECK(Perm::identity(5).order() == 1);
  CHECK(perm_from_cycles(6, "(0 1)(2 3 4)").order() == 6);

  CHECK(to_cycle_string(Perm::identity(4)) == "()");
  CHECK(to_cycle_string(perm_from_cycles(4, "(0 1)(2 3)")) == "(0 1)(2 3)");
  CHECK(perm_from_cycles(4, "()") == Perm::identity(4));
  CHECK(perm_from_cycles(4, "") == Perm::identity(4));

  CHECK_THROWS_AS(perm_from_cycles(3, "(0 1"), contract_error);
  CHECK_THROWS_AS(perm_from_cycles(3, "(0 1)(1 2)"), contract_error);
  CHECK_THROWS_AS(perm_from_cycles(3, "(0 7)"), contract_error);
  CHECK_THROWS_AS(perm_from_cycles(3, "(0 x)"), contract_error);
}

TEST_CASE("preset groups have the expected orders") {
  const std::vector<std::pair<std::string, std::size_t>> expect = {
      {"trivial", 1}, {"C2", 2}, {"C3", 3}, {"C4", 4},  {"C5", 5},  {"V4", 4},
      {"S3", 6},      {"D8", 8}, {"D10", 10}, {"A4", 12}, {"S4", 24}, {"A5", 60}};
  for (const auto& [name, order] : expect) {
    GroupPtr g = PermGroup::preset(name);
    CHECK(g->order() == order);
    CHECK(g->name() == name);
    CHECK(g->elements()[0].is_identity());
  }
  CHECK_THROWS_AS(PermGroup::preset("M11"), contract_error);
}

TEST_CASE("element enumeration: words, tables, inverses") {
  GroupPtr g = PermGroup::preset("S4");
  REQUIRE(g->order() == 24);

  // words evaluate left-to-right through compose
  for (std::size_t i = 0; i < g->order(); ++i) {
    Perm acc = Perm::identity(g->degree());
    for (std::uint32_t j : g->words()[i]) acc = acc.compose(g->generators()[j]);
    CHECK(acc == g->elements()[i]);
  }
  CHECK(g->words()[0].empty());

  for (std::uint32_t a = 0; a < g->order(); ++a) {
    CHECK(g->multiply(a, g->inverse_of(a)) == 0);
    CHECK(g->multiply(g->inverse_of(a), a) == 0);
    for (std::uint32_t b = 0; b < g->order(); ++b) {
      CHECK(g->elements()[g->multiply(a, b)] ==
            g->elements()[a].compose(g->elements()[b]));
    }
  }

  CHECK(g->position(perm_from_cycles(4, "(0 1)")) != 0);
  CHECK(g->find(perm_from_cycles(5, "(0 1)")) == std::nullopt);
  CHECK_THROWS_AS(g->position(perm_from_cycles(4, "(0 1 2 3 4)")), contract_error);

  // element orders in C4: 1, 2, and two of order 4
  GroupPtr c4 = PermGroup::preset("C4");
  std::multiset<std::uint64_t> orders;
  for (std::uint32_t a = 0; a < 4; ++a) orders.insert(c4->element_order(a));
  CHECK(orders == std::multiset<std::uint64_t>{1, 2, 4, 4});
}

TEST_CASE("group order bound is enforced") {
  CHECK_THROWS_AS(
      PermGroup::from_generators(5, {perm_from_cycles(5, "(0 1 2 3 4)")}, 4),
      contract_error);
  CHECK_NOTHROW(
      PermGroup::from_generators(5, {perm_from_cycles(5, "(0 1 2 3 4)")}, 5));
}

TEST_CASE("subgroup construction and validation") {
  GroupPtr s3 = PermGroup::preset("S3");
  const std::uint32_t t = s3->position(perm_from_cycles(3, "(0 1)"));
  const std::uint32_t r = s3->position(perm_from_cycles(3, "(0 1 2)"));

  Subgroup c2 = Subgroup::generated_by_positions(s3, {t});
  CHECK(c2.order() == 2);
  CHECK(c2.contains(0));
  CHECK(c2.contains(t));
  CHECK_FALSE(c2.contains(r));
  CHECK(c2.generator_positions() == std::vector<std::uint32_t>{t});

  Subgroup whole = Subgroup::generated_by_positions(s3, {t, r});
  CHECK(whole.is_whole());
  CHECK(whole.contains_subgroup(c2));
  CHECK_FALSE(c2.contains_subgroup(whole));

  // {e, (01), (012)} is not closed
  CHECK_THROWS_AS(Subgroup::from_members(s3, {0, t, r}), contract_error);
  // missing identity
  CHECK_THROWS_AS(Subgroup::from_members(s3, {t}), contract_error);
  // valid member list round-trips
  Subgroup c3 = Subgroup::from_members(s3, {0, r, s3->inverse_of(r)});
  CHECK(c3.order() == 3);
  CHECK(Subgroup::trivial(s3).order() == 1);
  CHECK(Subgroup::whole(s3).order() == 6);
}

TEST_CASE("subgroup lattices of small groups") {
  CHECK(PermGroup::preset("trivial")->all_subgroups().size() == 1);
  CHECK(PermGroup::preset("C2")->all_subgroups().size() == 2);
  CHECK(PermGroup::preset("C4")->all_subgroups().size() == 3);
  CHECK(PermGroup::preset("V4")->all_subgroups().size() == 5);
  CHECK(PermGroup::preset("S3")->all_subgroups().size() == 6);
  CHECK(PermGroup::preset("D8")->all_subgroups().size() == 10);
  CHECK(PermGroup::preset("A4")->all_subgroups().size() == 10);
  CHECK(PermGroup::preset("S4")->all_subgroups().size() == 30);
  CHECK(PermGroup::preset("A5")->all_subgroups().size() == 59);

  // each lattice entry really is a subgroup, sorted by (order, members)
  GroupPtr s4 = PermGroup::preset("S4");
  auto subs = s4->all_subgroups();
  for (std::size_t i = 0; i + 1 < subs.size(); ++i) CHECK(subs[i] < subs[i + 1]);
  for (const Subgroup& s : subs) {
    CHECK(24 % s.order() == 0);
    CHECK_NOTHROW(Subgroup::from_members(s4, s.members()));
    CHECK(Subgroup::generated_by_positions(s4, s.generator_positions()) == s);
  }
}

TEST_CASE("conjugacy classes of subgroups") {
  CHECK(subgroups_up_to_conjugacy(PermGroup::preset("S3")).size() == 4);
  CHECK(subgroups_up_to_conjugacy(PermGroup::preset("V4")).size() == 5);
  CHECK(subgroups_up_to_conjugacy(PermGroup::preset("D8")).size() == 8);
  CHECK(subgroups_up_to_conjugacy(PermGroup::preset("A4")).size() == 5);
  CHECK(subgroups_up_to_conjugacy(PermGroup::preset("S4")).size() == 11);
  CHECK(subgroups_up_to_conjugacy(PermGroup::preset("A5")).size() == 9);

  GroupPtr s3 = PermGroup::preset("S3");
  Subgroup a = Subgroup::generated_by(s3, {perm_from_cycles(3, "(0 1)")});
  Subgroup b = Subgroup::generated_by(s3, {perm_from_cycles(3, "(1 2)")});
  Subgroup c3 = Subgroup::generated_by(s3, {perm_from_cycles(3, "(0 1 2)")});
  CHECK(is_conjugate(a, b));
  CHECK_FALSE(is_conjugate(a, c3));
  auto w = conjugating_element(a, b);
  REQUIRE(w.has_value());
  CHECK(conjugate_subgroup(a, *w) == b);
  CHECK(conjugate_subgroup(a, *w).generator_perms().size() == 1);
}

TEST_CASE("p-subgroup classes and Sylow subgroups") {
  GroupPtr s4 = PermGroup::preset("S4");
  // trivial, two C2 classes, C4, two V4 classes, D8
  auto ps = p_subgroups_up_to_conjugacy(s4, 2);
  CHECK(ps.size() == 7);
  std::multiset<std::size_t> orders;
  for (const Subgroup& s : ps) orders.insert(s.order());
  CHECK(orders == std::multiset<std::size_t>{1, 2, 2, 4, 4, 4, 8});
  CHECK(ps.front().is_trivial()); // includes the trivial subgroup

  CHECK(p_subgroups_up_to_conjugacy(s4, 3).size() == 2);
  CHECK(p_subgroups_up_to_conjugacy(PermGroup::preset("A5"), 2).size() == 3);
  CHECK(p_subgroups_up_to_conjugacy(PermGroup::preset("A5"), 5).size() == 2);

  CHECK(sylow_subgroup(s4, 2).order() == 8);
  CHECK(sylow_subgroup(s4, 3).order() == 3);
  CHECK(sylow_subgroup(PermGroup::preset("S3"), 2).order() == 2);
  CHECK(sylow_subgroup(PermGroup::preset("A5"), 5).order() == 5);
  CHECK(sylow_subgroup(PermGroup::preset("A5"), 7).order() == 1);
  CHECK_THROWS_AS(sylow_subgroup(s4, 4), contract_error);
}

TEST_CASE("normalizers") {
  GroupPtr s3 = PermGroup::preset("S3");
  Subgroup c2 = Subgroup::generated_by(s3, {perm_from_cycles(3, "(0 1)")});
  CHECK(normalizer(c2) == c2); // self-normalizing
  Subgroup c3 = Subgroup::generated_by(s3, {perm_from_cycles(3, "(0 1 2)")});
  CHECK(normalizer(c3).is_whole()); // normal

  GroupPtr a5 = PermGroup::preset("A5");
  Subgroup c5 = sylow_subgroup(a5, 5);
  Subgroup n = normalizer(c5);
  CHECK(n.order() == 10);
  CHECK(n.contains_subgroup(c5));

  GroupPtr s4 = PermGroup::preset("S4");
  CHECK(normalizer(sylow_subgroup(s4, 2)).order() == 8); // Sylow-2 self-normalizing
}

TEST_CASE("left cosets and double cosets") {
  GroupPtr s3 = PermGroup::preset("S3");
  Subgroup c3 = Subgroup::generated_by(s3, {perm_from_cycles(3, "(0 1 2)")});
  auto reps = left_coset_reps(c3);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0] == 0);
  // cosets partition the group
  std::set<std::uint32_t> covered;
  for (std::uint32_t r : reps)
    for (std::uint32_t m : c3.members()) covered.insert(s3->multiply(r, m));
  CHECK(covered.size() == 6);

  Subgroup c2 = Subgroup::generated_by(s3, {perm_from_cycles(3, "(0 1)")});
  CHECK(left_coset_reps(c2).size() == 3);
  CHECK(double_coset_reps(c2, c2).size() == 2); // sizes 2 + 4

  GroupPtr a5 = PermGroup::preset("A5");
  Subgroup d10 = normalizer(sylow_subgroup(a5, 5));
  CHECK(double_coset_reps(d10, d10).size() == 2); // sizes 10 + 50
  CHECK(double_coset_reps(d10, d10)[0] == 0);

  CHECK(left_coset_reps(Subgroup::whole(s3)) == std::vector<std::uint32_t>{0});
  CHECK(left_coset_reps(Subgroup::trivial(s3)).size() == 6);
}

TEST_CASE("intersection families for correspondence setups") {
  GroupPtr a5 = PermGroup::preset("A5");
  Subgroup d = sylow_subgroup(a5, 5);
  Subgroup h = normalizer(d);

  // Sylow-5 subgroups of A5 intersect trivially, so both families collapse
  SubgroupFamily fx = family_x(h, d);
  SubgroupFamily fy = family_y(h, d);
  REQUIRE(fx.members.size() == 1);
  REQUIRE(fy.members.size() == 1);
  CHECK(fx.members[0].is_trivial());
  CHECK(fy.members[0].is_trivial());
  CHECK(fx.contains(Subgroup::trivial(a5)));
  CHECK_FALSE(fx.contains(d));
  CHECK_FALSE(fy.contains(d));
  CHECK_FALSE(fy.contains(Subgroup::generated_by(a5, {perm_from_cycles(5, "(0 1)(2 3)")})));

  // S4 with D the Sylow 2-subgroup: distinct Sylow-2s meet in the normal V4
  GroupPtr s4 = PermGroup::preset("S4");
  Subgroup d8 = sylow_subgroup(s4, 2);
  Subgroup h8 = normalizer(d8);
  SubgroupFamily fx4 = family_x(h8, d8);
  REQUIRE(fx4.members.size() == 1);
  CHECK(fx4.members[0].order() == 4);
  CHECK(fx4.contains(fx4.members[0]));
  CHECK_FALSE(fx4.contains(d8));
  // the first family always sits inside the second
  SubgroupFamily fy4 = family_y(h8, d8);
  for (const Subgroup& m : fx4.members) CHECK(fy4.contains(m));

  // H = G: no g outside H, families are empty and contain nothing
  SubgroupFamily none = family_x(Subgroup::whole(s4), d8);
  CHECK(none.empty());
  CHECK_FALSE(none.contains(Subgroup::trivial(s4)));

  CHECK_THROWS_AS(family_x(d, h), contract_error); // D must lie inside H
}

TEST_CASE("subgroups as standalone groups") {
  GroupPtr s4 = PermGroup::preset("S4");
  Subgroup v4 = Subgroup::generated_by(
      s4, {perm_from_cycles(4, "(0 1)(2 3)"), perm_from_cycles(4, "(0 2)(1 3)")});
  GroupPtr v4g = as_group(v4);
  CHECK(v4g->order() == 4);
  CHECK(v4g->degree() == 4);
  CHECK(v4g->elements()[0].is_identity());

  // embedding respects multiplication
  auto emb = embedding_positions(v4g, s4);
  REQUIRE(emb.size() == 4);
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b)
      CHECK(s4->multiply(emb[a], emb[b]) == emb[v4g->multiply(a, b)]);

  // subgroup of the standalone copy pushes back into the parent
  Subgroup inner = Subgroup::generated_by(v4g, {perm_from_cycles(4, "(0 1)(2 3)")});
  Subgroup pushed = push_subgroup(inner, s4);
  CHECK(pushed.order() == 2);
  CHECK(v4.contains_subgroup(pushed));

  CHECK(as_group(Subgroup::whole(s4)) == s4); // identical handle
  CHECK(as_group(Subgroup::trivial(s4))->order() == 1);
  CHECK(same_group(s4, PermGroup::preset("S4")));
  CHECK_FALSE(same_group(s4, v4g));
}
