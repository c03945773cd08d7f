#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gw/decompose.hpp"
#include "gw/error.hpp"
#include "gw/fp_matrix.hpp"
#include "gw/functors.hpp"
#include "gw/gmodule.hpp"
#include "gw/json_io.hpp"
#include "gw/perm_group.hpp"
#include "gw/relproj.hpp"

#include <cstdio>
#include <fstream>
#include <string>

using namespace gw;

namespace {

// Message of the contract_error thrown by `fn`, or "" if nothing was thrown.
template <typename F>
std::string thrown_message(F&& fn) {
  try {
    fn();
  } catch (const contract_error& e) {
    return e.what();
  }
  return "";
}

bool mentions(const std::string& msg, const std::string& needle) {
  return msg.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("matrix json round trip is exact and byte stable") {
  FpMatrix m(5, 2, 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) m.set(i, j, static_cast<i64>(i * 3 + j));

  Json j = matrix_to_json(m);
  CHECK(j["p"] == 5);
  CHECK(j["rows"] == 2);
  CHECK(j["cols"] == 3);
  CHECK(j["entries"][1][1] == 4);
  CHECK(j["entries"][1][2] == 0); // 5 reduced mod 5

  FpMatrix back = matrix_from_json(j);
  CHECK(back == m);

  std::string text = j.dump(2);
  Json reparsed = Json::parse(text);
  CHECK(reparsed.dump(2) == text);
}

TEST_CASE("matrix json diagnostics name the offending field") {
  Json ok = matrix_to_json(FpMatrix::identity(3, 2));

  Json missing = ok;
  missing.erase("p");
  CHECK(mentions(thrown_message([&] { matrix_from_json(missing); }), "'p'"));

  Json wrong_type = ok;
  wrong_type["p"] = "three";
  CHECK(mentions(thrown_message([&] { matrix_from_json(wrong_type); }), "'p'"));

  Json ragged = ok;
  ragged["entries"][1] = Json::array({0});
  CHECK(mentions(thrown_message([&] { matrix_from_json(ragged); }), "'entries'"));

  Json out_of_range = ok;
  out_of_range["entries"][0][0] = 7;
  CHECK(mentions(thrown_message([&] { matrix_from_json(out_of_range); }), "'entries'"));

  Json bad_rows = ok;
  bad_rows["rows"] = 5;
  CHECK(mentions(thrown_message([&] { matrix_from_json(bad_rows); }), "'entries'"));
}

TEST_CASE("group json accepts preset names and inline descriptions") {
  GroupPtr s3 = group_from_json(Json("S3"));
  CHECK(s3->order() == 6);
  CHECK(s3->name() == "S3");

  Json j = group_to_json(*PermGroup::preset("V4"));
  CHECK(j["degree"] == 4);
  CHECK(j["generators"].size() == 2);
  CHECK(j["name"] == "V4");
  GroupPtr v4 = group_from_json(j);
  CHECK(v4->order() == 4);

  // A preset-named group references itself by name; an anonymous group inlines.
  CHECK(group_ref_to_json(PermGroup::preset("A4")) == Json("A4"));
  GroupPtr anon = PermGroup::from_generators(2, {perm_from_cycles(2, "(0 1)")});
  Json ref = group_ref_to_json(anon);
  CHECK(ref.is_object());
  CHECK(same_group(group_from_json(ref), anon));

  CHECK(mentions(thrown_message([] { group_from_json(Json("Z9")); }), "Z9"));
  Json bad = group_to_json(*PermGroup::preset("C2"));
  bad["generators"][0] = Json::array({0, 2});
  CHECK(mentions(thrown_message([&] { group_from_json(bad); }), "'generators'"));
}

TEST_CASE("module json round trips through both group reference forms") {
  GModule reg = GModule::regular(PermGroup::preset("S3"), 2);
  Json j = module_to_json(reg);
  CHECK(j["group"] == "S3");
  CHECK(j["p"] == 2);
  CHECK(j["dim"] == 6);
  CHECK(j["generators"].size() == reg.generator_matrices().size());

  GModule back = module_from_json(j);
  CHECK(equal_presentation(back, reg));

  std::string text = j.dump(2);
  CHECK(Json::parse(text).dump(2) == text);

  GroupPtr anon = PermGroup::from_generators(3, {perm_from_cycles(3, "(0 1 2)")});
  GModule perm = GModule::permutation(anon, 3);
  Json inlined = module_to_json(perm);
  CHECK(inlined["group"].is_object());
  CHECK(equal_presentation(module_from_json(inlined), perm));
}

TEST_CASE("module json diagnostics name the offending field") {
  Json ok = module_to_json(GModule::regular(PermGroup::preset("C2"), 2));

  Json missing = ok;
  missing.erase("dim");
  CHECK(mentions(thrown_message([&] { module_from_json(missing); }), "'dim'"));

  Json too_few = ok;
  too_few["generators"] = Json::array();
  CHECK(mentions(thrown_message([&] { module_from_json(too_few); }), "'generators'"));

  Json bad_dim = ok;
  bad_dim["dim"] = 3;
  CHECK(mentions(thrown_message([&] { module_from_json(bad_dim); }), "'generators'"));

  Json bad_p = ok;
  bad_p["p"] = 3;
  CHECK(mentions(thrown_message([&] { module_from_json(bad_p); }), "'generators'"));
}

TEST_CASE("induced modules serialize as plain modules with provenance") {
  GroupPtr s3 = PermGroup::preset("S3");
  Subgroup h = sylow_subgroup(s3, 2);
  InducedModule ind = induce_from(GModule::trivial(as_group(h), 2), h);

  Json j = induced_to_json(ind);
  CHECK(j["dim"] == 3);
  CHECK(j["induced_from"]["order"] == 2);

  GModule back = module_from_json(j);
  CHECK(equal_presentation(back, ind.module));
}

TEST_CASE("reports start with the schema tag and reserialize byte identically") {
  Json report = make_report("decompose");
  CHECK(report.begin().key() == "schema");
  CHECK(report["schema"] == "green-workbench/1");

  Decomposition dec = decompose(GModule::regular(PermGroup::preset("C2"), 2));
  report["result"] = decomposition_to_json(dec, true);

  std::string text = dump_report(report);
  CHECK(mentions(text, "\"schema\": \"green-workbench/1\""));
  CHECK(Json::parse(text).dump(2) + "\n" == text);
  CHECK_FALSE(mentions(text, "e+"));
  CHECK_FALSE(mentions(text, "null"));
}

TEST_CASE("decomposition reports carry dims multiplicities and certificates") {
  Decomposition dec = decompose(GModule::regular(PermGroup::preset("S3"), 2));
  Json j = decomposition_to_json(dec, true);

  CHECK(j["dim"] == 6);
  CHECK(j["factors"].size() == dec.factors.size());
  u64 total = 0;
  for (const auto& f : j["factors"]) {
    total += f["dim"].get<u64>() * f["multiplicity"].get<u64>();
    CHECK(f.contains("module"));
  }
  CHECK(total == 6);
  CHECK(j["summands"].size() == dec.summands.size());
  for (const auto& s : j["summands"]) {
    FpMatrix inj = matrix_from_json(s["injection"]);
    FpMatrix proj = matrix_from_json(s["projection"]);
    CHECK((proj * inj).is_identity());
  }
}

TEST_CASE("vertex and quotient hom reports use exact integers") {
  GroupPtr s3 = PermGroup::preset("S3");
  VertexResult vr = vertex_and_source(GModule::trivial(s3, 2));
  Json vj = vertex_to_json(vr);
  CHECK(vj["vertex"]["order"] == 2);
  CHECK(vj["vertex"]["structure"] == "C2");
  CHECK(vj["vertex_class_size"] == 3);
  CHECK(vj["source"]["dim"] == 1);

  QuotientHomSpace q =
      quotient_hom(GModule::trivial(s3, 2), GModule::trivial(s3, 2), {Subgroup::trivial(s3)});
  Json qj = quotient_hom_to_json(q);
  CHECK(qj["hom_dim"] == 1);
  CHECK(qj["ideal_dim"] == 0);
  CHECK(qj["quotient_dim"] == 1);
}

TEST_CASE("structure names label small subgroups by isomorphism type") {
  GroupPtr s4 = PermGroup::preset("S4");
  CHECK(structure_name(Subgroup::trivial(s4)) == "trivial");
  CHECK(structure_name(sylow_subgroup(s4, 2)) == "D8");
  CHECK(structure_name(sylow_subgroup(s4, 3)) == "C3");
  CHECK(structure_name(Subgroup::generated_by(
            s4, {perm_from_cycles(4, "(0 1 2 3)")})) == "C4");
  CHECK(structure_name(Subgroup::generated_by(
            s4, {perm_from_cycles(4, "(0 1)(2 3)"), perm_from_cycles(4, "(0 2)(1 3)")})) == "V4");
  CHECK(structure_name(Subgroup::generated_by(
            s4, {perm_from_cycles(4, "(0 1 2)"), perm_from_cycles(4, "(0 1)")})) == "S3");
  CHECK(structure_name(Subgroup::whole(PermGroup::preset("A5"))) == "A5");
  CHECK(structure_name(sylow_subgroup(PermGroup::preset("D10"), 5)) == "C5");
}

TEST_CASE("json files load with diagnostics for bad paths and bad syntax") {
  CHECK(mentions(thrown_message([] { load_json_file("/no/such/file.json"); }),
                 "/no/such/file.json"));

  const char* path = "gw_io_test_bad.json";
  {
    std::ofstream out(path);
    out << "{ \"p\": 2, ";
  }
  CHECK(mentions(thrown_message([&] { load_json_file(path); }), path));
  std::remove(path);

  const char* good = "gw_io_test_mod.json";
  {
    std::ofstream out(good);
    out << module_to_json(GModule::regular(PermGroup::preset("C3"), 2)).dump(2);
  }
  GModule loaded = module_from_json(load_json_file(good));
  CHECK(loaded.dim() == 3);
  std::remove(good);
}
