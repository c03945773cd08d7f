#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gw/catalog.hpp"
#include "gw/error.hpp"

using namespace gw;

// The full catalogue is exercised by the acceptance binary; these tests cover
// the runner plumbing through its fast entries.

TEST_CASE("catalog runs a selected subset in id order") {
  CatalogOptions opts;
  opts.criteria = {10, 7, 7};
  std::vector<CriterionResult> rs = run_catalog(opts);
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].id == 7);
  CHECK(rs[0].name == "stable-hom-ideals");
  CHECK(rs[0].passed);
  CHECK(rs[1].id == 10);
  CHECK(rs[1].name == "decompose-oracle");
  CHECK(rs[1].passed);
  CHECK(all_passed(rs));
}

TEST_CASE("catalog rejects out-of-range criterion ids") {
  CatalogOptions opts;
  opts.criteria = {11};
  CHECK_THROWS_AS(run_catalog(opts), contract_error);
}

TEST_CASE("mackey and higman entries pass and report counts") {
  CatalogOptions opts;
  opts.criteria = {1, 6};
  std::vector<CriterionResult> rs = run_catalog(opts);
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].passed);
  CHECK(rs[0].report["pairs"].get<std::size_t>() >= 50);
  CHECK(rs[1].passed);
  CHECK(rs[1].report["comparisons"].get<std::size_t>() >= 50);
}

TEST_CASE("result lines and json summary are well formed") {
  CriterionResult good{7, "stable-hom-ideals", true, 12, "fine", Json::object()};
  CriterionResult bad{3, "green-ti-contexts", false, 40, "count off", Json::object()};
  std::string line = format_result_line(good);
  CHECK(line.find("PASS") == 0);
  CHECK(line.find("stable-hom-ideals") != std::string::npos);
  CHECK(format_result_line(bad).find("FAIL") == 0);

  Json j = catalog_to_json({good, bad});
  CHECK(j["criteria"].size() == 2);
  CHECK(j["criteria"][0]["passed"] == true);
  CHECK(j["all_passed"] == false);
  CHECK_FALSE(all_passed({good, bad}));
}
