#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "billiard/errors.hpp"
#include "billiard/json_io.hpp"

using namespace billiard;

namespace {

KnotDiagram t375() {
  BilliardParams p;
  p.s = 3;
  p.n = 7;
  p.m = 5;
  return build_diagram(p);
}

std::filesystem::path temp_file(const std::string& name) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove(path);
  return path;
}

std::size_t line_count(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::size_t n = 0;
  std::string line;
  while (std::getline(in, line)) ++n;
  return n;
}

}  // namespace

TEST_CASE("diagram JSON round trip") {
  const auto d = t375();
  const Json j = diagram_to_json(d);
  CHECK(j["pd"].size() == 14);
  CHECK(j["gauss"].size() == 28);
  CHECK(j["params"]["geometry"] == "flat-torus");
  CHECK(j["params"]["phase"].is_string());
  const auto back = diagram_from_json(Json::parse(j.dump()));
  CHECK(back.gauss == d.gauss);
  CHECK(back.pd == d.pd);
  CHECK(back.params == d.params);
  CHECK(alexander_polynomial(back) == alexander_polynomial(d));

  Json no_signs = j;
  no_signs.erase("signs");
  CHECK(alexander_polynomial(diagram_from_json(no_signs)) == alexander_polynomial(d));
  CHECK_THROWS_AS(diagram_from_json(Json::object()), ParameterError);
  CHECK_THROWS_AS(diagram_from_json(Json{{"pd", "nonsense"}}), ParameterError);
}

TEST_CASE("invariant report JSON") {
  const auto r = compute_invariants(t375());
  const Json j = invariants_to_json(r);
  CHECK(j["det"] == 25);
  CHECK(j["square_root"] == 5);
  CHECK(j["alexander"]["min_exp"] == 0);
  CHECK(j["alexander"]["coeffs"] == Json::array({1, -3, 5, -7, 5, -3, 1}));
  CHECK(invariants_from_json(j).alexander == r.alexander);
  const Json k = invariants_to_json(invariant_report(LaurentPolynomial({1, -1, 1})));
  CHECK(k["square_root"].is_null());
  CHECK(k.dump() == R"({"alexander":{"coeffs":[1,-1,1],"min_exp":0},"det":3,"square_root":null})");
}

TEST_CASE("catalog appends are idempotent") {
  const auto path = temp_file("billiard_catalog_test.jsonl");
  CatalogEntry e;
  e.params = *t375().params;
  e.invariants = compute_invariants(t375());
  CHECK(append_catalog(path.string(), e));
  CHECK_FALSE(append_catalog(path.string(), e));
  CHECK(line_count(path) == 1);
  e.stability = StabilityClass::NotStable;
  CHECK(append_catalog(path.string(), e));
  CHECK(line_count(path) == 1);
  CatalogEntry other = e;
  other.params.m = 8;
  CHECK(append_catalog(path.string(), other));
  CHECK(line_count(path) == 2);
  std::filesystem::remove(path);
}

TEST_CASE("timestamps come only from SOURCE_DATE_EPOCH") {
  ::unsetenv("SOURCE_DATE_EPOCH");
  CHECK_FALSE(reproducible_timestamp().has_value());
  ::setenv("SOURCE_DATE_EPOCH", "86400", 1);
  CHECK(reproducible_timestamp() == std::string("1970-01-02T00:00:00Z"));
  ::unsetenv("SOURCE_DATE_EPOCH");
}
