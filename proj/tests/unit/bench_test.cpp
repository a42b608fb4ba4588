#include <catch_amalgamated.hpp>

#include <sstream>

#include <json.hpp>

#include "idcode/bench.hpp"
#include "idcode/families.hpp"

using namespace idcode;
using families::FamilySpec;

TEST_CASE("girth", "[bench]") {
  CHECK(bench::girth(families::generate(FamilySpec::cycle(7))) == 7u);
  CHECK(bench::girth(families::generate(FamilySpec::complete_bipartite(3, 3))) == 4u);
  CHECK(bench::girth(families::generate(FamilySpec::subdivided_complete(4))) == 9u);
  CHECK_FALSE(bench::girth(families::generate(FamilySpec::kary_tree(2, 3))).has_value());
}

TEST_CASE("family suite runs without violations", "[bench]") {
  const auto suite = bench::family_suite();
  CHECK(suite.size() >= 20);
  const auto records = bench::run(suite, {});
  CHECK(records.size() >= suite.size());
  for (const auto& r : records) {
    INFO(r.input_id << " " << r.variant << " " << r.status);
    CHECK(r.status.rfind("violation", 0) == std::string::npos);
    if (r.status == "ok") {
      REQUIRE(r.code_size.has_value());
      CHECK(static_cast<double>(*r.code_size) <= *r.bound_value + 1e-9);
      if (r.exact_size) CHECK(*r.exact_size <= *r.code_size);
    }
    CHECK_FALSE(r.wall_time_ms.has_value());
  }
  const auto summary = bench::summarize(suite, records);
  bool has_external = false;
  for (const auto& row : summary) {
    if (!row.external) CHECK(row.violations == 0);
    has_external = has_external || row.external;
  }
  CHECK(has_external);
}

TEST_CASE("preconditions are reported in the status column", "[bench]") {
  const auto records = bench::run({bench::make_instance(FamilySpec::cycle(7))}, {});
  REQUIRE(records.size() == 1);
  CHECK(records[0].status.rfind("precondition", 0) == 0);
  CHECK_FALSE(records[0].code_size.has_value());
  CHECK(records[0].exact_size == 5u);
}

TEST_CASE("output is byte-for-byte reproducible", "[bench]") {
  auto render = [] {
    const auto suite = bench::random_suite(60, 110, 8, 11);
    const auto records = bench::run(suite, {});
    std::ostringstream csv, json;
    bench::write_csv(csv, records);
    bench::write_json(json, records, bench::summarize(suite, records));
    return std::pair{csv.str(), json.str()};
  };
  const auto a = render();
  const auto b = render();
  CHECK(a.first == b.first);
  CHECK(a.second == b.second);
  CHECK(a.first.rfind("input_id,n,delta,variant,case_taken,code_size,bound_value,exact_size,wall_time_ms,status\n", 0) == 0);
  const auto parsed = nlohmann::json::parse(a.second);
  CHECK(parsed.at("records").is_array());
  CHECK(parsed.at("summary").is_array());
}
