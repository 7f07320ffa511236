#include <doctest.h>

#include "nilplab/scenarios.hpp"

using namespace nilplab;
using namespace nilplab::scenarios;

namespace {
void require_all_pass(const ScenarioReport& rep) {
  for (const Verdict& v : rep.verdicts) {
    CAPTURE(rep.name);
    CAPTURE(v.claim);
    CAPTURE(v.expected.dump());
    CAPTURE(v.computed.dump());
    CHECK(v.pass);
  }
}
}  // namespace

TEST_CASE("builders have the stated shapes") {
  CHECK(build_xixi(2).dim() == 1);
  CHECK(build_xixi(7).dim() == 6);
  CHECK_THROWS_AS(build_xixi(1), Error);

  CHECK(build_xwi(5).dim() == 6);
  CHECK(build_wiwi(6).dim() == 6);
  CHECK(build_alternating(8).dim() == 9);
  CHECK(build_two_dim_solvable().dim() == 2);
  CHECK(build_upper_triangular_lie(3, FieldDescriptor::rationals()).dim() == 3);
  CHECK(build_upper_triangular_lie(4, FieldDescriptor::rationals()).dim() == 6);

  for (std::uint64_t p : {2, 3, 5, 7}) {
    const Algebra B = build_modp_lie(p);
    CHECK(B.dim() == p + 2);
    CHECK(structure_checks(B).lie);
    // [D, Y_0] = Y_0
    CHECK(B.multiply(B.basis_element(0), B.basis_element(2)) ==
          B.basis_element(2));
  }
  CHECK_THROWS_AS(build_modp_lie(6), Error);
}

TEST_CASE("alternating family products") {
  const Algebra A = build_alternating(6);  // x, w0..w5
  const Element x = A.basis_element(0);
  CHECK(x * A.basis_element(1) == A.basis_element(2));      // x w0 = w1
  CHECK(A.basis_element(2) * x == A.basis_element(3));      // w1 x = w2
  CHECK((x * A.basis_element(2)).is_zero());                // x w1 = 0
  CHECK((A.basis_element(1) * x).is_zero());                // w0 x = 0
}

TEST_CASE("y-xyz scenario passes at the default degrees") {
  for (std::size_t d : {4, 6, 8}) {
    const ScenarioReport rep = run_scenario_y_xyz(d);
    require_all_pass(rep);
    CHECK(rep.witnesses["rank"] == d / 2);
  }
}

TEST_CASE("y-xyz degenerate degrees still pass") {
  require_all_pass(run_scenario_y_xyz(1));
  require_all_pass(run_scenario_y_xyz(2));
  require_all_pass(run_scenario_y_xy_yx(1));
  require_all_pass(run_scenario_y_xy(1));
  require_all_pass(run_scenario_y_yy(1));
}

TEST_CASE("y-xy-yx scenario: both routes, signs, rank") {
  for (std::size_t d : {4, 6}) {
    const ScenarioReport rep = run_scenario_y_xy_yx(d);
    require_all_pass(rep);
    CHECK(rep.witnesses["rank"] == d - 1);
  }
}

TEST_CASE("nonassociative family scenarios") {
  require_all_pass(run_scenario_y_xy(8));
  require_all_pass(run_scenario_y_yy(6));
  require_all_pass(run_scenario_alternating(8));
}

TEST_CASE("extremal scenario") {
  for (std::size_t n : {2, 4, 5, 7}) {
    require_all_pass(run_scenario_xixi(n));
  }
}

TEST_CASE("mod-p scenario") {
  for (std::uint64_t p : {2, 3, 5}) {
    require_all_pass(run_scenario_modp_lie(p));
  }
}

TEST_CASE("remaining scenarios") {
  require_all_pass(run_scenario_two_dim_solvable());
  require_all_pass(run_scenario_upper_triangular(4));
  require_all_pass(run_scenario_sasiada_cohn(6));
}

TEST_CASE("dispatcher and registry") {
  CHECK(scenario_names().size() == 10);
  ScenarioParams params;
  params.degree = 4;
  CHECK(run_scenario("y-xyz", params).name == "y-xyz");
  try {
    run_scenario("nope", {});
    FAIL("expected an error");
  } catch (const Error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("y-xyz") != std::string::npos);
    CHECK(msg.find("modp-lie") != std::string::npos);
  }
}

TEST_CASE("run_all aggregates every scenario") {
  const auto reports = run_all();
  CHECK(reports.size() == scenario_names().size());
  for (const auto& rep : reports) {
    CAPTURE(rep.name);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("run_all degree-1 edge cases stay degenerate but passing") {
  ScenarioParams params;
  params.degree = 1;
  for (const auto& rep : run_all(params)) {
    CAPTURE(rep.name);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("reports carry operator matrices as scalar-string grids") {
  const ScenarioReport rep = run_scenario_two_dim_solvable();
  const json ad = rep.witnesses["ad_x"];
  REQUIRE(ad.is_array());
  // l_x kills x and scales y: columns (0, 0) and (0, 1)
  CHECK(ad == json::parse(R"([["0","0"],["0","1"]])"));
}

TEST_CASE("towers") {
  const ScenarioReport xyz = run_tower("y-xyz", {4, 6, 8});
  require_all_pass(xyz);
  const auto& growth = xyz.witnesses["growth"];
  REQUIRE(growth.size() == 3);
  CHECK(growth[0]["rank"] == 2);
  CHECK(growth[1]["rank"] == 3);
  CHECK(growth[2]["rank"] == 4);

  const ScenarioReport sw = run_tower("y-xy-yx", {4, 6, 8});
  require_all_pass(sw);
  CHECK(sw.witnesses["growth"][0]["rank"] == 3);
  CHECK(sw.witnesses["growth"][2]["rank"] == 7);

  require_all_pass(run_tower("y-xyz", {5}));  // degenerate single stage
  CHECK_THROWS_AS(run_tower("xixi", {3, 4}), Error);
  CHECK_THROWS_AS(run_tower("y-xyz", {}), Error);
}

TEST_CASE("custom truncation diagnostics") {
  const ScenarioReport rep =
      run_custom_trunc(build_y_xy_yx_stage(5));
  require_all_pass(rep);
  CHECK(rep.parameters["degree"] == 5);
}

TEST_CASE("report JSON round-trips") {
  const ScenarioReport rep = run_scenario_xixi(4);
  const json doc = rep.to_json();
  CHECK(json::parse(doc.dump()) == doc);
  CHECK(doc["pass"] == true);
  CHECK(doc["scenario"] == "xixi");
  CHECK(doc["verdicts"].size() == rep.verdicts.size());
  for (const auto& v : doc["verdicts"]) {
    CHECK(v.contains("claim"));
    CHECK(v.contains("expected"));
    CHECK(v.contains("computed"));
    CHECK(v.contains("pass"));
    // every verdict names the claim it reproduces
    CHECK(v["citation"].get<std::string>().size() > 0);
  }
}
