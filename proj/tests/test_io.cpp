#include <doctest.h>

#include "nilplab/io.hpp"
#include "nilplab/scenarios.hpp"

using namespace nilplab;
using nlohmann::json;

TEST_CASE("algebra documents parse") {
  const json doc = {
      {"field", "Q"},
      {"dim", 3},
      {"labels", {"x1", "x2", "x3"}},
      {"products", {{0, 0, 1, "1"}, {1, 1, 2, "1"}}},
  };
  const Algebra A = algebra_from_json(doc);
  CHECK(A.structurally_equal(scenarios::build_xixi(4)));
  CHECK(A.labels() == std::vector<std::string>{"x1", "x2", "x3"});
}

TEST_CASE("prime fields and integer scalars") {
  const json doc = {
      {"field", {{"p", 5}}},
      {"dim", 2},
      {"products", {{0, 1, 1, 3}, {1, 0, 1, "7"}}},
  };
  const Algebra A = algebra_from_json(doc);
  CHECK(A.field() == FieldDescriptor::prime_field(5));
  CHECK(A.basis_product(0, 1)[0].second.residue_value() == 3);
  CHECK(A.basis_product(1, 0)[0].second.residue_value() == 2);
}

TEST_CASE("bad documents are rejected with parse errors") {
  CHECK_THROWS_AS(algebra_from_json(json::array()), ParseError);
  CHECK_THROWS_AS(algebra_from_json({{"dim", 2}}), ParseError);
  CHECK_THROWS_AS(algebra_from_json({{"field", "R"}, {"dim", 2}}), ParseError);
  CHECK_THROWS_AS(algebra_from_json({{"field", {{"p", 6}}}, {"dim", 1}}),
                  Error);
  CHECK_THROWS_AS(
      algebra_from_json(
          {{"field", "Q"}, {"dim", 1}, {"labels", {"a", "b"}}}),
      ParseError);
  // duplicate structure entry
  CHECK_THROWS_AS(
      algebra_from_json({{"field", "Q"},
                         {"dim", 2},
                         {"products", {{0, 0, 1, "1"}, {0, 0, 1, "2"}}}}),
      ParseError);
  // index out of range
  CHECK_THROWS_AS(
      algebra_from_json(
          {{"field", "Q"}, {"dim", 2}, {"products", {{0, 0, 5, "1"}}}}),
      ParseError);
  CHECK_THROWS_AS(read_algebra_file("/nonexistent/path.json"), ParseError);
}

TEST_CASE("algebra JSON round-trips structurally") {
  for (const Algebra& A :
       {scenarios::build_xixi(5), scenarios::build_modp_lie(3),
        scenarios::build_two_dim_solvable()}) {
    const Algebra back = algebra_from_json(algebra_to_json(A));
    CHECK(back.structurally_equal(A));
    CHECK(back.labels() == A.labels());
  }
}

TEST_CASE("truncation configs parse") {
  const json doc = {
      {"alphabet", {"x", "w", "z"}},
      {"literals", {"xz", "wx", "ww", "zw", "zx"}},
      {"sandwich", json::array()},
      {"degree", 6},
  };
  const TruncatedFreeAlgebra T = trunc_from_json(doc);
  CHECK(T.algebra().dim() == scenarios::build_y_xyz_stage(6).algebra().dim());

  const json sandwich_doc = {
      {"alphabet", {"x", "w"}},
      {"sandwich", {{"w", "x", "w"}}},
      {"degree", 5},
  };
  const TruncatedFreeAlgebra S = trunc_from_json(sandwich_doc);
  CHECK(S.algebra().dim() ==
        scenarios::build_y_xy_yx_stage(5).algebra().dim());

  const json field_doc = {
      {"alphabet", {"x"}}, {"degree", 4}, {"field", {{"p", 5}}}};
  CHECK(trunc_from_json(field_doc).algebra().field() ==
        FieldDescriptor::prime_field(5));

  CHECK_THROWS_AS(trunc_from_json({{"alphabet", {"xy"}}, {"degree", 3}}),
                  ParseError);
  CHECK_THROWS_AS(trunc_from_json({{"alphabet", {"x"}}, {"degree", 0}}),
                  ParseError);
  CHECK_THROWS_AS(trunc_from_json({{"alphabet", {"x"}}}), ParseError);
}

TEST_CASE("analysis reports serialize and reparse identically") {
  const AnalysisReport rep = analyze(scenarios::build_xixi(4));
  const json doc = analysis_to_json(rep);
  CHECK(doc["N1"] == 4);
  CHECK(doc["N2"] == 5);
  CHECK(doc["N3"] == 3);
  CHECK(doc["nilpotent"] == true);
  CHECK(doc["solvable"] == true);
  CHECK(json::parse(doc.dump()) == doc);

  const AnalysisReport lie = analyze(scenarios::build_two_dim_solvable());
  const json ldoc = analysis_to_json(lie);
  CHECK(ldoc["nilpotent"] == false);
  CHECK(ldoc["N1"].is_null());
  CHECK(ldoc["solvable"] == true);
  CHECK(ldoc["derived_length"] == 2);
  CHECK(ldoc["structure"]["lie"] == true);
  CHECK(ldoc["stable_image_dim"] == 1);

  const std::string pretty = analysis_pretty(lie);
  CHECK(pretty.find("solvable: yes (length 2)") != std::string::npos);
  CHECK(pretty.find("nilpotent: no") != std::string::npos);
}
