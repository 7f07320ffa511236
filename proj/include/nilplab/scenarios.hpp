#ifndef NILPLAB_SCENARIOS_HPP
#define NILPLAB_SCENARIOS_HPP

#include <json.hpp>

#include "nilplab/freetrunc.hpp"

namespace nilplab::scenarios {

using nlohmann::json;

// ---- parametric families ----

/// Free module on x_1..x_{n-1} over Q with x_m x_m = x_{m+1} and all other
/// basis products zero: the family attaining N2 = 2^{N1-2}+1.
Algebra build_xixi(std::size_t n);

/// Basis {x, w_0..w_{d-1}}, x w_i = w_{i+1}: right-annihilating shift
/// family ((AA)A = 0).
Algebra build_xwi(std::size_t d);

/// Basis {w_0..w_{d-1}}, w_i w_i = w_{i+1}: the family whose sum y has
/// y - y^2 = w_0.
Algebra build_wiwi(std::size_t d);

/// Basis {x, w_0..w_{d-1}}, x w_{2i} = w_{2i+1} and w_{2i+1} x = w_{2i+2}:
/// left and right nilpotent with full nilpotence index growing with d.
Algebra build_alternating(std::size_t d);

/// The (p+2)-dimensional solvable Lie algebra over F_p spanned by D, XD
/// and Y_n = X^n Y (n < p), with [D,XD] = D, [D,Y_n] = n Y_{n-1} + Y_n,
/// [XD,Y_n] = n Y_n + Y_{n+1} (Y_p = 0).  Jacobi is verified exhaustively
/// at construction.
Algebra build_modp_lie(std::uint64_t p);

/// The 2-dimensional Lie algebra with [x, y] = y over Q: solvable but not
/// nilpotent.
Algebra build_two_dim_solvable();

/// Strictly upper-triangular n x n matrices under the commutator bracket.
Algebra build_upper_triangular_lie(std::size_t n, const FieldDescriptor& f);

// ---- truncation stages with distinguished elements ----

/// Stage of k<x,w,z> mod {xz, wx, ww, zw, zx}: basis words x^i w z^j and
/// their subwords below the degree.
TruncatedFreeAlgebra build_y_xyz_stage(std::size_t degree);
/// y_d = (1 - l_x r_z)^{-1}(w) = w + xwz + x^2 w z^2 + ... at this stage.
Element distinguished_y_xyz(const TruncatedFreeAlgebra& stage);

/// Stage of k<x,w> mod {w x^i w : i >= 0}: basis words x^i w x^j and
/// subwords below the degree.
TruncatedFreeAlgebra build_y_xy_yx_stage(std::size_t degree);
/// y_d = (1 - l_x + r_x)^{-1}(w) at this stage.
Element distinguished_y_xy_yx(const TruncatedFreeAlgebra& stage);

// ---- executable reproductions ----

struct Verdict {
  std::string claim;
  std::string citation;
  json expected;
  json computed;
  bool pass = false;
};

struct ScenarioReport {
  std::string name;
  json parameters;
  std::vector<Verdict> verdicts;
  json witnesses;
  double runtime_ms = 0.0;

  bool all_pass() const;
  json to_json() const;
  std::string pretty() const;
};

struct ScenarioParams {
  std::optional<std::size_t> degree;  // degree, dimension, or family index
  std::optional<std::uint64_t> prime;
};

ScenarioReport run_scenario_y_xyz(std::size_t degree);
ScenarioReport run_scenario_y_xy_yx(std::size_t degree);
ScenarioReport run_scenario_y_xy(std::size_t degree);
ScenarioReport run_scenario_y_yy(std::size_t degree);
ScenarioReport run_scenario_xixi(std::size_t n);
ScenarioReport run_scenario_alternating(std::size_t degree);
ScenarioReport run_scenario_modp_lie(std::uint64_t p);
ScenarioReport run_scenario_two_dim_solvable();
ScenarioReport run_scenario_upper_triangular(std::size_t n);
ScenarioReport run_scenario_sasiada_cohn(std::size_t degree);

/// Registered scenario names in the order run_all uses.
std::vector<std::string> scenario_names();

/// Dispatch by name; unknown names raise an Error listing the registry.
ScenarioReport run_scenario(const std::string& name,
                            const ScenarioParams& params = {});

/// Every registered scenario at default parameters.  Individual failures
/// are collected into failed verdicts, not thrown.
std::vector<ScenarioReport> run_all(const ScenarioParams& params = {});

/// Diagnostics for a user-supplied truncated-free-algebra config: subword
/// closure, associativity and nilpotence of the stage.
ScenarioReport run_custom_trunc(const TruncatedFreeAlgebra& stage);

/// Tower diagnostics for the truncation families ("y-xyz", "y-xy-yx"):
/// builds the stages at the given degrees, checks that truncation maps
/// compose coherently, that the distinguished elements are compatible
/// along the tower, and that the coefficient-profile rank strictly grows.
ScenarioReport run_tower(const std::string& name,
                         std::vector<std::size_t> degrees);

}  // namespace nilplab::scenarios

#endif
