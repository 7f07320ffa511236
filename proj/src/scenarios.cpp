#include "nilplab/scenarios.hpp"

#include <chrono>
#include <sstream>

#include "nilplab/analysis.hpp"

namespace nilplab::scenarios {

namespace {

using Clock = std::chrono::steady_clock;

json opt_json(const std::optional<std::size_t>& v) {
  if (!v) return nullptr;
  return *v;
}

void add_verdict(ScenarioReport& rep, const std::string& claim,
                 const std::string& citation, json expected, json computed) {
  Verdict v{claim, citation, std::move(expected), std::move(computed), false};
  v.pass = v.expected == v.computed;
  rep.verdicts.push_back(std::move(v));
}

struct Timer {
  Clock::time_point start = Clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
  }
};

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json operator_to_json(const LinearOperator& u) {
  return matrix_to_json(u.matrix());
}

json freetrunc_config(const TruncatedFreeAlgebra& stage) {
  json cfg;
  cfg["alphabet"] = json::array();
  for (char c : stage.alphabet()) cfg["alphabet"].push_back(std::string(1, c));
  cfg["literals"] = json::array();
  for (const auto& lit : stage.forbidden().literals()) {
    cfg["literals"].push_back(lit);
  }
  cfg["sandwich"] = json::array();
  for (const auto& rule : stage.forbidden().sandwich_rules()) {
    json entry = json::array();
    entry.push_back(std::string(1, rule.left));
    std::string mid(rule.middle.begin(), rule.middle.end());
    entry.push_back(mid);
    entry.push_back(std::string(1, rule.right));
    cfg["sandwich"].push_back(entry);
  }
  cfg["degree"] = stage.degree();
  return cfg;
}

Element word_or_zero(const TruncatedFreeAlgebra& stage, const std::string& w) {
  const auto idx = stage.word_index(w);
  return idx ? stage.algebra().basis_element(*idx) : stage.algebra().zero();
}

std::size_t weak_vanishing_index(const Algebra& A) {
  const auto rep = weak_series(A);
  if (!rep.vanishing_index) {
    throw Error("expected a nilpotent stage");
  }
  return *rep.vanishing_index;
}

}  // namespace

bool ScenarioReport::all_pass() const {
  for (const Verdict& v : verdicts) {
    if (!v.pass) return false;
  }
  return true;
}

json ScenarioReport::to_json() const {
  json out;
  out["scenario"] = name;
  out["parameters"] = parameters;
  out["verdicts"] = json::array();
  for (const Verdict& v : verdicts) {
    out["verdicts"].push_back({{"claim", v.claim},
                               {"citation", v.citation},
                               {"expected", v.expected},
                               {"computed", v.computed},
                               {"pass", v.pass}});
  }
  out["witnesses"] = witnesses;
  out["runtime_ms"] = runtime_ms;
  out["pass"] = all_pass();
  return out;
}

std::string ScenarioReport::pretty() const {
  std::ostringstream os;
  os << "scenario " << name << "  " << parameters.dump() << "\n";
  for (const Verdict& v : verdicts) {
    os << "  [" << (v.pass ? "PASS" : "FAIL") << "] " << v.claim
       << ": expected " << v.expected.dump() << ", computed "
       << v.computed.dump() << "\n";
    if (!v.pass) os << "         (" << v.citation << ")\n";
  }
  if (!witnesses.empty()) os << "  witnesses: " << witnesses.dump() << "\n";
  os << "  " << (all_pass() ? "PASS" : "FAIL") << " ("
     << static_cast<long>(runtime_ms) << " ms)\n";
  return os.str();
}

Algebra build_xixi(std::size_t n) {
  if (n < 2) throw Error("build_xixi requires n >= 2");
  const auto field = FieldDescriptor::rationals();
  const Scalar one = Scalar::one(field);
  std::vector<std::string> labels;
  for (std::size_t m = 1; m < n; ++m) labels.push_back("x" + std::to_string(m));
  std::vector<ProductEntry> entries;
  for (std::size_t m = 0; m + 1 < n - 1; ++m) {
    entries.push_back({m, m, m + 1, one});
  }
  return make_algebra(field, n - 1, std::move(labels), entries);
}

Algebra build_xwi(std::size_t d) {
  if (d < 1) throw Error("build_xwi requires d >= 1");
  const auto field = FieldDescriptor::rationals();
  const Scalar one = Scalar::one(field);
  std::vector<std::string> labels{"x"};
  for (std::size_t i = 0; i < d; ++i) labels.push_back("w" + std::to_string(i));
  std::vector<ProductEntry> entries;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    entries.push_back({0, i + 1, i + 2, one});  // x w_i = w_{i+1}
  }
  return make_algebra(field, d + 1, std::move(labels), entries);
}

Algebra build_wiwi(std::size_t d) {
  if (d < 1) throw Error("build_wiwi requires d >= 1");
  const auto field = FieldDescriptor::rationals();
  const Scalar one = Scalar::one(field);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back("w" + std::to_string(i));
  std::vector<ProductEntry> entries;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    entries.push_back({i, i, i + 1, one});  // w_i w_i = w_{i+1}
  }
  return make_algebra(field, d, std::move(labels), entries);
}

Algebra build_alternating(std::size_t d) {
  if (d < 1) throw Error("build_alternating requires d >= 1");
  const auto field = FieldDescriptor::rationals();
  const Scalar one = Scalar::one(field);
  std::vector<std::string> labels{"x"};
  for (std::size_t i = 0; i < d; ++i) labels.push_back("w" + std::to_string(i));
  std::vector<ProductEntry> entries;
  for (std::size_t i = 0; 2 * i + 1 < d; ++i) {
    entries.push_back({0, 2 * i + 1, 2 * i + 2, one});  // x w_{2i} = w_{2i+1}
  }
  for (std::size_t i = 0; 2 * i + 2 < d; ++i) {
    entries.push_back({2 * i + 2, 0, 2 * i + 3, one});  // w_{2i+1} x = w_{2i+2}
  }
  return make_algebra(field, d + 1, std::move(labels), entries);
}

Algebra build_modp_lie(std::uint64_t p) {
  const auto field = FieldDescriptor::prime_field(p);
  const std::size_t dim = static_cast<std::size_t>(p) + 2;
  std::vector<std::string> labels{"D", "XD"};
  for (std::uint64_t n = 0; n < p; ++n) labels.push_back("Y" + std::to_string(n));
  // bracket table on the ordered basis; antisymmetrized below
  std::vector<ProductEntry> upper;
  const auto sc = [&](long v) { return Scalar::from_integer(v, field); };
  upper.push_back({0, 1, 0, sc(1)});  // [D, XD] = D
  for (std::uint64_t n = 0; n < p; ++n) {
    const std::size_t yn = 2 + static_cast<std::size_t>(n);
    // [D, Y_n] = n Y_{n-1} + Y_n
    if (n > 0) upper.push_back({0, yn, yn - 1, sc(static_cast<long>(n))});
    upper.push_back({0, yn, yn, sc(1)});
    // [XD, Y_n] = n Y_n + Y_{n+1}, with Y_p = 0
    if (n > 0) upper.push_back({1, yn, yn, sc(static_cast<long>(n))});
    if (n + 1 < p) upper.push_back({1, yn, yn + 1, sc(1)});
  }
  std::vector<ProductEntry> entries;
  for (const ProductEntry& e : upper) {
    if (e.c.is_zero()) continue;
    entries.push_back(e);
    entries.push_back({e.j, e.i, e.k, -e.c});
  }
  Algebra B = make_algebra(field, dim, std::move(labels), entries);
  const StructureChecks checks = structure_checks(B);
  if (!checks.lie) {
    throw InvariantViolation("mod-p bracket table failed the Lie checks");
  }
  return B;
}

Algebra build_two_dim_solvable() {
  const auto field = FieldDescriptor::rationals();
  const Scalar one = Scalar::one(field);
  return make_algebra(field, 2, {"x", "y"},
                      {{0, 1, 1, one}, {1, 0, 1, -one}});
}

Algebra build_upper_triangular_lie(std::size_t n, const FieldDescriptor& f) {
  if (n < 2) throw Error("strictly upper-triangular bracket algebra needs n >= 2");
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      positions.emplace_back(i, j);
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  auto index_of = [&](std::size_t i, std::size_t j) -> std::optional<std::size_t> {
    for (std::size_t t = 0; t < positions.size(); ++t) {
      if (positions[t] == std::make_pair(i, j)) return t;
    }
    return std::nullopt;
  };
  const Scalar one = Scalar::one(f);
  std::vector<ProductEntry> entries;
  for (std::size_t s = 0; s < positions.size(); ++s) {
    for (std::size_t t = 0; t < positions.size(); ++t) {
      const auto [a, b] = positions[s];
      const auto [c, d] = positions[t];
      auto coords = zero_vector(f, positions.size());
      if (b == c) {
        const auto idx = index_of(a, d);
        if (idx) coords[*idx] = coords[*idx] + one;
      }
      if (d == a) {
        const auto idx = index_of(c, b);
        if (idx) coords[*idx] = coords[*idx] - one;
      }
      for (std::size_t k = 0; k < coords.size(); ++k) {
        if (!coords[k].is_zero()) entries.push_back({s, t, k, coords[k]});
      }
    }
  }
  return make_algebra(f, positions.size(), std::move(labels), entries);
}

TruncatedFreeAlgebra build_y_xyz_stage(std::size_t degree) {
  return build_truncated("xwz",
                         ForbiddenSet({"xz", "wx", "ww", "zw", "zx"}, {}),
                         degree);
}

Element distinguished_y_xyz(const TruncatedFreeAlgebra& stage) {
  const Element x = word_or_zero(stage, "x");
  const Element z = word_or_zero(stage, "z");
  const Element w = word_or_zero(stage, "w");
  const LinearOperator u =
      left_op(stage.algebra(), x) * right_op(stage.algebra(), z);
  return solve_unipotent(stage, u, w);
}

TruncatedFreeAlgebra build_y_xy_yx_stage(std::size_t degree) {
  return build_truncated("xw", ForbiddenSet({}, {SandwichRule{'w', {'x'}, 'w'}}),
                         degree);
}

Element distinguished_y_xy_yx(const TruncatedFreeAlgebra& stage) {
  const Element x = word_or_zero(stage, "x");
  const Element w = word_or_zero(stage, "w");
  const LinearOperator u =
      left_op(stage.algebra(), x) - right_op(stage.algebra(), x);
  return solve_unipotent(stage, u, w);
}

ScenarioReport run_scenario_y_xyz(std::size_t degree) {
  Timer timer;
  ScenarioReport rep;
  rep.name = "y-xyz";
  rep.parameters = {{"degree", degree}};

  const TruncatedFreeAlgebra stage = build_y_xyz_stage(degree);
  const Algebra& A = stage.algebra();
  const Element x = word_or_zero(stage, "x");
  const Element z = word_or_zero(stage, "z");
  const Element w = word_or_zero(stage, "w");
  const LinearOperator u = left_op(A, x) * right_op(A, z);
  const Element y = solve_unipotent(stage, u, w);

  add_verdict(rep, "substitution-identity",
              "y = w + xwz + x^2wz^2 + ... solves (1 - l_x r_z)(y) = w",
              true, (y - u.apply(y)) == w);

  const Subspace ideal = truncated_ideal(stage, w);
  add_verdict(rep, "ideal-membership",
              "in a nilpotent stage the series solution lies in the ideal (w)",
              true, ideal.contains(y));

  const CoefficientProfile profile =
      right_coefficient_profile(stage, y, 'x', 'w', 'z');
  add_verdict(rep, "right-coefficient-rank",
              "the right coefficient of x^j w in y is z^j, one new power per "
              "two degrees",
              (degree >= 1 ? degree / 2 : 0), profile.rank);

  if (degree >= 3) {
    const TruncatedFreeAlgebra lower = stage.truncated_to(degree - 2);
    const Homomorphism h = truncate_map(stage, lower);
    add_verdict(rep, "tower-compatibility",
                "truncation maps send the stage solutions to each other",
                true, h.apply(y) == distinguished_y_xyz(lower));
  }

  const SeriesReport weak = weak_series(A);
  add_verdict(rep, "stage-nilpotent",
              "every truncated stage is nilpotent", true,
              weak.vanishing_index.has_value());

  // y minus its first k terms is a sum of words of length >= 2k+1, so it
  // lies in the weak-series term A_[2k+1]: y survives arbitrarily deep in
  // the power filtration as the degree grows.
  bool tail_depth = true;
  Element partial = A.zero();
  for (std::size_t k = 0; 2 * k + 1 <= degree && tail_depth; ++k) {
    const std::size_t native = 2 * k + 1;
    if (!weak.vanishing_index || native > weak.last_native_index()) break;
    if (!weak.term(native).contains(y - partial)) tail_depth = false;
    std::string word;
    word.append(k, 'x');
    word.push_back('w');
    word.append(k, 'z');
    partial = partial + word_or_zero(stage, word);
  }
  add_verdict(rep, "tail-depth",
              "the tail of y past its first k terms lies in A_[2k+1]", true,
              tail_depth);

  const QuotientResult q = quotient(A, ideal);
  add_verdict(rep, "quotient-nilpotent",
              "finite-length images of the stages stay nilpotent", true,
              is_nilpotent(q.algebra));

  rep.witnesses = {{"dim", A.dim()},
                   {"rank", profile.rank},
                   {"ideal_dim", ideal.dim()},
                   {"N1", opt_json(weak.vanishing_index)},
                   {"config", freetrunc_config(stage)}};
  rep.runtime_ms = timer.ms();
  return rep;
}

ScenarioReport run_scenario_y_xy_yx(std::size_t degree) {
  Timer timer;
  ScenarioReport rep;
  rep.name = "y-xy-yx";
  rep.parameters = {{"degree", degree}};

  const TruncatedFreeAlgebra stage = build_y_xy_yx_stage(degree);
  const Algebra& A = stage.algebra();
  const Element x = word_or_zero(stage, "x");
  const Element w = word_or_zero(stage, "w");
  const LinearOperator lx = left_op(A, x);
  const LinearOperator rx = right_op(A, x);
  const LinearOperator u = lx - rx;
  const Element y = solve_unipotent(stage, u, w);

  // second route: sum_i l_x^i (1 + r_x)^{-1-i} applied to w
  const LinearOperator inv = LinearOperator::identity(A) + quasiinverse(rx);
  Element y_formula = A.zero();
  for (std::size_t i = 0; i + 1 <= (degree >= 1 ? degree - 1 : 0); ++i) {
    y_formula = y_formula + (lx.power(i) * inv.power(i + 1)).apply(w);
  }
  add_verdict(rep, "two-routes-agree",
              "(1 - l_x + r_x)^{-1} = sum_i l_x^i (1+r_x)^{-1-i} because l_x "
              "and 1 + r_x commute",
              true, y == y_formula);

  add_verdict(rep, "substitution-identity",
              "(1 - l_x + r_x)(y) = w by construction", true,
              (y - u.apply(y)) == w);

  bool signs_ok = true;
  for (std::size_t k = 0; k + 2 <= degree; ++k) {
    std::string word = "w" + std::string(k, 'x');
    const Scalar expect = (k % 2 == 0) ? Scalar::one(A.field())
                                       : -Scalar::one(A.field());
    if (stage.coefficient(y, word) != expect) signs_ok = false;
  }
  add_verdict(rep, "alternating-coefficients",
              "the w-row of y is w (1+x)^{-1} = w - wx + wx^2 - ...", true,
              signs_ok);

  const CoefficientProfile profile =
      right_coefficient_profile(stage, y, 'x', 'w', 'x');
  add_verdict(rep, "right-coefficient-rank",
              "the truncated powers (1+x)^{-1-i} are linearly independent, "
              "so the profile has full rank",
              (degree >= 1 ? degree - 1 : 0), profile.rank);

  if (degree >= 3) {
    const TruncatedFreeAlgebra lower = stage.truncated_to(degree - 2);
    const Homomorphism h = truncate_map(stage, lower);
    add_verdict(rep, "tower-compatibility",
                "truncation maps send the stage solutions to each other",
                true, h.apply(y) == distinguished_y_xy_yx(lower));
  }

  const Subspace ideal = truncated_ideal(stage, w);
  add_verdict(rep, "ideal-membership",
              "in a nilpotent stage the series solution lies in (w)", true,
              ideal.contains(y));

  // the commutator-bracket story: y also lies in the Lie ideal of w
  const Algebra L = twist(A, Scalar::one(A.field()), -Scalar::one(A.field()));
  const IdealClosure lie_ideal =
      ideal_closure(L, {L.element(w.coords())});
  add_verdict(rep, "lie-ideal-membership",
              "under commutator brackets y lies in the Lie ideal of w at "
              "every stage",
              true, lie_ideal.subspace.contains(L.element(y.coords())));

  const QuotientResult q = quotient(A, ideal);
  add_verdict(rep, "quotient-nilpotent",
              "finite-length images of the stages stay nilpotent", true,
              is_nilpotent(q.algebra));

  rep.witnesses = {{"dim", A.dim()},
                   {"rank", profile.rank},
                   {"ideal_dim", ideal.dim()},
                   {"config", freetrunc_config(stage)}};
  rep.runtime_ms = timer.ms();
  return rep;
}

ScenarioReport run_scenario_y_xy(std::size_t degree) {
  Timer timer;
  ScenarioReport rep;
  rep.name = "y-xy";
  rep.parameters = {{"degree", degree}};

  const Algebra A = build_xwi(degree);
  const Element x = A.basis_element(0);
  const Element w0 = A.basis_element(1);
  const LinearOperator lx = left_op(A, x);
  const Element y = geometric_series_apply(lx, w0);

  add_verdict(rep, "substitution-identity",
              "y = w_0 + w_1 + ... solves (1 - l_x)(y) = w_0", true,
              (y - lx.apply(y)) == w0);

  const IdealClosure closure = ideal_closure(A, {w0});
  add_verdict(rep, "ideal-span",
              "the ideal (w_0) is the span of all w_j", degree,
              closure.subspace.dim());
  json depths = json::array();
  for (std::size_t d : closure.depths) depths.push_back(d);
  json expected_depths = json::array();
  for (std::size_t j = 0; j < degree; ++j) expected_depths.push_back(j);
  add_verdict(rep, "ideal-depths",
              "w_j first appears after j closure steps", expected_depths,
              depths);
  add_verdict(rep, "ideal-membership",
              "each stage solution lies in the stage ideal", true,
              closure.subspace.contains(y));

  add_verdict(rep, "right-mult-square-zero",
              "(AA)A = 0, so the right multiplication algebra squares to "
              "zero",
              degree >= 2 ? json(2) : json(1),
              opt_json(operator_algebra_nilpotence(mult_algebra_right(A))));
  add_verdict(rep, "left-mult-index",
              "the left shift chain x(x(...(x w_0))) survives to length d",
              degree >= 2 ? json(degree) : json(1),
              opt_json(operator_algebra_nilpotence(mult_algebra_left(A))));

  add_verdict(rep, "weak-series-length",
              "A_[k] = span{w_{k-1}, ...}, vanishing exactly at k = d + 1",
              degree + 1, weak_vanishing_index(A));

  const QuotientResult q = quotient(A, closure.subspace);
  add_verdict(rep, "quotient-nilpotent",
              "finite-length images of the stages stay nilpotent", true,
              is_nilpotent(q.algebra));

  rep.witnesses = {{"dim", A.dim()}, {"ideal_dim", closure.subspace.dim()}};
  rep.runtime_ms = timer.ms();
  return rep;
}

ScenarioReport run_scenario_y_yy(std::size_t degree) {
  Timer timer;
  ScenarioReport rep;
  rep.name = "y-yy";
  rep.parameters = {{"degree", degree}};

  const Algebra A = build_wiwi(degree);
  const Element w0 = A.basis_element(0);
  std::vector<long> ones(degree, 1);
  const Element y = A.element_from_ints(ones);

  add_verdict(rep, "y-minus-y-squared",
              "with y = sum w_i and w_i w_i = w_{i+1}: y - y^2 = w_0", true,
              (y - y * y) == w0);

  // the same identity seen in the quotient by the top-degree ideal
  const Subspace top = Subspace::span_elements(
      A, {A.basis_element(degree - 1)});
  if (degree >= 2) {
    const QuotientResult q = quotient(A, top);
    const Element py = q.projection.apply(y);
    add_verdict(rep, "quotient-identity",
                "the identity y - y^2 = w_0 descends to the quotient by the "
                "top term",
                true, (py - py * py) == q.projection.apply(w0));
  }

  const IdealClosure closure = ideal_closure(A, {w0});
  add_verdict(rep, "ideal-span", "the ideal (w_0) is the span of all w_j",
              degree, closure.subspace.dim());
  json depths = json::array();
  for (std::size_t d : closure.depths) depths.push_back(d);
  json expected_depths = json::array();
  for (std::size_t j = 0; j < degree; ++j) expected_depths.push_back(j);
  add_verdict(rep, "ideal-depths", "w_j first appears after j closure steps",
              expected_depths, depths);
  add_verdict(rep, "ideal-membership",
              "each stage solution lies in the stage ideal", true,
              closure.subspace.contains(y));

  const NilpotenceReport nil = nilpotence_report(A);
  add_verdict(rep, "extremal-indices",
              "the squaring family attains N1 = d+1, N2 = 2^{d-1}+1, N3 = d",
              json::array({degree + 1,
                           (std::size_t{1} << (degree - 1)) + 1,
                           degree}),
              json::array({opt_json(nil.N1), opt_json(nil.N2),
                           opt_json(nil.N3)}));

  rep.witnesses = {{"dim", A.dim()}};
  rep.runtime_ms = timer.ms();
  return rep;
}

ScenarioReport run_scenario_xixi(std::size_t n) {
  Timer timer;
  ScenarioReport rep;
  rep.name = "xixi";
  rep.parameters = {{"n", n}};

  const Algebra A = build_xixi(n);
  const NilpotenceReport nil = nilpotence_report(A);
  add_verdict(rep, "N1", "A_[i] = span{x_i, ..., x_{n-1}} vanishes at i = n",
              n, opt_json(nil.N1));
  add_verdict(rep, "N2",
              "A_(j) = span{x_i, ...} for 2^{i-2} < j <= 2^{i-1}: the strong "
              "series survives to 2^{n-2}+1",
              n >= 2 ? (std::size_t{1} << (n - 2)) + 1 : 1,
              opt_json(nil.N2));
  add_verdict(rep, "N3", "N3 = max(1, N1 - 1)",
              std::max<std::size_t>(1, n - 1), opt_json(nil.N3));

  // full shape of the strong series, not just its length
  const SeriesReport strong = strong_series(A);
  bool shape_ok = true;
  for (std::size_t i = 1; i <= n && shape_ok; ++i) {
    const std::size_t low = i >= 2 ? (std::size_t{1} << (i - 2)) : 0;
    const std::size_t high = std::size_t{1} << (i - 1);
    for (std::size_t j = low + 1; j <= high; ++j) {
      if (j > strong.last_native_index()) break;
      std::vector<Element> expect_basis;
      for (std::size_t m = i; m < n; ++m) {
        expect_basis.push_back(A.basis_element(m - 1));
      }
      if (strong.term(j) != Subspace::span_elements(A, expect_basis)) {
        shape_ok = false;
        break;
      }
    }
  }
  add_verdict(rep, "strong-series-shape",
              "every strong-series term is a tail span span{x_i, ...}", true,
              shape_ok);

  if (n >= 4) {
    add_verdict(rep, "not-associative",
                "x_{m+1}(x_m x_m) = x_{m+2} but (x_{m+1} x_m) x_m = 0", false,
                structure_checks(A).associative);
  }

  rep.witnesses = {{"dim", A.dim()},
                   {"N1", opt_json(nil.N1)},
                   {"N2", opt_json(nil.N2)},
                   {"N3", opt_json(nil.N3)}};
  rep.runtime_ms = timer.ms();
  return rep;
}

ScenarioReport run_scenario_alternating(std::size_t degree) {
  Timer timer;
  ScenarioReport rep;
  rep.name = "alternating";
  rep.parameters = {{"degree", degree}};

  const Algebra A = build_alternating(degree);
  const auto left = operator_algebra_nilpotence(mult_algebra_left(A));
  const auto right = operator_algebra_nilpotence(mult_algebra_right(A));
  add_verdict(rep, "left-nilpotent",
              "left multiplications compose to zero in bounded length", true,
              left.has_value());
  add_verdict(rep, "right-nilpotent",
              "right multiplications compose to zero in bounded length", true,
              right.has_value());
  if (degree >= 5) {
    add_verdict(rep, "left-index", "M_l(A)^3 = 0 independently of d", 3,
                opt_json(left));
    add_verdict(rep, "right-index", "M_r(A)^3 = 0 independently of d", 3,
                opt_json(right));
  }

  add_verdict(rep, "weak-series-length",
              "alternating left/right products reach w_{d-1}, so N1 = d + 1",
              degree + 1, weak_vanishing_index(A));
  if (degree >= 3) {
    add_verdict(rep, "index-grows-with-degree",
                "the nilpotence index is unbounded along the family",
                weak_vanishing_index(build_alternating(degree - 2)) + 2,
                weak_vanishing_index(A));
  }

  // ladder witness: (r_x l_x)^k sends w_0 to w_{2k}
  const LinearOperator lx = left_op(A, A.basis_element(0));
  const LinearOperator rx = right_op(A, A.basis_element(0));
  const LinearOperator rung = rx * lx;
  bool ladder_ok = true;
  for (std::size_t k = 0; 2 * k < degree; ++k) {
    if (rung.power(k).apply(A.basis_element(1)) !=
        A.basis_element(1 + 2 * k)) {
      ladder_ok = false;
    }
  }
  add_verdict(rep, "ladder",
              "(r_x l_x)^k(w_0) = w_{2k} climbs the whole basis", true,
              ladder_ok);

  rep.witnesses = {{"dim", A.dim()},
                   {"left_index", opt_json(left)},
                   {"right_index", opt_json(right)}};
  rep.runtime_ms = timer.ms();
  return rep;
}

ScenarioReport run_scenario_modp_lie(std::uint64_t p) {
  Timer timer;
  ScenarioReport rep;
  rep.name = "modp-lie";
  rep.parameters = {{"p", p}};

  const Algebra B = build_modp_lie(p);
  add_verdict(rep, "lie-checks",
              "antisymmetry and the Jacobi identity hold exhaustively", true,
              structure_checks(B).lie);
  add_verdict(rep, "dimension", "basis D, XD, Y_0..Y_{p-1}",
              static_cast<std::size_t>(p) + 2, B.dim());

  const SeriesReport derived = derived_series(B);
  add_verdict(rep, "derived-length",
              "B^(1) drops XD, B^(2) drops D and is abelian, B^(3) = 0", 3,
              opt_json(derived.vanishing_index));
  add_verdict(rep, "B2-nonzero", "the derived series reaches zero no earlier",
              true, derived.term(2).dim() > 0);

  const Algebra B1 = subalgebra_on(B, derived.term(1));
  add_verdict(rep, "B1-not-nilpotent",
              "[D, Y_0] = Y_0 keeps Y_0 alive in every weak-series term",
              false, is_nilpotent(B1));

  const Element D = B.basis_element(0);
  const Element Y0 = B.basis_element(2);
  add_verdict(rep, "witness-bracket", "[D, Y_0] = Y_0", true, (D * Y0) == Y0);

  const Subspace B2 = derived.term(2);
  add_verdict(rep, "B2-abelian", "B^(2) has zero bracket", true,
              subspace_product(B2, B2).is_zero());

  add_verdict(rep, "solvable-not-nilpotent",
              "solvable with non-nilpotent commutator subalgebra",
              json::array({true, false}),
              json::array({is_solvable(B), is_nilpotent(B)}));

  rep.witnesses = {{"dim", B.dim()},
                   {"derived_dims",
                    json::array({derived.term(0).dim(), derived.term(1).dim(),
                                 derived.term(2).dim(),
                                 derived.term(3).dim()})},
                   {"ad_D", operator_to_json(left_op(B, D))}};
  rep.runtime_ms = timer.ms();
  return rep;
}

ScenarioReport run_scenario_two_dim_solvable() {
  Timer timer;
  ScenarioReport rep;
  rep.name = "two-dim-solvable";
  rep.parameters = json::object();

  const Algebra A = build_two_dim_solvable();
  add_verdict(rep, "lie-checks", "rank-1 brackets satisfy Jacobi", true,
              structure_checks(A).lie);
  add_verdict(rep, "derived-length", "A^(1) = span{y}, A^(2) = 0", 2,
              opt_json(derived_length(A)));
  add_verdict(rep, "not-nilpotent",
              "[x, y] = y keeps y in every weak-series term", false,
              is_nilpotent(A));

  const SeriesReport weak = weak_series(A);
  const Subspace span_y = Subspace::span_elements(A, {A.basis_element(1)});
  add_verdict(rep, "weak-series-stabilizes-at-y",
              "the weak series stabilizes at span{y}", true,
              weak.stabilized && weak.terms.back() == span_y);

  const SeriesReport derived = derived_series(A);
  const Algebra commutator = subalgebra_on(A, derived.term(1));
  add_verdict(rep, "commutator-ideal-nilpotent",
              "solvability here comes with a nilpotent commutator ideal",
              true, is_nilpotent(commutator));

  const StableImage stable = stable_image(A);
  add_verdict(rep, "stable-image", "the multiplication operators stabilize "
                                   "on span{y}",
              true, stable.image == span_y);

  rep.witnesses = {{"stable_image_dim", stable.image.dim()},
                   {"stable_image_step", stable.stabilization_step},
                   {"ad_x", operator_to_json(left_op(A, A.basis_element(0)))}};
  rep.runtime_ms = timer.ms();
  return rep;
}

ScenarioReport run_scenario_upper_triangular(std::size_t n) {
  Timer timer;
  ScenarioReport rep;
  rep.name = "upper-triangular";
  rep.parameters = {{"n", n}};

  for (const auto& field :
       {FieldDescriptor::rationals(), FieldDescriptor::prime_field(2)}) {
    const std::string tag = field.str();
    const Algebra A = build_upper_triangular_lie(n, field);
    add_verdict(rep, "lie-checks[" + tag + "]",
                "the strictly upper-triangular commutator algebra is Lie",
                true, structure_checks(A).lie);
    const SeriesReport weak = weak_series(A);
    const SeriesReport strong = strong_series(A);
    add_verdict(rep, "N1[" + tag + "]",
                "nilpotency class n - 1: the weak series vanishes at n", n,
                opt_json(weak.vanishing_index));
    bool collapse = weak.terms.size() == strong.terms.size();
    if (collapse) {
      for (std::size_t i = 0; i < weak.terms.size(); ++i) {
        if (weak.terms[i] != strong.terms[i]) {
          collapse = false;
          break;
        }
      }
    }
    add_verdict(rep, "series-collapse[" + tag + "]",
                "A_[p] A_[q] inside A_[p+q] forces A_[k] = A_(k) for all k",
                true, collapse);
  }

  rep.runtime_ms = timer.ms();
  return rep;
}

ScenarioReport run_scenario_sasiada_cohn(std::size_t degree) {
  Timer timer;
  ScenarioReport rep;
  rep.name = "sasiada-cohn";
  rep.parameters = {{"degree", degree}};

  const TruncatedFreeAlgebra stage =
      build_truncated("xy", ForbiddenSet({}, {}), degree);
  const Algebra& A = stage.algebra();
  Element r = word_or_zero(stage, "y");
  if (degree > 4) {
    r = r - word_or_zero(stage, "xyyx");
  }

  const Subspace ideal = truncated_ideal(stage, r);
  add_verdict(rep, "finite-stage-membership",
              "modulo r = y - x y^2 x the element y falls into higher and "
              "higher degrees, so at each nilpotent stage y lies in (r); the "
              "full-algebra non-membership y not in (y - x y^2 x) is "
              "recorded without a computational proof",
              true, ideal.contains(word_or_zero(stage, "y")));

  const QuotientResult q = quotient(A, ideal);
  add_verdict(rep, "quotient-nilpotent",
              "finite-length images of the stages stay nilpotent", true,
              is_nilpotent(q.algebra));

  rep.witnesses = {{"dim", A.dim()},
                   {"ideal_dim", ideal.dim()},
                   {"config", freetrunc_config(stage)}};
  rep.runtime_ms = timer.ms();
  return rep;
}

std::vector<std::string> scenario_names() {
  return {"y-xyz",       "y-xy-yx",       "y-xy",
          "y-yy",        "xixi",          "alternating",
          "modp-lie",    "two-dim-solvable", "upper-triangular",
          "sasiada-cohn"};
}

ScenarioReport run_scenario(const std::string& name,
                            const ScenarioParams& params) {
  const std::size_t degree = params.degree.value_or(0);
  if (name == "y-xyz") return run_scenario_y_xyz(degree ? degree : 8);
  if (name == "y-xy-yx") return run_scenario_y_xy_yx(degree ? degree : 8);
  if (name == "y-xy") return run_scenario_y_xy(degree ? degree : 8);
  if (name == "y-yy") return run_scenario_y_yy(degree ? degree : 6);
  if (name == "xixi") return run_scenario_xixi(degree ? degree : 5);
  if (name == "alternating") {
    return run_scenario_alternating(degree ? degree : 8);
  }
  if (name == "modp-lie") return run_scenario_modp_lie(params.prime.value_or(5));
  if (name == "two-dim-solvable") return run_scenario_two_dim_solvable();
  if (name == "upper-triangular") {
    return run_scenario_upper_triangular(degree ? degree : 4);
  }
  if (name == "sasiada-cohn") {
    return run_scenario_sasiada_cohn(degree ? degree : 6);
  }
  std::string known;
  for (const std::string& s : scenario_names()) known += " " + s;
  throw Error("unknown scenario '" + name + "'; registered:" + known);
}

std::vector<ScenarioReport> run_all(const ScenarioParams& params) {
  std::vector<ScenarioReport> out;
  for (const std::string& name : scenario_names()) {
    ScenarioParams scoped = params;
    // the degree knob means a truncation degree; the families indexed by a
    // basis size (xixi) or matrix size (upper-triangular) keep their
    // defaults under a blanket override
    if (name == "xixi" || name == "upper-triangular") scoped.degree.reset();
    try {
      out.push_back(run_scenario(name, scoped));
    } catch (const std::exception& ex) {
      ScenarioReport failed;
      failed.name = name;
      failed.parameters = json::object();
      add_verdict(failed, "completed", "scenario ran to completion", true,
                  std::string(ex.what()));
      out.push_back(std::move(failed));
    }
  }
  return out;
}

ScenarioReport run_custom_trunc(const TruncatedFreeAlgebra& stage) {
  Timer timer;
  ScenarioReport rep;
  rep.name = "custom";
  rep.parameters = freetrunc_config(stage);

  bool closed = true;
  for (const std::string& w : stage.words()) {
    for (std::size_t start = 0; start < w.size() && closed; ++start) {
      for (std::size_t len = 1; start + len <= w.size(); ++len) {
        if (!stage.word_index(w.substr(start, len))) {
          closed = false;
          break;
        }
      }
    }
  }
  add_verdict(rep, "subword-closure",
              "every contiguous subword of an allowed word is allowed", true,
              closed);
  add_verdict(rep, "associative",
              "concatenate-then-truncate with a subword-closed forbidden set "
              "is associative",
              true, structure_checks(stage.algebra()).associative);
  const SeriesReport weak = weak_series(stage.algebra());
  add_verdict(rep, "nilpotent", "all words of length >= degree vanish", true,
              weak.vanishing_index.has_value() &&
                  *weak.vanishing_index <= stage.degree());

  rep.witnesses = {{"dim", stage.algebra().dim()},
                   {"N1", opt_json(weak.vanishing_index)}};
  rep.runtime_ms = timer.ms();
  return rep;
}

ScenarioReport run_tower(const std::string& name,
                         std::vector<std::size_t> degrees) {
  Timer timer;
  if (degrees.empty()) throw Error("tower needs at least one degree");
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

  const bool xyz = name == "y-xyz";
  if (!xyz && name != "y-xy-yx") {
    throw Error("tower diagnostics exist for: y-xyz y-xy-yx");
  }

  ScenarioReport rep;
  rep.name = name + "-tower";
  rep.parameters = {{"degrees", degrees}};

  std::vector<TruncatedFreeAlgebra> stages;
  std::vector<Element> ys;
  std::vector<std::size_t> ranks;
  for (std::size_t d : degrees) {
    stages.push_back(xyz ? build_y_xyz_stage(d) : build_y_xy_yx_stage(d));
    ys.push_back(xyz ? distinguished_y_xyz(stages.back())
                     : distinguished_y_xy_yx(stages.back()));
    ranks.push_back(right_coefficient_profile(stages.back(), ys.back(), 'x',
                                              'w', xyz ? 'z' : 'x')
                        .rank);
  }

  // truncation maps compose coherently: top -> mid -> low equals top -> low
  bool coherent = true;
  for (std::size_t i = 0; i + 2 < stages.size() && coherent; ++i) {
    for (std::size_t j = i + 1; j + 1 < stages.size() && coherent; ++j) {
      for (std::size_t k = j + 1; k < stages.size() && coherent; ++k) {
        const Homomorphism direct = truncate_map(stages[k], stages[i]);
        const Homomorphism step1 = truncate_map(stages[k], stages[j]);
        const Homomorphism step2 = truncate_map(stages[j], stages[i]);
        if (compose(step2, step1) != direct) coherent = false;
      }
    }
  }
  add_verdict(rep, "tower-coherence",
              "connecting surjections compose: f o p = p along the tower",
              true, coherent);

  bool compatible = true;
  for (std::size_t i = 0; i + 1 < stages.size(); ++i) {
    const Homomorphism h = truncate_map(stages[i + 1], stages[i]);
    if (h.apply(ys[i + 1]) != ys[i]) compatible = false;
  }
  add_verdict(rep, "element-compatibility",
              "the stage solutions form a compatible family under the "
              "connecting maps",
              true, compatible);

  bool strict = true;
  for (std::size_t i = 0; i + 1 < ranks.size(); ++i) {
    if (!(ranks[i] < ranks[i + 1])) strict = false;
  }
  if (ranks.size() >= 2) {
    add_verdict(rep, "rank-growth",
                "the coefficient-profile rank strictly grows with the "
                "degree: no fixed finite sum expresses every stage solution",
                true, strict);
  }

  json rank_curve = json::array();
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    rank_curve.push_back({{"degree", degrees[i]},
                          {"dim", stages[i].algebra().dim()},
                          {"rank", ranks[i]}});
  }
  rep.witnesses = {{"growth", rank_curve}};
  if (stages.size() >= 2) {
    rep.witnesses["connecting_map"] =
        matrix_to_json(truncate_map(stages[1], stages[0]).matrix());
  }
  rep.runtime_ms = timer.ms();
  return rep;
}

}  // namespace nilplab::scenarios
