// Acceptance suite: one pass/fail line per criterion, all tolerances are
// exact equality (the arithmetic is exact), each criterion carries its
// runtime budget.  Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "nilplab/io.hpp"
#include "nilplab/scenarios.hpp"
#include "testutil.hpp"

using namespace nilplab;
using namespace nilplab::scenarios;

namespace {

struct Criterion {
  std::string name;
  double budget_ms;
  std::function<bool(std::string&)> run;
};

bool expect(bool cond, const std::string& what, std::string& detail) {
  if (!cond && detail.empty()) detail = what;
  return cond;
}

// --- 1. extremal indices -------------------------------------------------
bool extremal_indices(std::string& detail) {
  bool ok = true;
  for (std::size_t n = 2; n <= 7; ++n) {
    const NilpotenceReport rep = nilpotence_report(build_xixi(n));
    ok &= expect(rep.N1 == n, "N1(" + std::to_string(n) + ")", detail);
    ok &= expect(rep.N2 == (std::size_t{1} << (n - 2)) + 1,
                 "N2(" + std::to_string(n) + ")", detail);
    ok &= expect(rep.N3 == std::max<std::size_t>(1, n - 1),
                 "N3(" + std::to_string(n) + ")", detail);
  }
  return ok;
}

// --- 2. equivalence property suite ---------------------------------------
bool equivalence_suite(std::string& detail) {
  std::mt19937 rng(987654321);
  bool ok = true;
  int nilpotent_count = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const FieldDescriptor f = trial % 2 ? FieldDescriptor::prime_field(2)
                                        : FieldDescriptor::prime_field(3);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    Algebra A = testutil::random_algebra(rng, f, dim(rng));

    // the three criteria agree (asserted inside nilpotence_report as well)
    const NilpotenceReport rep = nilpotence_report(A);
    const bool n1 = rep.N1.has_value(), n2 = rep.N2.has_value(),
               n3 = rep.N3.has_value();
    ok &= expect(n1 == n2 && n2 == n3, "criteria agreement", detail);
    if (rep.nilpotent) ++nilpotent_count;

    const SeriesReport weak = weak_series(A);
    const SeriesReport strong = strong_series(A);
    const std::size_t common =
        std::min(weak.last_native_index(), strong.last_native_index());
    for (std::size_t n = 1; n <= common; ++n) {
      ok &= expect(strong.term(n).contains(weak.term(n)),
                   "A_[n] inside A_(n)", detail);
    }
    if (rep.nilpotent && *rep.N1 >= 2) {
      // A_(2^{N1-2}+1) vanishes, i.e. is contained in A_[N1] = 0
      const std::size_t bound = (std::size_t{1} << (*rep.N1 - 2)) + 1;
      ok &= expect(*rep.N2 <= bound, "strong bound", detail);
    }
    ok &= expect(stable_image(A).image.is_zero() == rep.nilpotent,
                 "stable image criterion", detail);
  }
  ok &= expect(nilpotent_count > 0 && nilpotent_count < 200,
               "sample covers both outcomes", detail);
  return ok;
}

// --- 3. Lie series collapse ----------------------------------------------
bool lie_series_collapse(std::string& detail) {
  bool ok = true;
  for (std::size_t n = 3; n <= 6; ++n) {
    for (const auto& f :
         {FieldDescriptor::rationals(), FieldDescriptor::prime_field(2)}) {
      const Algebra A = build_upper_triangular_lie(n, f);
      const SeriesReport weak = weak_series(A);
      const SeriesReport strong = strong_series(A);
      ok &= expect(weak.vanishing_index == n, "weak vanishes at n", detail);
      ok &= expect(strong.vanishing_index == n, "strong vanishes at n", detail);
      ok &= expect(weak.terms.size() == strong.terms.size(),
                   "same series length", detail);
      for (std::size_t k = 0; k < weak.terms.size(); ++k) {
        ok &= expect(weak.terms[k] == strong.terms[k], "A_[k] = A_(k)",
                     detail);
      }
    }
  }
  return ok;
}

// --- 4. y - xyz reproduction ----------------------------------------------
bool y_xyz_reproduction(std::string& detail) {
  bool ok = true;
  std::size_t previous_rank = 0;
  for (std::size_t d : {4, 6, 8, 10}) {
    const TruncatedFreeAlgebra stage = build_y_xyz_stage(d);
    const Algebra& A = stage.algebra();
    const Element w = stage.word_element("w");
    const LinearOperator u = left_op(A, stage.word_element("x")) *
                             right_op(A, stage.word_element("z"));
    const Element y = solve_unipotent(stage, u, w);
    ok &= expect(y - u.apply(y) == w, "substitution identity", detail);
    ok &= expect(truncated_ideal(stage, w).contains(y), "y in (w)", detail);

    // independent oracle for the rank: read off the coefficient rows of
    // the word-sum expansion directly
    Element oracle = A.zero();
    for (std::size_t i = 0; 2 * i + 1 < d; ++i) {
      std::string word(i, 'x');
      word.push_back('w');
      word.append(i, 'z');
      oracle = oracle + stage.word_element(word);
    }
    ok &= expect(y == oracle, "expansion oracle", detail);
    const std::size_t rank =
        right_coefficient_profile(stage, y, 'x', 'w', 'z').rank;
    ok &= expect(rank == d / 2, "rank formula", detail);  // = ceil((d-1)/2)
    ok &= expect(rank > previous_rank, "strict rank growth", detail);
    previous_rank = rank;
  }
  return ok;
}

// --- 5. y - xy + yx reproduction -------------------------------------------
bool y_xy_yx_reproduction(std::string& detail) {
  bool ok = true;
  std::size_t previous_rank = 0;
  for (std::size_t d : {4, 6, 8}) {
    const TruncatedFreeAlgebra stage = build_y_xy_yx_stage(d);
    const Algebra& A = stage.algebra();
    const Element w = stage.word_element("w");
    const LinearOperator lx = left_op(A, stage.word_element("x"));
    const LinearOperator rx = right_op(A, stage.word_element("x"));
    const Element y = solve_unipotent(stage, lx - rx, w);

    const LinearOperator inv = LinearOperator::identity(A) + quasiinverse(rx);
    Element y_formula = A.zero();
    for (std::size_t i = 0; i + 1 < d; ++i) {
      y_formula = y_formula + (lx.power(i) * inv.power(i + 1)).apply(w);
    }
    ok &= expect(y == y_formula, "the two computations agree", detail);
    ok &= expect(y - (lx - rx).apply(y) == w, "substitution identity", detail);

    const std::size_t rank =
        right_coefficient_profile(stage, y, 'x', 'w', 'x').rank;
    ok &= expect(rank == d - 1, "rank of the (1+x)^{-1-i} family", detail);
    ok &= expect(rank > previous_rank, "strict rank growth", detail);
    previous_rank = rank;
  }
  return ok;
}

// --- 6. nonassociative families -------------------------------------------
bool nonassociative_families(std::string& detail) {
  bool ok = true;
  {
    const Algebra A = build_xwi(6);
    ok &= expect(operator_algebra_nilpotence(mult_algebra_right(A)) == 2,
                 "M_r(A)^2 = 0", detail);
    const auto left = operator_algebra_nilpotence(mult_algebra_left(A));
    ok &= expect(left.has_value() && *left >= 6, "M_l index >= 6", detail);
  }
  {
    const Algebra A = build_alternating(8);
    const auto left = operator_algebra_nilpotence(mult_algebra_left(A));
    const auto right = operator_algebra_nilpotence(mult_algebra_right(A));
    ok &= expect(left.has_value(), "M_l nilpotent", detail);
    ok &= expect(right.has_value(), "M_r nilpotent", detail);
    const auto n1_8 = weak_series(A).vanishing_index;
    const auto n1_6 = weak_series(build_alternating(6)).vanishing_index;
    ok &= expect(n1_8 && n1_6 && *n1_8 > *n1_6, "N1 grows with d", detail);
    std::printf("       (alternating d=8: M_l index %zu, M_r index %zu, "
                "N1 %zu)\n",
                *left, *right, *n1_8);
  }
  {
    const Algebra A = build_wiwi(6);
    const IdealClosure ic = ideal_closure(A, {A.basis_element(0)});
    for (std::size_t j = 0; j < ic.depths.size(); ++j) {
      ok &= expect(ic.depths[j] == j, "depth(w_j) = j", detail);
    }
    std::vector<long> ones(6, 1);
    const Element y = A.element_from_ints(ones);
    ok &= expect(y - y * y == A.basis_element(0), "y - y^2 = w_0", detail);
    const Subspace top = Subspace::span_elements(A, {A.basis_element(5)});
    const QuotientResult q = quotient(A, top);
    const Element py = q.projection.apply(y);
    ok &= expect(py - py * py == q.projection.apply(A.basis_element(0)),
                 "identity in the top-degree quotient", detail);
  }
  return ok;
}

// --- 7. mod-p solvable Lie -------------------------------------------------
bool modp_solvable_lie(std::string& detail) {
  bool ok = true;
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const Algebra B = build_modp_lie(p);  // Jacobi verified in the builder
    ok &= expect(structure_checks(B).lie, "Lie checks", detail);
    ok &= expect(B.dim() == p + 2, "dim = p + 2", detail);
    const SeriesReport derived = derived_series(B);
    ok &= expect(derived.vanishing_index == 3, "derived length 3", detail);
    ok &= expect(derived.term(2).dim() > 0, "B^(2) nonzero", detail);
    const Algebra B1 = subalgebra_on(B, derived.term(1));
    ok &= expect(!is_nilpotent(B1), "B^(1) not nilpotent", detail);
    ok &= expect(B.multiply(B.basis_element(0), B.basis_element(2)) ==
                     B.basis_element(2),
                 "[D, Y_0] = Y_0", detail);
  }
  return ok;
}

// --- 8. functoriality -------------------------------------------------------
bool functoriality(std::string& detail) {
  bool ok = true;
  // extremal-family tower
  {
    const Algebra a6 = build_xixi(6), a5 = build_xixi(5), a4 = build_xixi(4);
    auto trunc = [](const Algebra& from, const Algebra& to) {
      Matrix m(from.field(), to.dim(), from.dim());
      for (std::size_t i = 0; i < to.dim(); ++i) {
        m.set(i, i, Scalar::one(from.field()));
      }
      return make_hom(from, to, m);
    };
    const Homomorphism g = trunc(a6, a5), h = trunc(a5, a4);
    const Homomorphism hg = compose(h, g);
    std::vector<LinearOperator> mapped;
    for (std::size_t i = 0; i < a6.dim(); ++i) {
      for (const bool left : {true, false}) {
        const LinearOperator u = left ? left_op(a6, a6.basis_element(i))
                                      : right_op(a6, a6.basis_element(i));
        const LinearOperator via_g = induced_mult_hom(g, u);
        ok &= expect(induced_mult_hom(hg, u) == induced_mult_hom(h, via_g),
                     "M(hg) = M(h) M(g)", detail);
        mapped.push_back(induced_mult_hom(hg, u));
      }
    }
    ok &= expect(OperatorAlgebra::generate(a4, std::move(mapped))
                     .spans_same(mult_algebra(a4)),
                 "M(h) surjective (extremal tower)", detail);
  }
  // truncated-free towers
  for (const bool xyz : {true, false}) {
    const TruncatedFreeAlgebra top =
        xyz ? build_y_xyz_stage(5) : build_y_xy_yx_stage(5);
    const TruncatedFreeAlgebra mid = top.truncated_to(4);
    const TruncatedFreeAlgebra low = top.truncated_to(3);
    const Homomorphism g = truncate_map(top, mid), h = truncate_map(mid, low);
    const Homomorphism hg = compose(h, g);
    ok &= expect(hg == truncate_map(top, low), "tower coherence", detail);
    const Algebra& A = top.algebra();
    std::vector<LinearOperator> mapped;
    for (std::size_t i = 0; i < A.dim(); ++i) {
      for (const bool left : {true, false}) {
        const LinearOperator u = left ? left_op(A, A.basis_element(i))
                                      : right_op(A, A.basis_element(i));
        // the intertwining v o h = h o u is verified exactly inside
        // induced_mult_hom; a throw here fails the criterion
        const LinearOperator v = induced_mult_hom(hg, u);
        ok &= expect(v == induced_mult_hom(h, induced_mult_hom(g, u)),
                     "M(hg) = M(h) M(g) (truncation tower)", detail);
        mapped.push_back(v);
      }
    }
    ok &= expect(OperatorAlgebra::generate(low.algebra(), std::move(mapped))
                     .spans_same(mult_algebra(low.algebra())),
                 "M(h) surjective (truncation tower)", detail);
  }
  return ok;
}

// --- 9. finite-stage nilpotence of quotients --------------------------------
bool quotients_nilpotent(std::string& detail) {
  bool ok = true;
  for (std::size_t d : {4, 6, 8}) {
    const TruncatedFreeAlgebra stage = build_y_xyz_stage(d);
    const Subspace ideal = truncated_ideal(stage, stage.word_element("w"));
    ok &= expect(is_nilpotent(quotient(stage.algebra(), ideal).algebra),
                 "y-xyz stage quotient", detail);
  }
  for (std::size_t d : {4, 6}) {
    const TruncatedFreeAlgebra stage = build_y_xy_yx_stage(d);
    const Subspace ideal = truncated_ideal(stage, stage.word_element("w"));
    ok &= expect(is_nilpotent(quotient(stage.algebra(), ideal).algebra),
                 "sandwich stage quotient", detail);
  }
  {
    const TruncatedFreeAlgebra stage =
        build_truncated("xy", ForbiddenSet({}, {}), 6);
    const Element r =
        stage.word_element("y") - stage.word_element("xyyx");
    const Subspace ideal = truncated_ideal(stage, r);
    ok &= expect(stage.word_index("y").has_value() &&
                     ideal.contains(stage.word_element("y")),
                 "y in (y - x y^2 x) at the stage", detail);
    ok &= expect(is_nilpotent(quotient(stage.algebra(), ideal).algebra),
                 "relation-ideal quotient", detail);
  }
  {
    const Algebra A = build_xwi(6);
    const IdealClosure ic = ideal_closure(A, {A.basis_element(1)});
    ok &= expect(is_nilpotent(quotient(A, ic.subspace).algebra),
                 "shift-family quotient", detail);
  }
  {
    const Algebra A = build_wiwi(6);
    const IdealClosure ic = ideal_closure(A, {A.basis_element(0)});
    ok &= expect(is_nilpotent(quotient(A, ic.subspace).algebra),
                 "squaring-family quotient", detail);
  }
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"1 extremal indices N1/N2/N3 for n=2..7", 1000.0, extremal_indices},
      {"2 equivalence suite over 200 random algebras", 30000.0,
       equivalence_suite},
      {"3 Lie series collapse A_[k] = A_(k), n=3..6, Q and F_2", 5000.0,
       lie_series_collapse},
      {"4 y-xyz stages d=4,6,8,10: identity, membership, rank growth",
       10000.0, y_xyz_reproduction},
      {"5 y-xy+yx stages d=4,6,8: two routes, identity, rank growth",
       10000.0, y_xy_yx_reproduction},
      {"6 nonassociative families: shift, alternating, squaring", 5000.0,
       nonassociative_families},
      {"7 mod-p solvable Lie for p=2,3,5,7", 5000.0, modp_solvable_lie},
      {"8 functoriality of the induced operator maps", 5000.0, functoriality},
      {"9 finite-stage quotients are nilpotent", 10000.0,
       quotients_nilpotent},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = c.run(detail);
    } catch (const std::exception& ex) {
      detail = ex.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    if (ms > c.budget_ms) {
      ok = false;
      detail = "over budget: " + std::to_string(ms) + " ms";
    }
    std::printf("[%s] %s (%.0f ms)%s%s\n", ok ? "PASS" : "FAIL",
                c.name.c_str(), ms, detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
