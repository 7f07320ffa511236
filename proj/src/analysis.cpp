#include "nilplab/analysis.hpp"

namespace nilplab {

AnalysisReport analyze(const Algebra& A) {
  AnalysisReport rep;
  rep.dim = A.dim();
  rep.field = A.field().str();
  rep.checks = structure_checks(A);
  rep.nilpotence = nilpotence_report(A);
  rep.derived_len = derived_length(A);
  rep.solvable = rep.derived_len.has_value();
  rep.left_nilpotence = operator_algebra_nilpotence(mult_algebra_left(A));
  rep.right_nilpotence = operator_algebra_nilpotence(mult_algebra_right(A));
  rep.assoc_nilpotence = operator_algebra_nilpotence(mult_algebra_assoc(A));
  const StableImage si = stable_image(A);
  rep.stable_image_dim = si.image.dim();
  rep.stable_image_step = si.stabilization_step;
  return rep;
}

}  // namespace nilplab
