#ifndef NILPLAB_ANALYSIS_HPP
#define NILPLAB_ANALYSIS_HPP

#include "nilplab/multiplication.hpp"

namespace nilplab {

/// Everything the analyze command reports about one algebra.
struct AnalysisReport {
  std::size_t dim = 0;
  std::string field;
  StructureChecks checks;
  NilpotenceReport nilpotence;
  bool solvable = false;
  std::optional<std::size_t> derived_len;
  std::optional<std::size_t> left_nilpotence;   // index of M_l(A)
  std::optional<std::size_t> right_nilpotence;  // index of M_r(A)
  std::optional<std::size_t> assoc_nilpotence;  // index of M_a(A)
  std::size_t stable_image_dim = 0;
  std::size_t stable_image_step = 0;
};

AnalysisReport analyze(const Algebra& A);

}  // namespace nilplab

#endif
