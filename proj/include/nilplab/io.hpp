#ifndef NILPLAB_IO_HPP
#define NILPLAB_IO_HPP

#include <string>

#include <json.hpp>

#include "nilplab/analysis.hpp"
#include "nilplab/freetrunc.hpp"

namespace nilplab {

/// Algebra file format:
///   {"field": "Q" | {"p": N}, "dim": n, "labels": [...],
///    "products": [[i, j, k, "scalar"], ...]}
/// Indices are 0-based, omitted products are zero, duplicate (i, j, k)
/// entries are rejected.  Scalars are strings ("n", "n/d", or a residue);
/// plain JSON integers are also accepted.
Algebra algebra_from_json(const nlohmann::json& doc);
Algebra read_algebra_file(const std::string& path);
nlohmann::json algebra_to_json(const Algebra& A);

/// Scenario-config format for truncated free algebras:
///   {"alphabet": ["x","w","z"], "literals": ["xz", ...],
///    "sandwich": [["w","x","w"], ...], "degree": 8}
/// A sandwich entry is [left, middle-letters, right].
TruncatedFreeAlgebra trunc_from_json(const nlohmann::json& doc);
TruncatedFreeAlgebra read_trunc_file(const std::string& path);

nlohmann::json analysis_to_json(const AnalysisReport& rep);
std::string analysis_pretty(const AnalysisReport& rep);

}  // namespace nilplab

#endif
