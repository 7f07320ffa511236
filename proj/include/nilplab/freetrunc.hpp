#ifndef NILPLAB_FREETRUNC_HPP
#define NILPLAB_FREETRUNC_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nilplab/morphism.hpp"

namespace nilplab {

/// A sandwich pattern left . m* . right: a word is forbidden when it
/// contains a contiguous subword starting with `left`, ending with `right`,
/// all of whose interior letters lie in `middle`.  This finitely describes
/// the infinite monomial families such as {w x^i w : i >= 0}.
struct SandwichRule {
  char left;
  std::set<char> middle;
  char right;
  bool operator==(const SandwichRule&) const = default;
};

/// Forbidden monomials: literal subwords of length >= 2 plus sandwich
/// patterns.  Degree-independent, so one description drives a whole
/// truncation tower.
class ForbiddenSet {
 public:
  ForbiddenSet() = default;
  ForbiddenSet(std::vector<std::string> literals,
               std::vector<SandwichRule> sandwich_rules);

  const std::vector<std::string>& literals() const { return literals_; }
  const std::vector<SandwichRule>& sandwich_rules() const {
    return sandwich_rules_;
  }

  /// Does the word contain a forbidden subword?
  bool forbids(std::string_view word) const;

  bool operator==(const ForbiddenSet&) const = default;

 private:
  std::vector<std::string> literals_;
  std::vector<SandwichRule> sandwich_rules_;
};

/// The free associative algebra on an alphabet, modulo the forbidden
/// monomials and all words of length >= degree.  Basis: allowed nonempty
/// words of length < degree in graded-lexicographic order (letter order =
/// alphabet order).  The product of basis words is concatenation when the
/// result is again a basis word, else zero; with a subword-closed
/// forbidden set this is associative.
class TruncatedFreeAlgebra {
 public:
  const std::string& alphabet() const { return alphabet_; }
  const ForbiddenSet& forbidden() const { return forbidden_; }
  std::size_t degree() const { return degree_; }
  const Algebra& algebra() const { return algebra_; }
  const std::vector<std::string>& words() const { return words_; }

  std::optional<std::size_t> word_index(std::string_view w) const;
  /// Basis element of a word; throws if the word is not in the basis.
  Element word_element(std::string_view w) const;
  /// Coefficient of a word in an element (zero for non-basis words).
  Scalar coefficient(const Element& e, std::string_view w) const;

  bool same_presentation(const TruncatedFreeAlgebra& other) const;
  /// The stage of the same presentation at a lower degree.
  TruncatedFreeAlgebra truncated_to(std::size_t target_degree) const;

 private:
  friend TruncatedFreeAlgebra build_truncated(const std::string&,
                                              const ForbiddenSet&, std::size_t,
                                              const FieldDescriptor&);
  TruncatedFreeAlgebra(std::string alphabet, ForbiddenSet forbidden,
                       std::size_t degree, FieldDescriptor field);
  std::string alphabet_;
  ForbiddenSet forbidden_;
  std::size_t degree_;
  std::vector<std::string> words_;
  std::unordered_map<std::string, std::size_t> index_;
  Algebra algebra_;
};

/// Enumerates the allowed words and builds the structure-constant algebra.
TruncatedFreeAlgebra build_truncated(
    const std::string& alphabet, const ForbiddenSet& forbidden,
    std::size_t degree,
    const FieldDescriptor& field = FieldDescriptor::rationals());

/// The surjection killing all words of length >= target degree.  Both
/// stages must come from the same presentation.
Homomorphism truncate_map(const TruncatedFreeAlgebra& source,
                          const TruncatedFreeAlgebra& target);

/// The two-sided ideal of r in the truncated algebra: the span of a r b
/// with a, b allowed words or the empty word.
Subspace truncated_ideal(const TruncatedFreeAlgebra& A, const Element& r);

/// The unique y with (1 - u)(y) = target for nilpotent u, via the finite
/// geometric series sum_k u^k(target); verified by substitution.
Element solve_unipotent(const TruncatedFreeAlgebra& A, const LinearOperator& u,
                        const Element& target);

struct CoefficientProfile {
  /// Row j holds the coefficients of tail^t in the words
  /// prefix^j marker tail^t, t = 0..degree-2.
  Matrix vectors;
  std::size_t rank = 0;
};

/// Extracts, for each j, the tail-letter series multiplying
/// prefix^j marker in e.  The rank of the stacked rows is the witness
/// quantity whose growth separates the truncation stages.
CoefficientProfile right_coefficient_profile(const TruncatedFreeAlgebra& A,
                                             const Element& e, char prefix,
                                             char marker, char tail);

struct UnitSeries {
  Scalar unit;   ///< coefficient of the empty word
  Element tail;  ///< the nonunital part
};

/// Truncation of (1 + x)^exponent for exponent <= -1 on a one-letter
/// algebra, with exact binomial coefficients; the unit term is tracked
/// separately since the algebra itself is nonunital.
UnitSeries power_series_unit_inverse(const TruncatedFreeAlgebra& A,
                                     long exponent);

}  // namespace nilplab

#endif
