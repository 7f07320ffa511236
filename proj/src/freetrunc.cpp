#include "nilplab/freetrunc.hpp"

#include <algorithm>

namespace nilplab {

ForbiddenSet::ForbiddenSet(std::vector<std::string> literals,
                           std::vector<SandwichRule> sandwich_rules)
    : literals_(std::move(literals)),
      sandwich_rules_(std::move(sandwich_rules)) {
  for (const std::string& lit : literals_) {
    if (lit.size() < 2) {
      throw Error("forbidden literal '" + lit +
                  "' is shorter than 2 letters; it would kill a generator");
    }
  }
}

bool ForbiddenSet::forbids(std::string_view word) const {
  for (const std::string& lit : literals_) {
    if (word.find(lit) != std::string_view::npos) return true;
  }
  for (const SandwichRule& rule : sandwich_rules_) {
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (word[i] != rule.left) continue;
      for (std::size_t j = i + 1; j < word.size(); ++j) {
        if (word[j] == rule.right) {
          bool interior_ok = true;
          for (std::size_t k = i + 1; k < j; ++k) {
            if (!rule.middle.contains(word[k])) {
              interior_ok = false;
              break;
            }
          }
          if (interior_ok) return true;
        }
        // keep scanning: a later j may still have an all-middle interior
        if (!rule.middle.contains(word[j])) break;
      }
    }
  }
  return false;
}

TruncatedFreeAlgebra::TruncatedFreeAlgebra(std::string alphabet,
                                           ForbiddenSet forbidden,
                                           std::size_t degree,
                                           FieldDescriptor field)
    : alphabet_(std::move(alphabet)),
      forbidden_(std::move(forbidden)),
      degree_(degree),
      algebra_(make_algebra(field, 0, {}, {})) {
  if (alphabet_.empty()) throw Error("empty alphabet");
  if (degree_ < 1) throw Error("truncation degree must be >= 1");
  {
    std::set<char> seen(alphabet_.begin(), alphabet_.end());
    if (seen.size() != alphabet_.size()) throw Error("repeated alphabet letter");
  }
  auto check_letter = [&](char c, const std::string& where) {
    if (alphabet_.find(c) == std::string::npos) {
      throw Error("letter '" + std::string(1, c) + "' in " + where +
                  " is not in the alphabet");
    }
  };
  for (const std::string& lit : forbidden_.literals()) {
    for (char c : lit) check_letter(c, "forbidden literal '" + lit + "'");
  }
  for (const SandwichRule& rule : forbidden_.sandwich_rules()) {
    check_letter(rule.left, "sandwich rule");
    check_letter(rule.right, "sandwich rule");
    for (char c : rule.middle) check_letter(c, "sandwich rule");
  }

  // graded-lex enumeration: extend allowed words letter by letter.
  // Allowed words are closed under subwords, hence prefix-closed, so every
  // allowed word of length L arises from an allowed word of length L-1.
  std::vector<std::string> previous;
  for (char c : alphabet_) {
    std::string w(1, c);
    if (!forbidden_.forbids(w)) previous.push_back(w);
  }
  for (std::size_t len = 1; len < degree_; ++len) {
    for (const std::string& w : previous) {
      check_dimension_cap(words_.size() + 1, "build_truncated");
      index_.emplace(w, words_.size());
      words_.push_back(w);
    }
    if (len + 1 >= degree_) break;
    std::vector<std::string> next;
    for (const std::string& w : previous) {
      for (char c : alphabet_) {
        std::string ext = w + c;
        if (!forbidden_.forbids(ext)) next.push_back(std::move(ext));
      }
    }
    previous = std::move(next);
  }

  std::vector<ProductEntry> entries;
  const Scalar one = Scalar::one(field);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::size_t j = 0; j < words_.size(); ++j) {
      if (words_[i].size() + words_[j].size() >= degree_) continue;
      const auto it = index_.find(words_[i] + words_[j]);
      if (it != index_.end()) entries.push_back({i, j, it->second, one});
    }
  }
  algebra_ = make_algebra(field, words_.size(), words_, entries);
}

std::optional<std::size_t> TruncatedFreeAlgebra::word_index(
    std::string_view w) const {
  const auto it = index_.find(std::string(w));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element TruncatedFreeAlgebra::word_element(std::string_view w) const {
  const auto idx = word_index(w);
  if (!idx) throw Error("word '" + std::string(w) + "' is not a basis word");
  return algebra_.basis_element(*idx);
}

Scalar TruncatedFreeAlgebra::coefficient(const Element& e,
                                         std::string_view w) const {
  if (!e.parent().same_parent(algebra_)) {
    throw FieldMismatchError("coefficient of an element of a different algebra");
  }
  const auto idx = word_index(w);
  if (!idx) return Scalar::zero(algebra_.field());
  return e.coords()[*idx];
}

bool TruncatedFreeAlgebra::same_presentation(
    const TruncatedFreeAlgebra& other) const {
  return alphabet_ == other.alphabet_ && forbidden_ == other.forbidden_ &&
         algebra_.field() == other.algebra_.field();
}

TruncatedFreeAlgebra TruncatedFreeAlgebra::truncated_to(
    std::size_t target_degree) const {
  return build_truncated(alphabet_, forbidden_, target_degree,
                         algebra_.field());
}

TruncatedFreeAlgebra build_truncated(const std::string& alphabet,
                                     const ForbiddenSet& forbidden,
                                     std::size_t degree,
                                     const FieldDescriptor& field) {
  return TruncatedFreeAlgebra(alphabet, forbidden, degree, field);
}

Homomorphism truncate_map(const TruncatedFreeAlgebra& source,
                          const TruncatedFreeAlgebra& target) {
  if (!source.same_presentation(target)) {
    throw Error("truncate_map between different presentations");
  }
  if (target.degree() > source.degree()) {
    throw Error("truncate_map target degree exceeds the source degree");
  }
  const Algebra& A = source.algebra();
  const Algebra& B = target.algebra();
  Matrix m(A.field(), B.dim(), A.dim());
  const Scalar one = Scalar::one(A.field());
  for (std::size_t j = 0; j < A.dim(); ++j) {
    const std::string& w = source.words()[j];
    if (w.size() < target.degree()) {
      const auto idx = target.word_index(w);
      if (!idx) throw InvariantViolation("allowed word missing from lower stage");
      m.set(*idx, j, one);
    }
  }
  return make_hom(A, B, m);
}

Subspace truncated_ideal(const TruncatedFreeAlgebra& A, const Element& r) {
  const Algebra& alg = A.algebra();
  if (!r.parent().same_parent(alg)) {
    throw FieldMismatchError("ideal generator from a different algebra");
  }
  // sandwiches a r b with a, b ranging over basis words and the empty word
  std::vector<std::string> multipliers;
  multipliers.push_back("");
  for (const std::string& w : A.words()) multipliers.push_back(w);
  std::vector<std::vector<Scalar>> rows;
  for (const std::string& a : multipliers) {
    for (const std::string& b : multipliers) {
      auto row = zero_vector(alg.field(), alg.dim());
      bool nonzero = false;
      for (std::size_t m = 0; m < alg.dim(); ++m) {
        const Scalar& c = r.coords()[m];
        if (c.is_zero()) continue;
        const std::string word = a + A.words()[m] + b;
        if (word.size() >= A.degree()) continue;
        const auto idx = A.word_index(word);
        if (!idx) continue;
        row[*idx] = row[*idx] + c;
        nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  return Subspace::span(alg, rows);
}

Element solve_unipotent(const TruncatedFreeAlgebra& A, const LinearOperator& u,
                        const Element& target) {
  const Algebra& alg = A.algebra();
  if (!u.parent().same_parent(alg) || !target.parent().same_parent(alg)) {
    throw FieldMismatchError("solve_unipotent arguments from a different algebra");
  }
  return geometric_series_apply(u, target);
}

CoefficientProfile right_coefficient_profile(const TruncatedFreeAlgebra& A,
                                             const Element& e, char prefix,
                                             char marker, char tail) {
  const Algebra& alg = A.algebra();
  if (!e.parent().same_parent(alg)) {
    throw FieldMismatchError("profile of an element of a different algebra");
  }
  if (prefix == marker || marker == tail) {
    throw Error("marker letter must differ from the prefix and tail letters");
  }
  for (char c : {prefix, marker, tail}) {
    if (A.alphabet().find(c) == std::string::npos) {
      throw Error("profile letter is not in the alphabet");
    }
  }
  const std::size_t width = A.degree() - 1;  // tail powers 0..degree-2
  Matrix rows(alg.field(), width, width);
  for (std::size_t j = 0; j < width; ++j) {
    std::string word(j, prefix);
    word.push_back(marker);
    for (std::size_t t = 0; t < width; ++t) {
      rows.set(j, t, A.coefficient(e, word));
      word.push_back(tail);
    }
  }
  CoefficientProfile out{rows, 0};
  out.rank = rref(rows).rank;
  return out;
}

UnitSeries power_series_unit_inverse(const TruncatedFreeAlgebra& A,
                                     long exponent) {
  if (A.alphabet().size() != 1) {
    throw Error("power series inversion needs a one-letter algebra");
  }
  if (exponent > -1) {
    throw Error("exponent must be <= -1");
  }
  const Algebra& alg = A.algebra();
  const char x = A.alphabet()[0];
  auto coords = zero_vector(alg.field(), alg.dim());
  for (std::size_t k = 1; k < A.degree(); ++k) {
    const auto idx = A.word_index(std::string(k, x));
    if (!idx) continue;
    coords[*idx] = binomial_scalar(exponent, k, alg.field());
  }
  return UnitSeries{Scalar::one(alg.field()), alg.element(std::move(coords))};
}

}  // namespace nilplab
