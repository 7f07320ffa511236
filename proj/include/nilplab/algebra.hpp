#ifndef NILPLAB_ALGEBRA_HPP
#define NILPLAB_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nilplab/matrix.hpp"

namespace nilplab {

class Element;
class Subspace;

/// One structure-constant entry: e_i e_j contains c * e_k.
struct ProductEntry {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Scalar c;
};

/// A finite-dimensional not-necessarily-associative algebra over an exact
/// field, presented by structure constants on a labeled basis.
///
/// Algebra is a cheap-to-copy immutable handle; two handles are "the same
/// parent" when they share the underlying data.  Elements and subspaces
/// remember their parent and refuse to mix across algebras.
class Algebra {
 public:
  const FieldDescriptor& field() const;
  std::size_t dim() const;
  const std::vector<std::string>& labels() const;

  Element zero() const;
  Element basis_element(std::size_t i) const;
  Element element(std::vector<Scalar> coords) const;
  /// Convenience: element from integer coordinates.
  Element element_from_ints(const std::vector<long>& coords) const;

  Element multiply(const Element& a, const Element& b) const;

  /// Sparse coordinates of e_i * e_j.
  const std::vector<std::pair<std::size_t, Scalar>>& basis_product(
      std::size_t i, std::size_t j) const;

  /// All nonzero structure-constant entries, in (i, j, k) order.
  std::vector<ProductEntry> product_entries() const;

  bool same_parent(const Algebra& other) const;
  /// Same field, dimension and structure constants (labels ignored).
  bool structurally_equal(const Algebra& other) const;

  struct Data;

 private:
  friend Algebra make_algebra(const FieldDescriptor&, std::size_t,
                              std::vector<std::string>,
                              const std::vector<ProductEntry>&);
  friend class Element;
  friend class Subspace;
  explicit Algebra(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// Builds an algebra from sparse structure constants; unspecified products
/// are zero.  Rejects out-of-range indices, scalars from the wrong field,
/// and duplicate (i, j, k) entries.
Algebra make_algebra(const FieldDescriptor& field, std::size_t dim,
                     std::vector<std::string> labels,
                     const std::vector<ProductEntry>& entries);

/// An element of an algebra, as a dense coordinate vector over the basis.
class Element {
 public:
  Element(Algebra parent, std::vector<Scalar> coords);

  const Algebra& parent() const { return parent_; }
  const std::vector<Scalar>& coords() const { return coords_; }
  const Scalar& coord(std::size_t i) const;
  bool is_zero() const;

  Element operator+(const Element& rhs) const;
  Element operator-(const Element& rhs) const;
  Element operator*(const Element& rhs) const;  // algebra product
  Element scaled(const Scalar& s) const;
  Element operator-() const;
  bool operator==(const Element& rhs) const;
  bool operator!=(const Element& rhs) const { return !(*this == rhs); }

  std::string str() const;

 private:
  Algebra parent_;
  std::vector<Scalar> coords_;
};

/// A linear subspace of an algebra, held as a row-reduced basis matrix
/// (rows are basis vectors).  The rref form makes equality and containment
/// tests canonical and deterministic.
class Subspace {
 public:
  static Subspace zero(const Algebra& parent);
  static Subspace full(const Algebra& parent);
  static Subspace span(const Algebra& parent,
                       const std::vector<std::vector<Scalar>>& vectors);
  static Subspace span_elements(const Algebra& parent,
                                const std::vector<Element>& elements);

  const Algebra& parent() const { return parent_; }
  /// Basis matrix in rref; row count equals dim().
  const Matrix& basis() const { return basis_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == parent_.dim(); }

  bool contains(const std::vector<Scalar>& v) const;
  bool contains(const Element& e) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  std::vector<Element> basis_elements() const;

  bool operator==(const Subspace& rhs) const;
  bool operator!=(const Subspace& rhs) const { return !(*this == rhs); }

 private:
  Subspace(Algebra parent, Matrix basis)
      : parent_(std::move(parent)), basis_(std::move(basis)) {}
  Algebra parent_;
  Matrix basis_;  // rref, no zero rows
};

/// Span of {u v : u in U-basis, v in V-basis}, row-reduced.
Subspace subspace_product(const Subspace& U, const Subspace& V);

enum class SeriesKind { weak, strong, derived };

/// A computed descending series together with its termination mode.
///
/// terms[0] is the whole algebra.  Reported indices follow each series'
/// native convention: 1-based for the weak and strong series (terms[0] is
/// A_[1] resp. A_(1)), 0-based for the derived series (terms[0] is A^(0)).
struct SeriesReport {
  SeriesKind kind{};
  std::vector<Subspace> terms;
  bool stabilized = false;
  std::optional<std::size_t> vanishing_index;

  std::size_t index_base() const {
    return kind == SeriesKind::derived ? 0 : 1;
  }
  /// Term by native index.
  const Subspace& term(std::size_t native_index) const;
  std::size_t last_native_index() const {
    return terms.size() - 1 + index_base();
  }
};

/// A_[1] = A, A_[n+1] = A A_[n] + A_[n] A.
SeriesReport weak_series(const Algebra& A);
/// A_(1) = A, A_(n+1) = sum over 0<m<n+1 of A_(m) A_(n+1-m).
///
/// The strong series can plateau and then drop further, so termination
/// needs more than two equal consecutive terms; see the implementation
/// for the certified stopping rule.
SeriesReport strong_series(const Algebra& A);
/// A^(0) = A, A^(n+1) = A^(n) A^(n).
SeriesReport derived_series(const Algebra& A);

bool is_nilpotent(const Algebra& A);
bool is_solvable(const Algebra& A);
/// Smallest n with A^(n) = 0, when solvable.
std::optional<std::size_t> derived_length(const Algebra& A);

struct StructureChecks {
  bool associative = false;
  bool anticommutative = false;  // e_i e_j = -e_j e_i and e_i e_i = 0
  bool jacobi = false;
  bool lie = false;  // anticommutative && jacobi
};

/// Exhaustive identity checks over basis tuples.
StructureChecks structure_checks(const Algebra& A);

/// New multiplication x*y = alpha xy + beta yx on the same module.
Algebra twist(const Algebra& A, const Scalar& alpha, const Scalar& beta);

struct IdealClosure {
  Subspace subspace;
  /// For each basis row of subspace, the first closure step containing it.
  std::vector<std::size_t> depths;
  std::size_t steps = 0;
};

/// Least subspace containing the generators and closed under left and
/// right multiplication by A.
IdealClosure ideal_closure(const Algebra& A,
                           const std::vector<Element>& generators);

/// Is A S + S A contained in S?
bool is_ideal(const Algebra& A, const Subspace& S);

/// The algebra structure induced on a multiplicatively closed subspace.
/// Basis rows of S become the basis; labels are inherited from each row's
/// pivot coordinate.  Throws if S is not closed under the product.
Algebra subalgebra_on(const Algebra& A, const Subspace& S);

}  // namespace nilplab

#endif
