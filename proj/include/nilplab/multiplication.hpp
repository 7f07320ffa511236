#ifndef NILPLAB_MULTIPLICATION_HPP
#define NILPLAB_MULTIPLICATION_HPP

#include <optional>
#include <vector>

#include "nilplab/algebra.hpp"

namespace nilplab {

/// A module endomorphism of an algebra, as a dim x dim matrix acting on
/// coordinate columns.
class LinearOperator {
 public:
  LinearOperator(Algebra parent, Matrix matrix);
  static LinearOperator zero(const Algebra& parent);
  static LinearOperator identity(const Algebra& parent);

  const Algebra& parent() const { return parent_; }
  const Matrix& matrix() const { return matrix_; }

  Element apply(const Element& e) const;

  LinearOperator operator+(const LinearOperator& rhs) const;
  LinearOperator operator-(const LinearOperator& rhs) const;
  /// Composition u o v.
  LinearOperator operator*(const LinearOperator& rhs) const;
  LinearOperator scaled(const Scalar& s) const;
  LinearOperator operator-() const;
  /// u composed with itself n times; n = 0 gives the identity.
  LinearOperator power(std::size_t n) const;

  bool is_zero() const { return matrix_.is_zero(); }
  bool is_nilpotent() const;

  bool operator==(const LinearOperator& rhs) const;
  bool operator!=(const LinearOperator& rhs) const { return !(*this == rhs); }

 private:
  Algebra parent_;
  Matrix matrix_;
};

/// l_x: y -> x y.
LinearOperator left_op(const Algebra& A, const Element& x);
/// r_x: y -> y x.
LinearOperator right_op(const Algebra& A, const Element& x);
/// a_{x,z}: y -> x(yz) - (xy)z.
LinearOperator associator_op(const Algebra& A, const Element& x,
                             const Element& z);

/// The span of all finite composition products of a generator set: a
/// (generally nonunital) associative subalgebra of the endomorphisms of A.
///
/// The basis is canonical: flattened operators in reduced row-echelon form.
/// Closure is guaranteed by construction -- the span is grown by composing
/// generators on the left until it stops growing, which reaches every
/// product of generators because composition is associative and the
/// generators generate.  verify_closure() re-checks exhaustively for tests.
class OperatorAlgebra {
 public:
  static OperatorAlgebra generate(const Algebra& parent,
                                  std::vector<LinearOperator> generators);

  const Algebra& parent() const { return parent_; }
  const std::vector<LinearOperator>& generators() const { return generators_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<LinearOperator>& basis_operators() const { return basis_; }

  bool contains(const LinearOperator& u) const;
  bool spans_same(const OperatorAlgebra& other) const;

  /// Exhaustive check that products of basis elements stay in the span.
  bool verify_closure() const;

 private:
  OperatorAlgebra(Algebra parent, std::vector<LinearOperator> generators,
                  std::vector<LinearOperator> basis)
      : parent_(std::move(parent)),
        generators_(std::move(generators)),
        basis_(std::move(basis)) {}
  Algebra parent_;
  std::vector<LinearOperator> generators_;
  std::vector<LinearOperator> basis_;  // flattened rows form an rref matrix
};

/// M(A): generated by all l_{e_i} and r_{e_i}.
OperatorAlgebra mult_algebra(const Algebra& A);
/// M_l(A): generated by the left multiplications only.
OperatorAlgebra mult_algebra_left(const Algebra& A);
/// M_r(A): generated by the right multiplications only.
OperatorAlgebra mult_algebra_right(const Algebra& A);
/// M_a(A): generated by the associator operators a_{e_i, e_j}.
OperatorAlgebra mult_algebra_assoc(const Algebra& A);

/// Smallest n with M^n = 0 under the power filtration
/// M^{n+1} = span{g o m : g generator, m in M^n}, or nullopt when the
/// filtration stabilizes at a nonzero term.
std::optional<std::size_t> operator_algebra_nilpotence(
    const OperatorAlgebra& M);

/// The three nilpotence indices of one algebra.  Their consistency
/// (all present or all absent, N3 = max(1, N1-1), N1 <= N2 <= 2^{N1-2}+1)
/// is asserted at construction; violations are internal errors.
struct NilpotenceReport {
  std::optional<std::size_t> N1;
  std::optional<std::size_t> N2;
  std::optional<std::size_t> N3;
  bool nilpotent = false;
};

NilpotenceReport nilpotence_report(const Algebra& A);

/// u * v = u + v + u o v.
LinearOperator quasi_mult(const LinearOperator& u, const LinearOperator& v);

/// The v with u * v = v * u = 0, i.e. (1+u)^{-1} - 1; defined whenever
/// 1 + u is invertible.  Throws NotInvertibleError otherwise.
LinearOperator quasiinverse(const LinearOperator& u);

/// sum_{k >= 0} u^k(target) for nilpotent u: the unique y with
/// (1 - u)(y) = target.  Throws NotNilpotentError when u is not nilpotent;
/// the defining identity is re-verified exactly before returning.
Element geometric_series_apply(const LinearOperator& u, const Element& target);

struct StableImage {
  Subspace image;
  std::size_t stabilization_step = 0;
};

/// Limit of the chain V_0 = A, V_{k+1} = span of images of V_k under the
/// multiplication operators; zero exactly when A is nilpotent.
StableImage stable_image(const Algebra& A);

}  // namespace nilplab

#endif
