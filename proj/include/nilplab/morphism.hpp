#ifndef NILPLAB_MORPHISM_HPP
#define NILPLAB_MORPHISM_HPP

#include "nilplab/multiplication.hpp"

namespace nilplab {

struct QuotientResult;

/// A checked algebra homomorphism, stored as its matrix on coordinates
/// (codomain dim x domain dim).  Multiplicativity on all basis pairs is
/// verified at construction; the only unchecked path is the quotient
/// projection, which is multiplicative by construction.
class Homomorphism {
 public:
  static Homomorphism identity(const Algebra& A);

  const Algebra& domain() const { return domain_; }
  const Algebra& codomain() const { return codomain_; }
  const Matrix& matrix() const { return matrix_; }

  Element apply(const Element& e) const;

  bool operator==(const Homomorphism& rhs) const;
  bool operator!=(const Homomorphism& rhs) const { return !(*this == rhs); }

 private:
  friend Homomorphism make_hom(const Algebra&, const Algebra&, const Matrix&);
  friend QuotientResult quotient(const Algebra&, const Subspace&);
  Homomorphism(Algebra domain, Algebra codomain, Matrix matrix)
      : domain_(std::move(domain)),
        codomain_(std::move(codomain)),
        matrix_(std::move(matrix)) {}
  Algebra domain_;
  Algebra codomain_;
  Matrix matrix_;
};

/// Validates h(e_i e_j) = h(e_i) h(e_j) for all basis pairs; throws
/// NotMultiplicativeError with a witness pair otherwise.
Homomorphism make_hom(const Algebra& domain, const Algebra& codomain,
                      const Matrix& matrix);

/// Null space of the matrix, as a subspace of the domain.  The kernel of a
/// homomorphism is always an ideal; asserted.
Subspace kernel(const Homomorphism& h);
/// Column span, as a subspace of the codomain.
Subspace image(const Homomorphism& h);
bool is_surjective(const Homomorphism& h);

/// h2 after h1.
Homomorphism compose(const Homomorphism& h2, const Homomorphism& h1);

/// The operator M(h)(u) on the codomain, characterized by
/// M(h)(u) o h = h o u.  Requires h surjective and u(ker h) contained in
/// ker h (automatic for u in the multiplication algebra).  Computed as
/// h o u o s for the deterministic pivot-based right inverse s of h; the
/// characterizing identity is then verified exactly, which also shows the
/// result does not depend on the choice of s.
LinearOperator induced_mult_hom(const Homomorphism& h,
                                const LinearOperator& u);

/// As above, but first verifies membership of u in the supplied
/// multiplication algebra of the domain.
LinearOperator induced_mult_hom(const Homomorphism& h, const LinearOperator& u,
                                const OperatorAlgebra& domain_mult_algebra);

struct QuotientResult {
  Algebra algebra;
  Homomorphism projection;
};

/// A / I for a verified two-sided ideal I.  The complement basis is the
/// non-pivot coordinate set of I's rref, so the construction is
/// deterministic.
QuotientResult quotient(const Algebra& A, const Subspace& I);

}  // namespace nilplab

#endif
