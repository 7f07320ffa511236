#include "nilplab/morphism.hpp"

namespace nilplab {

Homomorphism Homomorphism::identity(const Algebra& A) {
  return Homomorphism(A, A, Matrix::identity(A.field(), A.dim()));
}

Element Homomorphism::apply(const Element& e) const {
  if (!e.parent().same_parent(domain_)) {
    throw FieldMismatchError("homomorphism applied outside its domain");
  }
  return Element(codomain_, matrix_.apply(e.coords()));
}

bool Homomorphism::operator==(const Homomorphism& rhs) const {
  return domain_.same_parent(rhs.domain_) &&
         codomain_.same_parent(rhs.codomain_) && matrix_ == rhs.matrix_;
}

Homomorphism make_hom(const Algebra& domain, const Algebra& codomain,
                      const Matrix& matrix) {
  if (domain.field() != codomain.field()) {
    throw FieldMismatchError("homomorphism between algebras over different fields");
  }
  if (matrix.rows() != codomain.dim() || matrix.cols() != domain.dim()) {
    throw DimensionError("homomorphism matrix shape mismatch");
  }
  Homomorphism h(domain, codomain, matrix);
  std::vector<Element> images;
  images.reserve(domain.dim());
  for (std::size_t i = 0; i < domain.dim(); ++i) {
    images.push_back(h.apply(domain.basis_element(i)));
  }
  for (std::size_t i = 0; i < domain.dim(); ++i) {
    for (std::size_t j = 0; j < domain.dim(); ++j) {
      const Element lhs =
          h.apply(domain.multiply(domain.basis_element(i), domain.basis_element(j)));
      const Element rhs = codomain.multiply(images[i], images[j]);
      if (lhs != rhs) {
        throw NotMultiplicativeError(
            "not multiplicative on basis pair (" + std::to_string(i) + ", " +
                std::to_string(j) + ")",
            i, j);
      }
    }
  }
  return h;
}

Subspace kernel(const Homomorphism& h) {
  const auto basis = null_space_basis(h.matrix());
  Subspace k = Subspace::span(h.domain(), basis);
  if (!is_ideal(h.domain(), k)) {
    throw InvariantViolation("kernel of a homomorphism is not an ideal");
  }
  return k;
}

Subspace image(const Homomorphism& h) {
  std::vector<std::vector<Scalar>> cols;
  for (std::size_t c = 0; c < h.matrix().cols(); ++c) {
    cols.push_back(h.matrix().col(c));
  }
  return Subspace::span(h.codomain(), cols);
}

bool is_surjective(const Homomorphism& h) {
  return image(h).dim() == h.codomain().dim();
}

Homomorphism compose(const Homomorphism& h2, const Homomorphism& h1) {
  if (!h1.codomain().same_parent(h2.domain())) {
    throw DimensionError("compose: codomain of the inner map is not the domain "
                         "of the outer map");
  }
  return make_hom(h1.domain(), h2.codomain(), h2.matrix() * h1.matrix());
}

namespace {

/// Deterministic right inverse of a surjective h: each codomain basis
/// vector is solved for with free variables zeroed.
Matrix right_inverse_matrix(const Homomorphism& h) {
  const std::size_t n = h.codomain().dim();
  Matrix s(h.domain().field(), h.domain().dim(), n);
  for (std::size_t j = 0; j < n; ++j) {
    auto target = zero_vector(h.codomain().field(), n);
    target[j] = Scalar::one(h.codomain().field());
    const auto x = solve(h.matrix(), target);
    if (!x) {
      throw Error("right inverse requested for a non-surjective map");
    }
    for (std::size_t i = 0; i < x->size(); ++i) s.set(i, j, (*x)[i]);
  }
  return s;
}

LinearOperator induced_impl(const Homomorphism& h, const LinearOperator& u,
                            bool membership_verified) {
  if (!u.parent().same_parent(h.domain())) {
    throw FieldMismatchError("operator does not act on the domain");
  }
  if (!is_surjective(h)) {
    throw Error("induced operator requires a surjective homomorphism");
  }
  const Subspace ker = kernel(h);
  for (const Element& k : ker.basis_elements()) {
    if (!ker.contains(u.apply(k))) {
      if (membership_verified) {
        throw InvariantViolation(
            "operator in the multiplication algebra does not preserve the "
            "kernel");
      }
      throw Error("operator does not carry ker(h) into itself");
    }
  }
  const Matrix s = right_inverse_matrix(h);
  LinearOperator v(h.codomain(), h.matrix() * u.matrix() * s);
  if (v.matrix() * h.matrix() != h.matrix() * u.matrix()) {
    throw InvariantViolation("induced operator failed v o h = h o u");
  }
  return v;
}

}  // namespace

LinearOperator induced_mult_hom(const Homomorphism& h,
                                const LinearOperator& u) {
  return induced_impl(h, u, false);
}

LinearOperator induced_mult_hom(const Homomorphism& h, const LinearOperator& u,
                                const OperatorAlgebra& domain_mult_algebra) {
  if (!domain_mult_algebra.parent().same_parent(h.domain())) {
    throw FieldMismatchError("multiplication algebra of a different algebra");
  }
  if (!domain_mult_algebra.contains(u)) {
    throw Error("operator is not in the multiplication algebra of the domain");
  }
  return induced_impl(h, u, true);
}

QuotientResult quotient(const Algebra& A, const Subspace& I) {
  if (!I.parent().same_parent(A)) {
    throw FieldMismatchError("quotient by a subspace of a different algebra");
  }
  if (!is_ideal(A, I)) {
    throw NotAnIdealError("quotient requires a two-sided ideal");
  }
  const std::size_t n = A.dim();
  const Matrix& ib = I.basis();
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < ib.rows(); ++r) {
    std::size_t p = 0;
    while (p < n && ib.at(r, p).is_zero()) ++p;
    pivots.push_back(p);
  }
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) complement.push_back(c);
  }
  const std::size_t q = complement.size();

  // projection: reduce modulo I's rref rows, then read non-pivot coordinates
  auto project = [&](const std::vector<Scalar>& v) {
    std::vector<Scalar> r = v;
    for (std::size_t row = 0; row < ib.rows(); ++row) {
      const Scalar f = r[pivots[row]];
      if (f.is_zero()) continue;
      for (std::size_t c = pivots[row]; c < n; ++c) {
        r[c] = r[c] - f * ib.at(row, c);
      }
    }
    std::vector<Scalar> out;
    out.reserve(q);
    for (std::size_t c : complement) out.push_back(r[c]);
    return out;
  };

  std::vector<std::string> labels;
  for (std::size_t c : complement) labels.push_back(A.labels()[c]);

  std::vector<ProductEntry> entries;
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      const Element p = A.multiply(A.basis_element(complement[i]),
                                   A.basis_element(complement[j]));
      const auto coords = project(p.coords());
      for (std::size_t k = 0; k < q; ++k) {
        if (!coords[k].is_zero()) entries.push_back({i, j, k, coords[k]});
      }
    }
  }
  Algebra B = make_algebra(A.field(), q, std::move(labels), entries);

  Matrix proj(A.field(), q, n);
  for (std::size_t c = 0; c < n; ++c) {
    auto e = zero_vector(A.field(), n);
    e[c] = Scalar::one(A.field());
    const auto coords = project(e);
    for (std::size_t r = 0; r < q; ++r) proj.set(r, c, coords[r]);
  }
  // multiplicative by construction: the projection identifies each coset
  // with its reduced representative
  return QuotientResult{B, Homomorphism(A, B, std::move(proj))};
}

}  // namespace nilplab
