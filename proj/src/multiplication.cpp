#include "nilplab/multiplication.hpp"

#include <algorithm>

namespace nilplab {

namespace {

std::vector<Scalar> flatten(const Matrix& m) {
  std::vector<Scalar> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c));
  }
  return out;
}

Matrix unflatten(const FieldDescriptor& f, std::size_t n,
                 const std::vector<Scalar>& v) {
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, v[r * n + c]);
  }
  return m;
}

void require_same_parent(const LinearOperator& a, const LinearOperator& b) {
  if (!a.parent().same_parent(b.parent())) {
    throw FieldMismatchError("operators on different algebras");
  }
}

}  // namespace

LinearOperator::LinearOperator(Algebra parent, Matrix matrix)
    : parent_(std::move(parent)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != parent_.dim() || matrix_.cols() != parent_.dim()) {
    throw DimensionError("operator matrix shape does not match the algebra");
  }
  if (matrix_.field() != parent_.field()) {
    throw FieldMismatchError("operator matrix over the wrong field");
  }
}

LinearOperator LinearOperator::zero(const Algebra& parent) {
  return LinearOperator(parent, Matrix(parent.field(), parent.dim(), parent.dim()));
}

LinearOperator LinearOperator::identity(const Algebra& parent) {
  return LinearOperator(parent, Matrix::identity(parent.field(), parent.dim()));
}

Element LinearOperator::apply(const Element& e) const {
  if (!e.parent().same_parent(parent_)) {
    throw FieldMismatchError("operator applied to a foreign element");
  }
  return Element(parent_, matrix_.apply(e.coords()));
}

LinearOperator LinearOperator::operator+(const LinearOperator& rhs) const {
  require_same_parent(*this, rhs);
  return LinearOperator(parent_, matrix_ + rhs.matrix_);
}

LinearOperator LinearOperator::operator-(const LinearOperator& rhs) const {
  require_same_parent(*this, rhs);
  return LinearOperator(parent_, matrix_ - rhs.matrix_);
}

LinearOperator LinearOperator::operator*(const LinearOperator& rhs) const {
  require_same_parent(*this, rhs);
  return LinearOperator(parent_, matrix_ * rhs.matrix_);
}

LinearOperator LinearOperator::scaled(const Scalar& s) const {
  return LinearOperator(parent_, matrix_.scaled(s));
}

LinearOperator LinearOperator::operator-() const {
  return scaled(-Scalar::one(parent_.field()));
}

LinearOperator LinearOperator::power(std::size_t n) const {
  LinearOperator acc = identity(parent_);
  for (std::size_t i = 0; i < n; ++i) acc = acc * *this;
  return acc;
}

bool LinearOperator::is_nilpotent() const {
  // a nilpotent dim x dim matrix has index <= dim, so squaring
  // past dim decides
  Matrix p = matrix_;
  std::size_t e = 1;
  while (e < parent_.dim() && !p.is_zero()) {
    p = p * p;
    e *= 2;
  }
  return p.is_zero() || parent_.dim() == 0;
}

bool LinearOperator::operator==(const LinearOperator& rhs) const {
  return parent_.same_parent(rhs.parent_) && matrix_ == rhs.matrix_;
}

LinearOperator left_op(const Algebra& A, const Element& x) {
  if (!x.parent().same_parent(A)) {
    throw FieldMismatchError("left_op element from a different algebra");
  }
  Matrix m(A.field(), A.dim(), A.dim());
  for (std::size_t j = 0; j < A.dim(); ++j) {
    const Element col = A.multiply(x, A.basis_element(j));
    for (std::size_t i = 0; i < A.dim(); ++i) m.set(i, j, col.coords()[i]);
  }
  return LinearOperator(A, std::move(m));
}

LinearOperator right_op(const Algebra& A, const Element& x) {
  if (!x.parent().same_parent(A)) {
    throw FieldMismatchError("right_op element from a different algebra");
  }
  Matrix m(A.field(), A.dim(), A.dim());
  for (std::size_t j = 0; j < A.dim(); ++j) {
    const Element col = A.multiply(A.basis_element(j), x);
    for (std::size_t i = 0; i < A.dim(); ++i) m.set(i, j, col.coords()[i]);
  }
  return LinearOperator(A, std::move(m));
}

LinearOperator associator_op(const Algebra& A, const Element& x,
                             const Element& z) {
  if (!x.parent().same_parent(A) || !z.parent().same_parent(A)) {
    throw FieldMismatchError("associator_op element from a different algebra");
  }
  Matrix m(A.field(), A.dim(), A.dim());
  for (std::size_t j = 0; j < A.dim(); ++j) {
    const Element y = A.basis_element(j);
    const Element col = x * (y * z) - (x * y) * z;
    for (std::size_t i = 0; i < A.dim(); ++i) m.set(i, j, col.coords()[i]);
  }
  return LinearOperator(A, std::move(m));
}

OperatorAlgebra OperatorAlgebra::generate(
    const Algebra& parent, std::vector<LinearOperator> generators) {
  const std::size_t n = parent.dim();
  for (const LinearOperator& g : generators) {
    if (!g.parent().same_parent(parent)) {
      throw FieldMismatchError("generator acting on a different algebra");
    }
  }
  // Close the span under left-composition by generators.  Every product of
  // generators is a left-composition chain, and composing with a reduced
  // row is a linear combination of compositions with the inserted vectors,
  // so each inserted vector needs to be processed only once.
  RowSpace span(parent.field(), n * n);
  std::vector<Matrix> pending;
  auto offer = [&](const Matrix& m) {
    if (span.insert(flatten(m))) pending.push_back(m);
  };
  for (const LinearOperator& g : generators) offer(g.matrix());
  for (std::size_t next = 0; next < pending.size(); ++next) {
    const Matrix current = pending[next];
    for (const LinearOperator& g : generators) {
      if (g.is_zero()) continue;
      offer(g.matrix() * current);
    }
  }
  std::vector<LinearOperator> basis;
  const Matrix rows = span.to_matrix();
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    basis.emplace_back(parent, unflatten(parent.field(), n, rows.row(r)));
  }
  return OperatorAlgebra(parent, std::move(generators), std::move(basis));
}

bool OperatorAlgebra::contains(const LinearOperator& u) const {
  if (!u.parent().same_parent(parent_)) {
    throw FieldMismatchError("membership test for a foreign operator");
  }
  const std::size_t n = parent_.dim();
  RowSpan span(parent_.field(), n * n);
  for (const LinearOperator& b : basis_) span.insert(flatten(b.matrix()));
  return span.contains(flatten(u.matrix()));
}

bool OperatorAlgebra::spans_same(const OperatorAlgebra& other) const {
  if (!other.parent_.same_parent(parent_)) return false;
  if (dim() != other.dim()) return false;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i] != other.basis_[i]) return false;  // rref is canonical
  }
  return true;
}

bool OperatorAlgebra::verify_closure() const {
  for (const LinearOperator& a : basis_) {
    for (const LinearOperator& b : basis_) {
      if (!contains(a * b)) return false;
    }
  }
  return true;
}

OperatorAlgebra mult_algebra(const Algebra& A) {
  std::vector<LinearOperator> gens;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    gens.push_back(left_op(A, A.basis_element(i)));
    gens.push_back(right_op(A, A.basis_element(i)));
  }
  return OperatorAlgebra::generate(A, std::move(gens));
}

OperatorAlgebra mult_algebra_left(const Algebra& A) {
  std::vector<LinearOperator> gens;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    gens.push_back(left_op(A, A.basis_element(i)));
  }
  return OperatorAlgebra::generate(A, std::move(gens));
}

OperatorAlgebra mult_algebra_right(const Algebra& A) {
  std::vector<LinearOperator> gens;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    gens.push_back(right_op(A, A.basis_element(i)));
  }
  return OperatorAlgebra::generate(A, std::move(gens));
}

OperatorAlgebra mult_algebra_assoc(const Algebra& A) {
  std::vector<LinearOperator> gens;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    for (std::size_t j = 0; j < A.dim(); ++j) {
      gens.push_back(associator_op(A, A.basis_element(i), A.basis_element(j)));
    }
  }
  return OperatorAlgebra::generate(A, std::move(gens));
}

std::optional<std::size_t> operator_algebra_nilpotence(
    const OperatorAlgebra& M) {
  const Algebra& A = M.parent();
  const std::size_t n = A.dim();
  // power filtration M^1 = M, M^{k+1} = span{g o m}; products of >= k+1
  // generators factor as generator times a product of >= k of them
  RowSpan current(A.field(), n * n);
  for (const LinearOperator& b : M.basis_operators()) {
    current.insert(flatten(b.matrix()));
  }
  std::size_t index = 1;
  while (true) {
    if (current.rank() == 0) return index;
    RowSpan next(A.field(), n * n);
    for (const LinearOperator& g : M.generators()) {
      if (g.is_zero()) continue;
      for (const auto& row : current.rows()) {
        next.insert(flatten(g.matrix() * unflatten(A.field(), n, row)));
      }
    }
    if (next.same_span(current)) return std::nullopt;  // idempotent chain
    current = std::move(next);
    ++index;
  }
}

namespace {

// N2 <= 2^{N1-2} + 1 without overflowing: indices here are bounded by the
// number of computed series terms, far below 2^64
bool n2_bound_holds(std::size_t n1, std::size_t n2) {
  if (n1 < 2) return n2 == n1;
  if (n1 - 2 >= 63) return true;
  return n2 <= (std::size_t{1} << (n1 - 2)) + 1;
}

}  // namespace

NilpotenceReport nilpotence_report(const Algebra& A) {
  NilpotenceReport rep;
  rep.N1 = weak_series(A).vanishing_index;
  rep.N2 = strong_series(A).vanishing_index;
  rep.N3 = operator_algebra_nilpotence(mult_algebra(A));
  const int present =
      int(rep.N1.has_value()) + int(rep.N2.has_value()) + int(rep.N3.has_value());
  if (present != 0 && present != 3) {
    throw InvariantViolation(
        "nilpotence criteria disagree: the three conditions must hold or "
        "fail together");
  }
  rep.nilpotent = present == 3;
  if (rep.nilpotent) {
    const std::size_t n1 = *rep.N1, n2 = *rep.N2, n3 = *rep.N3;
    if (n3 != std::max<std::size_t>(1, n1 - 1) || n1 > n2 ||
        !n2_bound_holds(n1, n2)) {
      throw InvariantViolation("nilpotence indices violate N3 = max(1, N1-1)"
                               " or N1 <= N2 <= 2^{N1-2}+1");
    }
  }
  return rep;
}

LinearOperator quasi_mult(const LinearOperator& u, const LinearOperator& v) {
  require_same_parent(u, v);
  return u + v + u * v;
}

LinearOperator quasiinverse(const LinearOperator& u) {
  const Algebra& A = u.parent();
  const Matrix one = Matrix::identity(A.field(), A.dim());
  const auto inv = inverse(one + u.matrix());
  if (!inv) {
    throw NotInvertibleError("not quasiinvertible: det(1 + u) = " +
                             determinant(one + u.matrix()).str());
  }
  LinearOperator v(A, *inv - one);
  if (!quasi_mult(u, v).is_zero() || !quasi_mult(v, u).is_zero()) {
    throw InvariantViolation("quasiinverse postcondition u*v = v*u = 0 failed");
  }
  return v;
}

Element geometric_series_apply(const LinearOperator& u, const Element& target) {
  if (!target.parent().same_parent(u.parent())) {
    throw FieldMismatchError("series target from a different algebra");
  }
  if (!u.is_nilpotent()) {
    throw NotNilpotentError("geometric series requires a nilpotent operator");
  }
  Element y = target;
  Element term = target;
  for (std::size_t k = 0; k < u.parent().dim() && !term.is_zero(); ++k) {
    term = u.apply(term);
    y = y + term;
  }
  if (y - u.apply(y) != target) {
    throw InvariantViolation("(1 - u)(y) = target failed after summation");
  }
  return y;
}

StableImage stable_image(const Algebra& A) {
  std::vector<LinearOperator> gens;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    gens.push_back(left_op(A, A.basis_element(i)));
    gens.push_back(right_op(A, A.basis_element(i)));
  }
  Subspace current = Subspace::full(A);
  std::size_t step = 0;
  while (true) {
    std::vector<std::vector<Scalar>> rows;
    for (const LinearOperator& g : gens) {
      if (g.is_zero()) continue;
      for (const Element& v : current.basis_elements()) {
        Element img = g.apply(v);
        if (!img.is_zero()) rows.push_back(img.coords());
      }
    }
    Subspace next = Subspace::span(A, rows);
    if (next == current) return {current, step};
    current = std::move(next);
    ++step;
  }
}

}  // namespace nilplab
