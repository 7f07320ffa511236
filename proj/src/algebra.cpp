#include "nilplab/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nilplab {

struct Algebra::Data {
  FieldDescriptor field = FieldDescriptor::rationals();
  std::size_t dim = 0;
  std::vector<std::string> labels;
  // table[i * dim + j] = sparse coordinates of e_i e_j, sorted by k
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> table;
};

const FieldDescriptor& Algebra::field() const { return data_->field; }
std::size_t Algebra::dim() const { return data_->dim; }
const std::vector<std::string>& Algebra::labels() const {
  return data_->labels;
}

Element Algebra::zero() const {
  return Element(*this, zero_vector(field(), dim()));
}

Element Algebra::basis_element(std::size_t i) const {
  if (i >= dim()) throw DimensionError("basis index out of range");
  auto coords = zero_vector(field(), dim());
  coords[i] = Scalar::one(field());
  return Element(*this, std::move(coords));
}

Element Algebra::element(std::vector<Scalar> coords) const {
  return Element(*this, std::move(coords));
}

Element Algebra::element_from_ints(const std::vector<long>& coords) const {
  std::vector<Scalar> c;
  c.reserve(coords.size());
  for (long v : coords) c.push_back(Scalar::from_integer(v, field()));
  return Element(*this, std::move(c));
}

const std::vector<std::pair<std::size_t, Scalar>>& Algebra::basis_product(
    std::size_t i, std::size_t j) const {
  return data_->table[i * data_->dim + j];
}

Element Algebra::multiply(const Element& a, const Element& b) const {
  if (!a.parent().same_parent(*this) || !b.parent().same_parent(*this)) {
    throw FieldMismatchError("multiply: elements of a different algebra");
  }
  auto out = zero_vector(field(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar& ai = a.coords()[i];
    if (ai.is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      const Scalar& bj = b.coords()[j];
      if (bj.is_zero()) continue;
      const Scalar aibj = ai * bj;
      for (const auto& [k, c] : basis_product(i, j)) {
        out[k] = out[k] + aibj * c;
      }
    }
  }
  return Element(*this, std::move(out));
}

std::vector<ProductEntry> Algebra::product_entries() const {
  std::vector<ProductEntry> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      for (const auto& [k, c] : basis_product(i, j)) {
        out.push_back({i, j, k, c});
      }
    }
  }
  return out;
}

bool Algebra::same_parent(const Algebra& other) const {
  return data_ == other.data_;
}

bool Algebra::structurally_equal(const Algebra& other) const {
  if (data_ == other.data_) return true;
  if (field() != other.field() || dim() != other.dim()) return false;
  return data_->table == other.data_->table;
}

Algebra make_algebra(const FieldDescriptor& field, std::size_t dim,
                     std::vector<std::string> labels,
                     const std::vector<ProductEntry>& entries) {
  check_dimension_cap(dim, "make_algebra");
  if (labels.empty()) {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  }
  if (labels.size() != dim) {
    throw DimensionError("label count does not match dimension");
  }
  auto data = std::make_shared<Algebra::Data>();
  data->field = field;
  data->dim = dim;
  data->labels = std::move(labels);
  data->table.resize(dim * dim);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (const ProductEntry& e : entries) {
    if (e.i >= dim || e.j >= dim || e.k >= dim) {
      throw DimensionError("structure-constant index out of range");
    }
    if (e.c.field() != field) {
      throw FieldMismatchError("structure constant from the wrong field");
    }
    if (!seen.insert({e.i, e.j, e.k}).second) {
      throw Error("duplicate structure-constant entry (" + std::to_string(e.i) +
                  ", " + std::to_string(e.j) + ", " + std::to_string(e.k) + ")");
    }
    if (e.c.is_zero()) continue;
    data->table[e.i * dim + e.j].emplace_back(e.k, e.c);
  }
  for (auto& cell : data->table) {
    std::sort(cell.begin(), cell.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return Algebra(std::move(data));
}

Element::Element(Algebra parent, std::vector<Scalar> coords)
    : parent_(std::move(parent)), coords_(std::move(coords)) {
  if (coords_.size() != parent_.dim()) {
    throw DimensionError("element coordinate length does not match dimension");
  }
  for (const Scalar& c : coords_) {
    if (c.field() != parent_.field()) {
      throw FieldMismatchError("element coordinate from the wrong field");
    }
  }
}

const Scalar& Element::coord(std::size_t i) const {
  if (i >= coords_.size()) throw DimensionError("coordinate index out of range");
  return coords_[i];
}

bool Element::is_zero() const { return is_zero_vector(coords_); }

static void require_same(const Element& a, const Element& b) {
  if (!a.parent().same_parent(b.parent())) {
    throw FieldMismatchError("elements of different algebras");
  }
}

Element Element::operator+(const Element& rhs) const {
  require_same(*this, rhs);
  return Element(parent_, add_vectors(coords_, rhs.coords_));
}

Element Element::operator-(const Element& rhs) const {
  require_same(*this, rhs);
  return *this + (-rhs);
}

Element Element::operator*(const Element& rhs) const {
  return parent_.multiply(*this, rhs);
}

Element Element::scaled(const Scalar& s) const {
  return Element(parent_, scale_vector(s, coords_));
}

Element Element::operator-() const {
  return scaled(-Scalar::one(parent_.field()));
}

bool Element::operator==(const Element& rhs) const {
  return parent_.same_parent(rhs.parent_) && coords_ == rhs.coords_;
}

std::string Element::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    if (!first) os << " + ";
    if (!coords_[i].is_one()) os << coords_[i].str() << "*";
    os << parent_.labels()[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Subspace Subspace::zero(const Algebra& parent) {
  return Subspace(parent, Matrix(parent.field(), 0, parent.dim()));
}

Subspace Subspace::full(const Algebra& parent) {
  return Subspace(parent, Matrix::identity(parent.field(), parent.dim()));
}

Subspace Subspace::span(const Algebra& parent,
                        const std::vector<std::vector<Scalar>>& vectors) {
  RowSpace rows(parent.field(), parent.dim());
  for (const auto& v : vectors) {
    rows.insert(v);
    if (rows.rank() == parent.dim()) break;  // already the full space
  }
  return Subspace(parent, rows.to_matrix());
}

Subspace Subspace::span_elements(const Algebra& parent,
                                 const std::vector<Element>& elements) {
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(elements.size());
  for (const Element& e : elements) {
    if (!e.parent().same_parent(parent)) {
      throw FieldMismatchError("span element from a different algebra");
    }
    rows.push_back(e.coords());
  }
  return span(parent, rows);
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  if (v.size() != parent_.dim()) {
    throw DimensionError("containment test vector length mismatch");
  }
  std::vector<Scalar> r = v;
  // reduce against rref rows; rows are sorted by pivot
  for (std::size_t row = 0; row < basis_.rows(); ++row) {
    std::size_t pivot = 0;
    while (pivot < basis_.cols() && basis_.at(row, pivot).is_zero()) ++pivot;
    if (pivot == basis_.cols()) continue;
    const Scalar f = r[pivot];
    if (f.is_zero()) continue;
    for (std::size_t c = pivot; c < basis_.cols(); ++c) {
      r[c] = r[c] - f * basis_.at(row, c);
    }
  }
  return is_zero_vector(r);
}

bool Subspace::contains(const Element& e) const {
  if (!e.parent().same_parent(parent_)) {
    throw FieldMismatchError("containment test across algebras");
  }
  return contains(e.coords());
}

bool Subspace::contains(const Subspace& other) const {
  if (!other.parent_.same_parent(parent_)) {
    throw FieldMismatchError("containment test across algebras");
  }
  for (std::size_t r = 0; r < other.basis_.rows(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (!other.parent_.same_parent(parent_)) {
    throw FieldMismatchError("sum of subspaces of different algebras");
  }
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t r = 0; r < basis_.rows(); ++r) rows.push_back(basis_.row(r));
  for (std::size_t r = 0; r < other.basis_.rows(); ++r) {
    rows.push_back(other.basis_.row(r));
  }
  return span(parent_, rows);
}

std::vector<Element> Subspace::basis_elements() const {
  std::vector<Element> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) {
    out.emplace_back(parent_, basis_.row(r));
  }
  return out;
}

bool Subspace::operator==(const Subspace& rhs) const {
  return parent_.same_parent(rhs.parent_) && basis_ == rhs.basis_;
}

Subspace subspace_product(const Subspace& U, const Subspace& V) {
  if (!U.parent().same_parent(V.parent())) {
    throw FieldMismatchError("subspace product across algebras");
  }
  const Algebra& A = U.parent();
  const auto ub = U.basis_elements();
  const auto vb = V.basis_elements();
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(ub.size() * vb.size());
  for (const Element& u : ub) {
    for (const Element& v : vb) {
      const Element p = A.multiply(u, v);
      if (!p.is_zero()) rows.push_back(p.coords());
    }
  }
  return Subspace::span(A, rows);
}

const Subspace& SeriesReport::term(std::size_t native_index) const {
  const std::size_t base = index_base();
  if (native_index < base || native_index - base >= terms.size()) {
    throw DimensionError("series term index out of range");
  }
  return terms[native_index - base];
}

namespace {

Subspace two_sided_step(const Subspace& full, const Subspace& V) {
  return subspace_product(full, V).sum(subspace_product(V, full));
}

void check_descending(const SeriesReport& rep) {
  for (std::size_t i = 1; i < rep.terms.size(); ++i) {
    if (rep.terms[i].dim() > rep.terms[i - 1].dim()) {
      throw InvariantViolation("descending series grew in dimension");
    }
  }
}

}  // namespace

SeriesReport weak_series(const Algebra& A) {
  SeriesReport rep;
  rep.kind = SeriesKind::weak;
  const Subspace full = Subspace::full(A);
  rep.terms.push_back(full);
  while (true) {
    const Subspace& last = rep.terms.back();
    if (last.is_zero()) {
      rep.vanishing_index = rep.terms.size() - 1 + 1;  // 1-based
      break;
    }
    Subspace next = two_sided_step(full, last);
    if (next == last) {
      rep.stabilized = true;
      rep.terms.push_back(std::move(next));
      break;
    }
    rep.terms.push_back(std::move(next));
  }
  check_descending(rep);
  return rep;
}

SeriesReport strong_series(const Algebra& A) {
  SeriesReport rep;
  rep.kind = SeriesKind::strong;
  const Subspace full = Subspace::full(A);
  rep.terms.push_back(full);
  while (true) {
    const Subspace& last = rep.terms.back();
    if (last.is_zero()) {
      rep.vanishing_index = rep.terms.size() - 1 + 1;
      break;
    }
    // Plateau certification.  If the terms with 1-based indices m..N all
    // equal V and N >= 2m, then the next term is exactly A V + V A
    // (in each summand A_(j) A_(N+1-j), the factor of larger index lands
    // inside the plateau).  If moreover A V + V A = V the series is
    // constant from m on, so we can stop.
    const std::size_t N = rep.terms.size();  // 1-based index of `last`
    std::size_t m = N;
    while (m > 1 && rep.terms[m - 2] == last) --m;
    if (N >= 2 * m) {
      Subspace step = two_sided_step(full, last);
      if (step == last) {
        rep.stabilized = true;
        break;
      }
    }
    // A_(N+1) = sum over 0<j<N+1 of A_(j) A_(N+1-j)
    Subspace next = Subspace::zero(A);
    for (std::size_t j = 1; j <= N; ++j) {
      next = next.sum(subspace_product(rep.terms[j - 1], rep.terms[N - j]));
    }
    rep.terms.push_back(std::move(next));
  }
  check_descending(rep);
  return rep;
}

SeriesReport derived_series(const Algebra& A) {
  SeriesReport rep;
  rep.kind = SeriesKind::derived;
  rep.terms.push_back(Subspace::full(A));
  while (true) {
    const Subspace& last = rep.terms.back();
    if (last.is_zero()) {
      rep.vanishing_index = rep.terms.size() - 1;  // 0-based
      break;
    }
    Subspace next = subspace_product(last, last);
    if (next == last) {
      rep.stabilized = true;
      rep.terms.push_back(std::move(next));
      break;
    }
    rep.terms.push_back(std::move(next));
  }
  check_descending(rep);
  return rep;
}

bool is_nilpotent(const Algebra& A) {
  return weak_series(A).vanishing_index.has_value();
}

bool is_solvable(const Algebra& A) {
  return derived_series(A).vanishing_index.has_value();
}

std::optional<std::size_t> derived_length(const Algebra& A) {
  return derived_series(A).vanishing_index;
}

StructureChecks structure_checks(const Algebra& A) {
  StructureChecks out;
  const std::size_t n = A.dim();
  out.associative = true;
  out.anticommutative = true;
  out.jacobi = true;
  std::vector<Element> basis;
  basis.reserve(n);
  for (std::size_t i = 0; i < n; ++i) basis.push_back(A.basis_element(i));
  for (std::size_t i = 0; i < n && out.anticommutative; ++i) {
    if (!(basis[i] * basis[i]).is_zero()) out.anticommutative = false;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (basis[i] * basis[j] != -(basis[j] * basis[i])) {
        out.anticommutative = false;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < n && (out.associative || out.jacobi); ++i) {
    for (std::size_t j = 0; j < n && (out.associative || out.jacobi); ++j) {
      const Element ij = basis[i] * basis[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (out.associative && ij * basis[k] != basis[i] * (basis[j] * basis[k])) {
          out.associative = false;
        }
        if (out.jacobi) {
          const Element cyc = ij * basis[k] + (basis[j] * basis[k]) * basis[i] +
                              (basis[k] * basis[i]) * basis[j];
          if (!cyc.is_zero()) out.jacobi = false;
        }
        if (!out.associative && !out.jacobi) break;
      }
    }
  }
  out.lie = out.anticommutative && out.jacobi;
  return out;
}

Algebra twist(const Algebra& A, const Scalar& alpha, const Scalar& beta) {
  if (alpha.field() != A.field() || beta.field() != A.field()) {
    throw FieldMismatchError("twist coefficients from the wrong field");
  }
  const std::size_t n = A.dim();
  std::vector<ProductEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto coords = zero_vector(A.field(), n);
      for (const auto& [k, c] : A.basis_product(i, j)) {
        coords[k] = coords[k] + alpha * c;
      }
      for (const auto& [k, c] : A.basis_product(j, i)) {
        coords[k] = coords[k] + beta * c;
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (!coords[k].is_zero()) entries.push_back({i, j, k, coords[k]});
      }
    }
  }
  auto labels = A.labels();
  return make_algebra(A.field(), n, std::move(labels), entries);
}

IdealClosure ideal_closure(const Algebra& A,
                           const std::vector<Element>& generators) {
  const Subspace full = Subspace::full(A);
  std::vector<Subspace> filtration;
  filtration.push_back(Subspace::span_elements(A, generators));
  while (true) {
    const Subspace& V = filtration.back();
    Subspace next = V.sum(two_sided_step(full, V));
    if (next == V) break;
    filtration.push_back(std::move(next));
  }
  IdealClosure out{filtration.back(), {}, filtration.size() - 1};
  for (std::size_t r = 0; r < out.subspace.dim(); ++r) {
    const auto row = out.subspace.basis().row(r);
    std::size_t depth = 0;
    while (!filtration[depth].contains(row)) ++depth;
    out.depths.push_back(depth);
  }
  return out;
}

bool is_ideal(const Algebra& A, const Subspace& S) {
  if (!S.parent().same_parent(A)) {
    throw FieldMismatchError("ideal test across algebras");
  }
  const Subspace full = Subspace::full(A);
  return S.contains(two_sided_step(full, S));
}

Algebra subalgebra_on(const Algebra& A, const Subspace& S) {
  if (!S.parent().same_parent(A)) {
    throw FieldMismatchError("subalgebra test across algebras");
  }
  const auto rows = S.basis_elements();
  const std::size_t n = rows.size();
  std::vector<ProductEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Element p = rows[i] * rows[j];
      if (p.is_zero()) continue;
      const auto sol = solve(S.basis().transposed(), p.coords());
      if (!sol) {
        throw Error("subspace is not closed under the product");
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (!(*sol)[k].is_zero()) entries.push_back({i, j, k, (*sol)[k]});
      }
    }
  }
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t pivot = 0;
    while (pivot < A.dim() && S.basis().at(r, pivot).is_zero()) ++pivot;
    labels.push_back(pivot < A.dim() ? A.labels()[pivot]
                                     : "s" + std::to_string(r));
  }
  return make_algebra(A.field(), n, std::move(labels), entries);
}

}  // namespace nilplab
