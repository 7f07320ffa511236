#include "nilplab/matrix.hpp"

#include <sstream>

namespace nilplab {

Matrix::Matrix(FieldDescriptor field, std::size_t rows, std::size_t cols)
    : field_(field),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldDescriptor& field, std::size_t n) {
  Matrix m(field, n, n);
  const Scalar one = Scalar::one(field);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, one);
  return m;
}

Matrix Matrix::from_rows(const FieldDescriptor& field,
                         const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) {
      throw DimensionError("ragged row list in Matrix::from_rows");
    }
    for (std::size_t c = 0; c < nc; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
  return entries_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
  if (v.field() != field_) throw FieldMismatchError("entry field mismatch");
  entries_[r * cols_ + c] = v;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  std::vector<Scalar> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
  return out;
}

std::vector<Scalar> Matrix::col(std::size_t c) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw DimensionError("matrix addition shape mismatch");
  }
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = entries_[i] + rhs.entries_[i];
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw DimensionError("matrix subtraction shape mismatch");
  }
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = entries_[i] - rhs.entries_[i];
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
  if (field_ != rhs.field_) throw FieldMismatchError("matrix product field mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = entries_[r * cols_ + k];
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        const Scalar& b = rhs.entries_[k * rhs.cols_ + c];
        if (b.is_zero()) continue;
        out.entries_[r * rhs.cols_ + c] =
            out.entries_[r * rhs.cols_ + c] + a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = entries_[i] * s;
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out.entries_[c * rows_ + r] = entries_[r * cols_ + c];
    }
  }
  return out;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw DimensionError("matrix apply shape mismatch");
  std::vector<Scalar> out = zero_vector(field_, rows_);
  // column-major so sparse inputs skip whole columns
  for (std::size_t c = 0; c < cols_; ++c) {
    const Scalar& vc = v[c];
    if (vc.is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = entries_[r * cols_ + c];
      if (a.is_zero()) continue;
      out[r] = out[r] + a * vc;
    }
  }
  return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
  if (field_ != rhs.field_ || rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    return false;
  }
  return entries_ == rhs.entries_;
}

bool Matrix::is_zero() const {
  for (const Scalar& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : " ") << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << at(r, c).str();
    }
    os << "]" << (r + 1 == rows_ ? "]" : "\n");
  }
  if (rows_ == 0) os << "[]";
  return os.str();
}

RrefResult rref(const Matrix& m) {
  RrefResult res{m, 0, {}};
  Matrix& a = res.reduced;
  const std::size_t nr = a.rows(), nc = a.cols();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < nc && pivot_row < nr; ++col) {
    std::size_t sel = nr;
    for (std::size_t r = pivot_row; r < nr; ++r) {
      if (!a.at(r, col).is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel == nr) continue;
    if (sel != pivot_row) {
      for (std::size_t c = 0; c < nc; ++c) {
        Scalar tmp = a.at(sel, c);
        a.set(sel, c, a.at(pivot_row, c));
        a.set(pivot_row, c, tmp);
      }
    }
    const Scalar inv = a.at(pivot_row, col).inverse();
    for (std::size_t c = col; c < nc; ++c) {
      a.set(pivot_row, c, a.at(pivot_row, c) * inv);
    }
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == pivot_row) continue;
      const Scalar factor = a.at(r, col);
      if (factor.is_zero()) continue;
      for (std::size_t c = col; c < nc; ++c) {
        a.set(r, c, a.at(r, c) - factor * a.at(pivot_row, c));
      }
    }
    res.pivot_columns.push_back(col);
    ++pivot_row;
  }
  res.rank = pivot_row;
  return res;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m,
                                         const std::vector<Scalar>& target) {
  if (target.size() != m.rows()) {
    throw DimensionError("solve: target length does not match row count");
  }
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.set(r, c, m.at(r, c));
    aug.set(r, m.cols(), target[r]);
  }
  const RrefResult rr = rref(aug);
  std::vector<Scalar> x = zero_vector(m.field(), m.cols());
  for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i) {
    const std::size_t pc = rr.pivot_columns[i];
    if (pc == m.cols()) return std::nullopt;  // pivot in augmented column
    x[pc] = rr.reduced.at(i, m.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  const Scalar one = Scalar::one(m.field());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m.at(r, c));
    aug.set(r, n + r, one);
  }
  const RrefResult rr = rref(aug);
  if (rr.rank < n) return std::nullopt;
  if (n > 0 && rr.pivot_columns.back() >= n) return std::nullopt;
  Matrix out(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out.set(r, c, rr.reduced.at(r, n + c));
  }
  return out;
}

std::vector<std::vector<Scalar>> null_space_basis(const Matrix& m) {
  const RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t pc : rr.pivot_columns) is_pivot[pc] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v = zero_vector(m.field(), m.cols());
    v[free] = Scalar::one(m.field());
    for (std::size_t r = 0; r < rr.pivot_columns.size(); ++r) {
      v[rr.pivot_columns[r]] = -rr.reduced.at(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Scalar det = Scalar::one(m.field());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = n;
    for (std::size_t r = col; r < n; ++r) {
      if (!a.at(r, col).is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel == n) return Scalar::zero(m.field());
    if (sel != col) {
      for (std::size_t c = 0; c < n; ++c) {
        Scalar tmp = a.at(sel, c);
        a.set(sel, c, a.at(col, c));
        a.set(col, c, tmp);
      }
      det = -det;
    }
    det = det * a.at(col, col);
    const Scalar inv = a.at(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      const Scalar factor = a.at(r, col) * inv;
      if (factor.is_zero()) continue;
      for (std::size_t c = col; c < n; ++c) {
        a.set(r, c, a.at(r, c) - factor * a.at(col, c));
      }
    }
  }
  return det;
}

RowSpace::RowSpace(FieldDescriptor field, std::size_t cols)
    : field_(field), cols_(cols) {}

std::vector<Scalar> RowSpace::reduce(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw DimensionError("row space length mismatch");
  std::vector<Scalar> r = v;
  for (const SparseRow& row : rows_) {
    const Scalar f = r[row.front().first];
    if (f.is_zero()) continue;
    for (const auto& [c, val] : row) r[c] = r[c] - f * val;
  }
  return r;
}

bool RowSpace::insert(const std::vector<Scalar>& v) {
  std::vector<Scalar> r = reduce(v);
  std::size_t pivot = 0;
  while (pivot < cols_ && r[pivot].is_zero()) ++pivot;
  if (pivot == cols_) return false;
  const Scalar inv = r[pivot].inverse();
  SparseRow fresh;
  for (std::size_t c = pivot; c < cols_; ++c) {
    if (!r[c].is_zero()) fresh.emplace_back(c, r[c] * inv);
  }
  // eliminate the new pivot from the existing rows
  for (SparseRow& row : rows_) {
    Scalar f = Scalar::zero(field_);
    for (const auto& [c, val] : row) {
      if (c == pivot) {
        f = val;
        break;
      }
      if (c > pivot) break;
    }
    if (f.is_zero()) continue;
    SparseRow merged;
    merged.reserve(row.size() + fresh.size());
    std::size_t a = 0, b = 0;
    while (a < row.size() || b < fresh.size()) {
      if (b == fresh.size() ||
          (a < row.size() && row[a].first < fresh[b].first)) {
        merged.push_back(row[a++]);
      } else if (a == row.size() || fresh[b].first < row[a].first) {
        merged.emplace_back(fresh[b].first, -(f * fresh[b].second));
        ++b;
      } else {
        const Scalar val = row[a].second - f * fresh[b].second;
        if (!val.is_zero()) merged.emplace_back(row[a].first, val);
        ++a;
        ++b;
      }
    }
    row = std::move(merged);
  }
  const auto pos = std::lower_bound(
      rows_.begin(), rows_.end(), pivot,
      [](const SparseRow& row, std::size_t p) { return row.front().first < p; });
  rows_.insert(pos, std::move(fresh));
  return true;
}

bool RowSpace::contains(const std::vector<Scalar>& v) const {
  return is_zero_vector(reduce(v));
}

bool RowSpace::same_space(const RowSpace& other) const {
  // rref is unique, so the sparse rows are directly comparable
  if (cols_ != other.cols_ || rows_.size() != other.rows_.size()) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] != other.rows_[i]) return false;
  }
  return true;
}

Matrix RowSpace::to_matrix() const {
  Matrix m(field_, rows_.size(), cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, val] : rows_[r]) m.set(r, c, val);
  }
  return m;
}

std::vector<Scalar> zero_vector(const FieldDescriptor& f, std::size_t n) {
  return std::vector<Scalar>(n, Scalar::zero(f));
}

std::vector<Scalar> add_vectors(const std::vector<Scalar>& a,
                                const std::vector<Scalar>& b) {
  if (a.size() != b.size()) throw DimensionError("vector addition length mismatch");
  std::vector<Scalar> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

std::vector<Scalar> scale_vector(const Scalar& s,
                                 const std::vector<Scalar>& v) {
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (const Scalar& x : v) out.push_back(s * x);
  return out;
}

bool is_zero_vector(const std::vector<Scalar>& v) {
  for (const Scalar& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace nilplab
