#ifndef NILPLAB_MATRIX_HPP
#define NILPLAB_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nilplab/field.hpp"

namespace nilplab {

/// Dense matrix over an exact field.  Everything here is immutable in
/// spirit: operations return fresh matrices, and rref is the single
/// canonical form used by all subspace computations.
class Matrix {
 public:
  Matrix(FieldDescriptor field, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldDescriptor& field, std::size_t n);
  static Matrix from_rows(const FieldDescriptor& field,
                          const std::vector<std::vector<Scalar>>& rows);

  const FieldDescriptor& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);

  std::vector<Scalar> row(std::size_t r) const;
  std::vector<Scalar> col(std::size_t c) const;

  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transposed() const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  bool operator==(const Matrix& rhs) const;
  bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }
  bool is_zero() const;

  std::string str() const;

 private:
  FieldDescriptor field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row-echelon form with leading ones.  Deterministic: pivots are
/// the first nonzero entry scanning columns left to right.
RrefResult rref(const Matrix& m);

/// One exact solution of m x = target, free variables set to zero under
/// the rref pivot structure; nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m,
                                         const std::vector<Scalar>& target);

/// Exact inverse; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column of the rref.
std::vector<std::vector<Scalar>> null_space_basis(const Matrix& m);

/// Exact determinant by Gaussian elimination.
Scalar determinant(const Matrix& m);

/// Incrementally maintained row space in reduced row-echelon form.
/// Rows are stored sparsely, so spans of shift-like vectors (structure
/// constants, multiplication operators) reduce in time proportional to the
/// number of nonzeros rather than the ambient dimension.
class RowSpace {
 public:
  RowSpace(FieldDescriptor field, std::size_t cols);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds v to the span; true when the rank grew.
  bool insert(const std::vector<Scalar>& v);
  bool contains(const std::vector<Scalar>& v) const;
  bool same_space(const RowSpace& other) const;

  /// The canonical basis as a dense rref matrix (rows in pivot order).
  Matrix to_matrix() const;

 private:
  // entries sorted by column; first entry is the pivot with value 1
  using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;
  std::vector<Scalar> reduce(const std::vector<Scalar>& v) const;
  FieldDescriptor field_;
  std::size_t cols_;
  std::vector<SparseRow> rows_;  // sorted by pivot column
};

std::vector<Scalar> zero_vector(const FieldDescriptor& f, std::size_t n);
std::vector<Scalar> add_vectors(const std::vector<Scalar>& a,
                                const std::vector<Scalar>& b);
std::vector<Scalar> scale_vector(const Scalar& s,
                                 const std::vector<Scalar>& v);
bool is_zero_vector(const std::vector<Scalar>& v);

}  // namespace nilplab

#endif
