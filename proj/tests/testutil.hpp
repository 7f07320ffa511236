#ifndef NILPLAB_TESTUTIL_HPP
#define NILPLAB_TESTUTIL_HPP

#include <random>
#include <vector>

#include "nilplab/algebra.hpp"

namespace nilplab::testutil {

/// Laplace-expansion determinant, independent of the elimination code.
inline Scalar minor_det(const Matrix& m, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
  const FieldDescriptor f = m.field();
  if (rows.empty()) return Scalar::one(f);
  Scalar acc = Scalar::zero(f);
  Scalar sign = Scalar::one(f);
  for (std::size_t t = 0; t < cols.size(); ++t) {
    const Scalar& a = m.at(rows[0], cols[t]);
    if (!a.is_zero()) {
      std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
      std::vector<std::size_t> sub_cols;
      for (std::size_t s = 0; s < cols.size(); ++s) {
        if (s != t) sub_cols.push_back(cols[s]);
      }
      acc = acc + sign * a * minor_det(m, sub_rows, sub_cols);
    }
    sign = -sign;
  }
  return acc;
}

/// Rank as the largest size of a nonzero minor; usable up to ~5x5.
inline std::size_t minor_rank(const Matrix& m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t size = n; size > 0; --size) {
    // all row and column subsets of the given size
    std::vector<std::size_t> rs(size), cs(size);
    std::vector<bool> row_mask(m.rows(), false), col_mask(m.cols(), false);
    std::fill(row_mask.begin(), row_mask.begin() + size, true);
    do {
      std::size_t ri = 0;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (row_mask[r]) rs[ri++] = r;
      }
      std::fill(col_mask.begin(), col_mask.end(), false);
      std::fill(col_mask.begin(), col_mask.begin() + size, true);
      do {
        std::size_t ci = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
          if (col_mask[c]) cs[ci++] = c;
        }
        if (!minor_det(m, rs, cs).is_zero()) return size;
      } while (std::prev_permutation(col_mask.begin(), col_mask.end()));
    } while (std::prev_permutation(row_mask.begin(), row_mask.end()));
  }
  return 0;
}

inline Scalar random_scalar(std::mt19937& rng, const FieldDescriptor& f,
                            long lo = -3, long hi = 3) {
  if (f.is_rationals()) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return Scalar::from_integer(dist(rng), f);
  }
  std::uniform_int_distribution<std::uint64_t> dist(0, f.characteristic() - 1);
  return Scalar::residue(dist(rng), f);
}

inline Matrix random_matrix(std::mt19937& rng, const FieldDescriptor& f,
                            std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m.set(r, c, random_scalar(rng, f));
    }
  }
  return m;
}

/// Sparse random structure constants: each basis pair gets at most one
/// product term.
inline Algebra random_algebra(std::mt19937& rng, const FieldDescriptor& f,
                              std::size_t dim, double density = 0.3) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, dim ? dim - 1 : 0);
  std::vector<ProductEntry> entries;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (coin(rng) >= density) continue;
      Scalar c = random_scalar(rng, f, 1, 2);
      if (c.is_zero()) c = Scalar::one(f);
      entries.push_back({i, j, pick(rng), c});
    }
  }
  return make_algebra(f, dim, {}, entries);
}

}  // namespace nilplab::testutil

#endif
