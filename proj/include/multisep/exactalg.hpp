#pragma once

// Exact linear algebra over the rationals.
//
// Dense routines run a fraction-free (Bareiss) forward elimination on
// integer-scaled rows; rational arithmetic only appears when the reduced
// row echelon form is requested. EchelonBasis is the incremental sparse
// counterpart used when spans grow to thousands of vectors.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace multisep {

using Integer = mpz_class;
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_rows(std::span<const Vector> rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  DenseMatrix transpose() const;
  Vector apply(std::span<const Scalar> v) const;

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form: `rows` holds the rank() nonzero rows, pivot
/// entries equal to 1, pivot columns cleared in every other row.
struct RowEchelon {
  std::vector<std::size_t> pivots;
  std::vector<Vector> rows;
  std::size_t cols = 0;

  std::size_t rank() const noexcept { return pivots.size(); }
  /// Non-pivot columns in ascending order.
  std::vector<std::size_t> free_columns() const;
};

std::size_t rank(const DenseMatrix& m);
/// Rank of an integer matrix given by rows. Throws LengthMismatch.
std::size_t integer_rank(std::vector<std::vector<Integer>> rows);

RowEchelon reduced_row_echelon(const DenseMatrix& m);

/// Right null space basis, one vector per free column of the reduced row
/// echelon form, in ascending free-column order. Vector k has a 1 at its
/// free column and 0 at every other free column.
std::vector<Vector> kernel_basis(const DenseMatrix& m);

/// Dimension of the span of equal-length vectors. Throws LengthMismatch.
std::size_t span_dim(std::span<const Vector> vectors);

/// Sparse vector as (index, value) pairs with strictly increasing indices and
/// no explicit zeros.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

SparseVector to_sparse(std::span<const Scalar> v);
Vector to_dense(const SparseVector& v, std::size_t dim);

/// Incrementally grown basis of a subspace of Q^dim in semi-echelon form.
/// Each stored row is pivoted on its last nonzero coordinate and vanishes on
/// the pivots of all rows inserted before it.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Returns true when v was independent of the current span (and is now
  /// part of it). Not safe to call concurrently on one instance.
  bool insert(const SparseVector& v);
  bool insert(std::span<const Scalar> v) { return insert(to_sparse(v)); }

  bool contains(const SparseVector& v) const;

 private:
  // Reduces v into acc (all zero on entry); `touched` collects indices that
  // may be nonzero afterwards.
  void reduce(const SparseVector& v, std::vector<Scalar>& acc, std::vector<std::size_t>& touched) const;

  std::size_t dim_;
  std::vector<Scalar> scratch_;
  std::vector<std::size_t> touched_;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace multisep
