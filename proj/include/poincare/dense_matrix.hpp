#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "poincare/field.hpp"

namespace poincare {

using ScalarVector = std::vector<Scalar>;

/// Row-major matrix over a single Field.
class DenseMatrix {
 public:
  DenseMatrix(Field field, std::size_t rows, std::size_t cols);
  /// Every entry must carry the same field; throws InputError otherwise.
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  /// Integer literal convenience for tests and small fixtures.
  static DenseMatrix from_integers(Field field, const std::vector<std::vector<long>>& rows);
  static DenseMatrix identity(Field field, std::size_t n);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  ScalarVector operator*(const ScalarVector& v) const;

  std::size_t rank() const;
  /// Right kernel basis: one vector per free column (leftmost pivots), in
  /// increasing free-column order, with that free coordinate equal to 1 and
  /// the other free coordinates 0.
  std::vector<ScalarVector> nullspace_basis() const;
  /// Nonzero rows of the reduced row echelon form, each with pivot 1.
  std::vector<ScalarVector> reduced_row_echelon() const;
  /// Some x with m x = rhs, free variables set to 0; nullopt if inconsistent.
  std::optional<ScalarVector> solve_linear(const ScalarVector& rhs) const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

}  // namespace poincare
