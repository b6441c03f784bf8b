#pragma once

// Dense exact linear algebra over a cyclotomic field: reduced row echelon
// form, rank and kernel bases.  Backs the constraint solver and the subspace
// comparisons on the Grassmann algebra.

#include <cstddef>
#include <span>
#include <vector>

#include "lienil/scalars.hpp"

namespace lienil {

class ScalarMatrix {
 public:
  ScalarMatrix(std::size_t rows, std::size_t cols, const CyclotomicField& field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const CyclotomicField& field() const { return *field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Matrix whose rows are the given vectors (all of equal length).
  static ScalarMatrix from_rows(std::span<const std::vector<Scalar>> rows, std::size_t cols,
                                const CyclotomicField& field);

 private:
  std::size_t rows_, cols_;
  const CyclotomicField* field_;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  ScalarMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Gauss-Jordan elimination to reduced row echelon form.
RowEchelon row_reduce(ScalarMatrix m);

std::size_t rank(const ScalarMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Scalar>> kernel_basis(const ScalarMatrix& m);

}  // namespace lienil
