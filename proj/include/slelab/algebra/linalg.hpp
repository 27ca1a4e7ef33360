#pragma once

#include "slelab/algebra/rational.hpp"

#include <cstddef>
#include <vector>

namespace slelab::algebra {

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;
  void append_row(const std::vector<Rational>& values);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form with zero rows dropped; pivots[i] is the
/// pivot column of row i.
struct RowEchelon {
  RationalMatrix matrix;
  std::vector<std::size_t> pivots;
};

RowEchelon reduced_row_echelon(RationalMatrix m);

/// Basis of {x : m x = 0}, itself in reduced row echelon form, so each
/// vector has a leading 1 and the basis is canonical.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

Rational determinant(RationalMatrix m);

}  // namespace slelab::algebra
