#include "slelab/algebra/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace slelab::algebra {

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void RationalMatrix::append_row(const std::vector<Rational>& values) {
  if (rows_ == 0 && cols_ == 0) {
    cols_ = values.size();
  }
  if (values.size() != cols_) {
    throw std::invalid_argument("RationalMatrix::append_row: width mismatch");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

RowEchelon reduced_row_echelon(RationalMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) {
      ++pivot;
    }
    if (pivot == m.rows()) {
      continue;
    }
    if (pivot != lead_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        std::swap(m(pivot, c), m(lead_row, c));
      }
    }
    const Rational inv = m(lead_row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) {
      m(lead_row, c) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, col).is_zero()) {
        continue;
      }
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(r, c) -= factor * m(lead_row, c);
      }
    }
    pivots.push_back(col);
    ++lead_row;
  }
  RationalMatrix trimmed(0, m.cols());
  for (std::size_t r = 0; r < lead_row; ++r) {
    trimmed.append_row(m.row(r));
  }
  return {std::move(trimmed), std::move(pivots)};
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  const RowEchelon rref = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : rref.pivots) {
    is_pivot[p] = true;
  }
  RationalMatrix basis(0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) {
      continue;
    }
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = Rational(1);
    for (std::size_t i = 0; i < rref.pivots.size(); ++i) {
      v[rref.pivots[i]] = -rref.matrix(i, free);
    }
    basis.append_row(v);
  }
  if (basis.rows() == 0) {
    return {};
  }
  const RowEchelon canonical = reduced_row_echelon(std::move(basis));
  std::vector<std::vector<Rational>> out;
  for (std::size_t r = 0; r < canonical.matrix.rows(); ++r) {
    out.push_back(canonical.matrix.row(r));
  }
  return out;
}

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("determinant: matrix is not square");
  }
  Rational det(1);
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) {
      ++pivot;
    }
    if (pivot == n) {
      return Rational(0);
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m(pivot, c), m(col, c));
      }
      det = -det;
    }
    det *= m(col, col);
    const Rational inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) {
        continue;
      }
      const Rational factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) {
        m(r, c) -= factor * m(col, c);
      }
    }
  }
  return det;
}

}  // namespace slelab::algebra
