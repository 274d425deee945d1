#include "infmult/matrix.hpp"

#include <bit>

namespace infmult {

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  ScalarMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

ScalarMatrix ScalarMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  ScalarMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = (*this)(rows[r], cols[c]);
  }
  return out;
}

Scalar determinant(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  if (n > 20) throw std::invalid_argument("determinant: matrix too large for subset expansion");

  // partial[mask]: signed sum over assignments of rows 0..popcount(mask)-1 to the columns in mask.
  std::vector<Scalar> partial(std::size_t{1} << n);
  partial[0] = Scalar(1);
  for (std::size_t mask = 0; mask < partial.size(); ++mask) {
    if (partial[mask].is_zero()) continue;
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    if (row == n) continue;
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t bit = std::size_t{1} << c;
      if ((mask & bit) || m(row, c).is_zero()) continue;
      const int inversions = std::popcount(mask >> (c + 1));
      Scalar term = m(row, c) * partial[mask];
      if (inversions % 2) {
        partial[mask | bit] -= term;
      } else {
        partial[mask | bit] += term;
      }
    }
  }
  return partial.back();
}

}  // namespace infmult
