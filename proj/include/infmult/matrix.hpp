#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "infmult/scalar.hpp"

namespace infmult {

/// Dense row-major matrix over Scalar.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ScalarMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  ScalarMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Division-free determinant by Laplace expansion memoized over column subsets
/// (O(n 2^n) scalar products). Suitable for the n <= 12 sizes used here.
Scalar determinant(const ScalarMatrix& m);

}  // namespace infmult
