#pragma once

#include "cherednik/rational.hpp"

#include <cstddef>
#include <vector>

namespace cherednik {

enum class Execution { Serial, Parallel };

// Row-major dense matrix over Q.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// In-place reduced row echelon form; returns pivot columns in order.
// Both kernels perform identical arithmetic and produce identical output.
std::vector<std::size_t> rref_serial(DenseMatrix& m, std::size_t pivot_limit);
std::vector<std::size_t> rref_parallel(DenseMatrix& m, std::size_t pivot_limit);

struct LinearSolution {
  bool consistent = false;
  std::size_t rank = 0;
  std::vector<Rational> x;  // free variables set to zero
};

// Solves A x = b exactly.
LinearSolution solve_exact(const DenseMatrix& a, const std::vector<Rational>& b,
                           Execution exec = Execution::Serial);

}  // namespace cherednik
