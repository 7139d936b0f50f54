#include "cherednik/linalg.hpp"

#include "cherednik/errors.hpp"

#include <omp.h>

#include <utility>

namespace cherednik {

namespace {

void swap_rows(DenseMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

std::size_t find_pivot(const DenseMatrix& m, std::size_t from, std::size_t col) {
  for (std::size_t r = from; r < m.rows(); ++r)
    if (!m.at(r, col).is_zero()) return r;
  return m.rows();
}

void scale_row(DenseMatrix& m, std::size_t row, std::size_t from_col) {
  const Rational inv = Rational(1) / m.at(row, from_col);
  for (std::size_t c = from_col; c < m.cols(); ++c)
    if (!m.at(row, c).is_zero()) m.at(row, c) *= inv;
}

void eliminate_row(DenseMatrix& m, std::size_t target, std::size_t pivot_row, std::size_t col) {
  const Rational f = m.at(target, col);
  if (f.is_zero()) return;
  for (std::size_t c = col; c < m.cols(); ++c) {
    const Rational& p = m.at(pivot_row, c);
    if (!p.is_zero()) m.at(target, c) -= f * p;
  }
}

}  // namespace

std::vector<std::size_t> rref_serial(DenseMatrix& m, std::size_t pivot_limit) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_limit && row < m.rows(); ++col) {
    const std::size_t p = find_pivot(m, row, col);
    if (p == m.rows()) continue;
    swap_rows(m, row, p);
    scale_row(m, row, col);
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (r != row) eliminate_row(m, r, row, col);
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::size_t> rref_parallel(DenseMatrix& m, std::size_t pivot_limit) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  const auto nrows = static_cast<long long>(m.rows());
  for (std::size_t col = 0; col < pivot_limit && row < m.rows(); ++col) {
    const std::size_t p = find_pivot(m, row, col);
    if (p == m.rows()) continue;
    swap_rows(m, row, p);
    scale_row(m, row, col);
#pragma omp parallel for schedule(dynamic, 4)
    for (long long r = 0; r < nrows; ++r)
      if (static_cast<std::size_t>(r) != row) eliminate_row(m, static_cast<std::size_t>(r), row, col);
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

LinearSolution solve_exact(const DenseMatrix& a, const std::vector<Rational>& b, Execution exec) {
  if (b.size() != a.rows()) throw InvalidArgument("right-hand side length does not match row count");
  DenseMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  const auto pivots = exec == Execution::Parallel ? rref_parallel(aug, a.cols()) : rref_serial(aug, a.cols());
  LinearSolution out;
  out.rank = pivots.size();
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    if (!aug.at(r, a.cols()).is_zero()) return out;
  out.consistent = true;
  out.x.assign(a.cols(), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) out.x[pivots[r]] = aug.at(r, a.cols());
  return out;
}

}  // namespace cherednik
