#pragma once

// Gauss-Jordan elimination for small dense systems over an exact field.
// Scalar is any Eigen-compatible exact type (e.g. a multiprecision
// rational); no pivoting heuristics are needed since nothing rounds.

#include <vector>

#include <Eigen/Dense>

namespace rrw {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
struct ExactSolution {
  bool consistent = false;
  Eigen::Index rank = 0;
  /// Free variables set to zero. Meaningless when inconsistent.
  DenseVector<Scalar> particular;
  /// One column per free variable: +1 at that variable, pivots solved.
  DenseMatrix<Scalar> nullspace;
  std::vector<Eigen::Index> pivot_columns;
  std::vector<Eigen::Index> free_columns;
};

/// Reduces [a | b] to reduced row echelon form in place.
template <class Scalar>
ExactSolution<Scalar> solve_exact(const DenseMatrix<Scalar>& a, const DenseVector<Scalar>& b) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  DenseMatrix<Scalar> m(rows, cols + 1);
  m.leftCols(cols) = a;
  m.col(cols) = b;

  const Scalar zero(0);
  ExactSolution<Scalar> out;
  Eigen::Index r = 0;
  std::vector<Eigen::Index> support;
  Eigen::Index c = 0;
  for (; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c) == zero) ++p;
    if (p == rows) {
      out.free_columns.push_back(c);
      continue;
    }
    if (p != r) m.row(p).swap(m.row(r));

    const Scalar inv = Scalar(1) / m(r, c);
    support.clear();
    for (Eigen::Index k = c; k <= cols; ++k) {
      if (m(r, k) != zero) {
        m(r, k) *= inv;
        support.push_back(k);
      }
    }
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == zero) continue;
      const Scalar f = m(i, c);
      for (Eigen::Index k : support) m(i, k) -= f * m(r, k);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  for (; c < cols; ++c) out.free_columns.push_back(c);
  out.rank = r;

  out.consistent = true;
  for (Eigen::Index i = r; i < rows; ++i) {
    if (m(i, cols) != zero) {
      out.consistent = false;
      break;
    }
  }

  out.particular = DenseVector<Scalar>::Constant(cols, zero);
  for (Eigen::Index i = 0; i < r; ++i) out.particular(out.pivot_columns[static_cast<std::size_t>(i)]) = m(i, cols);

  const auto nfree = static_cast<Eigen::Index>(out.free_columns.size());
  out.nullspace = DenseMatrix<Scalar>::Constant(cols, nfree, zero);
  for (Eigen::Index f = 0; f < nfree; ++f) {
    const Eigen::Index fc = out.free_columns[static_cast<std::size_t>(f)];
    out.nullspace(fc, f) = Scalar(1);
    for (Eigen::Index i = 0; i < r; ++i) {
      out.nullspace(out.pivot_columns[static_cast<std::size_t>(i)], f) = -m(i, fc);
    }
  }
  return out;
}

}  // namespace rrw
