#pragma once

#include <optional>
#include <vector>

#include "adkit/eigen_support.hpp"
#include "adkit/errors.hpp"

namespace adkit {

/// Reduced row echelon form over an exact field S.
template <class S>
struct Rref {
  Mat<S> r;
  std::vector<int> pivots; // pivot column of each nonzero row
};

template <class S>
Rref<S> rref(Mat<S> m) {
  Rref<S> out;
  const int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
  int row = 0;
  for (int c = 0; c < cols && row < rows; ++c) {
    int p = row;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != row) m.row(p).swap(m.row(row));
    S inv = S(1) / m(row, c);
    for (int k = c; k < cols; ++k) m(row, k) = m(row, k) * inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || is_zero(m(r, c))) continue;
      S f = m(r, c);
      for (int k = c; k < cols; ++k)
        if (!is_zero(m(row, k))) m(r, k) -= f * m(row, k);
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.r = std::move(m);
  return out;
}

template <class S>
int rank(const Mat<S>& m) {
  return static_cast<int>(rref(m).pivots.size());
}

/// Basis of {x : m x = 0}, one column per free variable, in increasing order
/// of the free column.
template <class S>
Mat<S> nullspace(const Mat<S>& m) {
  auto [r, pivots] = rref(m);
  const int cols = static_cast<int>(m.cols());
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Mat<S> basis = Mat<S>::Zero(cols, static_cast<Eigen::Index>(free.size()));
  for (std::size_t f = 0; f < free.size(); ++f) {
    basis(free[f], f) = S(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], f) = -r(i, free[f]);
  }
  return basis;
}

/// Basis of the column span of m, as the RREF rows of m^T (so the result is
/// canonical for the subspace).
template <class S>
Mat<S> span_basis(const Mat<S>& m) {
  auto [r, pivots] = rref<S>(m.transpose());
  return r.topRows(static_cast<Eigen::Index>(pivots.size())).transpose();
}

/// Determinant by elimination over a field.
template <class S>
S det(Mat<S> m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const int n = static_cast<int>(m.rows());
  S d(1);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return S(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      d = -d;
    }
    d = d * m(c, c);
    S inv = S(1) / m(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (is_zero(m(r, c))) continue;
      S f = m(r, c) * inv;
      for (int k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return d;
}

/// Determinant of a polynomial matrix by cofactor expansion (small n only).
Poly det_poly(const MatP& m);

template <class S>
Mat<S> inverse(const Mat<S>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  Mat<S> aug(n, 2 * n);
  aug << m, Mat<S>::Identity(n, n);
  auto [r, pivots] = rref(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || (n > 0 && pivots[n - 1] >= n))
    throw SingularMatrix("matrix is singular");
  return r.rightCols(n);
}

/// One solution of m x = b, or nothing when the system is inconsistent.
template <class S>
std::optional<Vec<S>> solve_particular(const Mat<S>& m, const Vec<S>& b) {
  const Eigen::Index cols = m.cols();
  Mat<S> aug(m.rows(), cols + 1);
  aug << m, b;
  auto [r, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vec<S> x = Vec<S>::Zero(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x(pivots[i]) = r(static_cast<Eigen::Index>(i), cols);
  return x;
}

} // namespace adkit
