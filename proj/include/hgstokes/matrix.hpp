#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <vector>

#include "hgstokes/rational.hpp"

namespace hgs {

// Dense exact-rational matrix/vector types. All linear algebra in this header
// is exact: pivots are tested against zero, never against a tolerance.
using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline Mat identity(Eigen::Index n) { return Mat::Identity(n, n); }

// Evaluate an Eigen expression into a plain matrix/vector through the implicit
// EigenBase constructor. (The explicit one-argument Matrix constructor probes
// std::is_convertible<Expr, Scalar>, which is ill-formed for multiprecision
// scalars; these helpers avoid that path.)
template <typename Derived>
inline Mat to_mat(const Eigen::EigenBase<Derived>& e) {
  Mat m = e.derived();
  return m;
}

template <typename Derived>
inline Vec to_vec(const Eigen::EigenBase<Derived>& e) {
  Vec v = e.derived();
  return v;
}

struct SingularMatrixError : std::runtime_error {
  SingularMatrixError() : std::runtime_error("matrix is singular") {}
};

// Reduced row echelon form; returns pivot column indices.
inline std::vector<Eigen::Index> rref_in_place(Mat& a) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < a.rows(); ++r) {
      if (a(r, col) != 0) { piv = r; break; }
    }
    if (piv < 0) continue;
    a.row(piv).swap(a.row(row));
    a.row(row) /= a(row, col);
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r != row && a(r, col) != 0) a.row(r) -= a(r, col) * a.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline Eigen::Index rank(Mat a) { return static_cast<Eigen::Index>(rref_in_place(a).size()); }

inline Rational determinant(Mat a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: non-square");
  Rational det = 1;
  const Eigen::Index n = a.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = col; r < n; ++r) {
      if (a(r, col) != 0) { piv = r; break; }
    }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (a(r, col) != 0) a.row(r) -= (a(r, col) / a(col, col)) * a.row(col);
    }
  }
  return det;
}

inline Mat inverse(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: non-square");
  const Eigen::Index n = a.rows();
  Mat aug(n, 2 * n);
  aug << a, identity(n);
  const auto pivots = rref_in_place(aug);
  // full rank iff every pivot falls in the left (coefficient) block
  if (static_cast<Eigen::Index>(pivots.size()) != n || pivots.back() >= n) {
    throw SingularMatrixError();
  }
  return aug.rightCols(n);
}

// Basis of the right null space {v : a v = 0}.
inline std::vector<Vec> kernel_basis(Mat a) {
  const Eigen::Index n = a.cols();
  const auto pivots = rref_in_place(a);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (Eigen::Index free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v = Vec::Zero(n);
    v(free_col) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v(pivots[i]) = -a(static_cast<Eigen::Index>(i), free_col);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Monic characteristic polynomial coefficients (c_0..c_n with c_n = 1), so that
// det(t I - a) = sum_i c_i t^i, computed by the Faddeev-LeVerrier recurrence.
inline std::vector<Rational> charpoly(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("charpoly: non-square");
  const Eigen::Index n = a.rows();
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1;
  Mat m = Mat::Zero(n, n);
  for (Eigen::Index i = 1; i <= n; ++i) {
    m = a * m + c[static_cast<std::size_t>(n - i + 1)] * identity(n);
    c[static_cast<std::size_t>(n - i)] = -(a * m).trace() / Rational(i);
  }
  return c;
}

inline Mat mat_pow(const Mat& a, long e) {
  if (a.rows() != a.cols()) throw std::invalid_argument("mat_pow: non-square");
  if (e < 0) return mat_pow(inverse(a), -e);
  Mat r = identity(a.rows());
  Mat base = a;
  while (e) {
    if (e & 1L) r = r * base;
    base = base * base;
    e >>= 1L;
  }
  return r;
}

}  // namespace hgs
