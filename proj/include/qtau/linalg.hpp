#pragma once

#include <Eigen/Core>

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qtau {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Determinant over a field by Gaussian elimination. Pivots on the first
/// nonzero entry, so it is exact for exact scalar types. 0x0 gives 1.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix<Scalar> m = input;
  const Eigen::Index n = m.rows();
  Scalar det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (m(r, col) == Scalar(0)) continue;
      const Scalar factor = m(r, col) / m(col, col);
      for (Eigen::Index c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

/// Fraction-free (Bareiss) determinant over an integral domain whose
/// operator/ performs exact division, e.g. polynomials.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix<Scalar> m = input;
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Scalar previous(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == Scalar(0)) {
      Eigen::Index swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == Scalar(0)) ++swap_row;
      if (swap_row == n) return Scalar(0);
      m.row(swap_row).swap(m.row(k));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
    }
    previous = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

/// Inverse of a unit upper-triangular matrix by back substitution. Needs only
/// ring operations, so it works over polynomial scalars.
template <typename Derived>
Matrix<typename Derived::Scalar> unitriangular_inverse(const Eigen::MatrixBase<Derived>& u) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = u.rows();
  if (u.cols() != n) throw std::invalid_argument("unitriangular_inverse of a non-square matrix");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (u(i, i) != Scalar(1)) throw std::invalid_argument("matrix is not unitriangular");
    for (Eigen::Index j = 0; j < i; ++j) {
      if (u(i, j) != Scalar(0)) throw std::invalid_argument("matrix is not upper triangular");
    }
  }
  Matrix<Scalar> inv = Matrix<Scalar>::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    for (Eigen::Index row = col - 1; row >= 0; --row) {
      Scalar acc(0);
      for (Eigen::Index k = row + 1; k <= col; ++k) acc += u(row, k) * inv(k, col);
      inv(row, col) = -acc;
    }
  }
  return inv;
}

/// Plain triple-loop product. Eigen's blocked product is avoided for scalar
/// types with expensive arithmetic and no SIMD packet.
template <typename A, typename B>
Matrix<typename A::Scalar> multiply(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  using Scalar = typename A::Scalar;
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix<Scalar> out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      Scalar acc(0);
      for (Eigen::Index k = 0; k < a.cols(); ++k) {
        if (a(i, k) == Scalar(0)) continue;
        acc += a(i, k) * b(k, j);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

/// prod_{i<j} (x_i - x_j).
template <typename Scalar>
Scalar vandermonde(std::span<const Scalar> x) {
  Scalar out(1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) out *= x[i] - x[j];
  }
  return out;
}

template <typename Scalar>
bool pairwise_distinct(std::span<const Scalar> x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x[i] == x[j]) return false;
    }
  }
  return true;
}

template <typename Scalar>
Scalar vandermonde(const std::vector<Scalar>& x) {
  return vandermonde(std::span<const Scalar>(x));
}

template <typename Scalar>
bool pairwise_distinct(const std::vector<Scalar>& x) {
  return pairwise_distinct(std::span<const Scalar>(x));
}

}  // namespace qtau
