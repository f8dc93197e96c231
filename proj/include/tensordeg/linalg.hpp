#pragma once

#include <vector>

#include <Eigen/Core>

#include "tensordeg/rational.hpp"

namespace tensordeg {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = Matrix<Rational>;
using VectorQ = Vector<Rational>;

template <typename Derived>
bool is_zero_vector(const Eigen::MatrixBase<Derived>& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (!(v(i) == typename Derived::Scalar(0))) return false;
  }
  return true;
}

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = i + 1; j < m.cols(); ++j) {
      if (!(m(i, j) == m(j, i))) return false;
    }
  }
  return true;
}

/// Exact determinant. Rows are scaled to integers and eliminated with
/// Bareiss' fraction-free scheme. Throws DimensionError for non-square input.
Rational det_exact(const MatrixQ& m);

/// Exact rank over Q, by fraction-free elimination.
Index rank_exact(const MatrixQ& m);

/// Basis of the right null space, read off the reduced row echelon form.
/// Each basis vector has a 1 in its free column. Empty iff the kernel is
/// trivial. Any exact field scalar works (Rational, QuadraticNumber).
template <typename Scalar>
std::vector<Vector<Scalar>> kernel_basis(const Matrix<Scalar>& m) {
  Matrix<Scalar> a = m;
  const Index rows = a.rows();
  const Index cols = a.cols();
  const Scalar zero(0);
  std::vector<Index> pivot_cols;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && a(p, c) == zero) ++p;
    if (p == rows) continue;
    a.row(p).swap(a.row(r));
    const Scalar inv = Scalar(1) / a(r, c);
    a.row(r) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == zero) continue;
      const Scalar f = a(i, c);
      a.row(i) -= f * a.row(r);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<Vector<Scalar>> basis;
  for (Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<Scalar> v = Vector<Scalar>::Zero(cols);
    v(free) = Scalar(1);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
      v(pivot_cols[k]) = -a(static_cast<Index>(k), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

enum class Definiteness { positive_definite, negative_definite, neither };

const char* to_string(Definiteness d);

/// Congruence diagonalization basis^T * q * basis = diag(diagonal), with
/// `basis` invertible. Produced by symmetric elimination; serves as an
/// exactly checkable definiteness certificate.
struct CongruenceDiagonalization {
  VectorQ diagonal;
  MatrixQ basis;
};

/// Throws InvalidInput when q is not symmetric.
CongruenceDiagonalization congruence_diagonalize(const MatrixQ& q);

/// Exact classification. `neither` holds exactly when some u != 0 has
/// u^T q u = 0. Throws InvalidInput for non-symmetric input.
Definiteness definiteness(const MatrixQ& q);

/// Rescales a nonzero rational vector to coprime integers with the first
/// nonzero entry positive. The zero vector is returned unchanged.
VectorQ normalize(const VectorQ& v);

}  // namespace tensordeg
