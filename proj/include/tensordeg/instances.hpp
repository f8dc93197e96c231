#pragma once

#include <utility>
#include <vector>

#include "tensordeg/quadratic_number.hpp"
#include "tensordeg/tensor.hpp"

namespace tensordeg {

/// Symmetric forms Q_1..Q_m on R^n; feasible when some u != 0 has
/// u^T Q_t u = 0 for every t.
class QuadraticInstance {
 public:
  /// Throws InvalidInput unless m >= 1 and every form is symmetric n x n.
  explicit QuadraticInstance(std::vector<MatrixQ> forms);

  Index n() const { return n_; }
  Index m() const { return static_cast<Index>(forms_.size()); }
  const std::vector<MatrixQ>& forms() const { return forms_; }

  friend bool operator==(const QuadraticInstance&, const QuadraticInstance&) = default;

 private:
  Index n_ = 0;
  std::vector<MatrixQ> forms_;
};

/// Matrices M_1..M_r on R^n x R^n; feasible when nonzero x, y have
/// x^T M_l y = 0 for every l.
class BilinearInstance {
 public:
  explicit BilinearInstance(std::vector<MatrixQ> matrices);

  Index n() const { return n_; }
  Index r() const { return static_cast<Index>(matrices_.size()); }
  const std::vector<MatrixQ>& matrices() const { return matrices_; }

  friend bool operator==(const BilinearInstance&, const BilinearInstance&) = default;

 private:
  Index n_ = 0;
  std::vector<MatrixQ> matrices_;
};

/// Matrices A_0..A_r with pencil M(z) = sum_l z_l A_l.
class PencilInstance {
 public:
  explicit PencilInstance(std::vector<MatrixQ> matrices);

  Index n() const { return n_; }
  /// Index of the last matrix; there are r + 1 of them.
  Index r() const { return static_cast<Index>(matrices_.size()) - 1; }
  const std::vector<MatrixQ>& matrices() const { return matrices_; }

  template <typename Scalar>
  Matrix<Scalar> pencil_at(const Vector<Scalar>& z) const {
    detail::require_length(z.size(), r() + 1, "pencil_at z");
    Matrix<Scalar> m = Matrix<Scalar>::Zero(n_, n_);
    for (Index l = 0; l <= r(); ++l) {
      if (z(l) == Scalar(0)) continue;
      m += z(l) * matrices_[static_cast<std::size_t>(l)].template cast<Scalar>();
    }
    return m;
  }

  friend bool operator==(const PencilInstance&, const PencilInstance&) = default;

 private:
  Index n_ = 0;
  std::vector<MatrixQ> matrices_;
};

/// True iff x, y and z are all nonzero and T(x,y,.), T(x,.,z), T(.,y,z)
/// vanish exactly. Throws DimensionError on length mismatch.
template <typename Scalar>
bool verify_tensor_witness(const TensorQ& t, const WitnessTriple<Scalar>& w) {
  detail::require_length(w.x.size(), t.n1(), "tensor witness x");
  detail::require_length(w.y.size(), t.n2(), "tensor witness y");
  detail::require_length(w.z.size(), t.n3(), "tensor witness z");
  if (is_zero_vector(w.x) || is_zero_vector(w.y) || is_zero_vector(w.z)) return false;
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return is_zero_vector(contract_xy(t, w.x, w.y)) && is_zero_vector(contract_xz(t, w.x, w.z)) &&
           is_zero_vector(contract_yz(t, w.y, w.z));
  } else {
    const auto ts = t.template cast<Scalar>();
    return is_zero_vector(contract_xy(ts, w.x, w.y)) &&
           is_zero_vector(contract_xz(ts, w.x, w.z)) && is_zero_vector(contract_yz(ts, w.y, w.z));
  }
}

template <typename Scalar>
bool verify_quadratic_witness(const QuadraticInstance& inst, const Vector<Scalar>& u) {
  detail::require_length(u.size(), inst.n(), "quadratic witness");
  if (is_zero_vector(u)) return false;
  for (const auto& q : inst.forms()) {
    if (!(u.dot(q.template cast<Scalar>() * u) == Scalar(0))) return false;
  }
  return true;
}

template <typename Scalar>
bool verify_bilinear_witness(const BilinearInstance& inst, const Vector<Scalar>& x,
                             const Vector<Scalar>& y) {
  detail::require_length(x.size(), inst.n(), "bilinear witness x");
  detail::require_length(y.size(), inst.n(), "bilinear witness y");
  if (is_zero_vector(x) || is_zero_vector(y)) return false;
  for (const auto& m : inst.matrices()) {
    if (!(x.dot(m.template cast<Scalar>() * y) == Scalar(0))) return false;
  }
  return true;
}

template <typename Scalar>
bool verify_pencil_witness(const PencilInstance& inst, const WitnessTriple<Scalar>& w) {
  detail::require_length(w.x.size(), inst.n(), "pencil witness x");
  detail::require_length(w.y.size(), inst.n(), "pencil witness y");
  detail::require_length(w.z.size(), inst.r() + 1, "pencil witness z");
  if (is_zero_vector(w.x) || is_zero_vector(w.y) || is_zero_vector(w.z)) return false;
  for (const auto& a : inst.matrices()) {
    if (!(w.x.dot(a.template cast<Scalar>() * w.y) == Scalar(0))) return false;
  }
  const Matrix<Scalar> mz = inst.pencil_at(w.z);
  return is_zero_vector(mz * w.y) && is_zero_vector(mz.transpose() * w.x);
}

}  // namespace tensordeg
