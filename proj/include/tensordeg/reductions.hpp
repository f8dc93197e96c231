#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tensordeg/instances.hpp"

namespace tensordeg {

/// One reduction stage: its size parameters and, for every emitted matrix or
/// slice in order, the source constraint it came from.
struct StageTrace {
  std::string name;
  std::map<std::string, Index> sizes;
  std::vector<std::string> provenance;
};

struct ReductionTrace {
  std::vector<StageTrace> stages;

  void append(const ReductionTrace& other) {
    stages.insert(stages.end(), other.stages.begin(), other.stages.end());
  }
};

nlohmann::json to_json(const ReductionTrace& trace);

template <typename T>
struct Reduced {
  T instance;
  ReductionTrace trace;
};

struct WitnessTransportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// e_i e_j^T - e_j e_i^T, so that x^T E y = x_i y_j - x_j y_i.
MatrixQ minor_matrix(Index n, Index i, Index j);

/// Forms Q_1..Q_m followed by the minor matrices E_ij for i < j in
/// lexicographic order: r = m + n(n-1)/2.
Reduced<BilinearInstance> quad_to_bilinear(const QuadraticInstance& q);

/// [0, M_1, ..., M_r].
Reduced<PencilInstance> bilinear_to_pencil(const BilinearInstance& b);

/// Slice k of the tensor is A_k (0-based), so the tensor has format n x n x (r+1).
Reduced<TensorQ> pencil_to_tensor(const PencilInstance& p);

/// All three stages; format n x n x (m + n(n-1)/2 + 1).
Reduced<TensorQ> quad_to_tensor(const QuadraticInstance& q);

template <typename Scalar>
std::pair<Vector<Scalar>, Vector<Scalar>> lift_quad_witness(const Vector<Scalar>& u) {
  if (is_zero_vector(u)) throw WitnessTransportError("lift_quad_witness: zero vector");
  return {u, u};
}

/// Returns x after checking that x, y are nonzero and proportional (every
/// 2x2 minor of [x y] vanishes).
template <typename Scalar>
Vector<Scalar> extract_quad_witness(const Vector<Scalar>& x, const Vector<Scalar>& y) {
  if (x.size() != y.size()) throw DimensionError("extract_quad_witness: length mismatch");
  if (is_zero_vector(x) || is_zero_vector(y)) {
    throw WitnessTransportError("extract_quad_witness: zero vector");
  }
  for (Index i = 0; i < x.size(); ++i) {
    for (Index j = i + 1; j < x.size(); ++j) {
      if (!(x(i) * y(j) - x(j) * y(i) == Scalar(0))) {
        throw WitnessTransportError("extract_quad_witness: x and y are not proportional (minor " +
                                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  }
  return x;
}

/// (x, y, e_0) with e_0 of length r + 1.
template <typename Scalar>
WitnessTriple<Scalar> lift_bilinear_witness(const Vector<Scalar>& x, const Vector<Scalar>& y,
                                            Index r) {
  if (is_zero_vector(x) || is_zero_vector(y)) {
    throw WitnessTransportError("lift_bilinear_witness: zero vector");
  }
  Vector<Scalar> z = Vector<Scalar>::Zero(r + 1);
  z(0) = Scalar(1);
  return {x, y, z};
}

/// (w.x, w.y), after checking w against the pencil instance.
template <typename Scalar>
std::pair<Vector<Scalar>, Vector<Scalar>> extract_bilinear_witness(const PencilInstance& p,
                                                                   const WitnessTriple<Scalar>& w) {
  if (!verify_pencil_witness(p, w)) {
    throw WitnessTransportError("extract_bilinear_witness: witness does not verify the pencil");
  }
  return {w.x, w.y};
}

/// Quadratic witness u to the triple (u, u, e_0) on the composed tensor.
template <typename Scalar>
WitnessTriple<Scalar> lift_quad_witness_to_tensor(const QuadraticInstance& q,
                                                  const Vector<Scalar>& u) {
  auto [x, y] = lift_quad_witness(u);
  const Index r = q.m() + q.n() * (q.n() - 1) / 2;
  return lift_bilinear_witness(x, y, r);
}

/// Tensor witness on quad_to_tensor(q) back to a quadratic witness; checks
/// the witness on the pencil stage first.
template <typename Scalar>
Vector<Scalar> extract_quad_witness_from_tensor(const QuadraticInstance& q,
                                                const WitnessTriple<Scalar>& w) {
  const auto pencil = bilinear_to_pencil(quad_to_bilinear(q).instance).instance;
  auto [x, y] = extract_bilinear_witness(pencil, w);
  return extract_quad_witness(x, y);
}

}  // namespace tensordeg
