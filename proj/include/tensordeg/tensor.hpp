#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "tensordeg/linalg.hpp"

namespace tensordeg {

/// Dense order-3 tensor of format n1 x n2 x n3, stored as n3 frontal slices
/// T(:, :, k), each an n1 x n2 matrix.
template <typename Scalar>
class Tensor3 {
 public:
  Tensor3() = default;

  Tensor3(Index n1, Index n2, Index n3) : n1_(n1), n2_(n2) {
    if (n1 < 1 || n2 < 1 || n3 < 1) throw DimensionError("tensor dimensions must be positive");
    slices_.assign(static_cast<std::size_t>(n3), Matrix<Scalar>::Zero(n1, n2));
  }

  explicit Tensor3(std::vector<Matrix<Scalar>> slices) : slices_(std::move(slices)) {
    if (slices_.empty()) throw DimensionError("tensor needs at least one slice");
    n1_ = slices_.front().rows();
    n2_ = slices_.front().cols();
    if (n1_ < 1 || n2_ < 1) throw DimensionError("tensor dimensions must be positive");
    for (const auto& s : slices_) {
      if (s.rows() != n1_ || s.cols() != n2_) throw DimensionError("slices differ in shape");
    }
  }

  static Tensor3 zero(const std::array<Index, 3>& dims) {
    return Tensor3(dims[0], dims[1], dims[2]);
  }

  Index n1() const { return n1_; }
  Index n2() const { return n2_; }
  Index n3() const { return static_cast<Index>(slices_.size()); }
  std::array<Index, 3> dims() const { return {n1_, n2_, n3()}; }
  Index size() const { return n1_ * n2_ * n3(); }

  Scalar& operator()(Index i, Index j, Index k) { return slices_[idx(k)](i, j); }
  const Scalar& operator()(Index i, Index j, Index k) const { return slices_[idx(k)](i, j); }

  const Matrix<Scalar>& slice(Index k) const { return slices_[idx(k)]; }
  Matrix<Scalar>& slice(Index k) { return slices_[idx(k)]; }
  const std::vector<Matrix<Scalar>>& slices() const { return slices_; }

  /// Entry by linear index i + n1 * (j + n2 * k).
  Scalar& flat(Index l) { return (*this)(l % n1_, (l / n1_) % n2_, l / (n1_ * n2_)); }
  const Scalar& flat(Index l) const { return (*this)(l % n1_, (l / n1_) % n2_, l / (n1_ * n2_)); }

  bool is_zero() const {
    for (const auto& s : slices_) {
      if (!is_zero_vector(s.reshaped())) return false;
    }
    return true;
  }

  template <typename Other>
  Tensor3<Other> cast() const {
    std::vector<Matrix<Other>> out;
    out.reserve(slices_.size());
    for (const auto& s : slices_) out.push_back(s.template cast<Other>());
    return Tensor3<Other>(std::move(out));
  }

  Tensor3 scaled(const Scalar& c) const {
    Tensor3 out = *this;
    for (auto& s : out.slices_) s *= c;
    return out;
  }

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.dims() == b.dims() && a.slices_ == b.slices_;
  }

 private:
  static std::size_t idx(Index k) { return static_cast<std::size_t>(k); }

  Index n1_ = 0;
  Index n2_ = 0;
  std::vector<Matrix<Scalar>> slices_;
};

using TensorQ = Tensor3<Rational>;

/// Nonzero vectors (x, y, z) certifying degeneracy of a tensor or
/// feasibility of a pencil. Quadratic witnesses use x only; bilinear
/// witnesses use x and y.
template <typename Scalar>
struct WitnessTriple {
  Vector<Scalar> x;
  Vector<Scalar> y;
  Vector<Scalar> z;

  template <typename Other>
  WitnessTriple<Other> cast() const {
    return {x.template cast<Other>(), y.template cast<Other>(), z.template cast<Other>()};
  }

  friend bool operator==(const WitnessTriple& a, const WitnessTriple& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

using WitnessQ = WitnessTriple<Rational>;

namespace detail {

inline void require_length(Index got, Index want, const char* what) {
  if (got != want) {
    throw DimensionError(std::string(what) + ": expected length " + std::to_string(want) +
                         ", got " + std::to_string(got));
  }
}

}  // namespace detail

/// T(x, y, .): entry k is x^T T(:, :, k) y.
template <typename Scalar>
Vector<Scalar> contract_xy(const Tensor3<Scalar>& t, const Vector<Scalar>& x,
                           const Vector<Scalar>& y) {
  detail::require_length(x.size(), t.n1(), "contract_xy x");
  detail::require_length(y.size(), t.n2(), "contract_xy y");
  Vector<Scalar> out(t.n3());
  for (Index k = 0; k < t.n3(); ++k) out(k) = x.dot(t.slice(k) * y);
  return out;
}

/// T(x, ., z) = sum_k z_k T(:, :, k)^T x.
template <typename Scalar>
Vector<Scalar> contract_xz(const Tensor3<Scalar>& t, const Vector<Scalar>& x,
                           const Vector<Scalar>& z) {
  detail::require_length(x.size(), t.n1(), "contract_xz x");
  detail::require_length(z.size(), t.n3(), "contract_xz z");
  Vector<Scalar> out = Vector<Scalar>::Zero(t.n2());
  for (Index k = 0; k < t.n3(); ++k) {
    if (z(k) == Scalar(0)) continue;
    out += z(k) * (t.slice(k).transpose() * x);
  }
  return out;
}

/// T(., y, z) = sum_k z_k T(:, :, k) y.
template <typename Scalar>
Vector<Scalar> contract_yz(const Tensor3<Scalar>& t, const Vector<Scalar>& y,
                           const Vector<Scalar>& z) {
  detail::require_length(y.size(), t.n2(), "contract_yz y");
  detail::require_length(z.size(), t.n3(), "contract_yz z");
  Vector<Scalar> out = Vector<Scalar>::Zero(t.n1());
  for (Index k = 0; k < t.n3(); ++k) {
    if (z(k) == Scalar(0)) continue;
    out += z(k) * (t.slice(k) * y);
  }
  return out;
}

/// Mode permutation: mode m of the result is mode perm[m] of the input.
using ModePermutation = std::array<int, 3>;

template <typename Scalar>
Tensor3<Scalar> permute_modes(const Tensor3<Scalar>& t, const ModePermutation& perm) {
  const auto d = t.dims();
  const std::array<Index, 3> nd{d[static_cast<std::size_t>(perm[0])],
                                d[static_cast<std::size_t>(perm[1])],
                                d[static_cast<std::size_t>(perm[2])]};
  Tensor3<Scalar> out = Tensor3<Scalar>::zero(nd);
  std::array<Index, 3> src{};
  for (Index a = 0; a < nd[0]; ++a) {
    for (Index b = 0; b < nd[1]; ++b) {
      for (Index c = 0; c < nd[2]; ++c) {
        src[static_cast<std::size_t>(perm[0])] = a;
        src[static_cast<std::size_t>(perm[1])] = b;
        src[static_cast<std::size_t>(perm[2])] = c;
        out(a, b, c) = t(src[0], src[1], src[2]);
      }
    }
  }
  return out;
}

}  // namespace tensordeg
