#pragma once

#include <initializer_list>

#include "tensordeg/random.hpp"
#include "tensordeg/tensor.hpp"

namespace testing {

using tensordeg::Index;
using tensordeg::MatrixQ;
using tensordeg::Rational;
using tensordeg::VectorQ;

inline MatrixQ mat(std::initializer_list<std::initializer_list<int>> rows) {
  MatrixQ m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (int v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline VectorQ vec(std::initializer_list<int> entries) {
  VectorQ v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (int e : entries) v(i++) = e;
  return v;
}

inline MatrixQ diag(std::initializer_list<int> entries) { return MatrixQ(vec(entries).asDiagonal()); }

inline VectorQ unit(Index n, Index i) {
  VectorQ v = VectorQ::Zero(n);
  v(i) = 1;
  return v;
}

/// Rational vector with small numerators and denominators, possibly zero.
inline VectorQ small_rational_vector(tensordeg::Rng& rng, Index n) {
  VectorQ v(n);
  for (Index i = 0; i < n; ++i) v(i) = Rational(rng.uniform_int(-3, 3), rng.uniform_int(1, 3));
  return v;
}

}  // namespace testing
