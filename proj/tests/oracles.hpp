#pragma once

// Independent reference implementations used as test oracles. They share no
// code with the library beyond the scalar and container types.

#include <vector>

#include "tensordeg/linalg.hpp"
#include "tensordeg/tensor.hpp"

namespace oracle {

using tensordeg::Index;
using tensordeg::MatrixQ;
using tensordeg::Rational;
using tensordeg::TensorQ;
using tensordeg::VectorQ;

inline Rational cofactor_det(const MatrixQ& m) {
  const Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational acc = 0;
  for (Index j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    MatrixQ minor(n - 1, n - 1);
    for (Index r = 1; r < n; ++r) {
      Index c2 = 0;
      for (Index c = 0; c < n; ++c) {
        if (c != j) minor(r - 1, c2++) = m(r, c);
      }
    }
    const Rational term = m(0, j) * cofactor_det(minor);
    acc += (j % 2 == 0) ? term : Rational(-term);
  }
  return acc;
}

/// Coefficients c_0..c_n of det(lambda I - A), lowest first, by
/// Faddeev-LeVerrier.
inline std::vector<Rational> charpoly(const MatrixQ& a) {
  const Index n = a.rows();
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  c[static_cast<std::size_t>(n)] = 1;
  MatrixQ m = MatrixQ::Zero(n, n);
  for (Index k = 1; k <= n; ++k) {
    m = a * m + c[static_cast<std::size_t>(n - k + 1)] * MatrixQ::Identity(n, n);
    const MatrixQ am = a * m;
    c[static_cast<std::size_t>(n - k)] = -am.trace() / Rational(k);
  }
  return c;
}

inline int sign_changes(const std::vector<Rational>& c) {
  int changes = 0, last = 0;
  for (const auto& x : c) {
    const int s = x.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

struct Inertia {
  int positive = 0, negative = 0, zero = 0;
};

/// For a symmetric matrix the characteristic polynomial is real-rooted, so
/// Descartes' rule counts the positive and negative eigenvalues exactly.
inline Inertia inertia(const MatrixQ& a) {
  auto c = charpoly(a);
  Inertia out;
  while (out.zero < static_cast<int>(c.size()) && c[static_cast<std::size_t>(out.zero)] == 0) ++out.zero;
  out.positive = sign_changes(c);
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  out.negative = sign_changes(c);
  return out;
}

inline VectorQ contract_xy(const TensorQ& t, const VectorQ& x, const VectorQ& y) {
  VectorQ out = VectorQ::Zero(t.n3());
  for (Index i = 0; i < t.n1(); ++i)
    for (Index j = 0; j < t.n2(); ++j)
      for (Index k = 0; k < t.n3(); ++k) out(k) += t(i, j, k) * x(i) * y(j);
  return out;
}

inline VectorQ contract_xz(const TensorQ& t, const VectorQ& x, const VectorQ& z) {
  VectorQ out = VectorQ::Zero(t.n2());
  for (Index i = 0; i < t.n1(); ++i)
    for (Index j = 0; j < t.n2(); ++j)
      for (Index k = 0; k < t.n3(); ++k) out(j) += t(i, j, k) * x(i) * z(k);
  return out;
}

inline VectorQ contract_yz(const TensorQ& t, const VectorQ& y, const VectorQ& z) {
  VectorQ out = VectorQ::Zero(t.n1());
  for (Index i = 0; i < t.n1(); ++i)
    for (Index j = 0; j < t.n2(); ++j)
      for (Index k = 0; k < t.n3(); ++k) out(i) += t(i, j, k) * y(j) * z(k);
  return out;
}

/// Rationals p/q with |p| <= num, 1 <= q <= den, deduplicated.
inline std::vector<Rational> grid(int num, int den) {
  std::vector<Rational> out;
  for (int q = 1; q <= den; ++q) {
    for (int p = -num; p <= num; ++p) {
      const Rational r(p, q);
      bool seen = false;
      for (const auto& s : out) seen = seen || s == r;
      if (!seen) out.push_back(r);
    }
  }
  return out;
}

}  // namespace oracle
