#include "tensordeg/linalg.hpp"

#include <boost/integer/common_factor.hpp>

namespace tensordeg {

namespace {

using IntMatrix = Matrix<Integer>;

Integer lcm_of_denominators(const MatrixQ& m, Index row) {
  Integer l = 1;
  for (Index j = 0; j < m.cols(); ++j) {
    l = boost::multiprecision::lcm(l, denominator(m(row, j)));
  }
  return l;
}

// Each row scaled by the lcm of its denominators. The product of the scale
// factors is written to `scale`.
IntMatrix integer_rows(const MatrixQ& m, Integer* scale) {
  IntMatrix out(m.rows(), m.cols());
  Integer s = 1;
  for (Index i = 0; i < m.rows(); ++i) {
    const Integer l = lcm_of_denominators(m, i);
    s *= l;
    for (Index j = 0; j < m.cols(); ++j) {
      out(i, j) = numerator(m(i, j)) * (l / denominator(m(i, j)));
    }
  }
  if (scale) *scale = s;
  return out;
}

// Fraction-free echelon form in place; returns the rank and the sign of the
// row permutation applied.
Index bareiss_echelon(IntMatrix& a, int* permutation_sign) {
  const Index rows = a.rows();
  const Index cols = a.cols();
  Integer prev = 1;
  Index r = 0;
  int sgn = 1;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      a.row(p).swap(a.row(r));
      sgn = -sgn;
    }
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j) {
        a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  if (permutation_sign) *permutation_sign = sgn;
  return r;
}

}  // namespace

Rational det_exact(const MatrixQ& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("det_exact: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
  const Index n = m.rows();
  if (n == 0) return Rational(1);
  Integer scale;
  IntMatrix a = integer_rows(m, &scale);
  int sgn = 1;
  if (bareiss_echelon(a, &sgn) < n) return Rational(0);
  return Rational(sgn * a(n - 1, n - 1), scale);
}

Index rank_exact(const MatrixQ& m) {
  IntMatrix a = integer_rows(m, nullptr);
  return bareiss_echelon(a, nullptr);
}

const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::positive_definite: return "positive_definite";
    case Definiteness::negative_definite: return "negative_definite";
    case Definiteness::neither: return "neither";
  }
  return "neither";
}

CongruenceDiagonalization congruence_diagonalize(const MatrixQ& q) {
  if (!is_symmetric(q)) throw InvalidInput("congruence_diagonalize: matrix is not symmetric");
  const Index n = q.rows();
  MatrixQ a = q;
  MatrixQ basis = MatrixQ::Identity(n, n);
  for (Index k = 0; k < n; ++k) {
    if (is_zero(a(k, k))) {
      Index j = k + 1;
      while (j < n && is_zero(a(j, j))) ++j;
      if (j < n) {
        a.row(k).swap(a.row(j));
        a.col(k).swap(a.col(j));
        basis.col(k).swap(basis.col(j));
      } else {
        j = k + 1;
        while (j < n && is_zero(a(k, j))) ++j;
        if (j == n) continue;  // row k already zero
        // col k += col j, row k += row j: new pivot 2 a(k, j).
        a.col(k) += a.col(j);
        a.row(k) += a.row(j);
        basis.col(k) += basis.col(j);
      }
    }
    const Rational pivot = a(k, k);
    for (Index i = k + 1; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      const Rational f = a(i, k) / pivot;
      a.row(i) -= f * a.row(k);
      a.col(i) -= f * a.col(k);
      basis.col(i) -= f * basis.col(k);
    }
  }
  return {a.diagonal(), basis};
}

Definiteness definiteness(const MatrixQ& q) {
  const auto cd = congruence_diagonalize(q);
  bool all_pos = true;
  bool all_neg = true;
  for (Index i = 0; i < cd.diagonal.size(); ++i) {
    const int s = sign(cd.diagonal(i));
    all_pos = all_pos && s > 0;
    all_neg = all_neg && s < 0;
  }
  if (all_pos) return Definiteness::positive_definite;
  if (all_neg) return Definiteness::negative_definite;
  return Definiteness::neither;
}

VectorQ normalize(const VectorQ& v) {
  if (is_zero_vector(v)) return v;
  Integer l = 1;
  for (Index i = 0; i < v.size(); ++i) l = boost::multiprecision::lcm(l, denominator(v(i)));
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) {
    g = boost::multiprecision::gcd(g, numerator(v(i)) * (l / denominator(v(i))));
  }
  Index first = 0;
  while (is_zero(v(first))) ++first;
  Rational factor(l, g);
  if (v(first).sign() < 0) factor = -factor;
  return v * factor;
}

}  // namespace tensordeg
