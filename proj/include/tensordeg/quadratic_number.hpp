#pragma once

#include <ostream>
#include <string>

#include "tensordeg/rational.hpp"

namespace tensordeg {

/// Element a + b*sqrt(d) of a real quadratic field Q(sqrt(d)), with d a
/// positive integer that is not a perfect square. Rational values carry
/// b == 0 and d == 0. Mixing two irrational values over different radicands
/// throws InvalidInput.
///
/// Used for exact witnesses of small quadratic and bilinear systems whose
/// real solutions are irrational (for instance x^2 - 2y^2 = 0).
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(int v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(const Rational& v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(Rational a, Rational b, Integer radicand);

  /// sqrt(r) for r >= 0, rational whenever r is a rational square.
  static QuadraticNumber sqrt_of(const Rational& r);

  const Rational& rational_part() const { return a_; }
  const Rational& irrational_part() const { return b_; }
  const Integer& radicand() const { return d_; }

  bool is_rational() const { return tensordeg::is_zero(b_); }
  bool is_zero() const { return tensordeg::is_zero(a_) && tensordeg::is_zero(b_); }
  int sign() const;

  /// Throws InvalidInput when the value is irrational.
  const Rational& as_rational() const;

  double to_double() const;
  std::string str() const;

  QuadraticNumber operator-() const { return {-a_, -b_, d_}; }
  QuadraticNumber& operator+=(const QuadraticNumber& o);
  QuadraticNumber& operator-=(const QuadraticNumber& o);
  QuadraticNumber& operator*=(const QuadraticNumber& o);
  QuadraticNumber& operator/=(const QuadraticNumber& o);

  friend QuadraticNumber operator+(QuadraticNumber l, const QuadraticNumber& r) { return l += r; }
  friend QuadraticNumber operator-(QuadraticNumber l, const QuadraticNumber& r) { return l -= r; }
  friend QuadraticNumber operator*(QuadraticNumber l, const QuadraticNumber& r) { return l *= r; }
  friend QuadraticNumber operator/(QuadraticNumber l, const QuadraticNumber& r) { return l /= r; }
  friend bool operator==(const QuadraticNumber& l, const QuadraticNumber& r) {
    return (l - r).is_zero();
  }
  friend bool operator<(const QuadraticNumber& l, const QuadraticNumber& r) {
    return (l - r).sign() < 0;
  }
  friend bool operator>(const QuadraticNumber& l, const QuadraticNumber& r) { return r < l; }
  friend bool operator<=(const QuadraticNumber& l, const QuadraticNumber& r) { return !(r < l); }
  friend bool operator>=(const QuadraticNumber& l, const QuadraticNumber& r) { return !(l < r); }

 private:
  QuadraticNumber aligned(const QuadraticNumber& o) const;
  Integer common_radicand(const QuadraticNumber& o) const;

  Rational a_;
  Rational b_;
  Integer d_;
};

inline QuadraticNumber abs(const QuadraticNumber& v) { return v.sign() < 0 ? -v : v; }

inline std::ostream& operator<<(std::ostream& os, const QuadraticNumber& v) { return os << v.str(); }

}  // namespace tensordeg

namespace Eigen {

template <>
struct NumTraits<tensordeg::QuadraticNumber> : GenericNumTraits<tensordeg::QuadraticNumber> {
  using Real = tensordeg::QuadraticNumber;
  using NonInteger = tensordeg::QuadraticNumber;
  using Nested = tensordeg::QuadraticNumber;
  using Literal = tensordeg::QuadraticNumber;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
