#include "tensordeg/quadratic_number.hpp"

#include <cmath>

#include <boost/multiprecision/integer.hpp>

namespace tensordeg {

namespace {

bool is_perfect_square(const Integer& n, Integer* root) {
  if (n < 0) return false;
  const Integer r = boost::multiprecision::sqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

}  // namespace

QuadraticNumber::QuadraticNumber(Rational a, Rational b, Integer radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(radicand)) {
  if (tensordeg::is_zero(b_)) {
    d_ = 0;
    return;
  }
  Integer root;
  if (d_ <= 0) throw InvalidInput("quadratic number radicand must be positive");
  // Move small square factors out of the radicand so equal fields compare equal.
  for (unsigned f = 2; f <= 1000 && Integer(f) * f <= d_; ++f) {
    const Integer sq = Integer(f) * f;
    while (d_ % sq == 0) {
      d_ /= sq;
      b_ *= Rational(f);
    }
  }
  if (is_perfect_square(d_, &root)) {
    a_ += b_ * Rational(root);
    b_ = 0;
    d_ = 0;
  }
}

QuadraticNumber QuadraticNumber::sqrt_of(const Rational& r) {
  if (r.sign() < 0) throw InvalidInput("square root of a negative rational");
  if (r.sign() == 0) return QuadraticNumber();
  // sqrt(p/q) = sqrt(p*q) / q
  const Integer p = numerator(r);
  const Integer q = denominator(r);
  return QuadraticNumber(Rational(0), Rational(Integer(1), q), p * q);
}

QuadraticNumber QuadraticNumber::aligned(const QuadraticNumber& o) const {
  if (tensordeg::is_zero(b_) || tensordeg::is_zero(o.b_) || d_ == o.d_) return o;
  // sqrt(e) = (r / d) sqrt(d) when d*e = r^2.
  Integer root;
  if (!is_perfect_square(d_ * o.d_, &root)) {
    throw InvalidInput("arithmetic across different quadratic fields");
  }
  QuadraticNumber out;
  out.a_ = o.a_;
  out.b_ = o.b_ * Rational(root, d_);
  out.d_ = d_;
  return out;
}

Integer QuadraticNumber::common_radicand(const QuadraticNumber& o) const {
  return tensordeg::is_zero(b_) ? o.d_ : d_;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& other) {
  const QuadraticNumber o = aligned(other);
  const Integer d = common_radicand(o);
  *this = QuadraticNumber(a_ + o.a_, b_ + o.b_, d);
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& other) {
  const QuadraticNumber o = aligned(other);
  const Integer d = common_radicand(o);
  *this = QuadraticNumber(a_ - o.a_, b_ - o.b_, d);
  return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& other) {
  const QuadraticNumber o = aligned(other);
  const Integer d = common_radicand(o);
  *this = QuadraticNumber(a_ * o.a_ + b_ * o.b_ * Rational(d), a_ * o.b_ + b_ * o.a_, d);
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& o) {
  if (o.is_zero()) throw InvalidInput("division by zero");
  // 1 / (a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d); the norm is nonzero
  // because sqrt d is irrational.
  const Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(o.d_);
  *this *= QuadraticNumber(o.a_ / norm, -o.b_ / norm, o.d_);
  return *this;
}

int QuadraticNumber::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 d.
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * Rational(d_);
  return lhs > rhs ? sa : sb;
}

const Rational& QuadraticNumber::as_rational() const {
  if (!is_rational()) throw InvalidInput("value " + str() + " is irrational");
  return a_;
}

double QuadraticNumber::to_double() const {
  return tensordeg::to_double(a_) +
         tensordeg::to_double(b_) * std::sqrt(d_.convert_to<double>());
}

std::string QuadraticNumber::str() const {
  if (is_rational()) return tensordeg::to_string(a_);
  std::string out;
  if (!tensordeg::is_zero(a_)) out = tensordeg::to_string(a_) + (b_.sign() > 0 ? "+" : "");
  return out + tensordeg::to_string(b_) + "*sqrt(" + d_.str() + ")";
}

}  // namespace tensordeg
