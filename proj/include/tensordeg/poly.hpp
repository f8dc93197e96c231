#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "tensordeg/rational.hpp"

namespace tensordeg {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The zero polynomial has no coefficients and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(std::initializer_list<Rational> coefficients);

  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  static UniPoly monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of t^i; zero beyond the degree.
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& t) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  /// Positive rescaling to coprime integer coefficients. Signs are preserved.
  UniPoly primitive() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& c, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string str(const char* var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division. Throws InvalidInput for b == 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd over Q. Throws InvalidInput if both inputs are zero.
UniPoly gcd_poly(const UniPoly& a, const UniPoly& b);

/// p / gcd(p, p'): same distinct roots, all simple.
UniPoly squarefree_part(const UniPoly& p);

/// An interval endpoint on the extended real line.
struct Endpoint {
  enum class Kind { neg_infinity, finite, pos_infinity };
  Kind kind = Kind::finite;
  Rational value;

  static Endpoint neg_infinity() { return {Kind::neg_infinity, {}}; }
  static Endpoint pos_infinity() { return {Kind::pos_infinity, {}}; }
  static Endpoint at(Rational v) { return {Kind::finite, std::move(v)}; }
};

/// Sign of p at an endpoint; infinite endpoints use the leading-term limit.
int sign_at(const UniPoly& p, const Endpoint& e);

/// Sturm sequence p, p', -rem(p0, p1), ... with each entry made primitive.
/// Stops before the first zero remainder.
struct SturmChain {
  std::vector<UniPoly> polys;

  explicit SturmChain(const UniPoly& p);
  int sign_variations(const Endpoint& e) const;
};

/// Number of distinct real roots of p in (lo, hi]. Throws InvalidInput for
/// the zero polynomial or an empty interval.
Index sturm_root_count(const UniPoly& p, const Endpoint& lo, const Endpoint& hi);

}  // namespace tensordeg
