#include "tensordeg/rational.hpp"

#include <cctype>
#include <cmath>

namespace tensordeg {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_text(num_text)) {
    throw InvalidInput("malformed rational: '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num_text));
  const auto den_text = text.substr(slash + 1);
  if (!is_integer_text(den_text)) {
    throw InvalidInput("malformed rational: '" + std::string(text) + "'");
  }
  const Integer den = parse_integer(den_text);
  if (den == 0) throw InvalidInput("zero denominator: '" + std::string(text) + "'");
  return Rational(parse_integer(num_text), den);
}

std::string to_string(const Rational& r) { return r.str(); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational best_rational_approximation(double value, std::int64_t max_denominator) {
  if (!std::isfinite(value)) throw InvalidInput("cannot approximate a non-finite value");
  if (max_denominator < 1) throw InvalidInput("denominator bound must be positive");
  // Convergents p/q of the continued fraction of value.
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double x = value;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_real = std::floor(x);
    if (std::fabs(a_real) > 1e18) break;
    const Integer a = Integer(static_cast<long long>(a_real));
    const Integer q2 = a * q1 + q0;
    if (q2 > max_denominator) {
      // Best semiconvergent still inside the bound.
      const Integer k = (Integer(max_denominator) - q0) / q1;
      const Rational semi(k * p1 + p0, k * q1 + q0);
      const Rational conv(p1, q1);
      const double es = std::fabs(to_double(semi) - value);
      const double ec = std::fabs(to_double(conv) - value);
      return es < ec ? semi : conv;
    }
    const Integer p2 = a * p1 + p0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = x - a_real;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  return Rational(p1, q1);
}

}  // namespace tensordeg
