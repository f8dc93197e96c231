#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

namespace tensordeg {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator; expression templates are off so the type composes
/// cleanly with Eigen.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

using Index = Eigen::Index;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Parses "p", "-p" or "p/q". Throws InvalidInput on malformed text or q == 0.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text ("p" when the denominator is one).
std::string to_string(const Rational& r);

inline int sign(const Rational& r) { return r.sign(); }

inline bool is_zero(const Rational& r) { return r.sign() == 0; }

/// Closest fraction to `value` whose denominator does not exceed `max_denominator`
/// (continued-fraction convergents and the best semiconvergent).
Rational best_rational_approximation(double value, std::int64_t max_denominator);

double to_double(const Rational& r);

}  // namespace tensordeg
