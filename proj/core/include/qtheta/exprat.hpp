#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include <boost/rational.hpp>

namespace qtheta {

/// Rational q-exponent. Always normalized: positive denominator, reduced, zero is 0/1.
using ExpRat = boost::rational<std::int64_t>;

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

/// Smallest integer n with n >= x.
inline std::int64_t ceil(const ExpRat& x) { return ceil_div(x.numerator(), x.denominator()); }

/// Smallest integer n with n >= x * den.
inline std::int64_t ceil_scaled(const ExpRat& x, std::int64_t den) {
  return ceil_div(x.numerator() * (den / std::gcd(den, x.denominator())),
                  x.denominator() / std::gcd(den, x.denominator()));
}

std::string to_string(const ExpRat& x);
ExpRat parse_exprat(const std::string& text);

}  // namespace qtheta
