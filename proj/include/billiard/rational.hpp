#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace billiard {

// Reduced fraction with positive denominator. Compare for equality only
// against Rational: boost's mixed int == rational recurses under C++20.
using Rational = boost::rational<std::int64_t>;

std::int64_t floor(const Rational& q);
std::int64_t ceil(const Rational& q);
// q - floor(q), in [0, 1).
Rational frac(const Rational& q);
double to_double(const Rational& q);
bool is_integer(const Rational& q);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
// Accepts "p/q", "p", or a finite decimal such as "0.25".
Rational parse_rational(std::string_view text);

// Exact sign of sin(pi * q).
int sin_pi_sign(const Rational& q);

}  // namespace billiard
