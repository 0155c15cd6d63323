#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace eventgraph {

// Expression templates off: values behave like plain arithmetic types.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using RationalPoint = std::vector<Rational>;

/// Parses "a", "-a", "a/b" or a decimal literal such as "0.25" exactly.
Rational parse_rational(std::string_view text);

/// "a/b" in lowest terms, or "a" when the denominator is 1.
std::string to_string(const Rational& value);

/// Best rational approximation of `value` with denominator at most
/// `max_denominator`, by continued fractions.
Rational approximate_rational(double value, std::int64_t max_denominator = 1000000000);

double to_double(const Rational& value);

/// Narrows an arbitrary-precision integer, throwing if it does not fit.
std::int64_t to_int64(const Integer& value);

}  // namespace eventgraph
