#include "eventgraph/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "eventgraph/error.hpp"

namespace eventgraph {

namespace {

// GMP reads a leading zero as an octal prefix.
Integer decimal(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return Integer{std::string(s)};
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw InvalidArgument("not an integer: '" + std::string(s) + "'");
  Integer value = decimal(s);
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InvalidArgument("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  auto exp_pos = text.find_first_of("eE");
  std::string_view mantissa = text.substr(0, exp_pos);
  long exponent = 0;
  if (exp_pos != std::string_view::npos) {
    exponent = static_cast<long>(to_int64(parse_integer(text.substr(exp_pos + 1))));
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long scale = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    digits = std::string(mantissa.substr(0, dot)) + std::string(mantissa.substr(dot + 1));
    scale = static_cast<long>(mantissa.size() - dot - 1);
  } else {
    digits = std::string(mantissa);
  }
  if (!all_digits(digits)) throw InvalidArgument("not a number: '" + std::string(text) + "'");
  Integer num = decimal(digits);
  if (negative) num = -num;
  long shift = exponent - scale;
  Integer ten_pow = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(std::labs(shift)));
  return shift >= 0 ? Rational(num * ten_pow) : Rational(num, ten_pow);
}

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

Rational approximate_rational(double value, std::int64_t max_denominator) {
  if (!std::isfinite(value)) throw InvalidArgument("cannot approximate a non-finite value");
  bool negative = value < 0;
  double x = std::fabs(value);

  // Convergents h/k of the continued fraction of x.
  Integer h_prev = 1, h = static_cast<std::int64_t>(std::floor(x));
  Integer k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  while (frac > 1e-18) {
    double inv = 1.0 / frac;
    double a_real = std::floor(inv);
    if (a_real > 4e18) break;
    Integer a = static_cast<std::int64_t>(a_real);
    Integer k_next = a * k + k_prev;
    if (k_next > max_denominator) {
      // Best semiconvergent still within the bound.
      Integer t = (Integer(max_denominator) - k_prev) / k;
      Integer h_semi = t * h + h_prev;
      Integer k_semi = t * k + k_prev;
      if (k_semi > 0) {
        Rational semi(h_semi, k_semi);
        Rational conv(h, k);
        Rational target(x);
        if (boost::multiprecision::abs(semi - target) < boost::multiprecision::abs(conv - target)) {
          h = h_semi;
          k = k_semi;
        }
      }
      break;
    }
    Integer h_next = a * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    frac = inv - a_real;
  }
  Rational result(h, k);
  return negative ? Rational(-result) : result;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::int64_t to_int64(const Integer& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw Error("integer " + value.str() + " does not fit in 64 bits");
  }
  return value.convert_to<std::int64_t>();
}

}  // namespace eventgraph
