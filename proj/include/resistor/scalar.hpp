#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace resistor {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/*
 * Scalar abstraction.
 *
 * Every solver in this library is a template over one scalar type:
 *   - Rat     exact arbitrary-precision rational (numerator/denominator
 *             always stored reduced with positive denominator by
 *             boost::multiprecision)
 *   - double  binary64
 *
 * Mixing the two modes is a compile-time error; conversion happens only
 * through the explicit helpers below.
 */

template <class S>
inline constexpr bool is_exact_v = std::is_same_v<S, Rat>;

template <class S>
concept ScalarType = std::is_same_v<S, Rat> || std::is_same_v<S, double>;

inline double to_double(const Rat& x) { return x.template convert_to<double>(); }
inline double to_double(double x) { return x; }

inline double to_double(const BigInt& x) { return x.template convert_to<double>(); }

template <class S>
S scalar_from_int(long v) {
  return S(v);
}

/// Parses "p/q", "p", or (float mode) any decimal literal.
template <class S>
S parse_scalar(const std::string& text);

template <>
inline Rat parse_scalar<Rat>(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      // allow plain decimals like "0.5" so exact mode can ingest float-ish files
      auto dot = text.find('.');
      if (dot == std::string::npos) return Rat(BigInt(text));
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      BigInt den = 1;
      for (size_t i = dot + 1; i < text.size(); ++i) den *= 10;
      return Rat(BigInt(digits), den);
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

template <>
inline double parse_scalar<double>(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    double num = std::stod(text.substr(0, slash));
    double den = std::stod(text.substr(slash + 1));
    if (den == 0.0) throw std::invalid_argument("zero denominator: " + text);
    return num / den;
  }
  return std::stod(text);
}

/// "p/q" (or "p" when integral) for rationals; shortest round-trip digits for doubles.
inline std::string format_scalar(const Rat& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

inline std::string format_scalar(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

/// Decimal rendering with 12 significant digits (CLI output contract).
template <class S>
std::string format_decimal(const S& x) {
  std::ostringstream os;
  os.precision(12);
  os << to_double(x);
  return os.str();
}

template <class S>
S scalar_abs(const S& x) {
  return x < S(0) ? S(-x) : x;
}

}  // namespace resistor
